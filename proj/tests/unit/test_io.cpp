#include <doctest.h>

#include "fixtures.hpp"
#include "hopf/catalog.hpp"
#include "hopf/errors.hpp"
#include "hopf/io.hpp"

using namespace hopf;

namespace {

std::string data(const std::string& name) { return std::string(HOPF_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("every catalog object survives a JSON round trip")
{
	for (const auto& spec : list_catalog()) {
		CAPTURE(spec.label());
		auto obj = build_family(spec);
		if (obj.cla) {
			Json j = cla_to_json(*obj.cla);
			CHECK(cla_from_json(Json::parse(j.dump())) == *obj.cla);
			CHECK(document_kind(j) == DocumentKind::Cla);
		}
		HopfPresentation h = obj.as_hopf();
		Json j = hopf_to_json(h);
		HopfPresentation back = hopf_from_json(Json::parse(j.dump()));
		CHECK(back.algebra().commutators() == h.algebra().commutators());
		CHECK(back.deltas() == h.deltas());
		CHECK(back.algebra().generators().size() == h.algebra().generators().size());
		CHECK(document_kind(j) == DocumentKind::Hopf);
		CHECK(hopf_to_json(back) == j);
	}
}

TEST_CASE("presentation JSON layout")
{
	auto h = make_A(1, 0, 0);
	Json j = hopf_to_json(h);
	CHECK(j["generators"][2]["name"] == "Z");
	CHECK(j["generators"][2]["degree"] == 2);
	CHECK(j["generators"][2]["bidegree"] == Json::array({1, 1}));
	CHECK(j["commutators"]["Z,X"] == Json::parse(R"([{"coeff":"1","monomial":{"X":1}}])"));
	CHECK(j["coproducts"]["Z"] == Json::parse(R"([{"coeff":"-1","left":{"Y":1},"right":{"X":1}},
	                                               {"coeff":"1","left":{"X":1},"right":{"Y":1}}])"));
	CHECK_FALSE(j["coproducts"].contains("X"));
}

TEST_CASE("files from the test data directory")
{
	HopfPresentation b1 = hopf_from_json(load_json_file(data("b1.json")));
	auto ref = make_B(1);
	CHECK(b1.algebra().commutators() == ref.algebra().commutators());
	CHECK(b1.deltas() == ref.deltas());
	CHECK(b1.verify_all().passed());

	HopfPresentation bad = hopf_from_json(load_json_file(data("corrupted_b.json")));
	CHECK_FALSE(bad.verify_all().passed());

	Json heis = load_json_file(data("heis3.json"));
	CHECK(document_kind(heis) == DocumentKind::Cla);
	CLA L = cla_from_json(heis);
	CHECK(L.dim() == 3);
	CHECK(L.b(0, 1, 2) == Scalar(1));
	CHECK(L.b(1, 0, 2) == Scalar(-1));
	CHECK(L.delta_is_zero());
	CHECK_THROWS_AS(load_json_file(data("missing.json")), InputError);
}

TEST_CASE("CLA JSON accepts either bracket order and integer coefficients")
{
	CLA a = cla_from_json(Json::parse(R"({"dim":3,"brackets":{"1,0":[{"coeff":-1,"basis":2}]}})"));
	CHECK(a.b(0, 1, 2) == Scalar(1));
	CHECK(a.names() == std::vector<std::string>{"x1", "x2", "x3"});
	CLA b = cla_from_json(Json::parse(
	    R"({"dim":3,"brackets":{"0,1":[{"coeff":"1","basis":2}],"1,0":[{"coeff":"-1","basis":2}]},
	        "delta":{"2":[{"coeff":"1/2","left":0,"right":1},{"coeff":"1/2","left":0,"right":1}]}})"));
	CHECK(b.d(2, 0, 1) == Scalar(1));
}

TEST_CASE("malformed documents are input errors")
{
	const char* bad[] = {
	    R"({"generators":[]})",
	    R"({"generators":[{"name":"X"},{"name":"X"}]})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"commutators":{"X,Y":[]}})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"commutators":{"YX":[]}})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"commutators":{"Y,X":[{"coeff":"1","monomial":{"Q":1}}]}})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"commutators":{"Y,X":[{"coeff":"1/0","monomial":{"X":1}}]}})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"commutators":{"Y,X":[{"coeff":1.5,"monomial":{"X":1}}]}})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"commutators":{"Y,X":[{"coeff":"1","monomial":{"X":-1}}]}})",
	    R"({"generators":[{"name":"X","degree":"one"}]})",
	    R"({"generators":[{"name":"X","bidegree":[1]}]})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"coproducts":{"X":[{"coeff":"1","left":{"Y":1}}]}})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"coproducts":{"X":[{"coeff":"1","left":{},"right":{"Y":1}}]}})",
	    R"({"generators":[{"name":"X"},{"name":"Y"}],"coproducts":{"X":"oops"}})",
	};
	for (const char* text : bad) {
		CAPTURE(text);
		CHECK_THROWS_AS(hopf_from_json(Json::parse(text)), InputError);
	}
	const char* bad_cla[] = {
	    R"({"dim":2,"basis":["a"]})",
	    R"({"dim":2,"brackets":{"0,2":[]}})",
	    R"({"dim":2,"brackets":{"0,0":[{"coeff":"1","basis":1}]}})",
	    R"({"dim":2,"brackets":{"0,1":[{"coeff":"1","basis":1}],"1,0":[{"coeff":"1","basis":1}]}})",
	    R"({"dim":2,"delta":{"0":[{"coeff":"1","left":0,"right":5}]}})",
	    R"({"dim":2,"delta":{"x":[]}})",
	    R"({"basis":["a","a"]})",
	};
	for (const char* text : bad_cla) {
		CAPTURE(text);
		CHECK_THROWS_AS(cla_from_json(Json::parse(text)), InputError);
	}
	CHECK_THROWS_AS(document_kind(Json::parse("[1,2]")), InputError);
}

TEST_CASE("report serializations")
{
	auto h = make_A(0, 0, 0);
	Json r = report_to_json(h.verify_all());
	CHECK(r["passed"] == true);
	CHECK(r["checks"].size() == h.verify_all().checks().size());

	Json c = cobar_report_to_json(h2_report(h, 4, true));
	CHECK(c["total_h2"] == 2);
	CHECK(c["by_bidegree"] == true);

	Json s = subspace_to_json(primitive_space(h, 3));
	CHECK(s["dim"] == 2);
	CHECK(s["basis"][0]["render"] == "X");
	CHECK(s["basis"][1]["terms"] == Json::parse(R"([{"coeff":"1","monomial":{"Y":1}}])"));

	Json g = graded_lie_to_json(lantern_of_hopf(make_K(), 3));
	CHECK(g["shape"] == "filiform-4");
	CHECK(g["dims_by_degree"]["1"] == 2);
}
