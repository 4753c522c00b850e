#include <doctest.h>

#include "cla_fixtures.hpp"
#include "fixtures.hpp"
#include "hopf/errors.hpp"
#include "hopf/structure.hpp"

using namespace hopf;
using namespace fixtures;

namespace {

std::vector<std::string> rendered(const FilteredSubspace& s)
{
	std::vector<std::string> out;
	for (const auto& b : s.basis)
		out.push_back(s.algebra.render(b));
	return out;
}

HopfPresentation hopf_D01() { return hopf_D("0", "1", alg_D(0, 0, 0, 0, 0, 0)); }
HopfPresentation hopf_D_general() { return hopf_D("1", "2", alg_D(1, 2, 3, 4, 5, 6)); }

CLA abelian(size_t n)
{
	std::vector<std::string> names;
	for (size_t i = 0; i < n; ++i)
		names.push_back("g" + std::to_string(i + 1));
	return CLA(names);
}

CLA heisenberg()
{
	CLA L({"x", "y", "z"});
	L.set_bracket(0, 1, v3(0, 0, 1));
	return L;
}

std::vector<HopfPresentation> thin_families()
{
	return {hopf_A("0", "0", "0"), hopf_A("1", "0", "0"), hopf_A("0", "0", "1"), hopf_A("1", "1", "1"),
	        hopf_B("0"),           hopf_B("1"),           hopf_D01(),           hopf_D_general(),
	        hopf_F("1", "0", "0"), hopf_F("0", "1", "5"), hopf_K()};
}

} // namespace

TEST_CASE("fixtures used here are Hopf presentations")
{
	for (const auto& h : thin_families()) {
		auto rep = h.verify_all(4);
		INFO(rep.to_text());
		CHECK(rep.passed());
	}
}

TEST_CASE("primitive spaces")
{
	for (const auto& h : thin_families()) {
		auto p5 = primitive_space(h, 5);
		CHECK(rendered(p5) == std::vector<std::string>{"X", "Y"});
		auto p4 = primitive_space(h, 4);
		CHECK(p4.dim() == 2);
		CHECK(p4.subset_of(p5));
	}
	CHECK(primitive_space(enveloping(abelian(4)), 1).dim() == 4);
	CHECK_THROWS_AS(primitive_space(hopf_K(), 0), InputError);
}

TEST_CASE("anti-cocommutative spaces")
{
	for (const auto& h : {hopf_D01(), hopf_D_general(), hopf_F("0", "1", "0"), hopf_K()}) {
		auto p2 = p2_space(h, 5);
		CHECK(rendered(p2) == std::vector<std::string>{"X", "Y", "Z"});
		CHECK(primitive_space(h, 5).subset_of(p2));
		CHECK(p2_space(h, 4).subset_of(p2));
	}
	CHECK(p2_space(hopf_A("0", "0", "0"), 4).dim() == 3);
	auto heis = enveloping(heisenberg());
	CHECK(p2_space(heis, 4).dim() == 3);
	CHECK(primitive_space(heis, 4).dim() == 3);
}

TEST_CASE("subspace coordinates")
{
	HopfPresentation h = hopf_K();
	auto p2 = p2_space(h, 4);
	const auto& alg = h.algebra();
	auto c = p2.coordinates(alg.parse("2*Z - X + 1/2*Y"));
	REQUIRE(c.has_value());
	CHECK(*c == std::vector<Scalar>{-1, Scalar(1, 2), 2});
	CHECK_FALSE(p2.contains(alg.parse("X*Y")));
	auto s = make_subspace(alg, 3, {alg.parse("X + Y"), alg.parse("X - Y"), alg.parse("2*X")});
	CHECK(rendered(s) == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("coradical filtration of U(a(0,0,0))")
{
	HopfPresentation U = enveloping(cla_a(0, 0, 0));
	const auto& alg = U.algebra();
	CHECK(rendered(coradical_filtration(U, 0, 3)) == std::vector<std::string>{"1"});
	auto h1 = coradical_filtration(U, 1, 3);
	CHECK(rendered(h1) == std::vector<std::string>{"1", "x", "y"});
	auto h2 = coradical_filtration(U, 2, 3);
	// (P + k1)^2 + L: delta(x^3) has the factor x^2, which is not in H_1.
	CHECK(h2.dim() == 7);
	for (const char* e : {"z", "x^2", "x*y", "y^2", "x", "1"})
		CHECK(h2.contains(alg.parse(e)));
	CHECK_FALSE(h2.contains(alg.parse("x^3")));
	CHECK_FALSE(h2.contains(alg.parse("x*z")));
	CHECK(h1.subset_of(h2));
}

TEST_CASE("extracting the CLA")
{
	for (const CLA& L : {cla_a(1, 2, 3), cla_a(0, 0, 0), cla_h(2, 0), cla_h(-3, 0), heisenberg()}) {
		CLA back = extract_cla(enveloping(L), 4);
		CHECK(back == L);
		HopfPresentation U = enveloping(L), V = enveloping(back);
		CHECK(U.algebra().commutators() == V.algebra().commutators());
		CHECK(U.deltas() == V.deltas());
	}

	CLA f = extract_cla(hopf_F("1", "0", "0"), 5);
	CHECK(f.names() == std::vector<std::string>{"X", "Y", "Z"});
	CHECK(f.b(2, 0, 1) == 1); // [Z,X] = Y
	CHECK(f.b(2, 1, 1) == 0);
	CHECK(f.d(2, 0, 1) == 1);
	CHECK(f.d(2, 1, 0) == -1);
	CHECK(verify_cla(f).passed());

	CLA d = extract_cla(hopf_D_general(), 5);
	CHECK(d.names() == std::vector<std::string>{"X", "Y", "Z"});
	CLA expected({"X", "Y", "Z"});
	skew(expected, 2, 0, 1);
	CHECK(d == expected);

	// P2 of U(a(0,0,0)) picks up z only at bound 2.
	CHECK_THROWS_AS(extract_cla(enveloping(cla_a(0, 0, 0)), 2), StructuralError);
}

TEST_CASE("associated graded")
{
	auto g = associated_graded(hopf_A("1", "0", "0"));
	auto a0 = hopf_A("0", "0", "0");
	CHECK(g.algebra().commutators() == a0.algebra().commutators());
	CHECK(g.deltas() == a0.deltas());

	auto gd = associated_graded(hopf_D_general());
	auto d0 = hopf_D("1", "2", alg_D(0, 0, 0, 0, 0, 0));
	CHECK(gd.algebra().commutators().empty());
	CHECK(gd.deltas() == d0.deltas());

	auto gg = associated_graded(d0);
	CHECK(gg.deltas() == d0.deltas());
	CHECK(gg.algebra().commutators() == d0.algebra().commutators());

	// K has [W,Z] = W - X*Y^2 of degree 3 < 5: dropped.
	CHECK(associated_graded(hopf_K()).algebra().commutators().empty());
}

TEST_CASE("lanterns of Hopf presentations")
{
	GradedLie ab = lantern_of_hopf(enveloping(abelian(4)), 2);
	CHECK(ab.dims_by_degree() == std::map<int, size_t>{{1, 4}});
	CHECK(classify_lantern(ab) == "abelian-4");

	GradedLie heis = lantern_of_hopf(enveloping(cla_a(0, 0, 0)), 3);
	CHECK(heis.names == std::vector<std::string>{"x*", "y*", "z*"});
	CHECK(heis.bracket[0][1] == v3(0, 0, 2));
	CHECK(heis.bracket[0][2] == v3(0, 0, 0));
	CHECK(heis.bracket[1][2] == v3(0, 0, 0));

	// theta = (0,1): [z*,y*](W) pairs against -Z (x) Y + Y (x) Z in t.
	GradedLie d = lantern_of_hopf(hopf_D01(), 3);
	CHECK(d.names == std::vector<std::string>{"X*", "Y*", "Z*", "W*"});
	CHECK(d.bracket[0][1] == v4(0, 0, 2, 0));
	CHECK(d.bracket[2][1] == v4(0, 0, 0, -2));
	CHECK(d.bracket[2][0] == v4(0, 0, 0, 0));
	CHECK(classify_lantern(d) == "filiform-4");

	for (const auto& h : thin_families()) {
		GradedLie g = lantern_of_hopf(h, 3);
		CHECK(g.verify().passed());
	}
	CHECK(classify_lantern(lantern_of_hopf(hopf_K(), 3)) == "filiform-4");
	CHECK(classify_lantern(lantern_of_hopf(hopf_F("0", "1", "0"), 3)) == "filiform-4");
}

TEST_CASE("lantern of a CLA matches the lantern of its enveloping algebra")
{
	for (const CLA& L : {cla_a(1, 2, 3), cla_a(0, 0, 0), cla_h(2, 0), cla_h(3, 1), abelian(3)})
		CHECK(lantern_of_cla(L) == lantern_of_hopf(enveloping(L), 3));
	CHECK(classify_lantern(lantern_of_hopf(enveloping(cla_h(2, 0)), 3)) == "h3+k");
}

TEST_CASE("P2 properties")
{
	for (const auto& h : thin_families()) {
		auto P = primitive_space(h, 5);
		auto P2 = p2_space(h, 5);
		size_t p = P.dim();
		CHECK(P2.dim() - p <= p * (p - 1) / 2);
		CHECK(P2.dim() <= 4);
		const auto& alg = h.algebra();
		for (const auto& a : P2.basis)
			for (const auto& b : P.basis)
				CHECK(P2.contains(alg.bracket(a, b)));
		bool abelian_p = alg.bracket(P.basis[0], P.basis[1]).is_zero();
		if (abelian_p)
			for (const auto& a : P2.basis)
				for (const auto& b : P2.basis)
					CHECK(P.contains(alg.bracket(a, b)));
	}
}
