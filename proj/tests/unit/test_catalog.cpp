#include <doctest.h>

#include "cla_fixtures.hpp"
#include "fixtures.hpp"
#include "hopf/catalog.hpp"
#include "hopf/errors.hpp"
#include "hopf/structure.hpp"

using namespace hopf;
using namespace fixtures;

namespace {

bool same_tables(const HopfPresentation& a, const HopfPresentation& b)
{
	return a.algebra().commutators() == b.algebra().commutators() && a.deltas() == b.deltas();
}

OrePresentation alg_E(const std::string& a, const std::string& b, const std::string& xi)
{
	return ore(xyzw(), {{"Z,X", "X"}, {"W,X", a + "*X"}, {"W,Y", b + "*X"}, {"W,Z", a + "*Z - W + " + xi + "*X"}});
}

} // namespace

TEST_CASE("Hopf constructors match the relation tables")
{
	CHECK(same_tables(make_A(1, 2, 3), hopf_A("1", "2", "3")));
	CHECK(same_tables(make_A(0, 0, 0), hopf_A("0", "0", "0")));
	CHECK(same_tables(make_B(1), hopf_B("1")));
	CHECK(same_tables(make_F(1, 0, 0), hopf_F("1", "0", "0")));
	CHECK(same_tables(make_F(0, 1, 5), hopf_F("0", "1", "5")));
	CHECK(same_tables(make_K(), hopf_K()));
	CHECK(same_tables(make_D(0, 1, 1, 2, 3, 4, 5, 6), hopf_D("0", "1", alg_D(1, 2, 3, 4, 5, 6))));
	CHECK(same_tables(make_D(1, 0, 1, 0, 0, 0, 0, 0), hopf_D("1", "0", alg_D(1, 0, 0, 0, 0, 0))));
	CHECK(same_tables(make_E(1, 1, 2), hopf_of(alg_E("1", "1", "2"), {{"Z", delta_z()}, {"W", u_terms()}})));
}

TEST_CASE("constructor examples")
{
	HopfPresentation K = make_K();
	const auto& k = K.algebra();
	CHECK(k.bracket(k.gen("W"), k.gen("X")) == -k.gen("Z"));
	Element w1 = k.parse("W - 1/2*X*Y^2");
	CHECK(k.bracket(w1, k.gen("Z")) == w1);
	CHECK(k.bracket(w1, k.gen("X")) == -k.gen("Z"));
	CHECK(k.bracket(w1, k.gen("Y")).is_zero());

	// F: W' = W - 2/3 X Y^2 spans a Lie algebra with X, Y, Z.
	HopfPresentation F = make_F(1, 0, 7);
	const auto& f = F.algebra();
	Element w2 = f.parse("W - 2/3*X*Y^2");
	CHECK(f.bracket(w2, f.gen("X")) == f.gen("Y"));
	CHECK(f.bracket(w2, f.gen("Y")).is_zero());
	CHECK(f.bracket(w2, f.gen("Z")) == f.parse("7*X"));

	HopfPresentation B = make_B(0);
	CHECK(B.algebra().render(B.antipode(B.algebra().gen("Z"))) == "-Z + Y");

	CHECK(associated_graded(make_A(1, 0, 0)).algebra().commutators() == make_A(0, 0, 0).algebra().commutators());
}

TEST_CASE("parameter domains and warnings")
{
	CHECK_THROWS_AS(make_D(0, 0, 1, 0, 0, 0, 0, 0), ParameterError);
	Warnings w;
	make_A(1, 2, 1, &w);
	CHECK(w.size() == 1);
	w.clear();
	make_A(1, 1, 1, &w);
	make_A(1, 2, 0, &w);
	make_E(1, 5, 0, &w);
	make_F(0, 1, 3, &w);
	make_D(1, 0, 1, 0, 0, 7, 0, 0, &w);
	CHECK(w.empty());
	make_E(2, 0, 0, &w);
	make_F(1, 1, 0, &w);
	make_D(1, 0, 2, 0, 0, 0, 0, 0, &w);
	CHECK(w.size() == 3);

	CHECK_THROWS_AS(make_cla_35('h', {0, 1}), ParameterError);
	CHECK_THROWS_AS(make_cla_35('h', {-1, 0}), ParameterError);
	CHECK_THROWS_AS(make_cla_35('h', {2, 2}), ParameterError);
	CHECK_THROWS_AS(make_cla_35('a', {2, 0, 0}), ParameterError);
	CHECK_THROWS_AS(make_cla_35('e', {1}), ParameterError);
	CHECK_THROWS_AS(make_cla_35('q', {}), ParameterError);
	CHECK_THROWS_AS(build_family({"A", {1}}), ParameterError);
	CHECK_THROWS_AS(build_family({"nope", {}}), InputError);
	CHECK(build_family({"CLA35H", {2, 0}}).cla.has_value());
}

TEST_CASE("CLA constructors match the tables")
{
	CHECK(make_cla_a(1, 2, 3) == cla_a(1, 2, 3));
	CHECK(make_cla_35('h', {2, 1}) == cla_h(2, 1));
	CHECK(make_cla_35('h', {Scalar(1, 2), 0}) == cla_h(Scalar(1, 2), 0));
	// U(a) is A and U(b) is B: tables are compared by generator index.
	CHECK(same_tables(enveloping(make_cla_a(1, 2, 3)), make_A(1, 2, 3)));
	CHECK(same_tables(enveloping(make_cla_b(4)), make_B(4)));
}

TEST_CASE("corrupted b(lambda) fails the compatibility identity on (z,x)")
{
	CLA L = make_cla_b(2);
	L.set_bracket(2, 0, {0, 2, 1}); // [z,x] = +z + 2y
	auto rep = verify_cla(L);
	bool zx_failed = false;
	for (const auto& c : rep.checks())
		if (c.name == "compatibility (z,x)")
			zx_failed = !c.passed;
	CHECK(zx_failed);
	CHECK_FALSE(enveloping(L).verify_compatibility().passed());
}

TEST_CASE("four-dimensional CLA table")
{
	struct Case {
		char v;
		std::vector<Scalar> p;
		bool jacobi;
	};
	std::vector<Case> cases = {
	    {'a', {1, 1, 0}, true},  {'a', {0, 1, 5}, true},  {'a', {1, 0, -2}, true},
	    {'b', {1, 2, 3, 4, 5, 6, 7, 8, 9}, true},           {'c', {0, 1, 2}, true},
	    {'c', {Scalar(1, 2), 0, 3}, true},                  {'d', {1, 0, 1}, true},
	    {'d', {0, 2, 0}, true},  {'e', {1, 1, 0}, true},  {'e', {0, 1, 4}, true},
	    {'f', {}, true},         {'g', {1, 0, 0}, true},  {'g', {0, 0, 0}, true},
	    {'g', {1, 0, 1}, false}, {'g', {0, 1, 0}, false}, {'h', {2, 0}, true},
	    {'h', {-3, 0}, true},    {'h', {2, 1}, false},    {'h', {3, 1}, false},
	};
	for (const auto& c : cases) {
		CLA L = make_cla_35(c.v, c.p);
		auto rep = verify_cla(L);
		INFO(c.v, " ", rep.to_text());
		CHECK(rep.passed() == c.jacobi);
		if (!c.jacobi)
			CHECK(rep.first_failure()->name == "Jacobi");
		CHECK(is_anti_cocommutative(L));
		CHECK(kernel_delta(L).size() == 3);
		CHECK(conilpotency_index(L) == 2);
		// delta(L) is the line through x1 (x) x2 - x2 (x) x1.
		for (size_t i = 0; i < 4; ++i)
			for (size_t j = 0; j < 4; ++j)
				for (size_t k = 0; k < 4; ++k) {
					Scalar expect = (i == 3 && j == 0 && k == 1) ? 1 : (i == 3 && j == 1 && k == 0) ? -1 : 0;
					CHECK(L.d(i, j, k) == expect);
				}
	}
}

TEST_CASE("list_catalog")
{
	auto list = list_catalog();
	auto has = [&](const std::string& label) {
		return std::any_of(list.begin(), list.end(), [&](const FamilySpec& s) { return s.label() == label; });
	};
	CHECK(has("A(0,0,0)"));
	CHECK(has("K"));
	CHECK(has("cla35h(2,1)"));
	for (const auto& s : list) {
		auto obj = build_family(s);
		CHECK(obj.warnings.empty());
		CHECK(obj.hopf.has_value() != obj.cla.has_value());
	}
}
