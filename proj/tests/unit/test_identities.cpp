#include <doctest.h>

#include "fixtures.hpp"
#include "hopf/catalog.hpp"

// Hand-written tensor identities for primitively generated pieces of the
// catalog, compared against what the engine derives from the tables.

using namespace hopf;
using namespace fixtures;

namespace {

TensorElement prim(const OrePresentation& p, const std::string& g)
{
	return tensor2(p, {{"1", g, "1"}, {"1", "1", g}});
}

TensorElement d_xy2(const OrePresentation& p)
{
	return tensor2(p, {{"1", "Y^2", "X"}, {"1", "X", "Y^2"}, {"2", "X*Y", "Y"}, {"2", "Y", "X*Y"}});
}

TensorElement d_x2y(const OrePresentation& p)
{
	return tensor2(p, {{"1", "Y", "X^2"}, {"1", "X^2", "Y"}, {"2", "X*Y", "X"}, {"2", "X", "X*Y"}});
}

TensorElement d_y3(const OrePresentation& p) { return tensor2(p, {{"3", "Y", "Y^2"}, {"3", "Y^2", "Y"}}); }

TensorElement yx_minus_xy(const OrePresentation& p) { return tensor2(p, {{"1", "Y", "X"}, {"-1", "X", "Y"}}); }

struct AParams {
	const char *l1, *l2, *al;
};

const std::vector<AParams> a_grid = {{"0", "0", "0"}, {"0", "0", "1"}, {"1", "1", "1"}, {"1", "0", "0"},
                                     {"1", "2", "0"}, {"1", "-1/2", "0"}, {"3", "0", "1"}};

} // namespace

TEST_CASE("coproducts of cubic monomials in commuting primitives")
{
	std::vector<HopfPresentation> hs = {make_A(0, 0, 0), make_A(1, 0, 0), make_A(1, 2, 0), make_A(0, 0, 1),
	                                    make_D(0, 1, 1, 2, 3, 4, 5, 6), make_E(1, 1, 0), make_F(0, 1, 2), make_K()};
	for (const auto& h : hs) {
		const auto& p = h.algebra();
		REQUIRE(p.commutator(1, 0).is_zero());
		CHECK(h.reduced_coproduct(p.parse("X*Y^2")) == d_xy2(p));
		CHECK(h.reduced_coproduct(p.parse("X^2*Y")) == d_x2y(p));
		CHECK(h.reduced_coproduct(p.parse("Y^3")) == d_y3(p));
	}
}

TEST_CASE("brackets of u and t with primitive tensors")
{
	for (const auto& par : a_grid) {
		CAPTURE(par.l1);
		CAPTURE(par.l2);
		CAPTURE(par.al);
		auto h = hopf_A(par.l1, par.l2, par.al);
		const auto& p = h.algebra();
		Scalar l1 = Scalar::parse(par.l1), l2 = Scalar::parse(par.l2), al = Scalar::parse(par.al);
		auto u = tensor2(p, u_terms()), t = tensor2(p, t_terms());
		auto x = prim(p, "X"), y = prim(p, "Y");
		CHECK(h.tensor_bracket(u, x) == al * yx_minus_xy(p));
		CHECK(h.tensor_bracket(t, x) == l1 * yx_minus_xy(p));
		CHECK(h.tensor_bracket(u, y) == l2 * yx_minus_xy(p));
		CHECK(h.tensor_bracket(t, y).is_zero());
	}
}

TEST_CASE("brackets of u and t with z and x (x) y - y (x) x when lambda2 = 0")
{
	for (const auto& par : a_grid) {
		if (Scalar::parse(par.l2) != Scalar(0))
			continue;
		CAPTURE(par.l1);
		CAPTURE(par.al);
		auto h = hopf_A(par.l1, par.l2, par.al);
		const auto& p = h.algebra();
		Scalar l1 = Scalar::parse(par.l1), al = Scalar::parse(par.al);
		auto u = tensor2(p, u_terms()), t = tensor2(p, t_terms());
		auto z = prim(p, "Z");
		auto c = -yx_minus_xy(p);
		auto sym = [&](const char* a, const char* b) { return tensor2(p, {{"1", a, b}, {"1", b, a}}); };

		CHECK(h.tensor_bracket(u, z) == -l1 * u + al * t - al * d_xy2(p) - l1 * sym("X*Y", "X"));
		CHECK(h.tensor_bracket(t, z) == -l1 * sym("X*Y", "Y") - al * sym("Y^2", "Y"));
		CHECK(h.tensor_bracket(u, c) == l1 * sym("X", "X*Y") + al * sym("Y", "X*Y"));
		CHECK(h.tensor_bracket(t, c) == -l1 * sym("X", "Y^2") - al * sym("Y", "Y^2"));
		// the bracket with the full coproduct of Z, as used for [w, z]
		CHECK(h.tensor_bracket(u, z + c) == -l1 * u + al * t - al * d_xy2(p) + al * sym("Y", "X*Y"));
	}
}

TEST_CASE("reduced coproducts of [W,X], [W,Y] and [W,Z] in the four-generator families")
{
	// C = A(l1, 0, al) sits inside as X, Y, Z; delta(W) = th1 u + th2 t.
	struct Case {
		std::string name;
		HopfPresentation h;
		Scalar th1, th2, l1, al, a11, a12, a21, a22, xi1, xi2;
		std::string wz_extra; // non-linear part of [W,Z] stated by the table
	};
	std::vector<Case> cases = {
	    {"D(1,0)", make_D(1, 0, 1, 2, 3, 4, 5, 6), 1, 0, 0, 0, 1, 2, 3, 4, 5, 6, ""},
	    {"D(0,1)", make_D(0, 1, 2, 0, 0, -1, 1, 0), 0, 1, 0, 0, 2, 0, 0, -1, 1, 0, ""},
	    {"D(1,1)", make_D(1, 1, 0, 1, 0, 0, 0, 0), 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, ""},
	    {"E(1,1,2)", make_E(1, 1, 2), 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, "-W"},
	    {"E(0,1,0)", make_E(0, 1, 0), 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, "-W"},
	    {"F(0,1,3)", make_F(0, 1, 3), 0, 1, 0, 1, 0, 0, 0, 1, 3, 0, "-2/3*Y^3"},
	    {"F(1,0,0)", make_F(1, 0, 0), 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, "-2/3*Y^3"},
	    {"K", make_K(), 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, "W - X*Y^2"},
	};
	for (const auto& c : cases) {
		CAPTURE(c.name);
		const auto& h = c.h;
		const auto& p = h.algebra();
		Element X = p.gen("X"), Y = p.gen("Y"), Z = p.gen("Z"), W = p.gen("W");
		auto u = tensor2(p, u_terms()), t = tensor2(p, t_terms()), dz = tensor2(p, delta_z());
		Scalar s = c.th1 * c.al + c.th2 * c.l1;

		// [w,x] = -s z + a11 x + a12 y and [w,y] = a21 x + a22 y (lambda2 = 0)
		CHECK(p.bracket(W, X) == -s * Z + c.a11 * X + c.a12 * Y);
		CHECK(p.bracket(W, Y) == c.a21 * X + c.a22 * Y);
		CHECK(h.reduced_coproduct(p.bracket(W, X)) == -s * dz);
		CHECK(h.reduced_coproduct(p.bracket(W, Y)).is_zero());

		// the constraint on theta and the coproduct of [w,z]
		CHECK(c.th1 * (c.th2 * c.l1 + c.th1 * c.al) == Scalar(0));
		auto expected = -c.th1 * c.l1 * u + (2 * c.th1 * c.al + c.th2 * c.l1) * t + (c.a11 + c.a22) * dz - s * d_xy2(p) -
		                Scalar(2, 3) * c.th2 * c.al * d_y3(p);
		CHECK(h.reduced_coproduct(p.bracket(W, Z)) == expected);
		Element wz = (c.a11 + c.a22) * Z + c.xi1 * X + c.xi2 * Y;
		if (!c.wz_extra.empty())
			wz += p.parse(c.wz_extra);
		CHECK(p.bracket(W, Z) == wz);
	}
}
