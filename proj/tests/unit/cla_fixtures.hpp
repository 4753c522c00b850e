#pragma once

// Coassociative Lie algebras typed in from their bracket tables.

#include "hopf/cla.hpp"

namespace fixtures {

using hopf::CLA;
using hopf::Scalar;
using hopf::Vec;

inline Vec v3(Scalar a, Scalar b, Scalar c) { return {a, b, c}; }
inline Vec v4(Scalar a, Scalar b, Scalar c, Scalar d) { return {a, b, c, d}; }

/// delta(target) = x_i (x) x_j - x_j (x) x_i
inline void skew(CLA& L, size_t target, size_t i, size_t j)
{
	L.set_delta(target, i, j, 1);
	L.set_delta(target, j, i, -1);
}

/// Basis x, y, z: [z,x] = l1 x + al y, [z,y] = l2 y, delta z = x(x)y - y(x)x.
inline CLA cla_a(Scalar l1, Scalar l2, Scalar al)
{
	CLA L({"x", "y", "z"});
	L.set_bracket(2, 0, v3(l1, al, 0));
	L.set_bracket(2, 1, v3(0, l2, 0));
	skew(L, 2, 0, 1);
	return L;
}

/// Basis x1, x2, x3, z with [x3,x1] = x1, [x3,x2] = lam x2, [z,x1] = a x2,
/// [z,x2] = a x1, [z,x3] = (-1-lam) z.
inline CLA cla_h(Scalar lam, Scalar a)
{
	CLA L({"x1", "x2", "x3", "z"});
	L.set_bracket(2, 0, v4(1, 0, 0, 0));
	L.set_bracket(2, 1, v4(0, lam, 0, 0));
	L.set_bracket(3, 0, v4(0, a, 0, 0));
	L.set_bracket(3, 1, v4(a, 0, 0, 0));
	L.set_bracket(3, 2, v4(0, 0, 0, Scalar(-1) - lam));
	skew(L, 3, 0, 1);
	return L;
}

/// Two-dimensional abelian Lie algebra with delta(x2) = x1 (x) x1.
inline CLA cla_chain()
{
	CLA L({"x1", "x2"});
	L.set_delta(1, 0, 0, 1);
	return L;
}

} // namespace fixtures
