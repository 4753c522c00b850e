#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "hopf/coalgebra.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

/// Truncated cobar complex in cohomological ranks 1, 2 and 3. Basis tuples of
/// non-unit monomials with total weighted degree <= bound, ordered by
/// (total degree, componentwise monomial order).
struct CobarComplex {
	int bound = 0;
	std::array<std::vector<TensorKey>, 3> bases; // ranks 1, 2, 3
	Matrix d1;                                   // rank 1 -> rank 2
	Matrix d2;                                   // rank 2 -> rank 3
	std::array<std::map<TensorKey, size_t>, 3> index;
};

/// Cobar differential on a rank-1 or rank-2 tensor: delta(c), and
/// delta(a) (x) b - a (x) delta(b).
TensorElement cobar_differential(const HopfPresentation& h, const TensorElement& t);
/// Total weighted degree of the highest term; 0 for zero.
int tensor_degree(const OrePresentation& alg, const TensorElement& t);

CobarComplex build_complex(const HopfPresentation& h, int bound);

struct CobarEntry {
	int total = 0;                   // total degree (filtered mode: the level)
	std::optional<std::array<int, 2>> bidegree;
	size_t cocycles = 0;
	size_t coboundaries = 0;
	size_t h2() const { return cocycles - coboundaries; }
};

/// Graded mode lists every bidegree with rank-2 cochains; filtered mode lists
/// cumulative levels 1..bound, and its last entry is the whole truncation.
struct CobarReport {
	int bound = 0;
	bool by_bidegree = false;
	std::vector<CobarEntry> entries;
	size_t total_h2() const;
	/// Entry for a bidegree (graded) or level (filtered).
	const CobarEntry* find(std::array<int, 2> bideg) const;
	const CobarEntry* level(int n) const;
};

/// Throws InputError in bidegree mode when generators lack bidegrees or the
/// presentation is not bidegree-homogeneous.
CobarReport h2_report(const HopfPresentation& h, int bound, bool by_bidegree);

struct CoboundaryResult {
	bool is_coboundary = false;
	Element witness;            // a cochain with differential w, when one exists
	size_t rank = 0;            // rank of d1 on the search space
	size_t rank_augmented = 0;  // rank with w appended; larger means no solution
};

/// Solves d1(c) = w over cochains of degree <= max(deg w, 1). Throws
/// InputError when w is not a rank-2 cocycle or exceeds the bound.
CoboundaryResult is_coboundary(const HopfPresentation& h, const TensorElement& w, int bound);

} // namespace hopf
