#pragma once

#include <vector>

#include "hopf/cla.hpp"
#include "hopf/coalgebra.hpp"

namespace hopf {

/// Subspace of a presentation spanned by elements of degree <= degree_bound.
/// The basis is in reduced echelon form: each element is monic on its
/// highest monomial, no other basis element touches that monomial, and the
/// elements are listed by increasing leading monomial.
struct FilteredSubspace {
	OrePresentation algebra;
	int degree_bound = 0;
	std::vector<Element> basis;

	size_t dim() const { return basis.size(); }
	bool contains(const Element& a) const;
	/// Every basis element of this space lies in other.
	bool subset_of(const FilteredSubspace& other) const;
	/// Coordinates on the basis, or nullopt when a is outside the span.
	std::optional<std::vector<Scalar>> coordinates(const Element& a) const;
};

/// Reduced echelon basis of span(elems), using only monomials of degree <= d.
FilteredSubspace make_subspace(const OrePresentation& alg, int d, const std::vector<Element>& elems);

/// ker delta on the span of non-unit PBW monomials of degree <= d.
FilteredSubspace primitive_space(const HopfPresentation& h, int d);
/// {a : eps(a) = 0, delta(a) in P (x) P, flip(delta(a)) = -delta(a)} in degree <= d.
FilteredSubspace p2_space(const HopfPresentation& h, int d);
/// H_n in degree <= d, built as H_0 = k1 and H_n = {a : delta(a) in H_{n-1} (x) H_{n-1}}.
FilteredSubspace coradical_filtration(const HopfPresentation& h, int n, int d);

/// The CLA on p2_space(h, d). Throws StructuralError when P2 grows between
/// d-1 and d, or when a bracket or coproduct leaves it.
CLA extract_cla(const HopfPresentation& h, int d);

/// Keeps only the top homogeneous part of every commutator and coproduct.
HopfPresentation associated_graded(const HopfPresentation& h);

/// Lantern of h truncated to degrees <= d, computed from the indecomposables
/// of the associated graded algebra and the pairing against its coproduct.
GradedLie lantern_of_hopf(const HopfPresentation& h, int d);

} // namespace hopf
