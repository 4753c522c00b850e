#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/cla.hpp"
#include "hopf/coalgebra.hpp"

namespace hopf {

/// Normalization warnings are appended here when a sink is given.
using Warnings = std::vector<std::string>;

HopfPresentation make_A(const Scalar& l1, const Scalar& l2, const Scalar& alpha, Warnings* w = nullptr);
HopfPresentation make_B(const Scalar& lambda);
/// Throws ParameterError when both thetas vanish.
HopfPresentation make_D(const Scalar& th1, const Scalar& th2, const Scalar& a11, const Scalar& a12,
                        const Scalar& a21, const Scalar& a22, const Scalar& xi1, const Scalar& xi2,
                        Warnings* w = nullptr);
HopfPresentation make_E(const Scalar& a, const Scalar& b, const Scalar& xi, Warnings* w = nullptr);
HopfPresentation make_F(const Scalar& beta, const Scalar& gamma, const Scalar& xi, Warnings* w = nullptr);
HopfPresentation make_K();

/// U(g) with every generator primitive and in degree 1. brackets maps (i, j)
/// with i != j to [x_i, x_j]; the opposite entry is filled in by antisymmetry.
HopfPresentation make_lie(const std::vector<std::string>& names,
                          const std::map<std::pair<size_t, size_t>, Vec>& brackets);

CLA make_cla_a(const Scalar& l1, const Scalar& l2, const Scalar& alpha);
CLA make_cla_b(const Scalar& lambda);
/// Four-dimensional anti-cocommutative CLAs on x1, x2, x3, z with
/// delta(z) = x1 (x) x2 - x2 (x) x1. Variant "a" .. "h"; parameters:
///   a, e, g: (a, b, c) with (a, b) in {0,1}^2
///   b: the nine entries of (a_ij), row by row
///   c, d: (a, b, c)
///   f: none
///   h: (lambda, a) with lambda not in {0, -1} and a in {0, 1}
/// Throws ParameterError outside these domains.
CLA make_cla_35(char variant, const std::vector<Scalar>& params);

struct FamilySpec {
	std::string tag;
	std::vector<Scalar> params;
	std::string label() const;
};

struct FamilyInfo {
	std::string tag;
	size_t arity;
	bool is_cla;
	std::string params;
};

const std::vector<FamilyInfo>& family_table();
/// Case-insensitive lookup; throws InputError for unknown tags.
const FamilyInfo& find_family(const std::string& tag);

struct CatalogObject {
	FamilySpec spec;
	std::optional<HopfPresentation> hopf;
	std::optional<CLA> cla;
	Warnings warnings;
	/// The Hopf presentation itself, or U(L) for a CLA.
	HopfPresentation as_hopf() const;
};

/// Throws ParameterError for wrong arity or out-of-domain parameters.
CatalogObject build_family(const FamilySpec& spec);

/// One representative per family with normalized parameters, in a fixed order.
std::vector<FamilySpec> list_catalog();

} // namespace hopf
