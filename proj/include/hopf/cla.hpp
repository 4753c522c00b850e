#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf/coalgebra.hpp"
#include "hopf/linalg.hpp"
#include "hopf/report.hpp"

namespace hopf {

using Vec = std::vector<Scalar>;

/// Coassociative Lie algebra by structure constants:
/// [x_i, x_j] = sum_k b(i,j,k) x_k and delta(x_i) = sum_{j,k} d(i,j,k) x_j (x) x_k.
class CLA {
public:
	CLA() = default;
	explicit CLA(std::vector<std::string> basis);

	size_t dim() const { return names_.size(); }
	const std::vector<std::string>& names() const { return names_; }

	const Scalar& b(size_t i, size_t j, size_t k) const { return br_[i][j][k]; }
	const Scalar& d(size_t i, size_t j, size_t k) const { return de_[i][j][k]; }
	/// Sets [x_i, x_j] = v and [x_j, x_i] = -v. Throws InputError on i == j with v != 0.
	void set_bracket(size_t i, size_t j, const Vec& v);
	void set_delta(size_t i, size_t j, size_t k, const Scalar& c);

	Vec bracket(const Vec& a, const Vec& b) const;
	/// delta(a) as a dim x dim coefficient matrix.
	std::vector<Vec> delta(const Vec& a) const;
	bool delta_is_zero() const;

	friend bool operator==(const CLA&, const CLA&) = default;

private:
	std::vector<std::string> names_;
	std::vector<std::vector<Vec>> br_;
	std::vector<std::vector<Vec>> de_;
};

/// Positively graded Lie algebra by structure constants.
struct GradedLie {
	std::vector<std::string> names;
	std::vector<int> degrees;
	std::vector<std::vector<Vec>> bracket; // [i][j][k]

	size_t dim() const { return names.size(); }
	std::map<int, size_t> dims_by_degree() const;
	Vec bracket_of(const Vec& a, const Vec& b) const;
	/// Antisymmetry, Jacobi, degree additivity and generation in degree 1.
	VerificationReport verify() const;
	bool is_abelian() const;
	bool generated_in_degree_one() const;
	friend bool operator==(const GradedLie&, const GradedLie&) = default;
};

/// Shape of a 4-dimensional lantern: "abelian-4" (all in degree 1,
/// abelian), "h3+k" (dims 3,1 with nonzero bracket), "filiform-4" (dims
/// 2,1,1 with [L1,L1] = L2 and [L2,L1] = L3 nonzero), otherwise "other".
std::string classify_lantern(const GradedLie& g);

/// (i) Jacobi, (ii) coassociativity, (iii) the compatibility identity
/// inside U(L) (x) U(L), and (iv) anti-cocommutativity as a flag.
VerificationReport verify_cla(const CLA& L);
bool is_anti_cocommutative(const CLA& L);

/// Enveloping algebra with every basis vector in degree 1 and no checks;
/// used to evaluate the compatibility identity.
HopfPresentation unchecked_enveloping(const CLA& L);
/// U(L) as a connected Hopf presentation. Degrees are the least weights with
/// deg x_i >= deg x_j + deg x_k whenever x_j (x) x_k occurs in delta(x_i).
/// Throws StructuralError if L is not conilpotent or a bracket would break
/// the filtration.
HopfPresentation enveloping(const CLA& L);
std::vector<int> enveloping_weights(const CLA& L);

/// Basis of ker delta, in canonical reduced form.
std::vector<Vec> kernel_delta(const CLA& L);
/// Smallest n with ker delta^n = L, or nullopt if the chain stalls below L.
std::optional<int> conilpotency_index(const CLA& L);

/// Lantern via the pairing [f, g](y) = (f (x) g - g (x) f)(Delta y).
/// Throws InputError when L is not anti-cocommutative.
GradedLie lantern_of_cla(const CLA& L);

/// Structure constants in the basis x'_i = sum_j M(i,j) x_j, keeping names.
/// Throws InputError if M is singular or of the wrong size.
CLA cla_transform(const CLA& L, const Matrix& M);

} // namespace hopf
