#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/report.hpp"
#include "hopf/scalar.hpp"

namespace hopf {

struct GeneratorInfo {
	std::string name;
	int degree = 1;
	std::optional<std::array<int, 2>> bidegree;
};

/// Sorted PBW monomial x_1^{e_1} ... x_n^{e_n}.
class Monomial {
public:
	Monomial() = default;
	explicit Monomial(std::vector<int> exponents);
	static Monomial unit(size_t n) { return Monomial(std::vector<int>(n, 0)); }
	static Monomial generator(size_t n, size_t i, int power = 1);

	size_t size() const { return e_.size(); }
	int operator[](size_t i) const { return e_[i]; }
	const std::vector<int>& exponents() const { return e_; }
	bool is_unit() const;
	int total_exponent() const;

	/// Exponent-wise sum, i.e. the commutative product.
	Monomial operator*(const Monomial& o) const;

	friend auto operator<=>(const Monomial&, const Monomial&) = default;
	friend bool operator==(const Monomial&, const Monomial&) = default;

private:
	std::vector<int> e_;
};

/// Linear combination of PBW monomials with no stored zero coefficients.
class Element {
public:
	using Terms = std::map<Monomial, Scalar>;

	Element() = default;
	static Element monomial(const Monomial& m, const Scalar& c = 1);
	static Element constant(size_t n, const Scalar& c);

	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }
	Scalar coeff(const Monomial& m) const;
	void add_term(const Monomial& m, const Scalar& c);
	/// this += c * o
	void add_scaled(const Element& o, const Scalar& c);

	Element& operator+=(const Element& o) { add_scaled(o, 1); return *this; }
	Element& operator-=(const Element& o) { add_scaled(o, -1); return *this; }
	Element& operator*=(const Scalar& c);
	friend Element operator+(Element a, const Element& b) { return a += b; }
	friend Element operator-(Element a, const Element& b) { return a -= b; }
	friend Element operator*(const Scalar& c, Element a) { return a *= c; }
	Element operator-() const { return Scalar(-1) * *this; }
	friend bool operator==(const Element&, const Element&) = default;

private:
	Terms terms_;
};

/// A word in the generators with a coefficient; input to rewriting only.
using Word = std::vector<size_t>;
using WordSum = std::map<Word, Scalar>;

namespace detail {
struct MulCache;
}

/// Ordered weighted generators plus a commutator table [x_j, x_i] = kappa_{ji}
/// for j > i. Immutable after construction.
class OrePresentation {
public:
	using CommutatorTable = std::map<std::pair<size_t, size_t>, Element>;

	OrePresentation();
	/// Validates names, degrees, bidegrees, table keys and the degree invariant
	/// deg kappa_{ji} < deg x_i + deg x_j. Throws InputError.
	OrePresentation(std::vector<GeneratorInfo> generators, CommutatorTable commutators);

	size_t size() const { return gens_.size(); }
	const std::vector<GeneratorInfo>& generators() const { return gens_; }
	const CommutatorTable& commutators() const { return comm_; }
	std::optional<size_t> index_of(std::string_view name) const;
	/// Throws InputError for unknown names.
	size_t require_index(std::string_view name) const;
	/// kappa_{ji} for j > i, zero when absent.
	const Element& commutator(size_t j, size_t i) const;
	/// Copy with one table entry replaced (fresh caches).
	OrePresentation with_commutator(size_t j, size_t i, const Element& kappa) const;

	int degree(const Monomial& m) const;
	/// Weighted degree; nullopt for the zero element.
	std::optional<int> degree(const Element& a) const;
	/// Homogeneous component of a in weighted degree exactly d.
	Element component(const Element& a, int d) const;
	/// Top-degree component (zero for zero).
	Element top(const Element& a) const;
	bool has_bidegrees() const;
	std::array<int, 2> bidegree(const Monomial& m) const;

	Element one() const { return Element::constant(size(), 1); }
	Element gen(size_t i) const;
	Element gen(std::string_view name) const { return gen(require_index(name)); }
	Element mono(const Monomial& m, const Scalar& c = 1) const;

	/// Leftmost-inversion rewriting to PBW normal form.
	Element normal_form(const WordSum& w) const;
	Element normal_form(const Word& w, const Scalar& c = 1) const;
	Element normal_form(const std::vector<std::string>& names, const Scalar& c = 1) const;
	/// Parses "2*Z*X - 1/2*X*Y^2 + 3"; products are taken in the written order
	/// and normalized. Throws InputError.
	Element parse(std::string_view expr) const;

	Element mul(const Element& a, const Element& b) const;
	Element bracket(const Element& a, const Element& b) const;
	Element power(const Element& a, int n) const;

	/// Overlap check on every triple k > j > i.
	VerificationReport verify_pbw_consistency() const;

	/// Number of PBW monomials of weighted degree <= n.
	std::uint64_t pbw_count(int n) const;
	/// All PBW monomials of weighted degree <= d, ascending in monomial order.
	std::vector<Monomial> monomials_up_to(int d, bool include_unit) const;
	/// Canonical total order: weighted degree first, then lexicographically
	/// larger exponent vectors come first (so X < Y < Z, X^2 < XY < Y^2).
	bool mono_less(const Monomial& a, const Monomial& b) const;

	Word word_of(const Monomial& m) const;
	std::string render(const Monomial& m) const;
	/// Terms from highest to lowest in monomial order, e.g. "X*Z + X".
	std::string render(const Element& a) const;

	void check_member(const Element& a) const;
	void check_member(const Monomial& m) const;

private:
	Element mul_mono_gen(const Monomial& m, size_t g) const;
	Element mul_mono_mono(const Monomial& m, const Monomial& nu) const;

	std::vector<GeneratorInfo> gens_;
	CommutatorTable comm_;
	std::shared_ptr<detail::MulCache> cache_;
};

/// Renders a scalar coefficient in front of a named term ("", "-", "3*", "-1/2*").
std::string render_term(const Scalar& c, const std::string& body);

} // namespace hopf
