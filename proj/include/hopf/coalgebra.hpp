#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

using TensorKey = std::vector<Monomial>;

/// Linear combination of rank-r tuples of PBW monomials.
class TensorElement {
public:
	using Terms = std::map<TensorKey, Scalar>;

	explicit TensorElement(size_t rank = 2) : rank_(rank) {}
	static TensorElement pure(TensorKey key, const Scalar& c = 1);
	/// a1 (x) a2 (x) ... expanded bilinearly.
	static TensorElement product(const std::vector<Element>& factors);
	static TensorElement from_element(const Element& a);

	size_t rank() const { return rank_; }
	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Scalar coeff(const TensorKey& k) const;
	void add_term(const TensorKey& k, const Scalar& c);
	void add_scaled(const TensorElement& o, const Scalar& c);
	/// Rank-1 tensor back to an element.
	Element to_element() const;
	/// Flip of a rank-2 tensor.
	TensorElement flip() const;

	TensorElement& operator+=(const TensorElement& o) { add_scaled(o, 1); return *this; }
	TensorElement& operator-=(const TensorElement& o) { add_scaled(o, -1); return *this; }
	TensorElement& operator*=(const Scalar& c);
	friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
	friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
	friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }
	TensorElement operator-() const { return Scalar(-1) * *this; }
	friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
	size_t rank_;
	Terms terms_;
};

/// Replaces tensor slot `slot` by f(monomial), a tensor of rank image_rank
/// (rank 0 is a scalar), and extends linearly.
TensorElement apply_slot(const TensorElement& t, size_t slot, size_t image_rank,
                         const std::function<TensorElement(const Monomial&)>& f);

namespace detail {
struct HopfCache;
}

/// Algebra plus the reduced coproduct of each generator.
class HopfPresentation {
public:
	using DeltaTable = std::map<size_t, TensorElement>;

	HopfPresentation();
	/// Requires rank-2 tables with no unit tensor factors. Degree drop of
	/// delta is checked by verify_coassociativity, not here. Throws InputError.
	HopfPresentation(OrePresentation algebra, DeltaTable deltas);

	const OrePresentation& algebra() const { return alg_; }
	const DeltaTable& deltas() const { return deltas_; }
	/// delta(x_g); zero for primitive generators.
	const TensorElement& delta_generator(size_t g) const;
	HopfPresentation with_delta(size_t g, const TensorElement& d) const;
	HopfPresentation with_algebra(const OrePresentation& a) const;

	TensorElement coproduct(const Element& a) const;
	TensorElement coproduct(const Monomial& m) const;
	/// Throws InputError when the counit of a is nonzero.
	TensorElement reduced_coproduct(const Element& a) const;
	TensorElement reduced_coproduct(const Monomial& m) const;
	Scalar counit(const Element& a) const;
	TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) const;
	TensorElement tensor_bracket(const TensorElement& s, const TensorElement& t) const;
	/// Throws StructuralError if delta does not lower degree.
	Element antipode(const Element& a) const;
	/// m(S (x) id) or m(id (x) S) applied to a rank-2 tensor.
	Element convolve_antipode(const TensorElement& t, bool left) const;

	/// Checks on generators, optionally re-checked on every monomial up to
	/// paranoid_degree.
	VerificationReport verify_coassociativity(std::optional<int> paranoid_degree = {}) const;
	VerificationReport verify_compatibility() const;
	VerificationReport verify_antipode(int degree_bound) const;
	/// Overlaps, coassociativity, compatibility and antipode together.
	VerificationReport verify_all(int antipode_degree = 4) const;

	std::string render(const TensorElement& t) const;
	void check_member(const TensorElement& t) const;

private:
	OrePresentation alg_;
	DeltaTable deltas_;
	std::shared_ptr<detail::HopfCache> cache_;
};

/// Checks that generator images define an algebra map (and, if asked, a
/// coalgebra map). Bijectivity is not decided.
VerificationReport verify_morphism(const HopfPresentation& src, const HopfPresentation& dst,
                                   const std::vector<Element>& images, bool check_coalgebra);
/// Images given as name -> expression parsed in dst. Throws InputError.
std::vector<Element> parse_images(const HopfPresentation& src, const HopfPresentation& dst,
                                  const std::map<std::string, std::string>& images);
/// phi extended multiplicatively to a PBW monomial and linearly to elements.
Element apply_morphism(const OrePresentation& dst, const std::vector<Element>& images, const Element& a);

} // namespace hopf
