#include "hopf/coalgebra.hpp"

#include <mutex>

#include "hopf/errors.hpp"

namespace hopf {

TensorElement TensorElement::pure(TensorKey key, const Scalar& c)
{
	TensorElement t(key.size());
	t.add_term(key, c);
	return t;
}

TensorElement TensorElement::product(const std::vector<Element>& factors)
{
	TensorElement out(factors.size());
	TensorKey key(factors.size());
	std::function<void(size_t, const Scalar&)> rec = [&](size_t i, const Scalar& c) {
		if (i == factors.size()) {
			out.add_term(key, c);
			return;
		}
		for (const auto& [m, x] : factors[i].terms()) {
			key[i] = m;
			rec(i + 1, c * x);
		}
	};
	rec(0, 1);
	return out;
}

TensorElement TensorElement::from_element(const Element& a)
{
	TensorElement t(1);
	for (const auto& [m, c] : a.terms())
		t.add_term({m}, c);
	return t;
}

Scalar TensorElement::coeff(const TensorKey& k) const
{
	auto it = terms_.find(k);
	return it == terms_.end() ? Scalar() : it->second;
}

void TensorElement::add_term(const TensorKey& k, const Scalar& c)
{
	if (k.size() != rank_)
		throw InputError("tensor term of rank " + std::to_string(k.size()) + " added to rank " +
		                 std::to_string(rank_));
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(k, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

void TensorElement::add_scaled(const TensorElement& o, const Scalar& c)
{
	if (o.rank_ != rank_)
		throw InputError("tensor rank mismatch");
	if (c.is_zero())
		return;
	for (const auto& [k, x] : o.terms_)
		add_term(k, c * x);
}

TensorElement& TensorElement::operator*=(const Scalar& c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto& [k, x] : terms_)
		x *= c;
	return *this;
}

Element TensorElement::to_element() const
{
	if (rank_ != 1)
		throw InputError("only rank-1 tensors convert to elements");
	Element e;
	for (const auto& [k, c] : terms_)
		e.add_term(k[0], c);
	return e;
}

TensorElement TensorElement::flip() const
{
	if (rank_ != 2)
		throw InputError("flip needs a rank-2 tensor");
	TensorElement t(2);
	for (const auto& [k, c] : terms_)
		t.add_term({k[1], k[0]}, c);
	return t;
}

TensorElement apply_slot(const TensorElement& t, size_t slot, size_t image_rank,
                         const std::function<TensorElement(const Monomial&)>& f)
{
	if (slot >= t.rank())
		throw InputError("tensor slot out of range");
	TensorElement out(t.rank() - 1 + image_rank);
	for (const auto& [k, c] : t.terms()) {
		TensorElement img = f(k[slot]);
		if (img.rank() != image_rank)
			throw InputError("slot map returned a tensor of unexpected rank");
		for (const auto& [k2, c2] : img.terms()) {
			TensorKey nk(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(slot));
			nk.insert(nk.end(), k2.begin(), k2.end());
			nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(slot) + 1, k.end());
			out.add_term(nk, c * c2);
		}
	}
	return out;
}

// ---------------------------------------------------------------------------

namespace detail {
struct HopfCache {
	std::mutex mu;
	std::map<Monomial, TensorElement> coproduct;
	std::map<Monomial, Element> antipode;
};
} // namespace detail

HopfPresentation::HopfPresentation() : cache_(std::make_shared<detail::HopfCache>()) {}

HopfPresentation::HopfPresentation(OrePresentation algebra, DeltaTable deltas)
    : alg_(std::move(algebra)), cache_(std::make_shared<detail::HopfCache>())
{
	for (auto& [g, d] : deltas) {
		if (g >= alg_.size())
			throw InputError("coproduct given for an unknown generator");
		if (d.rank() != 2)
			throw InputError("reduced coproduct of '" + alg_.generators()[g].name + "' must have rank 2");
		check_member(d);
		for (const auto& [k, c] : d.terms())
			if (k[0].is_unit() || k[1].is_unit())
				throw InputError("reduced coproduct of '" + alg_.generators()[g].name +
				                 "' has a unit tensor factor");
		if (!d.is_zero())
			deltas_.emplace(g, std::move(d));
	}
}

const TensorElement& HopfPresentation::delta_generator(size_t g) const
{
	static const TensorElement zero(2);
	auto it = deltas_.find(g);
	return it == deltas_.end() ? zero : it->second;
}

HopfPresentation HopfPresentation::with_delta(size_t g, const TensorElement& d) const
{
	DeltaTable t = deltas_;
	t[g] = d;
	return HopfPresentation(alg_, std::move(t));
}

HopfPresentation HopfPresentation::with_algebra(const OrePresentation& a) const
{
	return HopfPresentation(a, deltas_);
}

void HopfPresentation::check_member(const TensorElement& t) const
{
	for (const auto& [k, c] : t.terms())
		for (const auto& m : k)
			alg_.check_member(m);
}

Scalar HopfPresentation::counit(const Element& a) const
{
	alg_.check_member(a);
	return a.coeff(Monomial::unit(alg_.size()));
}

TensorElement HopfPresentation::tensor_mul(const TensorElement& s, const TensorElement& t) const
{
	if (s.rank() != t.rank())
		throw InputError("tensor product of different ranks");
	check_member(s);
	check_member(t);
	TensorElement out(s.rank());
	for (const auto& [ks, cs] : s.terms())
		for (const auto& [kt, ct] : t.terms()) {
			std::vector<Element> f;
			f.reserve(ks.size());
			for (size_t i = 0; i < ks.size(); ++i)
				f.push_back(alg_.mul(alg_.mono(ks[i]), alg_.mono(kt[i])));
			out.add_scaled(TensorElement::product(f), cs * ct);
		}
	return out;
}

TensorElement HopfPresentation::tensor_bracket(const TensorElement& s, const TensorElement& t) const
{
	return tensor_mul(s, t) - tensor_mul(t, s);
}

TensorElement HopfPresentation::coproduct(const Monomial& m) const
{
	alg_.check_member(m);
	Monomial one = Monomial::unit(alg_.size());
	if (m.is_unit())
		return TensorElement::pure({one, one});
	{
		std::lock_guard lock(cache_->mu);
		auto it = cache_->coproduct.find(m);
		if (it != cache_->coproduct.end())
			return it->second;
	}
	size_t k = m.size();
	while (m[--k] == 0) {
	}
	Monomial xk = Monomial::generator(alg_.size(), k);
	TensorElement dk = delta_generator(k);
	dk.add_term({xk, one}, 1);
	dk.add_term({one, xk}, 1);
	TensorElement res;
	if (m == xk) {
		res = dk;
	} else {
		std::vector<int> e = m.exponents();
		--e[k];
		res = tensor_mul(coproduct(Monomial(std::move(e))), dk);
	}
	std::lock_guard lock(cache_->mu);
	cache_->coproduct.emplace(m, res);
	return res;
}

TensorElement HopfPresentation::coproduct(const Element& a) const
{
	TensorElement out(2);
	for (const auto& [m, c] : a.terms())
		out.add_scaled(coproduct(m), c);
	return out;
}

TensorElement HopfPresentation::reduced_coproduct(const Monomial& m) const
{
	if (m.is_unit())
		throw InputError("reduced coproduct is defined on the augmentation ideal only");
	Monomial one = Monomial::unit(alg_.size());
	TensorElement d = coproduct(m);
	d.add_term({m, one}, -1);
	d.add_term({one, m}, -1);
	return d;
}

TensorElement HopfPresentation::reduced_coproduct(const Element& a) const
{
	if (!counit(a).is_zero())
		throw InputError("reduced coproduct of an element with nonzero counit");
	TensorElement out(2);
	for (const auto& [m, c] : a.terms())
		out.add_scaled(reduced_coproduct(m), c);
	return out;
}

Element HopfPresentation::antipode(const Element& a) const
{
	alg_.check_member(a);
	Element out;
	for (const auto& [m, c] : a.terms()) {
		if (m.is_unit()) {
			out.add_term(m, c);
			continue;
		}
		Element s;
		bool cached = false;
		{
			std::lock_guard lock(cache_->mu);
			auto it = cache_->antipode.find(m);
			if (it != cache_->antipode.end()) {
				s = it->second;
				cached = true;
			}
		}
		if (!cached) {
			// S(m) = -m - sum S(a1) a2 over delta(m) = sum a1 (x) a2.
			int dm = alg_.degree(m);
			s = alg_.mono(m, -1);
			const TensorElement d = reduced_coproduct(m);
			for (const auto& [k, x] : d.terms()) {
				if (alg_.degree(k[0]) >= dm || alg_.degree(k[1]) >= dm)
					throw StructuralError("antipode recursion needs the reduced coproduct to lower degree; " +
					                      alg_.render(m) + " violates this");
				s.add_scaled(alg_.mul(antipode(alg_.mono(k[0])), alg_.mono(k[1])), -x);
			}
			std::lock_guard lock(cache_->mu);
			cache_->antipode.emplace(m, s);
		}
		out.add_scaled(s, c);
	}
	return out;
}

Element HopfPresentation::convolve_antipode(const TensorElement& t, bool left) const
{
	if (t.rank() != 2)
		throw InputError("convolution needs a rank-2 tensor");
	Element out;
	for (const auto& [k, c] : t.terms()) {
		Element a = alg_.mono(k[0]), b = alg_.mono(k[1]);
		out.add_scaled(left ? alg_.mul(antipode(a), b) : alg_.mul(a, antipode(b)), c);
	}
	return out;
}

std::string HopfPresentation::render(const TensorElement& t) const
{
	if (t.is_zero())
		return "0";
	std::string s;
	for (const auto& [k, c] : t.terms()) {
		std::string body;
		for (size_t i = 0; i < k.size(); ++i) {
			if (i)
				body += " (x) ";
			body += k[i].is_unit() ? "1" : alg_.render(k[i]);
		}
		bool neg = c.sign() < 0;
		Scalar ac = neg ? -c : c;
		std::string term = ac.is_one() ? body : ac.str() + "*(" + body + ")";
		if (s.empty())
			s = neg ? "-" + term : term;
		else
			s += (neg ? " - " : " + ") + term;
	}
	return s;
}

// --- verification ----------------------------------------------------------

namespace {

std::string mismatch(const HopfPresentation& h, const TensorElement& lhs, const TensorElement& rhs)
{
	return "lhs = " + h.render(lhs) + "; rhs = " + h.render(rhs);
}

} // namespace

VerificationReport HopfPresentation::verify_coassociativity(std::optional<int> paranoid_degree) const
{
	VerificationReport rep("coassociativity and counit");
	const auto& gens = alg_.generators();
	auto full = [&](const Monomial& m) { return coproduct(m); };
	auto eps = [&](const Monomial& m) {
		TensorElement t(0);
		if (m.is_unit())
			t.add_term({}, 1);
		return t;
	};
	auto check = [&](const Monomial& m, const std::string& label) {
		TensorElement d = coproduct(m);
		TensorElement lhs = apply_slot(d, 0, 2, full);
		TensorElement rhs = apply_slot(d, 1, 2, full);
		rep.add("coassociativity " + label, lhs == rhs, lhs == rhs ? "" : mismatch(*this, lhs, rhs));
		Element self = alg_.mono(m);
		Element left = apply_slot(d, 0, 0, eps).to_element();
		Element right = apply_slot(d, 1, 0, eps).to_element();
		rep.add("counit " + label, left == self && right == self,
		        left == self && right == self ? "" : "(eps x id) = " + alg_.render(left) + ", (id x eps) = " + alg_.render(right));
	};
	for (size_t g = 0; g < gens.size(); ++g) {
		std::string bad;
		for (const auto& [k, c] : delta_generator(g).terms()) {
			int d0 = alg_.degree(k[0]), d1 = alg_.degree(k[1]);
			if (d0 >= gens[g].degree || d1 >= gens[g].degree || d0 + d1 > gens[g].degree)
				bad = alg_.render(k[0]) + " (x) " + alg_.render(k[1]);
		}
		rep.add("degree drop of delta(" + gens[g].name + ")", bad.empty(), bad.empty() ? "" : "offending term " + bad);
		check(Monomial::generator(gens.size(), g), "(" + gens[g].name + ")");
	}
	rep.note("checked on generators; both sides are algebra maps, so agreement on generators gives agreement on all of H");
	if (paranoid_degree) {
		for (const auto& m : alg_.monomials_up_to(*paranoid_degree, false))
			if (m.total_exponent() > 1)
				check(m, "(" + alg_.render(m) + ")");
		rep.note("re-checked on every PBW monomial of degree <= " + std::to_string(*paranoid_degree));
	}
	return rep;
}

VerificationReport HopfPresentation::verify_compatibility() const
{
	VerificationReport rep("compatibility of the coproduct with the commutator table");
	const auto& gens = alg_.generators();
	Monomial one = Monomial::unit(gens.size());
	for (size_t j = 0; j < gens.size(); ++j) {
		for (size_t i = 0; i < j; ++i) {
			const Element& kappa = alg_.commutator(j, i);
			TensorElement lhs = coproduct(kappa);
			TensorElement rhs = tensor_bracket(coproduct(alg_.gen(j)), coproduct(alg_.gen(i)));
			std::string pair = "(" + gens[j].name + "," + gens[i].name + ")";
			rep.add("coproduct of [" + gens[j].name + "," + gens[i].name + "] " + pair, lhs == rhs,
			        lhs == rhs ? "" : mismatch(*this, lhs, rhs));
			Scalar e = counit(kappa);
			rep.add("counit of [" + gens[j].name + "," + gens[i].name + "] " + pair, e.is_zero(),
			        e.is_zero() ? "" : "counit " + e.str());
		}
	}
	return rep;
}

VerificationReport HopfPresentation::verify_antipode(int degree_bound) const
{
	VerificationReport rep("antipode axioms within degree bound " + std::to_string(degree_bound));
	try {
		for (const auto& m : alg_.monomials_up_to(degree_bound, true)) {
			TensorElement d = coproduct(m);
			Element expect = Element::constant(alg_.size(), counit(alg_.mono(m)));
			Element l = convolve_antipode(d, true), r = convolve_antipode(d, false);
			std::string name = m.is_unit() ? "1" : alg_.render(m);
			rep.add("m(S x id)D(" + name + ")", l == expect, l == expect ? "" : "got " + alg_.render(l));
			rep.add("m(id x S)D(" + name + ")", r == expect, r == expect ? "" : "got " + alg_.render(r));
		}
	} catch (const StructuralError& e) {
		rep.add("antipode recursion", false, e.what());
	}
	return rep;
}

VerificationReport HopfPresentation::verify_all(int antipode_degree) const
{
	VerificationReport rep("Hopf presentation verification");
	rep.merge(alg_.verify_pbw_consistency(), "pbw");
	auto co = verify_coassociativity();
	rep.merge(co, "coalgebra");
	auto cm = verify_compatibility();
	rep.merge(cm, "bialgebra");
	// The antipode recursion presupposes the axioms above.
	if (rep.passed())
		rep.merge(verify_antipode(antipode_degree), "antipode");
	else
		rep.note("antipode check skipped because an earlier axiom failed");
	return rep;
}

// --- morphisms -------------------------------------------------------------

Element apply_morphism(const OrePresentation& dst, const std::vector<Element>& images, const Element& a)
{
	Element out;
	for (const auto& [m, c] : a.terms()) {
		if (m.size() != images.size())
			throw InputError("morphism images do not match the source generators");
		Element img = dst.one();
		for (size_t i = 0; i < m.size(); ++i)
			for (int r = 0; r < m[i]; ++r)
				img = dst.mul(img, images[i]);
		out.add_scaled(img, c);
	}
	return out;
}

std::vector<Element> parse_images(const HopfPresentation& src, const HopfPresentation& dst,
                                  const std::map<std::string, std::string>& images)
{
	const auto& gens = src.algebra().generators();
	std::vector<Element> out;
	for (const auto& [name, expr] : images)
		src.algebra().require_index(name);
	for (const auto& g : gens) {
		auto it = images.find(g.name);
		if (it == images.end())
			throw InputError("no image given for generator '" + g.name + "'");
		out.push_back(dst.algebra().parse(it->second));
	}
	return out;
}

VerificationReport verify_morphism(const HopfPresentation& src, const HopfPresentation& dst,
                                   const std::vector<Element>& images, bool check_coalgebra)
{
	const OrePresentation& sa = src.algebra();
	const OrePresentation& da = dst.algebra();
	if (images.size() != sa.size())
		throw InputError("every source generator needs an image");
	for (const auto& im : images)
		da.check_member(im);
	VerificationReport rep(check_coalgebra ? "Hopf algebra map check" : "algebra map check");
	const auto& gens = sa.generators();
	for (size_t j = 0; j < gens.size(); ++j)
		for (size_t i = 0; i < j; ++i) {
			Element r = da.bracket(images[j], images[i]) - apply_morphism(da, images, sa.commutator(j, i));
			rep.add("relation [" + gens[j].name + "," + gens[i].name + "]", r.is_zero(),
			        r.is_zero() ? "" : "residual " + da.render(r));
		}
	if (check_coalgebra) {
		auto phi = [&](const Monomial& m) {
			return TensorElement::from_element(apply_morphism(da, images, sa.mono(m)));
		};
		for (size_t g = 0; g < gens.size(); ++g) {
			TensorElement lhs = dst.coproduct(images[g]);
			TensorElement rhs = apply_slot(apply_slot(src.coproduct(sa.gen(g)), 0, 1, phi), 1, 1, phi);
			rep.add("coproduct of image of " + gens[g].name, lhs == rhs, lhs == rhs ? "" : mismatch(dst, lhs, rhs));
			Scalar e = dst.counit(images[g]);
			rep.add("counit of image of " + gens[g].name, e.is_zero(), e.is_zero() ? "" : "counit " + e.str());
		}
	}
	rep.note("bijectivity is not decided");
	return rep;
}

} // namespace hopf
