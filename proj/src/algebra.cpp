#include "hopf/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents))
{
	for (int x : e_)
		if (x < 0)
			throw InputError("negative exponent in monomial");
}

Monomial Monomial::generator(size_t n, size_t i, int power)
{
	std::vector<int> e(n, 0);
	e.at(i) = power;
	return Monomial(std::move(e));
}

bool Monomial::is_unit() const
{
	return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

int Monomial::total_exponent() const
{
	int s = 0;
	for (int x : e_)
		s += x;
	return s;
}

Monomial Monomial::operator*(const Monomial& o) const
{
	if (o.size() != size())
		throw InputError("monomials over different generator sets");
	std::vector<int> e = e_;
	for (size_t i = 0; i < e.size(); ++i)
		e[i] += o.e_[i];
	return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------

Element Element::monomial(const Monomial& m, const Scalar& c)
{
	Element e;
	e.add_term(m, c);
	return e;
}

Element Element::constant(size_t n, const Scalar& c) { return monomial(Monomial::unit(n), c); }

Scalar Element::coeff(const Monomial& m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

void Element::add_scaled(const Element& o, const Scalar& c)
{
	if (c.is_zero())
		return;
	for (const auto& [m, x] : o.terms_)
		add_term(m, c * x);
}

Element& Element::operator*=(const Scalar& c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto& [m, x] : terms_)
		x *= c;
	return *this;
}

std::string render_term(const Scalar& c, const std::string& body)
{
	if (body.empty())
		return c.str();
	if (c.is_one())
		return body;
	if (c == Scalar(-1))
		return "-" + body;
	return c.str() + "*" + body;
}

// ---------------------------------------------------------------------------

namespace detail {
struct MulCache {
	std::mutex mu;
	std::map<std::pair<Monomial, size_t>, Element> gen;
	std::map<std::pair<Monomial, Monomial>, Element> mono;
};
} // namespace detail

OrePresentation::OrePresentation() : cache_(std::make_shared<detail::MulCache>()) {}

OrePresentation::OrePresentation(std::vector<GeneratorInfo> generators, CommutatorTable commutators)
    : gens_(std::move(generators)), cache_(std::make_shared<detail::MulCache>())
{
	std::set<std::string> names;
	size_t with_bideg = 0;
	for (const auto& g : gens_) {
		if (g.name.empty())
			throw InputError("generator with empty name");
		if (!names.insert(g.name).second)
			throw InputError("duplicate generator name '" + g.name + "'");
		if (g.degree < 1)
			throw InputError("generator '" + g.name + "' must have positive degree");
		if (g.bidegree) {
			++with_bideg;
			auto [a, b] = *g.bidegree;
			if (a < 0 || b < 0 || a + b != g.degree)
				throw InputError("bidegree of '" + g.name + "' does not sum to its degree");
		}
	}
	if (with_bideg != 0 && with_bideg != gens_.size())
		throw InputError("either every generator carries a bidegree or none does");

	for (auto& [key, kappa] : commutators) {
		auto [j, i] = key;
		if (j >= gens_.size() || i >= j)
			throw InputError("commutator key must name a pair HIGHER,LOWER of generators");
		check_member(kappa);
		if (kappa.is_zero())
			continue;
		int bound = gens_[i].degree + gens_[j].degree;
		if (*degree(kappa) >= bound)
			throw InputError("commutator [" + gens_[j].name + "," + gens_[i].name +
			                 "] must have weighted degree below " + std::to_string(bound));
		comm_.emplace(key, std::move(kappa));
	}
}

std::optional<size_t> OrePresentation::index_of(std::string_view name) const
{
	for (size_t i = 0; i < gens_.size(); ++i)
		if (gens_[i].name == name)
			return i;
	return std::nullopt;
}

size_t OrePresentation::require_index(std::string_view name) const
{
	auto i = index_of(name);
	if (!i)
		throw InputError("unknown generator '" + std::string(name) + "'");
	return *i;
}

const Element& OrePresentation::commutator(size_t j, size_t i) const
{
	static const Element zero;
	auto it = comm_.find({j, i});
	return it == comm_.end() ? zero : it->second;
}

OrePresentation OrePresentation::with_commutator(size_t j, size_t i, const Element& kappa) const
{
	CommutatorTable t = comm_;
	t[{j, i}] = kappa;
	return OrePresentation(gens_, std::move(t));
}

int OrePresentation::degree(const Monomial& m) const
{
	check_member(m);
	int d = 0;
	for (size_t i = 0; i < m.size(); ++i)
		d += m[i] * gens_[i].degree;
	return d;
}

std::optional<int> OrePresentation::degree(const Element& a) const
{
	std::optional<int> d;
	for (const auto& [m, c] : a.terms())
		d = std::max(d.value_or(0), degree(m));
	return d;
}

Element OrePresentation::component(const Element& a, int d) const
{
	Element out;
	for (const auto& [m, c] : a.terms())
		if (degree(m) == d)
			out.add_term(m, c);
	return out;
}

Element OrePresentation::top(const Element& a) const
{
	auto d = degree(a);
	return d ? component(a, *d) : Element();
}

bool OrePresentation::has_bidegrees() const
{
	return !gens_.empty() && gens_.front().bidegree.has_value();
}

std::array<int, 2> OrePresentation::bidegree(const Monomial& m) const
{
	if (!has_bidegrees())
		throw InputError("presentation has no bidegrees");
	check_member(m);
	std::array<int, 2> b{0, 0};
	for (size_t i = 0; i < m.size(); ++i) {
		b[0] += m[i] * (*gens_[i].bidegree)[0];
		b[1] += m[i] * (*gens_[i].bidegree)[1];
	}
	return b;
}

Element OrePresentation::gen(size_t i) const
{
	if (i >= size())
		throw InputError("generator index out of range");
	return Element::monomial(Monomial::generator(size(), i));
}

Element OrePresentation::mono(const Monomial& m, const Scalar& c) const
{
	check_member(m);
	return Element::monomial(m, c);
}

void OrePresentation::check_member(const Monomial& m) const
{
	if (m.size() != size())
		throw InputError("element does not belong to this presentation");
}

void OrePresentation::check_member(const Element& a) const
{
	for (const auto& [m, c] : a.terms())
		check_member(m);
}

// --- rewriting -------------------------------------------------------------

Element OrePresentation::normal_form(const WordSum& input) const
{
	// Every rewrite strictly lowers (weighted degree, inversion count), so
	// processing words in decreasing measure visits each word at most once and
	// merges coefficients before they are expanded.
	using Key = std::tuple<int, int, Word>;
	auto key_of = [&](const Word& w) {
		int deg = 0, inv = 0;
		for (size_t a = 0; a < w.size(); ++a) {
			if (w[a] >= size())
				throw InputError("word letter out of range");
			deg += gens_[w[a]].degree;
			for (size_t b = a + 1; b < w.size(); ++b)
				if (w[a] > w[b])
					++inv;
		}
		return Key{deg, inv, w};
	};
	std::map<Key, Scalar, std::greater<>> pending;
	auto push = [&](const Word& w, const Scalar& c) {
		if (c.is_zero())
			return;
		auto [it, inserted] = pending.try_emplace(key_of(w), c);
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero())
				pending.erase(it);
		}
	};
	for (const auto& [w, c] : input)
		push(w, c);

	Element out;
	while (!pending.empty()) {
		auto node = pending.extract(pending.begin());
		const Word& w = std::get<2>(node.key());
		const Scalar& c = node.mapped();
		size_t pos = w.size();
		for (size_t a = 0; a + 1 < w.size(); ++a) {
			if (w[a] > w[a + 1]) {
				pos = a;
				break;
			}
		}
		if (pos == w.size()) {
			std::vector<int> e(size(), 0);
			for (size_t g : w)
				++e[g];
			out.add_term(Monomial(std::move(e)), c);
			continue;
		}
		Word swapped = w;
		std::swap(swapped[pos], swapped[pos + 1]);
		push(swapped, c);
		for (const auto& [m, k] : commutator(w[pos], w[pos + 1]).terms()) {
			Word repl(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
			Word mid = word_of(m);
			repl.insert(repl.end(), mid.begin(), mid.end());
			repl.insert(repl.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
			push(repl, c * k);
		}
	}
	return out;
}

Element OrePresentation::normal_form(const Word& w, const Scalar& c) const
{
	return normal_form(WordSum{{w, c}});
}

Element OrePresentation::normal_form(const std::vector<std::string>& names, const Scalar& c) const
{
	Word w;
	for (const auto& n : names)
		w.push_back(require_index(n));
	return normal_form(w, c);
}

Word OrePresentation::word_of(const Monomial& m) const
{
	Word w;
	for (size_t i = 0; i < m.size(); ++i)
		for (int r = 0; r < m[i]; ++r)
			w.push_back(i);
	return w;
}

// --- multiplication --------------------------------------------------------

Element OrePresentation::mul_mono_gen(const Monomial& m, size_t g) const
{
	size_t n = size();
	std::optional<size_t> last;
	for (size_t k = n; k-- > 0;) {
		if (m[k] > 0) {
			last = k;
			break;
		}
	}
	if (!last || *last <= g) {
		std::vector<int> e = m.exponents();
		++e[g];
		return Element::monomial(Monomial(std::move(e)));
	}
	{
		std::lock_guard lock(cache_->mu);
		auto it = cache_->gen.find({m, g});
		if (it != cache_->gen.end())
			return it->second;
	}
	// m = m' x_k with k > g:  m x_g = (m' x_g) x_k + m' kappa_{kg}.
	size_t k = *last;
	std::vector<int> e = m.exponents();
	--e[k];
	Monomial mp(std::move(e));
	Element res;
	const Element head = mul_mono_gen(mp, g);
	for (const auto& [t, c] : head.terms())
		res.add_scaled(mul_mono_gen(t, k), c);
	for (const auto& [t, c] : commutator(k, g).terms())
		res.add_scaled(mul_mono_mono(mp, t), c);
	std::lock_guard lock(cache_->mu);
	cache_->gen.emplace(std::make_pair(m, g), res);
	return res;
}

Element OrePresentation::mul_mono_mono(const Monomial& m, const Monomial& nu) const
{
	if (nu.is_unit())
		return Element::monomial(m);
	if (m.is_unit())
		return Element::monomial(nu);
	{
		std::lock_guard lock(cache_->mu);
		auto it = cache_->mono.find({m, nu});
		if (it != cache_->mono.end())
			return it->second;
	}
	// nu = x_i nu' with i its first generator; x_i nu' is already sorted.
	size_t i = 0;
	while (nu[i] == 0)
		++i;
	std::vector<int> e = nu.exponents();
	--e[i];
	Monomial rest(std::move(e));
	Element res;
	const Element head = mul_mono_gen(m, i);
	for (const auto& [t, c] : head.terms())
		res.add_scaled(mul_mono_mono(t, rest), c);
	std::lock_guard lock(cache_->mu);
	cache_->mono.emplace(std::make_pair(m, nu), res);
	return res;
}

Element OrePresentation::mul(const Element& a, const Element& b) const
{
	check_member(a);
	check_member(b);
	Element out;
	for (const auto& [ma, ca] : a.terms())
		for (const auto& [mb, cb] : b.terms())
			out.add_scaled(mul_mono_mono(ma, mb), ca * cb);
	return out;
}

Element OrePresentation::bracket(const Element& a, const Element& b) const
{
	return mul(a, b) - mul(b, a);
}

Element OrePresentation::power(const Element& a, int n) const
{
	if (n < 0)
		throw InputError("negative power");
	Element r = one();
	for (int i = 0; i < n; ++i)
		r = mul(r, a);
	return r;
}

// --- confluence ------------------------------------------------------------

VerificationReport OrePresentation::verify_pbw_consistency() const
{
	VerificationReport rep("PBW consistency (overlap x_k x_j x_i for k > j > i)");
	size_t n = size();
	for (size_t k = 0; k < n; ++k) {
		for (size_t j = 0; j < k; ++j) {
			for (size_t i = 0; i < j; ++i) {
				// Route 1 rewrites x_k x_j first, route 2 rewrites x_j x_i first.
				WordSum r1{{Word{j, k, i}, 1}};
				for (const auto& [m, c] : commutator(k, j).terms()) {
					Word w = word_of(m);
					w.push_back(i);
					r1[w] += c;
				}
				WordSum r2{{Word{k, i, j}, 1}};
				for (const auto& [m, c] : commutator(j, i).terms()) {
					Word w{k};
					Word mid = word_of(m);
					w.insert(w.end(), mid.begin(), mid.end());
					r2[w] += c;
				}
				Element diff = normal_form(r1) - normal_form(r2);
				std::string name = "overlap (" + gens_[k].name + "," + gens_[j].name + "," + gens_[i].name + ")";
				rep.add(name, diff.is_zero(), diff.is_zero() ? "" : "discrepancy " + render(diff));
			}
		}
	}
	return rep;
}

// --- counting and enumeration ---------------------------------------------

std::uint64_t OrePresentation::pbw_count(int n) const
{
	if (n < 0)
		return 0;
	// exact[d] = number of monomials of weighted degree exactly d.
	std::vector<std::uint64_t> exact(static_cast<size_t>(n) + 1, 0);
	exact[0] = 1;
	for (const auto& g : gens_)
		for (int d = g.degree; d <= n; ++d)
			exact[d] += exact[d - g.degree];
	std::uint64_t total = 0;
	for (auto x : exact)
		total += x;
	return total;
}

std::vector<Monomial> OrePresentation::monomials_up_to(int d, bool include_unit) const
{
	std::vector<Monomial> out;
	std::vector<int> e(size(), 0);
	std::function<void(size_t, int)> rec = [&](size_t i, int budget) {
		if (i == size()) {
			Monomial m(e);
			if (include_unit || !m.is_unit())
				out.push_back(std::move(m));
			return;
		}
		for (int p = 0; p * gens_[i].degree <= budget; ++p) {
			e[i] = p;
			rec(i + 1, budget - p * gens_[i].degree);
		}
		e[i] = 0;
	};
	if (d >= 0)
		rec(0, d);
	std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return mono_less(a, b); });
	return out;
}

bool OrePresentation::mono_less(const Monomial& a, const Monomial& b) const
{
	int da = degree(a), db = degree(b);
	if (da != db)
		return da < db;
	return a.exponents() > b.exponents();
}

// --- rendering -------------------------------------------------------------

std::string OrePresentation::render(const Monomial& m) const
{
	std::string s;
	for (size_t i = 0; i < m.size(); ++i) {
		if (m[i] == 0)
			continue;
		if (!s.empty())
			s += "*";
		s += gens_.at(i).name;
		if (m[i] > 1)
			s += "^" + std::to_string(m[i]);
	}
	return s;
}

std::string OrePresentation::render(const Element& a) const
{
	if (a.is_zero())
		return "0";
	std::vector<std::pair<Monomial, Scalar>> ts(a.terms().begin(), a.terms().end());
	std::sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) { return mono_less(y.first, x.first); });
	std::string s;
	for (const auto& [m, c] : ts) {
		bool neg = c.sign() < 0;
		std::string t = render_term(neg ? -c : c, render(m));
		if (s.empty())
			s = neg ? "-" + t : t;
		else
			s += (neg ? " - " : " + ") + t;
	}
	return s;
}

} // namespace hopf

namespace hopf {

Element OrePresentation::parse(std::string_view expr) const
{
	auto fail = [&](const std::string& why) {
		throw InputError("cannot parse element '" + std::string(expr) + "': " + why);
	};
	std::string s;
	for (char ch : expr)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s += ch;
	if (s.empty())
		fail("empty expression");
	WordSum ws;
	size_t pos = 0;
	while (pos < s.size()) {
		Scalar sign = 1;
		if (s[pos] == '+' || s[pos] == '-') {
			if (s[pos] == '-')
				sign = -1;
			++pos;
		} else if (pos != 0) {
			fail("expected + or -");
		}
		size_t end = pos;
		while (end < s.size() && s[end] != '+' && s[end] != '-')
			++end;
		std::string term = s.substr(pos, end - pos);
		pos = end;
		if (term.empty())
			fail("empty term");
		Scalar coeff = sign;
		Word w;
		size_t f = 0;
		while (f <= term.size()) {
			size_t star = term.find('*', f);
			if (star == std::string::npos)
				star = term.size();
			std::string factor = term.substr(f, star - f);
			f = star + 1;
			if (factor.empty())
				fail("empty factor");
			if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
				coeff *= Scalar::parse(factor);
				continue;
			}
			int power = 1;
			auto caret = factor.find('^');
			if (caret != std::string::npos) {
				std::string ps = factor.substr(caret + 1);
				if (ps.empty() || !std::all_of(ps.begin(), ps.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
					fail("bad exponent");
				power = std::stoi(ps);
				factor = factor.substr(0, caret);
			}
			size_t g = require_index(factor);
			for (int r = 0; r < power; ++r)
				w.push_back(g);
		}
		ws[w] += coeff;
	}
	return normal_form(ws);
}

} // namespace hopf
