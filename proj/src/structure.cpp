#include "hopf/structure.hpp"

#include <algorithm>
#include <functional>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Column coordinates on the PBW monomials of degree <= d. Column 0 is the
// highest monomial, so echelon pivots land on leading monomials.
class MonoCoords {
public:
	MonoCoords(const OrePresentation& alg, int d) : monos_(alg.monomials_up_to(d, true))
	{
		for (size_t i = 0; i < monos_.size(); ++i)
			pos_[monos_[i]] = i;
	}

	size_t size() const { return monos_.size(); }
	bool has(const Monomial& m) const { return pos_.count(m) != 0; }
	size_t col(const Monomial& m) const
	{
		auto it = pos_.find(m);
		if (it == pos_.end())
			throw InputError("monomial outside the degree bound");
		return monos_.size() - 1 - it->second;
	}
	const Monomial& mono(size_t col) const { return monos_[monos_.size() - 1 - col]; }

	SparseVec vec(const Element& a) const
	{
		SparseVec v;
		for (const auto& [m, c] : a.terms())
			v[col(m)] = c;
		return v;
	}
	Element elem(const SparseVec& v) const
	{
		Element a;
		for (const auto& [c, x] : v)
			a.add_term(mono(c), x);
		return a;
	}

private:
	std::vector<Monomial> monos_;
	std::map<Monomial, size_t> pos_;
};

int max_degree(const OrePresentation& alg, const std::vector<Element>& elems, int d)
{
	for (const auto& e : elems)
		if (auto g = alg.degree(e))
			d = std::max(d, *g);
	return d;
}

/// Reduction modulo the span of a subspace: a projection whose kernel is the span.
struct Projector {
	MonoCoords coords;
	SpanBuilder span;

	Projector(const OrePresentation& alg, int d, const std::vector<Element>& basis) : coords(alg, d)
	{
		for (const auto& b : basis)
			span.insert(coords.vec(b));
	}

	/// Applies the projection to one tensor slot.
	TensorElement apply(const TensorElement& t, size_t slot) const
	{
		std::map<TensorKey, SparseVec> groups;
		for (const auto& [k, c] : t.terms()) {
			TensorKey rest = k;
			rest[slot] = Monomial();
			groups[rest][coords.col(k[slot])] = c;
		}
		TensorElement out(t.rank());
		for (auto& [rest, v] : groups) {
			for (const auto& [col, c] : span.reduce(std::move(v))) {
				TensorKey k = rest;
				k[slot] = coords.mono(col);
				out.add_term(k, c);
			}
		}
		return out;
	}
};

/// Kernel of a linear map given on each non-unit monomial of degree <= d
/// as a list of tensors (stacked blocks).
FilteredSubspace kernel_on_monomials(const HopfPresentation& h, int d,
                                     const std::function<std::vector<TensorElement>(const Monomial&)>& f)
{
	const OrePresentation& alg = h.algebra();
	std::vector<Monomial> monos = alg.monomials_up_to(d, false);
	std::map<std::pair<size_t, TensorKey>, size_t> row_of;
	std::vector<std::vector<std::pair<size_t, Scalar>>> cols(monos.size());
	for (size_t c = 0; c < monos.size(); ++c) {
		std::vector<TensorElement> blocks = f(monos[c]);
		for (size_t b = 0; b < blocks.size(); ++b)
			for (const auto& [k, x] : blocks[b].terms()) {
				auto [it, fresh] = row_of.try_emplace({b, k}, row_of.size());
				cols[c].push_back({it->second, x});
			}
	}
	Matrix m(row_of.size(), monos.size());
	for (size_t c = 0; c < monos.size(); ++c)
		for (const auto& [r, x] : cols[c])
			m.set(r, c, x);
	std::vector<Element> kernel;
	for (const auto& v : kernel_basis(m)) {
		Element e;
		for (size_t c = 0; c < v.size(); ++c)
			if (!v[c].is_zero())
				e.add_term(monos[c], v[c]);
		kernel.push_back(std::move(e));
	}
	return make_subspace(alg, d, kernel);
}

/// Non-unit part of {a : delta(a) in V (x) V}.
FilteredSubspace delta_into(const HopfPresentation& h, int d, const FilteredSubspace& V, bool skew)
{
	Projector pi(h.algebra(), d, V.basis);
	return kernel_on_monomials(h, d, [&](const Monomial& m) {
		TensorElement dm = h.reduced_coproduct(m);
		std::vector<TensorElement> blocks{pi.apply(dm, 0), pi.apply(dm, 1)};
		if (skew)
			blocks.push_back(dm + dm.flip());
		return blocks;
	});
}

std::string basis_name(const OrePresentation& alg, const Element& b)
{
	if (b.size() == 1) {
		const auto& [m, c] = *b.terms().begin();
		if (c.is_one() && m.total_exponent() == 1)
			for (size_t i = 0; i < m.size(); ++i)
				if (m[i] == 1)
					return alg.generators()[i].name;
	}
	return alg.render(b);
}

} // namespace

std::optional<std::vector<Scalar>> FilteredSubspace::coordinates(const Element& a) const
{
	int d = max_degree(algebra, basis, std::max(degree_bound, max_degree(algebra, {a}, 0)));
	MonoCoords coords(algebra, d);
	std::vector<Scalar> out(basis.size());
	Element rest = a;
	// Leading monomials are the pivots of the echelon form.
	for (size_t i = 0; i < basis.size(); ++i) {
		size_t best = coords.size();
		for (const auto& [m, c] : basis[i].terms())
			best = std::min(best, coords.col(m));
		out[i] = a.coeff(coords.mono(best));
		rest.add_scaled(basis[i], -out[i]);
	}
	if (!rest.is_zero())
		return std::nullopt;
	return out;
}

bool FilteredSubspace::contains(const Element& a) const { return coordinates(a).has_value(); }

bool FilteredSubspace::subset_of(const FilteredSubspace& other) const
{
	return std::all_of(basis.begin(), basis.end(), [&](const Element& b) { return other.contains(b); });
}

FilteredSubspace make_subspace(const OrePresentation& alg, int d, const std::vector<Element>& elems)
{
	FilteredSubspace out{alg, d, {}};
	for (const auto& e : elems)
		alg.check_member(e);
	MonoCoords coords(alg, max_degree(alg, elems, d));
	if (elems.empty())
		return out;
	Matrix m(elems.size(), coords.size());
	for (size_t r = 0; r < elems.size(); ++r)
		for (const auto& [c, x] : coords.vec(elems[r]))
			m.set(r, c, x);
	Rref e = rref(m);
	for (size_t i = e.rows.size(); i-- > 0;)
		out.basis.push_back(coords.elem(e.rows[i]));
	return out;
}

FilteredSubspace primitive_space(const HopfPresentation& h, int d)
{
	if (d < 1)
		throw InputError("degree bound must be at least 1");
	return kernel_on_monomials(h, d, [&](const Monomial& m) { return std::vector<TensorElement>{h.reduced_coproduct(m)}; });
}

FilteredSubspace p2_space(const HopfPresentation& h, int d)
{
	return delta_into(h, d, primitive_space(h, d), true);
}

FilteredSubspace coradical_filtration(const HopfPresentation& h, int n, int d)
{
	if (n < 0 || d < 1)
		throw InputError("coradical filtration needs n >= 0 and d >= 1");
	const OrePresentation& alg = h.algebra();
	FilteredSubspace V{alg, d, {}};
	for (int k = 1; k <= n; ++k) {
		FilteredSubspace next = delta_into(h, d, V, false);
		if (next.dim() == V.dim())
			break; // the chain has stabilized inside the truncation
		V = std::move(next);
	}
	FilteredSubspace out{alg, d, {alg.one()}};
	out.basis.insert(out.basis.end(), V.basis.begin(), V.basis.end());
	return out;
}

CLA extract_cla(const HopfPresentation& h, int d)
{
	const OrePresentation& alg = h.algebra();
	FilteredSubspace L = p2_space(h, d);
	if (d > 1) {
		size_t before = p2_space(h, d - 1).dim();
		if (before != L.dim())
			throw StructuralError("P2 is not stable: dimension " + std::to_string(before) + " at bound " +
			                      std::to_string(d - 1) + " but " + std::to_string(L.dim()) + " at bound " +
			                      std::to_string(d));
	}
	const size_t n = L.dim();
	std::vector<std::string> names;
	for (const auto& b : L.basis)
		names.push_back(basis_name(alg, b));
	CLA out(names);

	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j) {
			Element br = alg.bracket(L.basis[i], L.basis[j]);
			auto c = L.coordinates(br);
			if (!c)
				throw StructuralError("[" + names[i] + "," + names[j] + "] = " + alg.render(br) + " is not in P2");
			out.set_bracket(i, j, *c);
		}

	// Leading monomial of each basis element; tensor coordinates are read there.
	MonoCoords coords(alg, d);
	std::vector<Monomial> lead;
	for (const auto& b : L.basis) {
		size_t best = coords.size();
		for (const auto& [m, c] : b.terms())
			best = std::min(best, coords.col(m));
		lead.push_back(coords.mono(best));
	}
	for (size_t i = 0; i < n; ++i) {
		TensorElement t = h.reduced_coproduct(L.basis[i]);
		TensorElement rest = t;
		for (size_t j = 0; j < n; ++j)
			for (size_t k = 0; k < n; ++k) {
				Scalar c = t.coeff({lead[j], lead[k]});
				if (c.is_zero())
					continue;
				out.set_delta(i, j, k, c);
				rest.add_scaled(TensorElement::product({L.basis[j], L.basis[k]}), -c);
			}
		if (!rest.is_zero())
			throw StructuralError("delta(" + names[i] + ") is not in P (x) P");
	}
	return out;
}

HopfPresentation associated_graded(const HopfPresentation& h)
{
	const OrePresentation& alg = h.algebra();
	const auto& gens = alg.generators();
	OrePresentation::CommutatorTable table;
	for (const auto& [key, kappa] : alg.commutators()) {
		Element top = alg.component(kappa, gens[key.first].degree + gens[key.second].degree);
		if (!top.is_zero())
			table[key] = top;
	}
	OrePresentation galg(gens, table);
	HopfPresentation::DeltaTable deltas;
	for (const auto& [g, d] : h.deltas()) {
		TensorElement top(2);
		for (const auto& [k, c] : d.terms())
			if (alg.degree(k[0]) + alg.degree(k[1]) == gens[g].degree)
				top.add_term(k, c);
		if (!top.is_zero())
			deltas[g] = top;
	}
	return HopfPresentation(galg, deltas);
}

GradedLie lantern_of_hopf(const HopfPresentation& h, int d)
{
	HopfPresentation G = associated_graded(h);
	const OrePresentation& alg = G.algebra();
	std::vector<Monomial> monos = alg.monomials_up_to(d, false);

	struct Piece {
		std::vector<Monomial> monos;      // degree-m monomials
		std::vector<Monomial> indec;      // lifted basis of Q_m
		std::vector<std::vector<Scalar>> dual; // dual[q][mono index]: q* on each monomial
	};
	std::map<int, Piece> pieces;
	for (const auto& m : monos)
		pieces[alg.degree(m)].monos.push_back(m);

	for (auto& [deg, piece] : pieces) {
		const size_t N = piece.monos.size();
		std::map<Monomial, size_t> idx;
		for (size_t i = 0; i < N; ++i)
			idx[piece.monos[i]] = i;
		auto vec = [&](const Element& e) {
			SparseVec v;
			for (const auto& [m, c] : e.terms())
				v[idx.at(m)] = c;
			return v;
		};
		SpanBuilder dec;
		std::vector<SparseVec> basis;
		for (auto& [a, pa] : pieces) {
			if (a >= deg || !pieces.count(deg - a))
				continue;
			for (const auto& x : pa.monos)
				for (const auto& y : pieces[deg - a].monos) {
					SparseVec v = vec(alg.mul(alg.mono(x), alg.mono(y)));
					if (dec.insert(v))
						basis.push_back(v);
				}
		}
		const size_t ndec = basis.size();
		for (const auto& m : piece.monos) {
			SparseVec v{{idx.at(m), Scalar(1)}};
			if (dec.insert(v)) {
				basis.push_back(v);
				piece.indec.push_back(m);
			}
		}
		// Columns of B are the chosen basis; rows of B^{-1} are the dual functionals.
		Matrix B(N, N);
		for (size_t c = 0; c < N; ++c)
			B.set_column(c, basis[c]);
		auto inv = inverse(B);
		if (!inv)
			throw StructuralError("degree " + std::to_string(deg) + " basis is singular");
		for (size_t q = 0; q < piece.indec.size(); ++q) {
			std::vector<Scalar> row(N);
			for (size_t i = 0; i < N; ++i)
				row[i] = inv->get(ndec + q, i);
			piece.dual.push_back(row);
		}
	}

	GradedLie out;
	struct Slot {
		int deg;
		size_t q;
	};
	std::vector<Slot> slots;
	for (const auto& [deg, piece] : pieces)
		for (size_t q = 0; q < piece.indec.size(); ++q) {
			slots.push_back({deg, q});
			out.names.push_back(alg.render(piece.indec[q]) + "*");
			out.degrees.push_back(deg);
		}
	const size_t n = slots.size();
	out.bracket.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));

	auto eval = [&](const Slot& s, const Monomial& m) -> Scalar {
		if (alg.degree(m) != s.deg)
			return 0;
		const Piece& p = pieces.at(s.deg);
		size_t i = std::find(p.monos.begin(), p.monos.end(), m) - p.monos.begin();
		return p.dual[s.q][i];
	};

	for (size_t t = 0; t < n; ++t) {
		const Monomial& y = pieces.at(slots[t].deg).indec[slots[t].q];
		const TensorElement D = G.coproduct(y);
		for (size_t a = 0; a < n; ++a)
			for (size_t b = 0; b < n; ++b) {
				if (slots[a].deg + slots[b].deg != slots[t].deg)
					continue;
				Scalar v = 0;
				for (const auto& [k, c] : D.terms())
					v += c * (eval(slots[a], k[0]) * eval(slots[b], k[1]) - eval(slots[b], k[0]) * eval(slots[a], k[1]));
				out.bracket[a][b][t] = v;
			}
	}
	return out;
}

} // namespace hopf
