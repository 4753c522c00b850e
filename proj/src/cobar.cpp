#include "hopf/cobar.hpp"

#include <algorithm>
#include <functional>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Differentials never raise weighted degree, so the degree-<= N tuples form a
// subcomplex. In the filtered case a cocycle of degree <= N can only be the
// differential of a cochain of degree <= N: the leading part of d1 is the
// differential of the associated graded complex, which preserves degree and
// is injective away from degree-1 primitives. Stability between N-1 and N is
// checked by the tests rather than assumed.

int key_degree(const OrePresentation& alg, const TensorKey& k)
{
	int d = 0;
	for (const auto& m : k)
		d += alg.degree(m);
	return d;
}

std::array<int, 2> key_bidegree(const OrePresentation& alg, const TensorKey& k)
{
	std::array<int, 2> b{0, 0};
	for (const auto& m : k) {
		auto x = alg.bidegree(m);
		b[0] += x[0];
		b[1] += x[1];
	}
	return b;
}

std::vector<TensorKey> tuples(const OrePresentation& alg, const std::vector<Monomial>& monos, size_t rank, int bound)
{
	std::vector<TensorKey> out;
	TensorKey cur;
	std::function<void(int)> rec = [&](int budget) {
		if (cur.size() == rank) {
			out.push_back(cur);
			return;
		}
		for (const auto& m : monos) {
			int d = alg.degree(m);
			// every later slot needs at least degree 1
			if (d + static_cast<int>(rank - cur.size() - 1) > budget)
				continue;
			cur.push_back(m);
			rec(budget - d);
			cur.pop_back();
		}
	};
	rec(bound);
	std::map<Monomial, size_t> pos;
	for (size_t i = 0; i < monos.size(); ++i)
		pos[monos[i]] = i;
	std::sort(out.begin(), out.end(), [&](const TensorKey& a, const TensorKey& b) {
		int da = key_degree(alg, a), db = key_degree(alg, b);
		if (da != db)
			return da < db;
		for (size_t i = 0; i < a.size(); ++i)
			if (a[i] != b[i])
				return pos.at(a[i]) < pos.at(b[i]);
		return false;
	});
	return out;
}

Matrix differential_matrix(const HopfPresentation& h, const std::vector<TensorKey>& from,
                           const std::map<TensorKey, size_t>& to_index, size_t rows)
{
	Matrix m(rows, from.size());
	for (size_t c = 0; c < from.size(); ++c) {
		const TensorElement img = cobar_differential(h, TensorElement::pure(from[c]));
		for (const auto& [k, x] : img.terms())
			m.set(to_index.at(k), c, x);
	}
	return m;
}

void require_homogeneous(const HopfPresentation& h)
{
	const OrePresentation& alg = h.algebra();
	if (!alg.has_bidegrees())
		throw InputError("bidegree mode needs a bidegree on every generator");
	const auto& gens = alg.generators();
	for (const auto& [key, kappa] : alg.commutators()) {
		auto want = key_bidegree(alg, {Monomial::generator(gens.size(), key.first), Monomial::generator(gens.size(), key.second)});
		for (const auto& [m, c] : kappa.terms())
			if (alg.bidegree(m) != want)
				throw InputError("commutator [" + gens[key.first].name + "," + gens[key.second].name +
				                 "] is not bidegree-homogeneous");
	}
	for (const auto& [g, d] : h.deltas())
		for (const auto& [k, c] : d.terms())
			if (key_bidegree(alg, k) != *gens[g].bidegree)
				throw InputError("delta(" + gens[g].name + ") is not bidegree-homogeneous");
}

} // namespace

int tensor_degree(const OrePresentation& alg, const TensorElement& t)
{
	int d = 0;
	for (const auto& [k, c] : t.terms())
		d = std::max(d, key_degree(alg, k));
	return d;
}

TensorElement cobar_differential(const HopfPresentation& h, const TensorElement& t)
{
	auto delta = [&](const Monomial& m) { return h.reduced_coproduct(m); };
	if (t.rank() == 1)
		return apply_slot(t, 0, 2, delta);
	if (t.rank() == 2)
		return apply_slot(t, 0, 2, delta) - apply_slot(t, 1, 2, delta);
	throw InputError("cobar differential is only built on ranks 1 and 2");
}

CobarComplex build_complex(const HopfPresentation& h, int bound)
{
	const OrePresentation& alg = h.algebra();
	CobarComplex cx;
	cx.bound = bound;
	std::vector<Monomial> monos = alg.monomials_up_to(bound, false);
	for (size_t r = 0; r < 3; ++r) {
		cx.bases[r] = tuples(alg, monos, r + 1, bound);
		for (size_t i = 0; i < cx.bases[r].size(); ++i)
			cx.index[r][cx.bases[r][i]] = i;
	}
	cx.d1 = differential_matrix(h, cx.bases[0], cx.index[1], cx.bases[1].size());
	cx.d2 = differential_matrix(h, cx.bases[1], cx.index[2], cx.bases[2].size());
	return cx;
}

size_t CobarReport::total_h2() const
{
	if (!by_bidegree)
		return entries.empty() ? 0 : entries.back().h2();
	size_t s = 0;
	for (const auto& e : entries)
		s += e.h2();
	return s;
}

const CobarEntry* CobarReport::find(std::array<int, 2> bideg) const
{
	for (const auto& e : entries)
		if (e.bidegree && *e.bidegree == bideg)
			return &e;
	return nullptr;
}

const CobarEntry* CobarReport::level(int n) const
{
	for (const auto& e : entries)
		if (!e.bidegree && e.total == n)
			return &e;
	return nullptr;
}

CobarReport h2_report(const HopfPresentation& h, int bound, bool by_bidegree)
{
	if (bound < 1)
		throw InputError("cobar bound must be at least 1");
	if (by_bidegree)
		require_homogeneous(h);
	const OrePresentation& alg = h.algebra();
	CobarComplex cx = build_complex(h, bound);
	// rows of the transposes are the columns of the differentials
	const Matrix d1t = cx.d1.transpose(), d2t = cx.d2.transpose();
	CobarReport rep;
	rep.bound = bound;
	rep.by_bidegree = by_bidegree;

	if (by_bidegree) {
		// Both differentials preserve bidegree, so the complex splits.
		std::map<std::array<int, 2>, std::vector<size_t>> c1, c2;
		for (size_t i = 0; i < cx.bases[0].size(); ++i)
			c1[key_bidegree(alg, cx.bases[0][i])].push_back(i);
		for (size_t i = 0; i < cx.bases[1].size(); ++i)
			c2[key_bidegree(alg, cx.bases[1][i])].push_back(i);
		std::map<std::array<int, 2>, bool> seen;
		for (const auto& [b, cols] : c2) {
			SpanBuilder im2, im1;
			for (size_t c : cols)
				im2.insert(d2t.row(c));
			if (c1.count(b))
				for (size_t c : c1.at(b))
					im1.insert(d1t.row(c));
			CobarEntry e;
			e.total = b[0] + b[1];
			e.bidegree = b;
			e.cocycles = cols.size() - im2.rank();
			e.coboundaries = im1.rank();
			rep.entries.push_back(e);
		}
		std::sort(rep.entries.begin(), rep.entries.end(), [](const CobarEntry& a, const CobarEntry& b) {
			return std::pair(a.total, *a.bidegree) < std::pair(b.total, *b.bidegree);
		});
		return rep;
	}

	// Filtered mode: bases are sorted by degree, so prefixes are filtration levels.
	SpanBuilder im2, im1;
	size_t p1 = 0, p2 = 0;
	for (int n = 1; n <= bound; ++n) {
		while (p2 < cx.bases[1].size() && key_degree(alg, cx.bases[1][p2]) <= n)
			im2.insert(d2t.row(p2++));
		while (p1 < cx.bases[0].size() && key_degree(alg, cx.bases[0][p1]) <= n)
			im1.insert(d1t.row(p1++));
		CobarEntry e;
		e.total = n;
		e.cocycles = p2 - im2.rank();
		e.coboundaries = im1.rank();
		rep.entries.push_back(e);
	}
	return rep;
}

CoboundaryResult is_coboundary(const HopfPresentation& h, const TensorElement& w, int bound)
{
	if (w.rank() != 2)
		throw InputError("is_coboundary expects a rank-2 tensor");
	h.check_member(w);
	const OrePresentation& alg = h.algebra();
	for (const auto& [k, c] : w.terms())
		if (k[0].is_unit() || k[1].is_unit())
			throw InputError("cobar cochains have no unit tensor factors");
	int deg = tensor_degree(alg, w);
	if (deg > bound)
		throw InputError("cochain degree " + std::to_string(deg) + " exceeds the bound " + std::to_string(bound));
	if (!cobar_differential(h, w).is_zero())
		throw InputError("not a 2-cocycle");

	CoboundaryResult res;
	std::vector<Monomial> monos = alg.monomials_up_to(std::max(deg, 1), false);
	std::map<TensorKey, size_t> rows;
	std::vector<TensorElement> images;
	for (const auto& m : monos) {
		images.push_back(h.reduced_coproduct(m));
		for (const auto& [k, c] : images.back().terms())
			rows.try_emplace(k, rows.size());
	}
	for (const auto& [k, c] : w.terms())
		rows.try_emplace(k, rows.size());
	Matrix A(rows.size(), monos.size());
	for (size_t c = 0; c < monos.size(); ++c)
		for (const auto& [k, x] : images[c].terms())
			A.set(rows.at(k), c, x);
	std::vector<Scalar> b(rows.size());
	for (const auto& [k, x] : w.terms())
		b[rows.at(k)] = x;

	Matrix aug(rows.size(), monos.size() + 1);
	for (size_t r = 0; r < A.rows(); ++r)
		for (const auto& [c, x] : A.row(r))
			aug.set(r, c, x);
	for (size_t r = 0; r < b.size(); ++r)
		if (!b[r].is_zero())
			aug.set(r, monos.size(), b[r]);
	res.rank = rank(A);
	res.rank_augmented = rank(aug);
	if (auto x = solve(A, b)) {
		res.is_coboundary = true;
		for (size_t c = 0; c < monos.size(); ++c)
			if (!(*x)[c].is_zero())
				res.witness.add_term(monos[c], (*x)[c]);
	}
	return res;
}

} // namespace hopf
