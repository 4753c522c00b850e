#include "hopf/cla.hpp"

#include <algorithm>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

Vec zeros(size_t n) { return Vec(n, Scalar(0)); }

bool all_zero(const Vec& v)
{
	return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string render_vec(const std::vector<std::string>& names, const Vec& v)
{
	std::string out;
	for (size_t i = 0; i < v.size(); ++i) {
		if (v[i].is_zero())
			continue;
		std::string term = render_term(v[i], names[i]);
		if (out.empty())
			out = term;
		else if (term[0] == '-')
			out += " - " + term.substr(1);
		else
			out += " + " + term;
	}
	return out.empty() ? "0" : out;
}

/// Rows of the reduced echelon form of the span of vs.
std::vector<Vec> canonical_rows(const std::vector<Vec>& vs, size_t n)
{
	if (vs.empty())
		return {};
	Matrix m(vs.size(), n);
	for (size_t r = 0; r < vs.size(); ++r)
		for (size_t c = 0; c < n; ++c)
			m.set(r, c, vs[r][c]);
	Rref e = rref(m);
	std::vector<Vec> out;
	for (const auto& row : e.rows)
		out.push_back(to_dense(row, n));
	return out;
}

Element to_element(const OrePresentation& alg, const Vec& v)
{
	Element out;
	for (size_t k = 0; k < v.size(); ++k)
		if (!v[k].is_zero())
			out.add_scaled(alg.gen(k), v[k]);
	return out;
}

TensorElement linear_delta(const CLA& L, size_t i)
{
	const size_t n = L.dim();
	TensorElement t(2);
	for (size_t j = 0; j < n; ++j)
		for (size_t k = 0; k < n; ++k)
			if (!L.d(i, j, k).is_zero())
				t.add_term({Monomial::generator(n, j), Monomial::generator(n, k)}, L.d(i, j, k));
	return t;
}

Vec unit_vec(size_t n, size_t i)
{
	Vec v = zeros(n);
	v[i] = 1;
	return v;
}

} // namespace

CLA::CLA(std::vector<std::string> basis) : names_(std::move(basis))
{
	const size_t n = names_.size();
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j)
			if (names_[i] == names_[j])
				throw InputError("duplicate basis name '" + names_[i] + "'");
	br_.assign(n, std::vector<Vec>(n, zeros(n)));
	de_.assign(n, std::vector<Vec>(n, zeros(n)));
}

void CLA::set_bracket(size_t i, size_t j, const Vec& v)
{
	if (i >= dim() || j >= dim() || v.size() != dim())
		throw InputError("bracket index or vector size out of range");
	if (i == j) {
		if (!all_zero(v))
			throw InputError("[" + names_[i] + "," + names_[i] + "] must vanish");
		return;
	}
	for (size_t k = 0; k < dim(); ++k) {
		br_[i][j][k] = v[k];
		br_[j][i][k] = -v[k];
	}
}

void CLA::set_delta(size_t i, size_t j, size_t k, const Scalar& c)
{
	if (i >= dim() || j >= dim() || k >= dim())
		throw InputError("delta index out of range");
	de_[i][j][k] = c;
}

Vec CLA::bracket(const Vec& a, const Vec& b) const
{
	const size_t n = dim();
	Vec out = zeros(n);
	for (size_t i = 0; i < n; ++i) {
		if (a[i].is_zero())
			continue;
		for (size_t j = 0; j < n; ++j) {
			if (b[j].is_zero())
				continue;
			Scalar c = a[i] * b[j];
			for (size_t k = 0; k < n; ++k)
				if (!br_[i][j][k].is_zero())
					out[k] += c * br_[i][j][k];
		}
	}
	return out;
}

std::vector<Vec> CLA::delta(const Vec& a) const
{
	const size_t n = dim();
	std::vector<Vec> out(n, zeros(n));
	for (size_t i = 0; i < n; ++i) {
		if (a[i].is_zero())
			continue;
		for (size_t j = 0; j < n; ++j)
			for (size_t k = 0; k < n; ++k)
				if (!de_[i][j][k].is_zero())
					out[j][k] += a[i] * de_[i][j][k];
	}
	return out;
}

bool CLA::delta_is_zero() const
{
	for (const auto& plane : de_)
		for (const auto& row : plane)
			if (!all_zero(row))
				return false;
	return true;
}

// ---------------------------------------------------------------------------

std::map<int, size_t> GradedLie::dims_by_degree() const
{
	std::map<int, size_t> out;
	for (int d : degrees)
		++out[d];
	return out;
}

Vec GradedLie::bracket_of(const Vec& a, const Vec& b) const
{
	const size_t n = dim();
	Vec out = zeros(n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			if (a[i].is_zero() || b[j].is_zero())
				continue;
			for (size_t k = 0; k < n; ++k)
				if (!bracket[i][j][k].is_zero())
					out[k] += a[i] * b[j] * bracket[i][j][k];
		}
	return out;
}

bool GradedLie::is_abelian() const
{
	for (const auto& plane : bracket)
		for (const auto& row : plane)
			if (!all_zero(row))
				return false;
	return true;
}

bool GradedLie::generated_in_degree_one() const
{
	const size_t n = dim();
	SpanBuilder span;
	std::vector<Vec> gens, frontier;
	for (size_t i = 0; i < n; ++i)
		if (degrees[i] == 1) {
			gens.push_back(unit_vec(n, i));
			if (span.insert(to_sparse(gens.back())))
				frontier.push_back(gens.back());
		}
	while (!frontier.empty()) {
		std::vector<Vec> next;
		for (const auto& v : frontier)
			for (const auto& g : gens) {
				Vec w = bracket_of(g, v);
				if (span.insert(to_sparse(w)))
					next.push_back(w);
			}
		frontier = std::move(next);
	}
	return span.rank() == n;
}

VerificationReport GradedLie::verify() const
{
	VerificationReport rep("graded Lie algebra");
	const size_t n = dim();
	std::string bad;
	for (size_t i = 0; i < n && bad.empty(); ++i)
		for (size_t j = 0; j < n && bad.empty(); ++j)
			for (size_t k = 0; k < n; ++k)
				if (bracket[i][j][k] != -bracket[j][i][k]) {
					bad = "[" + names[i] + "," + names[j] + "]";
					break;
				}
	rep.add("antisymmetry", bad.empty(), bad);

	bad.clear();
	for (size_t i = 0; i < n && bad.empty(); ++i)
		for (size_t j = 0; j < n && bad.empty(); ++j)
			for (size_t k = 0; k < n; ++k)
				if (!bracket[i][j][k].is_zero() && degrees[k] != degrees[i] + degrees[j]) {
					bad = "[" + names[i] + "," + names[j] + "] has a term in " + names[k];
					break;
				}
	rep.add("degree additivity", bad.empty(), bad);

	bad.clear();
	for (size_t i = 0; i < n && bad.empty(); ++i)
		for (size_t j = i + 1; j < n && bad.empty(); ++j)
			for (size_t k = j + 1; k < n && bad.empty(); ++k) {
				Vec a = unit_vec(n, i), b = unit_vec(n, j), c = unit_vec(n, k);
				Vec s = bracket_of(a, bracket_of(b, c));
				Vec t = bracket_of(b, bracket_of(c, a));
				Vec u = bracket_of(c, bracket_of(a, b));
				for (size_t r = 0; r < n; ++r)
					s[r] += t[r] + u[r];
				if (!all_zero(s))
					bad = "(" + names[i] + "," + names[j] + "," + names[k] + ") gives " + render_vec(names, s);
			}
	rep.add("Jacobi", bad.empty(), bad);
	rep.add("generated in degree 1", generated_in_degree_one());
	return rep;
}

std::string classify_lantern(const GradedLie& g)
{
	if (g.dim() != 4 || !g.verify().passed())
		return "other";
	auto dims = g.dims_by_degree();
	if (dims == std::map<int, size_t>{{1, 4}})
		return g.is_abelian() ? "abelian-4" : "other";
	if (dims == std::map<int, size_t>{{1, 3}, {2, 1}})
		return g.is_abelian() ? "other" : "h3+k";
	if (dims == std::map<int, size_t>{{1, 2}, {2, 1}, {3, 1}})
		return "filiform-4"; // generation in degree 1 forces both brackets to be nonzero
	return "other";
}

// ---------------------------------------------------------------------------

bool is_anti_cocommutative(const CLA& L)
{
	const size_t n = L.dim();
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			for (size_t k = 0; k < n; ++k)
				if (L.d(i, j, k) != -L.d(i, k, j))
					return false;
	return true;
}

HopfPresentation unchecked_enveloping(const CLA& L)
{
	const size_t n = L.dim();
	std::vector<GeneratorInfo> gens;
	for (const auto& name : L.names())
		gens.push_back({name, 1, std::nullopt});
	OrePresentation::CommutatorTable table;
	for (size_t j = 0; j < n; ++j)
		for (size_t i = 0; i < j; ++i) {
			Element k;
			for (size_t t = 0; t < n; ++t)
				if (!L.b(j, i, t).is_zero())
					k.add_term(Monomial::generator(n, t), L.b(j, i, t));
			if (!k.is_zero())
				table[{j, i}] = k;
		}
	OrePresentation alg(gens, table);
	HopfPresentation::DeltaTable deltas;
	for (size_t i = 0; i < n; ++i) {
		TensorElement t = linear_delta(L, i);
		if (!t.is_zero())
			deltas[i] = t;
	}
	return HopfPresentation(alg, deltas);
}

VerificationReport verify_cla(const CLA& L)
{
	VerificationReport rep("coassociative Lie algebra");
	const size_t n = L.dim();
	const auto& names = L.names();

	std::string bad;
	for (size_t i = 0; i < n && bad.empty(); ++i)
		for (size_t j = i + 1; j < n && bad.empty(); ++j)
			for (size_t k = j + 1; k < n && bad.empty(); ++k) {
				Vec a = unit_vec(n, i), b = unit_vec(n, j), c = unit_vec(n, k);
				Vec s = L.bracket(a, L.bracket(b, c));
				Vec t = L.bracket(b, L.bracket(c, a));
				Vec u = L.bracket(c, L.bracket(a, b));
				for (size_t r = 0; r < n; ++r)
					s[r] += t[r] + u[r];
				if (!all_zero(s))
					bad = "(" + names[i] + "," + names[j] + "," + names[k] + ") gives " + render_vec(names, s);
			}
	rep.add("Jacobi", bad.empty(), bad);

	for (size_t i = 0; i < n; ++i) {
		std::string where;
		for (size_t a = 0; a < n && where.empty(); ++a)
			for (size_t b = 0; b < n && where.empty(); ++b)
				for (size_t c = 0; c < n; ++c) {
					Scalar left = 0, right = 0;
					for (size_t j = 0; j < n; ++j) {
						left += L.d(i, j, c) * L.d(j, a, b);
						right += L.d(i, a, j) * L.d(j, b, c);
					}
					if (left != right) {
						where = "coefficient of " + names[a] + " (x) " + names[b] + " (x) " + names[c];
						break;
					}
				}
		rep.add("coassociativity (" + names[i] + ")", where.empty(), where);
	}

	HopfPresentation U = unchecked_enveloping(L);
	const OrePresentation& alg = U.algebra();
	auto x = [&](size_t i) { return alg.gen(i); };
	auto br = [&](size_t i, size_t j) { return to_element(alg, L.bracket(unit_vec(n, i), unit_vec(n, j))); };
	auto pair = [](const Element& a, const Element& b) { return TensorElement::product({a, b}); };
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			if (i == j)
				continue;
			TensorElement lhs(2);
			for (size_t k = 0; k < n; ++k)
				if (!L.b(i, j, k).is_zero())
					lhs.add_scaled(linear_delta(L, k), L.b(i, j, k));
			TensorElement rhs(2);
			for (size_t p = 0; p < n; ++p)
				for (size_t q = 0; q < n; ++q) {
					if (!L.d(j, p, q).is_zero()) {
						rhs.add_scaled(pair(x(p), br(i, q)), L.d(j, p, q));
						rhs.add_scaled(pair(br(i, p), x(q)), L.d(j, p, q));
					}
					if (!L.d(i, p, q).is_zero()) {
						rhs.add_scaled(pair(br(p, j), x(q)), L.d(i, p, q));
						rhs.add_scaled(pair(x(p), br(q, j)), L.d(i, p, q));
					}
				}
			rhs += U.tensor_bracket(linear_delta(L, i), linear_delta(L, j));
			std::string label = "(" + names[i] + "," + names[j] + ")";
			rep.add("compatibility " + label, lhs == rhs,
			        lhs == rhs ? "" : "delta([a,b]) = " + U.render(lhs) + " but the right side is " + U.render(rhs));
		}
	rep.add_info("anti-cocommutative", is_anti_cocommutative(L));
	return rep;
}

std::vector<Vec> kernel_delta(const CLA& L)
{
	const size_t n = L.dim();
	Matrix m(n * n, n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			for (size_t k = 0; k < n; ++k)
				m.set(j * n + k, i, L.d(i, j, k));
	return canonical_rows(kernel_basis(m), n);
}

std::optional<int> conilpotency_index(const CLA& L)
{
	const size_t n = L.dim();
	if (n == 0)
		return 1;
	// P_k = {x : delta(x) in P_{k-1} (x) L}; (pi (x) id) kills exactly P_{k-1} (x) L.
	SpanBuilder prev;
	size_t prev_rank = 0;
	for (int level = 1; level <= static_cast<int>(n) + 1; ++level) {
		Matrix m(n * n, n);
		for (size_t i = 0; i < n; ++i) {
			for (size_t k = 0; k < n; ++k) {
				SparseVec col;
				for (size_t j = 0; j < n; ++j)
					if (!L.d(i, j, k).is_zero())
						col[j] = L.d(i, j, k);
				for (const auto& [j, c] : prev.reduce(col))
					m.set(j * n + k, i, c);
			}
		}
		auto ker = kernel_basis(m);
		if (ker.size() == n)
			return level;
		if (ker.size() == prev_rank)
			return std::nullopt;
		prev = SpanBuilder();
		for (const auto& v : ker)
			prev.insert(to_sparse(v));
		prev_rank = ker.size();
	}
	return std::nullopt;
}

std::vector<int> enveloping_weights(const CLA& L)
{
	const size_t n = L.dim();
	if (!conilpotency_index(L))
		throw StructuralError("delta is not conilpotent, so no connected filtration exists");
	std::vector<int> w(n, 1);
	bool changed = true;
	for (size_t round = 0; changed; ++round) {
		if (round > n + 1)
			throw StructuralError("delta is not conilpotent, so no connected filtration exists");
		changed = false;
		for (size_t i = 0; i < n; ++i) {
			int need = 1;
			for (size_t j = 0; j < n; ++j)
				for (size_t k = 0; k < n; ++k)
					if (!L.d(i, j, k).is_zero())
						need = std::max(need, w[j] + w[k]);
			if (need != w[i]) {
				w[i] = need;
				changed = true;
			}
		}
	}
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			for (size_t k = 0; k < n; ++k)
				if (!L.b(i, j, k).is_zero() && w[k] >= w[i] + w[j])
					throw StructuralError("no valid weight assignment: [" + L.names()[i] + "," + L.names()[j] +
					                      "] has a term in " + L.names()[k] + " of too high degree");
	return w;
}

HopfPresentation enveloping(const CLA& L)
{
	std::vector<int> w = enveloping_weights(L);
	HopfPresentation flat = unchecked_enveloping(L);
	std::vector<GeneratorInfo> gens = flat.algebra().generators();
	for (size_t i = 0; i < gens.size(); ++i)
		gens[i].degree = w[i];
	OrePresentation alg(gens, flat.algebra().commutators());
	return HopfPresentation(alg, flat.deltas());
}

GradedLie lantern_of_cla(const CLA& L)
{
	if (!is_anti_cocommutative(L))
		throw InputError("the lantern formula needs an anti-cocommutative delta");
	const size_t n = L.dim();
	std::vector<Vec> P = kernel_delta(L);
	std::vector<size_t> piv;
	std::vector<bool> is_piv(n, false);
	for (const auto& row : P) {
		size_t p = 0;
		while (row[p].is_zero())
			++p;
		piv.push_back(p);
		is_piv[p] = true;
	}
	std::vector<size_t> comp;
	for (size_t k = 0; k < n; ++k)
		if (!is_piv[k])
			comp.push_back(k);

	GradedLie g;
	const size_t m = P.size();
	for (size_t a = 0; a < m; ++a) {
		bool single = std::count_if(P[a].begin(), P[a].end(), [](const Scalar& s) { return !s.is_zero(); }) == 1;
		g.names.push_back(single ? L.names()[piv[a]] + "*" : "(" + render_vec(L.names(), P[a]) + ")*");
		g.degrees.push_back(1);
	}
	for (size_t k : comp) {
		g.names.push_back(L.names()[k] + "*");
		g.degrees.push_back(2);
	}
	g.bracket.assign(n, std::vector<Vec>(n, zeros(n)));

	for (size_t t = 0; t < comp.size(); ++t) {
		std::vector<Vec> D = L.delta(unit_vec(n, comp[t]));
		// Coordinates of delta(y_t) on p_a (x) p_b are read off at pivot columns.
		std::vector<Vec> residual = D;
		for (size_t a = 0; a < m; ++a)
			for (size_t b = 0; b < m; ++b) {
				Scalar c = D[piv[a]][piv[b]];
				if (c.is_zero())
					continue;
				for (size_t r = 0; r < n; ++r)
					for (size_t s = 0; s < n; ++s)
						residual[r][s] -= c * P[a][r] * P[b][s];
			}
		for (const auto& row : residual)
			if (!all_zero(row))
				throw StructuralError("delta(" + L.names()[comp[t]] + ") does not lie in ker delta (x) ker delta");
		for (size_t a = 0; a < m; ++a)
			for (size_t b = 0; b < m; ++b)
				g.bracket[a][b][m + t] = D[piv[a]][piv[b]] - D[piv[b]][piv[a]];
	}
	return g;
}

CLA cla_transform(const CLA& L, const Matrix& M)
{
	const size_t n = L.dim();
	if (M.rows() != n || M.cols() != n)
		throw InputError("basis change must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
	auto inv = inverse(M);
	if (!inv)
		throw InputError("basis change matrix is singular");
	CLA out(L.names());
	for (size_t a = 0; a < n; ++a) {
		Vec xa = zeros(n);
		for (size_t i = 0; i < n; ++i)
			xa[i] = M.get(a, i);
		for (size_t b = a + 1; b < n; ++b) {
			Vec xb = zeros(n);
			for (size_t j = 0; j < n; ++j)
				xb[j] = M.get(b, j);
			Vec v = L.bracket(xa, xb);
			Vec nv = zeros(n);
			for (size_t k = 0; k < n; ++k)
				for (size_t l = 0; l < n; ++l)
					nv[l] += v[k] * inv->get(k, l);
			out.set_bracket(a, b, nv);
		}
		std::vector<Vec> D = L.delta(xa);
		for (size_t l = 0; l < n; ++l)
			for (size_t q = 0; q < n; ++q) {
				Scalar c = 0;
				for (size_t j = 0; j < n; ++j)
					for (size_t k = 0; k < n; ++k)
						if (!D[j][k].is_zero())
							c += D[j][k] * inv->get(j, l) * inv->get(k, q);
				out.set_delta(a, l, q, c);
			}
	}
	return out;
}

} // namespace hopf
