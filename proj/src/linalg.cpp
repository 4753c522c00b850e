#include "hopf/linalg.hpp"

#include <algorithm>

#include "hopf/errors.hpp"

namespace hopf {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x)
{
	if (a.is_zero())
		return;
	for (const auto& [i, xi] : x) {
		auto it = y.find(i);
		if (it == y.end()) {
			y.emplace(i, a * xi);
		} else {
			it->second += a * xi;
			if (it->second.is_zero())
				y.erase(it);
		}
	}
}

std::vector<Scalar> to_dense(const SparseVec& v, size_t n)
{
	std::vector<Scalar> out(n);
	for (const auto& [i, x] : v)
		out.at(i) = x;
	return out;
}

SparseVec to_sparse(const std::vector<Scalar>& v)
{
	SparseVec out;
	for (size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			out.emplace(i, v[i]);
	return out;
}

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows)
{
	size_t c = rows.empty() ? 0 : rows.front().size();
	Matrix m(rows.size(), c);
	for (size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != c)
			throw InputError("ragged matrix rows");
		for (size_t j = 0; j < c; ++j)
			m.set(i, j, rows[i][j]);
	}
	return m;
}

Matrix Matrix::identity(size_t n)
{
	Matrix m(n, n);
	for (size_t i = 0; i < n; ++i)
		m.set(i, i, 1);
	return m;
}

void Matrix::set(size_t r, size_t c, const Scalar& v)
{
	if (r >= rows_ || c >= cols_)
		throw InputError("matrix index out of range");
	if (v.is_zero())
		data_[r].erase(c);
	else
		data_[r][c] = v;
}

void Matrix::add(size_t r, size_t c, const Scalar& v)
{
	set(r, c, get(r, c) + v);
}

Scalar Matrix::get(size_t r, size_t c) const
{
	if (r >= rows_ || c >= cols_)
		throw InputError("matrix index out of range");
	auto it = data_[r].find(c);
	return it == data_[r].end() ? Scalar() : it->second;
}

size_t Matrix::nonzeros() const
{
	size_t n = 0;
	for (const auto& r : data_)
		n += r.size();
	return n;
}

void Matrix::set_column(size_t c, const SparseVec& v)
{
	for (auto& r : data_)
		r.erase(c);
	for (const auto& [r, x] : v)
		set(r, c, x);
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const
{
	if (x.size() != cols_)
		throw InputError("matrix/vector size mismatch");
	std::vector<Scalar> y(rows_);
	for (size_t r = 0; r < rows_; ++r)
		for (const auto& [c, v] : data_[r])
			y[r] += v * x[c];
	return y;
}

Matrix Matrix::operator*(const Matrix& o) const
{
	if (cols_ != o.rows_)
		throw InputError("matrix product size mismatch");
	Matrix out(rows_, o.cols_);
	for (size_t r = 0; r < rows_; ++r)
		for (const auto& [k, v] : data_[r])
			axpy(out.data_[r], v, o.data_[k]);
	return out;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (size_t r = 0; r < rows_; ++r)
		for (const auto& [c, v] : data_[r])
			t.data_[c][r] = v;
	return t;
}

// ---------------------------------------------------------------------------

SparseVec SpanBuilder::reduce(SparseVec v) const
{
	// Pivot rows vanish on every other pivot column, so the set of pivot
	// columns touched by v is fixed before elimination starts.
	std::vector<std::pair<size_t, Scalar>> hits;
	for (const auto& [c, x] : v) {
		auto it = pivot_row_.find(c);
		if (it != pivot_row_.end())
			hits.emplace_back(it->second, x);
	}
	for (const auto& [row, x] : hits)
		axpy(v, -x, rows_[row]);
	return v;
}

bool SpanBuilder::insert(SparseVec v)
{
	v = reduce(std::move(v));
	if (v.empty())
		return false;
	size_t p = v.begin()->first;
	Scalar inv = v.begin()->second.inverse();
	for (auto& [c, x] : v)
		x *= inv;
	for (auto& r : rows_) {
		auto it = r.find(p);
		if (it != r.end()) {
			Scalar f = it->second;
			axpy(r, -f, v);
		}
	}
	pivot_row_.emplace(p, rows_.size());
	rows_.push_back(std::move(v));
	pivots_.push_back(p);
	return true;
}

Rref rref(const Matrix& m)
{
	SpanBuilder sb;
	// Sparse rows first keeps fill-in down.
	std::vector<size_t> order(m.rows());
	for (size_t i = 0; i < order.size(); ++i)
		order[i] = i;
	std::stable_sort(order.begin(), order.end(),
	                 [&](size_t a, size_t b) { return m.row(a).size() < m.row(b).size(); });
	for (size_t r : order)
		sb.insert(m.row(r));

	Rref out;
	out.cols = m.cols();
	std::vector<size_t> idx(sb.rank());
	for (size_t i = 0; i < idx.size(); ++i)
		idx[i] = i;
	std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return sb.pivots()[a] < sb.pivots()[b]; });
	for (size_t i : idx) {
		out.rows.push_back(sb.rows()[i]);
		out.pivots.push_back(sb.pivots()[i]);
	}
	return out;
}

size_t rank(const Matrix& m)
{
	// Eliminating along the shorter side is cheaper.
	SpanBuilder sb;
	if (m.cols() < m.rows()) {
		Matrix t = m.transpose();
		for (size_t r = 0; r < t.rows(); ++r)
			sb.insert(t.row(r));
	} else {
		for (size_t r = 0; r < m.rows(); ++r)
			sb.insert(m.row(r));
	}
	return sb.rank();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m)
{
	Rref e = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (size_t p : e.pivots)
		is_pivot[p] = true;
	std::vector<std::vector<Scalar>> basis;
	for (size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f])
			continue;
		std::vector<Scalar> v(m.cols());
		v[f] = 1;
		for (size_t i = 0; i < e.rows.size(); ++i) {
			auto it = e.rows[i].find(f);
			if (it != e.rows[i].end())
				v[e.pivots[i]] = -it->second;
		}
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b)
{
	if (b.size() != m.rows())
		throw InputError("right-hand side size mismatch");
	Matrix aug(m.rows(), m.cols() + 1);
	for (size_t r = 0; r < m.rows(); ++r) {
		for (const auto& [c, v] : m.row(r))
			aug.set(r, c, v);
		aug.set(r, m.cols(), b[r]);
	}
	Rref e = rref(aug);
	std::vector<Scalar> x(m.cols());
	for (size_t i = 0; i < e.rows.size(); ++i) {
		if (e.pivots[i] == m.cols())
			return std::nullopt;
		auto it = e.rows[i].find(m.cols());
		if (it != e.rows[i].end())
			x[e.pivots[i]] = it->second;
	}
	return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
	if (m.rows() != m.cols())
		throw InputError("inverse of a non-square matrix");
	size_t n = m.rows();
	if (n == 0)
		return Matrix();
	Matrix aug(n, 2 * n);
	for (size_t r = 0; r < n; ++r) {
		for (const auto& [c, v] : m.row(r))
			aug.set(r, c, v);
		aug.set(r, n + r, 1);
	}
	Rref e = rref(aug);
	if (e.rows.size() < n || e.pivots[n - 1] >= n)
		return std::nullopt;
	Matrix inv(n, n);
	for (size_t i = 0; i < n; ++i)
		for (const auto& [c, v] : e.rows[i])
			if (c >= n)
				inv.set(e.pivots[i], c - n, v);
	return inv;
}

} // namespace hopf
