#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

/// Sparse vector: index -> nonzero coefficient.
using SparseVec = std::map<size_t, Scalar>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x); // y += a*x, dropping zeros
std::vector<Scalar> to_dense(const SparseVec& v, size_t n);
SparseVec to_sparse(const std::vector<Scalar>& v);

/// Sparse rational matrix. Zero entries are never stored.
class Matrix {
public:
	Matrix() = default;
	Matrix(size_t rows, size_t cols);
	static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);
	static Matrix identity(size_t n);

	size_t rows() const { return rows_; }
	size_t cols() const { return cols_; }

	void set(size_t r, size_t c, const Scalar& v);
	void add(size_t r, size_t c, const Scalar& v);
	Scalar get(size_t r, size_t c) const;
	const SparseVec& row(size_t r) const { return data_[r]; }
	size_t nonzeros() const;

	/// Overwrites column c (entries of v must have index < rows()).
	void set_column(size_t c, const SparseVec& v);

	std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
	Matrix operator*(const Matrix& o) const;
	Matrix transpose() const;

	friend bool operator==(const Matrix& a, const Matrix& b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

private:
	size_t rows_ = 0, cols_ = 0;
	std::vector<SparseVec> data_;
};

/// Reduced row echelon form: rows[i] has a 1 at pivots[i] and zeros at every
/// other pivot column. Pivots are increasing; column order is the pivot preference.
struct Rref {
	std::vector<SparseVec> rows;
	std::vector<size_t> pivots;
	size_t cols = 0;
};

Rref rref(const Matrix& m);
size_t rank(const Matrix& m);

/// Basis of the right null space {v : m v = 0}; one vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Particular solution of m x = b with free variables set to 0, or nullopt.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Incremental echelon basis of a span. Vectors are reduced against earlier
/// pivots as they arrive, so the rank of any prefix of the inserted sequence
/// is available without refactoring.
class SpanBuilder {
public:
	/// Returns true when v enlarges the span.
	bool insert(SparseVec v);
	/// Reduces v modulo the current span (fully reduced echelon rows).
	SparseVec reduce(SparseVec v) const;
	bool contains(const SparseVec& v) const { return reduce(v).empty(); }
	size_t rank() const { return rows_.size(); }
	const std::vector<SparseVec>& rows() const { return rows_; }
	const std::vector<size_t>& pivots() const { return pivots_; }

private:
	std::vector<SparseVec> rows_;
	std::vector<size_t> pivots_;
	std::map<size_t, size_t> pivot_row_; // pivot column -> row index
};

} // namespace hopf
