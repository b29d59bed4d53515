#pragma once

#include <utility>
#include <vector>

#include "kirbylab/field.hpp"

namespace kirbylab {

// Sparse row: strictly increasing column indices paired with nonzero entries.
using SparseRow = std::vector<std::pair<int, Fe>>;

// Dense matrix over an exact field. Rows of equal length.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, const FieldPtr& f);

  int rows() const { return static_cast<int>(m_.size()); }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Fe& at(int i, int j) { return m_[i][j]; }
  const Fe& at(int i, int j) const { return m_[i][j]; }
  const std::vector<Fe>& row(int i) const { return m_[i]; }

  static Matrix identity(int n, const FieldPtr& f);
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  Matrix transpose() const;
  Fe trace() const;
  Matrix scaled(const Fe& c) const;

  std::vector<Fe> apply(const std::vector<Fe>& v) const;  // matrix * column vector

private:
  int cols_ = 0;
  FieldPtr field_;
  std::vector<std::vector<Fe>> m_;
};

// In-place reduced row echelon form of a sparse matrix; rows end up sorted by
// pivot column, zero rows removed. Returns the pivot columns.
std::vector<int> sparse_rref(std::vector<SparseRow>& rows, int ncols, const FieldPtr& f);

// Basis of the right kernel {v : M v = 0} of a sparse matrix given by rows.
std::vector<std::vector<Fe>> sparse_kernel(std::vector<SparseRow> rows, int ncols,
                                           const FieldPtr& f);

// Rank of the row span.
int sparse_rank(std::vector<SparseRow> rows, int ncols, const FieldPtr& f);

// True if v lies in the row span of `rows`.
bool in_row_span(const std::vector<SparseRow>& rref_rows, const std::vector<int>& pivots,
                 const std::vector<Fe>& v, const FieldPtr& f);

// Solve M x = b for dense M (square or overdetermined consistent systems).
// Returns empty vector when the system is inconsistent or underdetermined.
std::vector<Fe> solve_linear(const Matrix& m, const std::vector<Fe>& b);

// Inverse of a square dense matrix. Throws NotInvertible.
Matrix invert(const Matrix& m);

// Deterministic reduced echelon basis of the span of the given vectors;
// two families span the same subspace iff their echelon bases are equal.
std::vector<std::vector<Fe>> echelon_basis(const std::vector<std::vector<Fe>>& vecs, int ncols,
                                           const FieldPtr& f);

SparseRow to_sparse(const std::vector<Fe>& dense);
std::vector<Fe> to_dense(const SparseRow& row, int ncols, const FieldPtr& f);

}  // namespace kirbylab
