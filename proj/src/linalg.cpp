#include "kirbylab/linalg.hpp"

#include <algorithm>
#include <map>

#include "kirbylab/errors.hpp"

namespace kirbylab {

Matrix::Matrix(int rows, int cols, const FieldPtr& f) : cols_(cols), field_(f) {
  m_.assign(rows, std::vector<Fe>(cols, Fe::zero(f)));
}

Matrix Matrix::identity(int n, const FieldPtr& f) {
  Matrix id(n, n, f);
  for (int i = 0; i < n; ++i) id.at(i, i) = Fe::one(f);
  return id;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(rows(), o.cols(), field_);
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      if (m_[i][k].is_zero()) continue;
      for (int j = 0; j < o.cols(); ++j) {
        if (o.m_[k][j].is_zero()) continue;
        r.at(i, j) += m_[i][k] * o.m_[k][j];
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(rows(), cols(), field_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(i, j) = m_[i][j] + o.m_[i][j];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r(rows(), cols(), field_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(i, j) = m_[i][j] - o.m_[i][j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) return false;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (m_[i][j] != o.m_[i][j]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(cols(), rows(), field_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(j, i) = m_[i][j];
  return r;
}

Fe Matrix::trace() const {
  Fe t = Fe::zero(field_);
  for (int i = 0; i < rows(); ++i) t += m_[i][i];
  return t;
}

Matrix Matrix::scaled(const Fe& c) const {
  Matrix r(rows(), cols(), field_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(i, j) = m_[i][j] * c;
  return r;
}

std::vector<Fe> Matrix::apply(const std::vector<Fe>& v) const {
  if (static_cast<int>(v.size()) != cols()) throw DimensionMismatch("vector length mismatch");
  std::vector<Fe> r(rows(), Fe::zero(field_));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      if (m_[i][j].is_zero() || v[j].is_zero()) continue;
      r[i] += m_[i][j] * v[j];
    }
  return r;
}

namespace {

void row_axpy(SparseRow& target, const Fe& coef, const SparseRow& src) {
  // target += coef * src, merging sorted runs.
  SparseRow out;
  out.reserve(target.size() + src.size());
  size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || src[j].first < target[i].first) {
      Fe v = coef * src[j].second;
      if (!v.is_zero()) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      Fe v = target[i].second + coef * src[j].second;
      if (!v.is_zero()) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

void row_scale(SparseRow& row, const Fe& coef) {
  for (auto& [c, v] : row) v = v * coef;
}

}  // namespace

std::vector<int> sparse_rref(std::vector<SparseRow>& rows, int ncols, const FieldPtr& f) {
  (void)ncols;
  (void)f;
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  // pivot_of[col] = index of reduced row with that pivot, built incrementally.
  std::map<int, int> pivot_of;
  std::vector<SparseRow> reduced;
  // Process light rows first; keeps fill-in low on the near-monomial systems
  // this library produces.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  for (auto& row : rows) {
    SparseRow cur = std::move(row);
    // Clear every entry sitting in an existing pivot column. Pivot rows are
    // fully reduced, so each axpy only introduces columns to the right.
    for (size_t k = 0; k < cur.size();) {
      auto it = pivot_of.find(cur[k].first);
      if (it == pivot_of.end()) {
        ++k;
        continue;
      }
      row_axpy(cur, -cur[k].second, reduced[it->second]);
    }
    if (cur.empty()) continue;
    int lead = cur.front().first;
    Fe inv = cur.front().second.inverse();
    row_scale(cur, inv);
    for (auto& [col, idx] : pivot_of) {
      (void)col;
      SparseRow& r = reduced[idx];
      auto hit = std::lower_bound(r.begin(), r.end(), lead,
                                  [](const auto& p, int c) { return p.first < c; });
      if (hit != r.end() && hit->first == lead) row_axpy(r, -hit->second, cur);
    }
    pivot_of[lead] = static_cast<int>(reduced.size());
    reduced.push_back(std::move(cur));
  }
  rows.clear();
  std::vector<int> pivots;
  for (auto& [col, idx] : pivot_of) {
    pivots.push_back(col);
    rows.push_back(std::move(reduced[idx]));
  }
  return pivots;
}

std::vector<std::vector<Fe>> sparse_kernel(std::vector<SparseRow> rows, int ncols,
                                           const FieldPtr& f) {
  std::vector<int> pivots = sparse_rref(rows, ncols, f);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Fe>> basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Fe> v(ncols, Fe::zero(f));
    v[free_col] = Fe::one(f);
    for (size_t r = 0; r < rows.size(); ++r) {
      auto hit = std::lower_bound(rows[r].begin(), rows[r].end(), free_col,
                                  [](const auto& p, int c) { return p.first < c; });
      if (hit != rows[r].end() && hit->first == free_col) v[pivots[r]] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int sparse_rank(std::vector<SparseRow> rows, int ncols, const FieldPtr& f) {
  return static_cast<int>(sparse_rref(rows, ncols, f).size());
}

bool in_row_span(const std::vector<SparseRow>& rref_rows, const std::vector<int>& pivots,
                 const std::vector<Fe>& v, const FieldPtr& f) {
  SparseRow cur = to_sparse(v);
  for (size_t r = 0; r < rref_rows.size(); ++r) {
    auto hit = std::lower_bound(cur.begin(), cur.end(), pivots[r],
                                [](const auto& p, int c) { return p.first < c; });
    if (hit != cur.end() && hit->first == pivots[r]) row_axpy(cur, -hit->second, rref_rows[r]);
  }
  (void)f;
  return cur.empty();
}

std::vector<Fe> solve_linear(const Matrix& m, const std::vector<Fe>& b) {
  const FieldPtr& f = m.field();
  std::vector<SparseRow> rows;
  for (int i = 0; i < m.rows(); ++i) {
    SparseRow r = to_sparse(m.row(i));
    if (!b[i].is_zero()) r.emplace_back(m.cols(), b[i]);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  std::vector<int> pivots = sparse_rref(rows, m.cols() + 1, f);
  std::vector<Fe> x(m.cols(), Fe::zero(f));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (pivots[r] == m.cols()) return {};  // inconsistent
    if (rows[r].size() > 2) return {};     // underdetermined pivot row
    if (rows[r].size() == 2 && rows[r][1].first != m.cols()) return {};
    x[pivots[r]] = rows[r].size() == 2 ? rows[r][1].second : Fe::zero(f);
  }
  if (static_cast<int>(rows.size()) < m.cols()) {
    // free columns exist: solution not unique; report only if it is genuinely
    // forced, otherwise fail loudly so callers never trust a guess.
    return {};
  }
  return x;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotInvertible("only square matrices invert");
  const int n = m.rows();
  const FieldPtr& f = m.field();
  // Gauss-Jordan on [M | I].
  std::vector<std::vector<Fe>> a(n, std::vector<Fe>(2 * n, Fe::zero(f)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = Fe::one(f);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw NotInvertible("matrix is singular");
    std::swap(a[col], a[piv]);
    Fe inv = a[col][col].inverse();
    for (int j = 0; j < 2 * n; ++j)
      if (!a[col][j].is_zero()) a[col][j] = a[col][j] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Fe c = a[r][col];
      for (int j = 0; j < 2 * n; ++j)
        if (!a[col][j].is_zero()) a[r][j] = a[r][j] - c * a[col][j];
    }
  }
  Matrix out(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
  return out;
}

std::vector<std::vector<Fe>> echelon_basis(const std::vector<std::vector<Fe>>& vecs, int ncols,
                                           const FieldPtr& f) {
  std::vector<SparseRow> rows;
  for (const auto& v : vecs) {
    SparseRow r = to_sparse(v);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  sparse_rref(rows, ncols, f);
  std::vector<std::vector<Fe>> out;
  for (const auto& r : rows) out.push_back(to_dense(r, ncols, f));
  return out;
}

SparseRow to_sparse(const std::vector<Fe>& dense) {
  SparseRow r;
  for (int j = 0; j < static_cast<int>(dense.size()); ++j)
    if (!dense[j].is_zero()) r.emplace_back(j, dense[j]);
  return r;
}

std::vector<Fe> to_dense(const SparseRow& row, int ncols, const FieldPtr& f) {
  std::vector<Fe> v(ncols, Fe::zero(f));
  for (const auto& [c, x] : row) v[c] = x;
  return v;
}

}  // namespace kirbylab
