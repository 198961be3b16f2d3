#include "ncalg/linalg.hpp"

namespace ncalg {
namespace {

// dst -= f * src, both sorted sparse vectors, result sorted without zeros.
SparseVec axpy(const SparseVec& dst, const FieldElement& f, const SparseVec& src) {
  SparseVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -(f * src[j].second));
      ++j;
    } else {
      FieldElement v = dst[i].second - f * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  SparseVec cur = v;
  std::size_t k = 0;
  while (k < cur.size()) {
    auto it = pivot_row_.find(cur[k].first);
    if (it == pivot_row_.end()) {
      ++k;
      continue;
    }
    const SparseVec& row = rows_[it->second];
    const FieldElement f = cur[k].second;  // row is monic at the pivot
    cur = axpy(cur, f, row);
    // Entries before k are untouched since the row starts at this column.
  }
  return cur;
}

bool EchelonBasis::add(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const FieldElement inv = r.front().second.inverse();
  for (auto& [c, x] : r) x *= inv;
  pivot_row_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<int> EchelonBasis::pivots() const {
  std::vector<int> out;
  for (const auto& [c, r] : pivot_row_) out.push_back(c);
  return out;
}

void EchelonBasis::make_reduced() {
  // Process pivots from the right so each row is cleaned by already-final rows.
  for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
    const int col = it->first;
    const SparseVec& prow = rows_[it->second];
    for (auto& row : rows_) {
      if (&row == &prow) continue;
      for (const auto& [c, x] : row) {
        if (c == col) {
          const FieldElement f = x;
          row = axpy(row, f, prow);
          break;
        }
        if (c > col) break;
      }
    }
  }
}

std::vector<std::vector<FieldElement>> nullspace(const std::vector<SparseVec>& equations, int unknowns,
                                                 const FieldPtr& field) {
  EchelonBasis basis(field);
  for (const auto& eq : equations) basis.add(eq);
  basis.make_reduced();
  std::vector<bool> is_pivot(unknowns, false);
  std::map<int, const SparseVec*> row_of;
  for (const auto& row : basis.rows()) {
    is_pivot[row.front().first] = true;
    row_of[row.front().first] = &row;
  }
  std::vector<std::vector<FieldElement>> out;
  for (int f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> v(unknowns, FieldElement(field));
    v[f] = FieldElement(field, 1L);
    for (const auto& [p, row] : row_of) {
      for (const auto& [c, x] : *row)
        if (c == f) v[p] = -x;
    }
    out.push_back(std::move(v));
  }
  return out;
}

int rank_of(const std::vector<SparseVec>& vectors, const FieldPtr& field) {
  EchelonBasis basis(field);
  for (const auto& v : vectors) basis.add(v);
  return basis.rank();
}

FieldElement determinant(DenseMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return FieldElement(NumberField::rationals(), 1L);
  FieldElement det(m[0][0].field(), 1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return FieldElement(det.field());
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const FieldElement inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const FieldElement f = m[r][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

int dense_rank(const DenseMatrix& m) {
  if (m.empty()) return 0;
  std::vector<SparseVec> rows;
  for (const auto& r : m) {
    SparseVec v;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) v.emplace_back(static_cast<int>(j), r[j]);
    rows.push_back(std::move(v));
  }
  return rank_of(rows, m[0][0].field());
}

std::optional<std::vector<FieldElement>> solve_square(DenseMatrix m, std::vector<FieldElement> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    const FieldElement inv = m[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const FieldElement f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<std::vector<FieldElement>> dense_nullspace(const DenseMatrix& m, const FieldPtr& field) {
  std::vector<SparseVec> rows;
  int cols = 0;
  for (const auto& r : m) {
    cols = static_cast<int>(r.size());
    SparseVec v;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) v.emplace_back(static_cast<int>(j), r[j]);
    rows.push_back(std::move(v));
  }
  return nullspace(rows, cols, field);
}

}  // namespace ncalg
