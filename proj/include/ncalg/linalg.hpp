#pragma once

// Exact linear algebra over a NumberField: incremental sparse echelon forms,
// nullspaces and small dense determinants.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncalg/coeff.hpp"

namespace ncalg {

/// Sparse vector as (column, value) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, FieldElement>>;

/// Row echelon basis grown one vector at a time. Each stored row is monic at
/// its pivot, and no stored row has a nonzero entry at another row's pivot
/// to its left.
class EchelonBasis {
 public:
  explicit EchelonBasis(FieldPtr field) : field_(std::move(field)) {}

  /// Reduces `v` against the basis; returns the residual (zero iff v is in the span).
  SparseVec reduce(const SparseVec& v) const;
  /// Adds v; returns true when it enlarged the span.
  bool add(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  std::vector<int> pivots() const;

  /// Back-substitutes so each pivot column is zero in every other row.
  void make_reduced();

 private:
  FieldPtr field_;
  std::vector<SparseVec> rows_;
  std::map<int, int> pivot_row_;  // pivot column -> row index
};

/// Basis of {s : sum_j eq[j] * s_j = 0 for every equation} in `unknowns` variables.
std::vector<std::vector<FieldElement>> nullspace(const std::vector<SparseVec>& equations, int unknowns,
                                                 const FieldPtr& field);

/// Rank of a list of sparse vectors.
int rank_of(const std::vector<SparseVec>& vectors, const FieldPtr& field);

using DenseMatrix = std::vector<std::vector<FieldElement>>;

FieldElement determinant(DenseMatrix m);
int dense_rank(const DenseMatrix& m);
/// Solution of m*x = b for square invertible m, or nullopt when singular.
std::optional<std::vector<FieldElement>> solve_square(DenseMatrix m, std::vector<FieldElement> b);
/// Nullspace basis of a dense matrix (vectors x with m*x = 0).
std::vector<std::vector<FieldElement>> dense_nullspace(const DenseMatrix& m, const FieldPtr& field);

}  // namespace ncalg
