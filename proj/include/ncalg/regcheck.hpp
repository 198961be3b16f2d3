#pragma once

// Potential resolutions: the matrices X, R, T of a quadratic presentation,
// scalar matrices S with R*S*T = 0, degreewise exactness of the resulting
// complex, normalizing sequences and the aggregated regularity verdict.

#include <optional>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg {

using PolyMatrix = std::vector<std::vector<NcPoly>>;

/// Row i of R / column i of T belongs to generator letter i (0 = smallest).
struct RelationMatrices {
  RingPtr ring;
  std::vector<NcPoly> relations;
  PolyMatrix R;  // g x r, X*R = relations
  PolyMatrix T;  // r x g, T*X^t = relations

  int generators() const { return static_cast<int>(R.size()); }
  int relation_count() const { return static_cast<int>(relations.size()); }
};

RelationMatrices build_matrices(const AlgebraPresentation& D);

struct ScalarMatrixS {
  DenseMatrix S;
  /// Block label of each relation index when the block split applies, else empty.
  std::vector<int> block_of;
};

struct SolveSResult {
  std::vector<DenseMatrix> basis;  // basis of the solution space
  ScalarMatrixS distinguished;     // first invertible small-integer combination
  int equations = 0;
  int unknowns = 0;
  /// Relations split into those without / with the top generator, 3 + 3.
  std::vector<int> block_of;
  /// Every basis element vanishes off the diagonal blocks.
  bool block_diagonal = false;
  /// det(S2) / det(S1) for the distinguished solution (block case only).
  std::optional<FieldElement> det_ratio;
  /// The ratio is the same on every invertible element tried.
  bool det_ratio_constant = true;
};

/// Solves R*S*T = 0 modulo the relations (4 generators, 6 relations) or
/// R*S*X^t = 0 (3 generators, 3 relations). Throws EmptySolutionSpace or
/// NoInvertibleSolution.
SolveSResult solve_S(const AlgebraPresentation& D, bool enforce_blocks);

/// One homological position of the complex at one internal degree.
struct PositionCheck {
  int degree = 0;
  int position = 0;   // 0 = D, 1 = D(-1)^g, ...
  long dim = 0;       // dim of the free module piece
  long rank_in = 0;   // rank of the map into this position
  long rank_out = 0;  // rank of the map out of it
  bool exact = false;
};

struct SideReport {
  std::string label;
  bool shape_ok = false;  // (4, 6) or (3, 3)
  std::string shape_note;
  bool compositions_zero = false;
  std::vector<PositionCheck> checks;
  bool exact = false;
  std::string first_failure;  // first composition or position failure
  int failure_position = -1;   // homological position of first_failure

  std::string describe_failure() const { return shape_ok ? first_failure : shape_note; }
};

struct ExactnessReport {
  int bound = 0;
  SideReport direct;
  SideReport dual;  // same complex for the opposite algebra with S transposed
  bool exact() const { return direct.exact && dual.exact; }
};

/// Checks the complex built from D's matrices and S through `bound`, on D and on opposite(D).
ExactnessReport check_exactness(const AlgebraPresentation& D, const DenseMatrix& S, int bound);
/// The direct side only, for an arbitrary scalar matrix of matching size.
SideReport check_complex(const AlgebraPresentation& D, const DenseMatrix& S, int bound, const std::string& label);

/// Left multiplication by generator `letter` is injective on D_n for n < bound.
bool left_multiplication_injective(const AlgebraPresentation& D, int letter, int bound);

struct NormalityCertificate {
  NcPoly element;
  int stage = 0;
  bool zero_in_quotient = false;
  /// witnesses[x][x'] : g*x = sum_x' c * x'*g, then the mirrored side.
  DenseMatrix left_witnesses, right_witnesses;
  int checked_through = 0;
};

struct NormalSequenceReport {
  std::vector<NormalityCertificate> certificates;
  HilbertFunction quotient_hilbert;
  bool enough_normal = false;
  int vanishes_from = -1;  // first degree with dim 0, or -1
  int bound = 0;
};

/// Throws NotNormalAtStage naming the stage and the generator.
NormalSequenceReport check_normalizing_sequence(const AlgebraPresentation& D, const std::vector<NcPoly>& seq,
                                                int bound);

struct VerdictLine {
  std::string name;
  int bound = 0;
  bool pass = false;
  std::string detail;
  bool informational = false;  // reported, not part of the verdict
};

struct RegularityVerdict {
  std::vector<VerdictLine> lines;
  bool regular = false;
  std::string summary;
  std::optional<SolveSResult> S;
  std::optional<OppositeIso> opposite_iso;
};

/// Global dimension 4 (4 generators) or 3 (3 generators) pipeline.
RegularityVerdict regularity_verdict(const AlgebraPresentation& D, int bound);

}  // namespace ncalg
