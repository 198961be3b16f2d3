#pragma once

// Algebra presentations and the constructions on them: pushouts over a
// shared subalgebra, the type A shape test, structural screens, linear
// changes of variable, opposite algebras and the A04 coefficient conditions.

#include <optional>
#include <string>
#include <vector>

#include "ncalg/linalg.hpp"
#include "ncalg/ncpoly.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg {

struct AlgebraPresentation {
  RingPtr ring;
  std::vector<NcPoly> relations;
  std::string label;

  const FieldPtr& field() const noexcept { return ring->field; }
  const Alphabet& alphabet() const noexcept { return *ring->alphabet; }
  int generator_count() const noexcept { return ring->alphabet->size(); }
  /// Relations of exactly this degree.
  std::vector<NcPoly> relations_of_degree(int d) const;
};

/// Re-expresses f over `to`, matching generators by name.
NcPoly transfer(const NcPoly& f, const RingPtr& to);

/// True when both presentations have the same relation span in every degree.
bool same_relation_span(const AlgebraPresentation& a, const AlgebraPresentation& b);

struct PushoutSpec {
  AlgebraPresentation A, B, C;
  std::vector<std::string> shared_generators;
};

struct PushoutResult {
  AlgebraPresentation D;
  int checked_bound = 0;  // degree through which C's relations were verified in A and B
};

/// D = A u_C B. Generators: B-only, then A-only, then C's, each in their own
/// descending order. Relations: A's and B's, dropping ones already in the span.
PushoutResult pushout(const PushoutSpec& spec);

struct TypeAReport {
  bool ok = false;
  std::string diagnostic;            // first failing condition, empty when ok
  std::vector<NcPoly> quadratic;     // normalized r1..r6 (leads x3^2, x3x1, x3x2, x4x1, x4x2, x4^2)
  std::vector<NcPoly> cubic;         // r7, r8 found by completion
  bool k_singular = false;           // NotNormalizable: the 2x2 matrix K is singular
};

/// Def. of type A, checked on a 4-generator presentation ranked x4 > x3 > x2 > x1.
TypeAReport is_type_A_shape(const AlgebraPresentation& D);

/// dim D_3 from the brute-force span oracle.
long degree3_dimension_test(const AlgebraPresentation& D);

/// True iff no relation has an x4^2, x4x3 or x3x4 term (infinite growth).
bool detect_infinite_gk(const AlgebraPresentation& D);

/// x_i -> sum_j m[i][j] x_j, indices are letter codes (0 = smallest generator).
struct LinearChange {
  DenseMatrix matrix;

  static LinearChange identity(const FieldPtr& f, int n);
  /// x_i -> scale[i] * x_{perm[i]}.
  static LinearChange monomial(const std::vector<int>& perm, const std::vector<FieldElement>& scale);
  std::string describe(const Alphabet& al) const;
};

AlgebraPresentation apply_change(const AlgebraPresentation& D, const LinearChange& L);
AlgebraPresentation opposite(const AlgebraPresentation& D);

struct OppositeIso {
  LinearChange change;
  std::string description;
};

/// Searches monomial changes (generator permutations preserving {x1,x2} and
/// the remaining generators, times scalings by small roots of unity of the
/// field) for one mapping D^op onto D. x1 -> -x1 is tried first.
std::optional<OppositeIso> find_opposite_isomorphism(const AlgebraPresentation& D);
/// The specific change x1 -> -x1.
bool opposite_iso_by_negating_x1(const AlgebraPresentation& D);

struct A04Conditions {
  FieldElement k1, k2, k3, k4, k5;
  FieldElement s1, s2, s3;
  DenseMatrix S_A;
  FieldElement det;
  bool rank_ok = false;
  bool det_ok = false;
  int solution_dimension = 0;
  bool verdict = false;
  std::string failing;  // empty when verdict holds
};

struct A04Coefficients {
  FieldElement a1, a4, a5, a11, a15, a21, a25;
};

A04Conditions a04_generic_check(const A04Coefficients& a);

/// The A04 presentation on x3 > x2 > x1 with its cubic relations r7, r8 appended.
AlgebraPresentation a04_presentation(const A04Coefficients& a);

}  // namespace ncalg
