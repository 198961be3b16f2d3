#pragma once

// Point modules: multilinearized relations, point-scheme equations, the
// stepping map sigma, truncated point-module checks, the (A,C) screen and
// counting compatible pairs of point modules.

#include <optional>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/comm.hpp"

namespace ncalg {

/// Coordinates indexed by letter code (0 = smallest generator); the first
/// nonzero coordinate is 1.
struct ProjectivePoint {
  std::vector<FieldElement> coords;

  static ProjectivePoint make(std::vector<FieldElement> coords);
  static ProjectivePoint unit(const FieldPtr& field, int n, int letter);
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords == b.coords; }
};

/// Relations read as multilinear forms in `arity` points.
struct MultilinearSystem {
  RingPtr ring;
  int arity = 2;
  std::vector<NcPoly> relations;

  int generators() const { return ring->alphabet->size(); }
  /// Value of relation r at consecutive points pts[0], ..., pts[arity-1].
  FieldElement evaluate(std::size_t r, const std::vector<ProjectivePoint>& pts, std::size_t offset = 0) const;
  /// M(alpha): entry (r, j) = sum_i c_rij alpha_i, so relation r = (M(alpha) beta)_r.
  DenseMatrix right_matrix(const ProjectivePoint& alpha) const;
  /// N(beta): entry (r, i) = sum_j c_rij beta_j, so relation r = (N(beta) alpha)_r.
  DenseMatrix left_matrix(const ProjectivePoint& beta) const;
  /// M(alpha) with alpha_i replaced by the variable var_of_letter[i].
  std::vector<std::vector<CommPoly>> symbolic_right_matrix(int nvars, const std::vector<int>& var_of_letter) const;
};

/// Bilinear forms for quadratic relations, trilinear for cubic relations on 2 generators.
MultilinearSystem multilinearize(const AlgebraPresentation& P);

/// The presentation restricted to its quadratic relations.
AlgebraPresentation quadratic_part(const AlgebraPresentation& P);

/// det M(alpha) in variables alpha1..alpha3 (3 generators, 3 quadratic relations).
CommPoly point_scheme_equation(const AlgebraPresentation& A);

/// sigma(alpha): the unique beta with M(alpha) beta = 0. Throws NotOnScheme or RankDeficient.
ProjectivePoint next_point(const AlgebraPresentation& A, const ProjectivePoint& alpha);
/// sigma^{-1}(beta) from the transposed system. Throws NotOnScheme or RankDeficient.
ProjectivePoint previous_point(const AlgebraPresentation& A, const ProjectivePoint& beta);

/// F(sigma(a)) vanishes modulo F(a) for the Cramer expressions of sigma, so sigma
/// maps the scheme to itself over every extension field.
bool sigma_preserves_scheme(const AlgebraPresentation& A);
bool verify_point_sequence(const AlgebraPresentation& P, const std::vector<ProjectivePoint>& pts);

/// Empty when (0,0,1) is off the point scheme, else its distinct backward orbit
/// sigma^{-1}(e), ..., sigma^{-bound}(e).
std::vector<ProjectivePoint> classify_AnotC(const AlgebraPresentation& A, int bound);

/// Deterministic sample of points on the point scheme of A: small grid
/// points, then third intersections of chords, then points on contained lines.
std::vector<ProjectivePoint> sample_scheme_points(const AlgebraPresentation& A, int count, unsigned seed);

/// A = relations free of the top generator (on the other three generators),
/// B = relations free of the second generator.
std::pair<AlgebraPresentation, AlgebraPresentation> split_type_A(const AlgebraPresentation& D);

struct ChartReport {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  std::size_t basis_size = 0;
  std::optional<long> multiplicity;  // nullopt: positive-dimensional
  std::optional<long> distinct;
  int dimension = 0;                 // Krull dimension of the chart ideal
};

struct CompatibleCount {
  std::vector<ChartReport> charts;
  bool infinite = false;
  long multiplicity = 0;
  long distinct = 0;
  std::string detail;
};

/// Pairs (alpha, beta) of points of A and B agreeing on the shared generators
/// x1, x2, with sigma(alpha) and tau(beta) agreeing there too. Counted in
/// P^3 = (alpha1 : alpha2 : alpha3 : beta3) over the charts alpha1 = 1 and
/// alpha2 = 1 with inclusion-exclusion. Throws RankDeficientOnComponent when
/// sigma or tau is undefined at some point of its scheme.
CompatibleCount compatible_pair_count(const AlgebraPresentation& A, const AlgebraPresentation& B);

}  // namespace ncalg
