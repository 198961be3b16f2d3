#include "ncalg/points.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ncalg {

ProjectivePoint ProjectivePoint::make(std::vector<FieldElement> coords) {
  auto it = std::find_if(coords.begin(), coords.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (it == coords.end()) throw Error(ErrorCode::InvalidArgument, "projective point with all coordinates zero");
  const FieldElement inv = it->inverse();
  for (auto& x : coords) x *= inv;
  return ProjectivePoint{std::move(coords)};
}

ProjectivePoint ProjectivePoint::unit(const FieldPtr& field, int n, int letter) {
  std::vector<FieldElement> c(n, FieldElement(field));
  c.at(letter) = FieldElement(field, 1L);
  return ProjectivePoint{std::move(c)};
}

std::string ProjectivePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? " : " : "") + coords[i].to_string();
  return s + ")";
}

FieldElement MultilinearSystem::evaluate(std::size_t r, const std::vector<ProjectivePoint>& pts,
                                         std::size_t offset) const {
  FieldElement acc(ring->field);
  for (const auto& [w, c] : relations.at(r).terms()) {
    FieldElement t = c;
    for (int k = 0; k < w.degree(); ++k) t *= pts.at(offset + k).coords.at(w[k]);
    acc += t;
  }
  return acc;
}

DenseMatrix MultilinearSystem::right_matrix(const ProjectivePoint& alpha) const {
  const int g = generators();
  DenseMatrix M(relations.size(), std::vector<FieldElement>(g, FieldElement(ring->field)));
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (const auto& [w, c] : relations[r].terms()) M[r][w[1]] += c * alpha.coords.at(w[0]);
  return M;
}

DenseMatrix MultilinearSystem::left_matrix(const ProjectivePoint& beta) const {
  const int g = generators();
  DenseMatrix N(relations.size(), std::vector<FieldElement>(g, FieldElement(ring->field)));
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (const auto& [w, c] : relations[r].terms()) N[r][w[0]] += c * beta.coords.at(w[1]);
  return N;
}

std::vector<std::vector<CommPoly>> MultilinearSystem::symbolic_right_matrix(
    int nvars, const std::vector<int>& var_of_letter) const {
  const int g = generators();
  const FieldPtr& f = ring->field;
  std::vector<std::vector<CommPoly>> M(relations.size(), std::vector<CommPoly>(g, CommPoly(f, nvars)));
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (const auto& [w, c] : relations[r].terms()) M[r][w[1]].add_term(Monomial::var(var_of_letter.at(w[0])), c);
  return M;
}

MultilinearSystem multilinearize(const AlgebraPresentation& P) {
  MultilinearSystem ms{P.ring, 2, P.relations};
  if (P.relations.empty()) return ms;
  const int d = P.relations.front().degree();
  for (const auto& r : P.relations)
    if (!r.is_homogeneous() || r.degree() != d)
      throw Error(ErrorCode::UnsupportedDegree, "relations of mixed degree");
  if (d == 3 && P.generator_count() == 2) {
    ms.arity = 3;
    return ms;
  }
  if (d != 2)
    throw Error(ErrorCode::UnsupportedDegree, "degree " + std::to_string(d) + " relations on " +
                                                  std::to_string(P.generator_count()) + " generators");
  return ms;
}

AlgebraPresentation quadratic_part(const AlgebraPresentation& P) {
  return AlgebraPresentation{P.ring, P.relations_of_degree(2), P.label};
}

namespace {

MultilinearSystem square_system(const AlgebraPresentation& A) {
  AlgebraPresentation q = quadratic_part(A);
  if (q.generator_count() != 3 || q.relations.size() != 3)
    throw Error(ErrorCode::NonSquareSystem, "point scheme needs 3 generators and 3 quadratic relations, found " +
                                                std::to_string(q.generator_count()) + " and " +
                                                std::to_string(q.relations.size()));
  return multilinearize(q);
}

ProjectivePoint unique_kernel(const DenseMatrix& M, const FieldPtr& field, const std::string& where) {
  const auto ns = dense_nullspace(M, field);
  if (ns.empty()) throw Error(ErrorCode::NotOnScheme, where + " is not on the point scheme");
  if (ns.size() > 1)
    throw Error(ErrorCode::RankDeficient, where + ": continuation not unique (kernel dimension " +
                                              std::to_string(ns.size()) + ")");
  return ProjectivePoint::make(ns[0]);
}

// Substitutes variable i = value and removes it from the ring.
CommPoly drop_variable(const CommPoly& p, int i, const FieldElement& value) {
  CommPoly out(p.field(), p.nvars() - 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    for (int k = 0, t = 0; k < p.nvars(); ++k)
      if (k != i) r.e[t++] = m.e[k];
    out.add_term(r, c * value.pow(m.e[i]));
  }
  return out;
}

std::vector<std::vector<CommPoly>> adjugate3(const std::vector<std::vector<CommPoly>>& M) {
  std::vector<std::vector<CommPoly>> adj(3, std::vector<CommPoly>(3, CommPoly(M[0][0].field(), M[0][0].nvars())));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      // adj[i][k] = (-1)^{i+k} * minor with row k and column i removed.
      std::vector<std::vector<CommPoly>> minor;
      for (int r = 0; r < 3; ++r) {
        if (r == k) continue;
        minor.emplace_back();
        for (int c = 0; c < 3; ++c)
          if (c != i) minor.back().push_back(M[r][c]);
      }
      CommPoly d = poly_determinant(minor);
      adj[i][k] = (i + k) % 2 ? -d : d;
    }
  return adj;
}

}  // namespace

CommPoly point_scheme_equation(const AlgebraPresentation& A) {
  const auto ms = square_system(A);
  return poly_determinant(ms.symbolic_right_matrix(3, {0, 1, 2}));
}

ProjectivePoint next_point(const AlgebraPresentation& A, const ProjectivePoint& alpha) {
  const auto ms = multilinearize(quadratic_part(A));
  return unique_kernel(ms.right_matrix(alpha), A.field(), alpha.to_string());
}

ProjectivePoint previous_point(const AlgebraPresentation& A, const ProjectivePoint& beta) {
  const auto ms = multilinearize(quadratic_part(A));
  return unique_kernel(ms.left_matrix(beta), A.field(), beta.to_string());
}

bool sigma_preserves_scheme(const AlgebraPresentation& A) {
  const auto ms = square_system(A);
  const auto M = ms.symbolic_right_matrix(3, {0, 1, 2});
  const CommPoly F = poly_determinant(M);
  if (F.is_zero()) return true;
  const auto adj = adjugate3(M);
  CommIdeal I{{"a1", "a2", "a3"}, {F}, {}, false};
  I = buchberger(I);
  for (int col = 0; col < 3; ++col) {
    // Column col of adj(M) spans the kernel of M wherever M has rank 2.
    CommPoly image(F.field(), 3);
    for (const auto& [m, c] : F.terms()) {
      CommPoly term = CommPoly::constant(F.field(), 3, c);
      for (int k = 0; k < 3; ++k)
        for (int e = 0; e < m.e[k]; ++e) term = term * adj[k][col];
      image += term;
    }
    if (!reduce(image, I).is_zero()) return false;
  }
  return true;
}

bool verify_point_sequence(const AlgebraPresentation& P, const std::vector<ProjectivePoint>& pts) {
  const auto ms = multilinearize(P);
  for (std::size_t off = 0; off + ms.arity <= pts.size(); ++off)
    for (std::size_t r = 0; r < ms.relations.size(); ++r)
      if (!ms.evaluate(r, pts, off).is_zero()) return false;
  return true;
}

std::vector<ProjectivePoint> classify_AnotC(const AlgebraPresentation& A, int bound) {
  const auto ms = square_system(A);
  const ProjectivePoint e = ProjectivePoint::unit(A.field(), 3, 2);
  if (dense_nullspace(ms.right_matrix(e), A.field()).empty()) return {};
  std::vector<ProjectivePoint> orbit;
  ProjectivePoint p = e;
  for (int k = 1; k <= bound; ++k) {
    try {
      p = previous_point(A, p);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::NotOnScheme) break;
      throw;
    }
    if (std::find(orbit.begin(), orbit.end(), p) != orbit.end()) break;
    orbit.push_back(p);
  }
  return orbit;
}

std::vector<ProjectivePoint> sample_scheme_points(const AlgebraPresentation& A, int count, unsigned seed) {
  const FieldPtr& f = A.field();
  const CommPoly F = point_scheme_equation(A);
  std::mt19937 rng(seed);
  std::vector<FieldElement> values;
  for (long v : {0L, 1L, -1L, 2L, -2L}) values.emplace_back(f, v);
  if (!f->is_rational()) {
    const FieldElement t = FieldElement::generator(f);
    for (const auto& v : {t, -t, t + FieldElement(f, 1L), t - FieldElement(f, 1L)}) values.push_back(v);
  }
  std::vector<ProjectivePoint> pts;
  auto add = [&](std::vector<FieldElement> c) {
    if (std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.is_zero(); })) return;
    ProjectivePoint p = ProjectivePoint::make(std::move(c));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  };
  auto random_value = [&]() { return FieldElement(f, static_cast<long>(rng() % 11) - 5); };
  if (F.is_zero()) {
    while (static_cast<int>(pts.size()) < count) add({random_value(), random_value(), random_value()});
    return pts;
  }
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values)
        if (F.evaluate({a, b, c}).is_zero()) add({a, b, c});
  // On the line P + tQ through a scheme point P, F = c1 t + c2 t^2 + c3 t^3. Chords
  // (Q on the scheme, c3 = 0) and tangents (c1 = 0) both leave one rational root.
  const FieldElement two(f, 2L), six(f, 6L);
  auto third_point = [&](const std::vector<FieldElement>& P, const std::vector<FieldElement>& Q) {
    auto at = [&](long t) {
      std::vector<FieldElement> v;
      for (int k = 0; k < 3; ++k) v.push_back(P[k] + FieldElement(f, t) * Q[k]);
      return F.evaluate(v);
    };
    const FieldElement f1 = at(1), fm1 = at(-1), f2 = at(2);
    const FieldElement c2 = (f1 + fm1) / two, s = (f1 - fm1) / two;
    const FieldElement c3 = (f2 - FieldElement(f, 4L) * c2 - two * s) / six, c1 = s - c3;
    const FieldElement along = random_value();
    std::vector<FieldElement> R;
    for (int k = 0; k < 3; ++k) {
      if (c1.is_zero() && c2.is_zero() && c3.is_zero()) R.push_back(P[k] + along * Q[k]);
      else if (c3.is_zero()) R.push_back(c2 * P[k] - c1 * Q[k]);
      else if (c1.is_zero()) R.push_back(c3 * P[k] - c2 * Q[k]);
      else return;
    }
    std::size_t size = 0;
    for (const auto& x : R) size += x.to_string().size();
    if (size < 600) add(R);
  };
  for (int attempt = 0; attempt < 40 * count && static_cast<int>(pts.size()) < count && !pts.empty(); ++attempt) {
    const auto P = pts[rng() % pts.size()].coords;
    // Tangents double heights, so they are only used to get chords started.
    if (pts.size() >= 3 || (rng() % 2 && pts.size() >= 2)) {
      const auto Q = pts[rng() % pts.size()].coords;
      if (Q != P) third_point(P, Q);
      continue;
    }
    std::vector<FieldElement> g;
    for (int k = 0; k < 3; ++k) g.push_back(F.derivative(k).evaluate(P));
    for (int e = 0; e < 3; ++e) {
      // g x e_e is orthogonal to the gradient
      std::vector<FieldElement> Q(3, FieldElement(f));
      Q[(e + 1) % 3] = g[(e + 2) % 3];
      Q[(e + 2) % 3] = -g[(e + 1) % 3];
      const bool zero = std::all_of(Q.begin(), Q.end(), [](const FieldElement& x) { return x.is_zero(); });
      const bool along_p = (Q[0] * P[1] - Q[1] * P[0]).is_zero() && (Q[0] * P[2] - Q[2] * P[0]).is_zero() &&
                           (Q[1] * P[2] - Q[2] * P[1]).is_zero();
      if (zero || along_p) continue;
      third_point(P, Q);
      break;
    }
  }
  if (static_cast<int>(pts.size()) > count) pts.resize(count);
  return pts;
}

std::pair<AlgebraPresentation, AlgebraPresentation> split_type_A(const AlgebraPresentation& D) {
  if (D.generator_count() != 4) throw Error(ErrorCode::InvalidArgument, "split needs 4 generators");
  const Alphabet& al = D.alphabet();
  auto part = [&](int keep, int drop, const std::string& label) {
    auto ring = make_ring({al.name(keep), al.name(1), al.name(0)}, D.field());
    AlgebraPresentation P{ring, {}, label};
    for (const auto& r : D.relations) {
      if (r.degree() != 2) continue;
      bool uses_drop = false;
      for (const auto& [w, c] : r.terms())
        if (w.letters().find(static_cast<char>(drop)) != std::string::npos) uses_drop = true;
      if (!uses_drop) P.relations.push_back(transfer(r, ring));
    }
    return P;
  };
  return {part(2, 3, D.label + ".A"), part(3, 2, D.label + ".B")};
}

namespace {

struct ChartInput {
  std::string name;
  std::vector<std::string> variables;
  std::vector<CommPoly> generators;
  std::vector<int> coordinate_vars;
};

ChartReport run_chart(const ChartInput& in) {
  ChartReport rep;
  rep.name = in.name;
  rep.variables = in.variables;
  CommIdeal I{in.variables, {}, {}, false};
  for (const auto& g : in.generators)
    if (!g.is_zero()) {
      I.generators.push_back(g);
      rep.generators.push_back(g.to_string(in.variables));
    }
  I = buchberger(std::move(I));
  rep.basis_size = I.basis.size();
  rep.dimension = ideal_dimension(I);
  rep.multiplicity = quotient_dimension(I);
  if (rep.multiplicity) rep.distinct = *rep.multiplicity ? distinct_points(I, in.coordinate_vars) : 0;
  return rep;
}

// Chart (alpha1 = 1 or alpha2 = 1) of generators in the 4 variables (alpha1, alpha2, alpha3, beta3).
ChartInput make_chart(const std::vector<CommPoly>& gens, int fixed, bool invert_other) {
  static const std::vector<std::string> names{"alpha1", "alpha2", "alpha3", "beta3"};
  ChartInput c;
  const FieldPtr& f = gens.front().field();
  c.name = names[fixed] + "=1";
  for (int k = 0; k < 4; ++k)
    if (k != fixed) c.variables.push_back(names[k]);
  for (const auto& g : gens) c.generators.push_back(drop_variable(g, fixed, FieldElement(f, 1L)));
  c.coordinate_vars = {0, 1, 2};
  if (invert_other) {
    // y * alpha2 - 1 localizes at alpha2 != 0 (alpha2 is variable 0 once alpha1 is dropped).
    c.name += ", alpha2 invertible";
    c.variables.push_back("y");
    for (auto& g : c.generators) g = g.widened(4);
    CommPoly loc(f, 4);
    Monomial m = Monomial::var(0);
    m.e[3] = 1;
    loc.add_term(m, FieldElement(f, 1L));
    loc.add_term(Monomial{}, FieldElement(f, -1L));
    c.generators.push_back(loc);
  }
  return c;
}

}  // namespace

CompatibleCount compatible_pair_count(const AlgebraPresentation& A0, const AlgebraPresentation& B0) {
  const auto msA = square_system(A0);
  const auto msB = square_system(B0);
  const AlgebraPresentation A = quadratic_part(A0), B = quadratic_part(B0);
  if (!A.field()->same_as(*B.field())) throw Error(ErrorCode::MixedFields, "A and B use different fields");
  if (A.alphabet().name(0) != B.alphabet().name(0) || A.alphabet().name(1) != B.alphabet().name(1))
    throw Error(ErrorCode::SharedGeneratorMismatch, "A and B must share their two smallest generators");
  const FieldPtr& f = A.field();

  const auto MA = msA.symbolic_right_matrix(4, {0, 1, 2});
  const auto MB = msB.symbolic_right_matrix(4, {0, 1, 3});
  const auto adjA = adjugate3(MA), adjB = adjugate3(MB);

  // sigma and tau must be defined at every scheme point with (alpha1, alpha2) != 0.
  for (const auto* adj : {&adjA, &adjB}) {
    std::vector<CommPoly> entries;
    for (const auto& row : *adj)
      for (const auto& e : row) entries.push_back(e);
    for (int fixed : {0, 1}) {
      auto chart = make_chart(entries, fixed, false);
      auto rep = run_chart(chart);
      if (!rep.multiplicity || *rep.multiplicity > 0)
        throw Error(ErrorCode::RankDeficientOnComponent,
                    std::string(adj == &adjA ? "sigma" : "tau") + " is undefined on part of the point scheme in chart " +
                        rep.name + " (rank of M at most 1 there)");
    }
  }

  std::vector<CommPoly> gens{poly_determinant(MA), poly_determinant(MB)};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) gens.push_back(adjA[0][k] * adjB[1][l] - adjA[1][k] * adjB[0][l]);

  CompatibleCount out;
  out.charts.push_back(run_chart(make_chart(gens, 0, false)));
  out.charts.push_back(run_chart(make_chart(gens, 1, false)));
  out.charts.push_back(run_chart(make_chart(gens, 0, true)));
  out.infinite = std::any_of(out.charts.begin(), out.charts.end(), [](const ChartReport& c) { return !c.multiplicity; });
  std::ostringstream os;
  if (out.infinite) {
    os << "positive-dimensional:";
    for (const auto& c : out.charts)
      if (!c.multiplicity) os << " chart " << c.name << " has dimension " << c.dimension << ";";
  } else {
    out.multiplicity = *out.charts[0].multiplicity + *out.charts[1].multiplicity - *out.charts[2].multiplicity;
    out.distinct = *out.charts[0].distinct + *out.charts[1].distinct - *out.charts[2].distinct;
    os << "multiplicity " << out.multiplicity << ", distinct " << out.distinct;
  }
  // Points with alpha1 = alpha2 = 0 lie outside both charts.
  if (!dense_nullspace(msA.right_matrix(ProjectivePoint::unit(f, 3, 2)), f).empty())
    os << "; (0,0,1) lies on the point scheme of A and is not counted";
  out.detail = os.str();
  return out;
}

}  // namespace ncalg
