#include "ncalg/regcheck.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace ncalg {

namespace {

bool all_quadratic(const std::vector<NcPoly>& rels) {
  return std::all_of(rels.begin(), rels.end(), [](const NcPoly& r) { return r.is_homogeneous() && r.degree() == 2; });
}

PolyMatrix zero_matrix(const RingPtr& ring, int rows, int cols) {
  return PolyMatrix(rows, std::vector<NcPoly>(cols, NcPoly(ring)));
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
  const int n = static_cast<int>(a.size()), k = static_cast<int>(b.size());
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  PolyMatrix out = zero_matrix(ring, n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < k; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
  return out;
}

PolyMatrix scalar_times(const DenseMatrix& S, const PolyMatrix& M, const RingPtr& ring) {
  const int n = static_cast<int>(S.size());
  const int m = M.empty() ? 0 : static_cast<int>(M[0].size());
  PolyMatrix out = zero_matrix(ring, n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < n; ++l)
        if (!S[i][l].is_zero()) out[i][j] += M[l][j] * S[i][l];
  return out;
}

PolyMatrix generator_row(const RingPtr& ring) {
  const int g = ring->alphabet->size();
  PolyMatrix X(1);
  for (int i = 0; i < g; ++i) X[0].push_back(NcPoly::generator(ring, i));
  return X;
}

PolyMatrix generator_column(const RingPtr& ring) {
  const int g = ring->alphabet->size();
  PolyMatrix X;
  for (int i = 0; i < g; ++i) X.push_back({NcPoly::generator(ring, i)});
  return X;
}

DenseMatrix transpose(const DenseMatrix& S) {
  if (S.empty()) return S;
  DenseMatrix t(S[0].size(), std::vector<FieldElement>(S.size()));
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S[0].size(); ++j) t[j][i] = S[i][j];
  return t;
}

DenseMatrix submatrix(const DenseMatrix& S, const std::vector<int>& idx) {
  DenseMatrix out;
  for (int i : idx) {
    out.emplace_back();
    for (int j : idx) out.back().push_back(S[i][j]);
  }
  return out;
}

// Global dimension suggested by the presentation's size: 4 for (4, 6), 3 for (3, 3), else 0.
int shape_dimension(int generators, int relations) {
  if (generators == 4 && relations == 6) return 4;
  if (generators == 3 && relations == 3) return 3;
  return 0;
}

std::vector<int> relation_blocks(const RelationMatrices& m) {
  if (m.generators() != 4 || m.relation_count() != 6) return {};
  const char top = static_cast<char>(m.generators() - 1);
  std::vector<int> block;
  int ones = 0;
  for (const auto& r : m.relations) {
    bool has_top = false;
    for (const auto& [w, c] : r.terms())
      if (w.letters().find(top) != std::string::npos) has_top = true;
    block.push_back(has_top ? 1 : 0);
    ones += has_top;
  }
  return ones == 3 ? block : std::vector<int>{};
}

// Right-hand factor Q of R*S*Q: T in dimension 4, X^t in dimension 3.
PolyMatrix right_factor(const RelationMatrices& m) {
  return m.generators() == 3 ? generator_column(m.ring) : m.T;
}

// Coefficients c with sum c[k] * cols[k] = target, if any.
std::optional<std::vector<FieldElement>> express(const std::vector<SparseVec>& cols, const SparseVec& target,
                                                 const FieldPtr& field) {
  const int n = static_cast<int>(cols.size());
  std::map<int, std::map<int, FieldElement>> rows;
  for (int k = 0; k < n; ++k)
    for (const auto& [c, x] : cols[k]) rows[c].emplace(k, x);
  for (const auto& [c, x] : target) rows[c].emplace(n, x);
  std::vector<SparseVec> eqs;
  for (const auto& [c, row] : rows) eqs.emplace_back(row.begin(), row.end());
  for (const auto& v : nullspace(eqs, n + 1, field)) {
    if (v[n].is_zero()) continue;
    std::vector<FieldElement> out(n, FieldElement(field));
    const FieldElement scale = -v[n].inverse();
    for (int k = 0; k < n; ++k) out[k] = v[k] * scale;
    return out;
  }
  return std::nullopt;
}

// Normal words by degree and left multiplication by generators between them.
class GradedModel {
 public:
  GradedModel(const RewriteSystem& sys, int bound) : sys_(sys), g_(sys.ring()->alphabet->size()) {
    for (int m = 0; m <= bound; ++m) {
      words_.push_back(enumerate_basis(sys, m));
      auto& idx = index_.emplace_back();
      for (std::size_t i = 0; i < words_.back().size(); ++i) idx[words_.back()[i].letters()] = static_cast<int>(i);
    }
  }

  long dim(int m) const { return m < 0 || m >= static_cast<int>(words_.size()) ? 0 : static_cast<long>(words_[m].size()); }
  const std::vector<Word>& words(int m) const { return words_[m]; }

  SparseVec coords(const NcPoly& nf, int m) const {
    std::map<int, FieldElement> acc;
    for (const auto& [w, c] : nf.terms()) acc.emplace(index_[m].at(w.letters()), c);
    return {acc.begin(), acc.end()};
  }

  // Images of the degree-m basis under left multiplication by `letter`.
  const std::vector<SparseVec>& left(int letter, int m) {
    auto key = std::make_pair(letter, m);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<SparseVec> out;
    const RingPtr& ring = sys_.ring();
    const FieldElement one(ring->field, 1L);
    for (const auto& w : words_[m]) out.push_back(coords(sys_.normal_form(NcPoly(ring, Word({letter}) * w, one)), m + 1));
    return cache_.emplace(key, std::move(out)).first->second;
  }

  int generators() const { return g_; }

 private:
  const RewriteSystem& sys_;
  int g_;
  std::vector<std::vector<Word>> words_;
  std::vector<std::unordered_map<std::string, int>> index_;
  std::map<std::pair<int, int>, std::vector<SparseVec>> cache_;
};

// Rank of the map given by a matrix of linear forms, from cols copies of
// degree m to rows copies of degree m+1.
long map_rank(GradedModel& model, const PolyMatrix& M, int m, const FieldPtr& field) {
  if (m < 0 || M.empty()) return 0;
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());
  const long target_dim = model.dim(m + 1);
  std::vector<SparseVec> columns;
  for (int j = 0; j < cols; ++j)
    for (long w = 0; w < model.dim(m); ++w) {
      std::map<int, FieldElement> acc;
      for (int i = 0; i < rows; ++i)
        for (const auto& [lw, c] : M[i][j].terms()) {
          const auto& img = model.left(lw[0], m)[w];
          for (const auto& [k, x] : img) {
            auto [it, fresh] = acc.try_emplace(static_cast<int>(i * target_dim + k), c * x);
            if (!fresh) it->second += c * x;
          }
        }
      SparseVec v;
      for (auto& [k, x] : acc)
        if (!x.is_zero()) v.emplace_back(k, x);
      columns.push_back(std::move(v));
    }
  return rank_of(columns, field);
}

bool reduces_to_zero(const PolyMatrix& M, const RewriteSystem& sys) {
  for (const auto& row : M)
    for (const auto& e : row)
      if (!sys.normal_form(e).is_zero()) return false;
  return true;
}

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string position_name(int k, long copies) {
  std::ostringstream os;
  os << "D";
  if (k) os << "(-" << k << ")";
  if (copies != 1) os << "^" << copies;
  return os.str();
}

}  // namespace

RelationMatrices build_matrices(const AlgebraPresentation& D) {
  const RingPtr& ring = D.ring;
  const int g = D.generator_count();
  const int r = static_cast<int>(D.relations.size());
  RelationMatrices m{ring, D.relations, zero_matrix(ring, g, r), zero_matrix(ring, r, g)};
  const FieldElement zero(D.field());
  for (int j = 0; j < r; ++j) {
    const NcPoly& rel = D.relations[j];
    if (!rel.is_homogeneous() || rel.degree() != 2)
      throw Error(ErrorCode::NonQuadraticRelation, "relation " + std::to_string(j + 1) + " is not quadratic: " +
                                                        rel.to_string());
    for (const auto& [w, c] : rel.terms()) {
      m.R[w[0]][j].add_term(Word({w[1]}), c);
      m.T[j][w[1]].add_term(Word({w[0]}), c);
    }
  }
  return m;
}

SolveSResult solve_S(const AlgebraPresentation& D, bool enforce_blocks) {
  const RelationMatrices m = build_matrices(D);
  const int g = m.generators();
  const int r = m.relation_count();
  const FieldPtr& field = D.field();
  const PolyMatrix Q = right_factor(m);
  const int q = Q.empty() ? 0 : static_cast<int>(Q[0].size());
  // R*S*Q has degree-2 entries, so the quadratic rules alone give canonical forms.
  const RewriteSystem sys = RewriteSystem::from_relations(D.ring, D.relations);

  SolveSResult res;
  res.unknowns = r * r;
  res.block_of = relation_blocks(m);

  std::map<std::tuple<int, int, std::string>, std::map<int, FieldElement>> eqs;
  for (int i = 0; i < g; ++i)
    for (int a = 0; a < r; ++a) {
      if (m.R[i][a].is_zero()) continue;
      for (int b = 0; b < r; ++b)
        for (int j = 0; j < q; ++j) {
          if (Q[b][j].is_zero()) continue;
          const NcPoly nf = sys.normal_form(m.R[i][a] * Q[b][j]);
          for (const auto& [w, c] : nf.terms()) {
            auto& row = eqs[{i, j, w.letters()}];
            auto [it, fresh] = row.try_emplace(a * r + b, c);
            if (!fresh) it->second += c;
          }
        }
    }
  std::vector<SparseVec> equations;
  for (auto& [key, row] : eqs) {
    SparseVec v;
    for (auto& [k, x] : row)
      if (!x.is_zero()) v.emplace_back(k, x);
    if (!v.empty()) equations.push_back(std::move(v));
  }
  if (enforce_blocks && !res.block_of.empty())
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        if (res.block_of[a] != res.block_of[b]) equations.push_back({{a * r + b, FieldElement(field, 1L)}});
  res.equations = static_cast<int>(equations.size());

  for (const auto& v : nullspace(equations, r * r, field)) {
    DenseMatrix S(r, std::vector<FieldElement>(r, FieldElement(field)));
    for (int k = 0; k < r * r; ++k) S[k / r][k % r] = v[k];
    res.basis.push_back(std::move(S));
  }
  if (res.basis.empty())
    throw Error(ErrorCode::EmptySolutionSpace, "R*S*Q = 0 has only the zero solution (" +
                                                   std::to_string(res.equations) + " equations, " +
                                                   std::to_string(r * r) + " unknowns)");

  if (!res.block_of.empty()) {
    res.block_diagonal = true;
    for (const auto& S : res.basis)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          if (res.block_of[a] != res.block_of[b] && !S[a][b].is_zero()) res.block_diagonal = false;
  }
  std::vector<int> b0, b1;
  for (int a = 0; a < static_cast<int>(res.block_of.size()); ++a) (res.block_of[a] ? b1 : b0).push_back(a);

  // Small integer combinations of the basis in a fixed order.
  static const int kVals[] = {0, 1, -1, 2, -2};
  const int n = static_cast<int>(res.basis.size());
  std::vector<int> coef(n, 0);
  int invertible_seen = 0;
  bool found = false;
  for (long attempts = 0; attempts < 20000; ++attempts) {
    int k = 0;
    for (; k < n; ++k) {
      if (++coef[k] < 5) break;
      coef[k] = 0;
    }
    if (k == n) break;
    DenseMatrix S(r, std::vector<FieldElement>(r, FieldElement(field)));
    for (int i = 0; i < n; ++i) {
      if (!coef[i]) continue;
      const FieldElement c(field, static_cast<long>(kVals[coef[i]]));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) S[a][b] += c * res.basis[i][a][b];
    }
    if (determinant(S).is_zero()) continue;
    std::optional<FieldElement> ratio;
    if (res.block_diagonal) {
      const FieldElement d1 = determinant(submatrix(S, b0));
      if (!d1.is_zero()) ratio = determinant(submatrix(S, b1)) / d1;
    }
    if (!found) {
      res.distinguished = ScalarMatrixS{S, res.block_diagonal ? res.block_of : std::vector<int>{}};
      res.det_ratio = ratio;
      found = true;
    } else if (ratio != res.det_ratio) {
      res.det_ratio_constant = false;
    }
    if (++invertible_seen >= 25) break;
  }
  if (!found)
    throw Error(ErrorCode::NoInvertibleSolution,
                "solution space has dimension " + std::to_string(n) + " but no tried member is invertible");
  return res;
}

SideReport check_complex(const AlgebraPresentation& D, const DenseMatrix& S, int bound, const std::string& label) {
  SideReport rep;
  rep.label = label;
  const int g = D.generator_count();
  const int r = static_cast<int>(D.relations.size());
  const int dim = g == 3 && r == 3 ? 3 : g == 4 ? 4 : 0;
  rep.shape_ok = shape_dimension(g, r) != 0;
  if (!rep.shape_ok)
    rep.shape_note = "not of type (14641): " + std::to_string(g) + " generators, " + std::to_string(r) + " relations";
  if (dim == 0 || !all_quadratic(D.relations) || static_cast<int>(S.size()) != r) {
    rep.shape_ok = false;
    rep.shape_note = "complex needs 4 generators (or 3 generators and 3 relations), quadratic relations and a " +
                     std::to_string(r) + "x" + std::to_string(r) + " scalar matrix";
    return rep;
  }
  const RelationMatrices m = build_matrices(D);
  const FieldPtr& field = D.field();
  std::vector<PolyMatrix> maps{PolyMatrix{}, generator_row(D.ring), m.R};
  std::vector<long> ranks{1, g, r};
  if (dim == 4) {
    maps.push_back(scalar_times(S, m.T, D.ring));
    ranks.push_back(g);
  } else {
    maps.push_back(scalar_times(S, generator_column(D.ring), D.ring));
  }
  if (dim == 4) maps.push_back(generator_column(D.ring));
  ranks.push_back(1);
  const int top = static_cast<int>(ranks.size()) - 1;

  const auto done = complete(D.ring, D.relations, std::max(bound, 3));
  rep.compositions_zero = true;
  for (int k = 1; k < top; ++k)
    if (!reduces_to_zero(multiply(maps[k], maps[k + 1], D.ring), done.system)) {
      rep.compositions_zero = false;
      if (rep.first_failure.empty()) {
        rep.first_failure = "maps into and out of " + position_name(k, ranks[k]) + " do not compose to zero";
        rep.failure_position = k;
      }
    }

  GradedModel model(done.system, bound);
  for (int n = 1; n <= bound; ++n) {
    // rank[k] = rank of the map out of position k at internal degree n.
    std::vector<long> rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) rank[k] = map_rank(model, maps[k], n - k, field);
    for (int k = 0; k <= top && k <= n; ++k) {
      PositionCheck pc;
      pc.degree = n;
      pc.position = k;
      pc.dim = ranks[k] * model.dim(n - k);
      pc.rank_out = rank[k];
      pc.rank_in = rank[k + 1];
      pc.exact = pc.rank_in + pc.rank_out == pc.dim;
      if (!pc.exact && rep.first_failure.empty()) {
        std::ostringstream os;
        os << "degree " << n << " at " << position_name(k, ranks[k]) << ": dim " << pc.dim << ", kernel "
           << pc.dim - pc.rank_out << ", image " << pc.rank_in;
        rep.first_failure = os.str();
        rep.failure_position = k;
      }
      rep.checks.push_back(pc);
    }
  }
  rep.exact = rep.shape_ok && rep.compositions_zero &&
              std::all_of(rep.checks.begin(), rep.checks.end(), [](const PositionCheck& p) { return p.exact; });
  return rep;
}

ExactnessReport check_exactness(const AlgebraPresentation& D, const DenseMatrix& S, int bound) {
  ExactnessReport rep;
  rep.bound = bound;
  rep.direct = check_complex(D, S, bound, D.label);
  const AlgebraPresentation op = opposite(D);
  DenseMatrix S_op = transpose(S);
  if (D.generator_count() == 3 && rep.direct.shape_ok) {
    try {
      S_op = solve_S(op, false).distinguished.S;
    } catch (const Error& e) {
      rep.dual.label = op.label;
      rep.dual.shape_ok = true;
      rep.dual.first_failure = e.what();
      return rep;
    }
  }
  rep.dual = check_complex(op, S_op, bound, op.label);
  return rep;
}

bool left_multiplication_injective(const AlgebraPresentation& D, int letter, int bound) {
  const auto done = complete(D.ring, D.relations, bound);
  GradedModel model(done.system, bound);
  PolyMatrix M{{NcPoly::generator(D.ring, letter)}};
  for (int n = 0; n < bound; ++n)
    if (map_rank(model, M, n, D.field()) != model.dim(n)) return false;
  return true;
}

NormalSequenceReport check_normalizing_sequence(const AlgebraPresentation& D, const std::vector<NcPoly>& seq,
                                                int bound) {
  NormalSequenceReport rep;
  rep.bound = bound;
  const RingPtr& ring = D.ring;
  const FieldPtr& field = D.field();
  const int g = D.generator_count();
  std::vector<NcPoly> rels = D.relations;
  for (std::size_t stage = 0; stage < seq.size(); ++stage) {
    const NcPoly& el = seq[stage];
    if (el.is_zero() || !el.is_homogeneous())
      throw Error(ErrorCode::InvalidArgument, "sequence element " + std::to_string(stage + 1) + " is not homogeneous");
    const auto done = complete(ring, rels, bound);
    const RewriteSystem& sys = done.system;
    NormalityCertificate cert{el, 0, false, {}, {}, 0};
    cert.stage = static_cast<int>(stage + 1);
    cert.checked_through = bound;
    const NcPoly nf = sys.normal_form(el);
    if (nf.is_zero()) {
      cert.zero_in_quotient = true;
    } else {
      GradedModel model(sys, bound);
      const int e = nf.degree();
      auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::NotNormalAtStage, "stage " + std::to_string(stage + 1) + " (" + el.to_string() +
                                                     "): " + what);
      };
      if (e + 1 <= bound) {
        std::vector<SparseVec> left_cols, right_cols;  // x'*g and g*x'
        for (int x = 0; x < g; ++x) {
          const NcPoly gen = NcPoly::generator(ring, x);
          left_cols.push_back(model.coords(sys.normal_form(gen * nf), e + 1));
          right_cols.push_back(model.coords(sys.normal_form(nf * gen), e + 1));
        }
        for (int x = 0; x < g; ++x) {
          auto lw = express(left_cols, right_cols[x], field);
          if (!lw) fail("g*" + D.alphabet().name(x) + " is not in the span of the x*g");
          cert.left_witnesses.push_back(*lw);
          auto rw = express(right_cols, left_cols[x], field);
          if (!rw) fail(D.alphabet().name(x) + "*g is not in the span of the g*x");
          cert.right_witnesses.push_back(*rw);
        }
      }
      // g*Q_m = Q_m*g in every degree the bound allows.
      for (int m = 2; m + e <= bound; ++m) {
        std::vector<SparseVec> gl, lg;
        for (const auto& w : model.words(m)) {
          const NcPoly wp(ring, w, FieldElement(field, 1L));
          gl.push_back(model.coords(sys.normal_form(nf * wp), m + e));
          lg.push_back(model.coords(sys.normal_form(wp * nf), m + e));
        }
        const int a = rank_of(gl, field), b = rank_of(lg, field);
        std::vector<SparseVec> both = gl;
        both.insert(both.end(), lg.begin(), lg.end());
        if (a != b || rank_of(both, field) != a)
          fail("g*Q_" + std::to_string(m) + " differs from Q_" + std::to_string(m) + "*g");
      }
    }
    rep.certificates.push_back(std::move(cert));
    rels.push_back(el);
  }
  const auto done = complete(ring, rels, bound);
  rep.quotient_hilbert = hilbert_function(done.system, bound);
  for (int n = 0; n <= bound; ++n)
    if (rep.quotient_hilbert.dims[n] == 0) {
      rep.vanishes_from = n;
      break;
    }
  rep.enough_normal = rep.vanishes_from >= 0;
  return rep;
}

RegularityVerdict regularity_verdict(const AlgebraPresentation& D, int bound) {
  RegularityVerdict v;
  const int g = D.generator_count();
  AlgebraPresentation Dq{D.ring, D.relations_of_degree(2), D.label};
  std::vector<NcPoly> higher;
  for (const auto& r : D.relations)
    if (r.degree() != 2) higher.push_back(r);
  const int dim = shape_dimension(g, static_cast<int>(Dq.relations.size()));
  auto add = [&](std::string name, int b, bool pass, std::string detail) {
    v.lines.push_back(VerdictLine{std::move(name), b, pass, std::move(detail)});
  };

  // Hilbert function against the polynomial ring of the same dimension.
  {
    const int d = dim ? dim : g;
    std::ostringstream os;
    bool pass = dim != 0;
    try {
      const auto done = complete(D.ring, D.relations, bound);
      const auto h = hilbert_function(done.system, bound);
      for (int n = 0; n <= bound; ++n) os << (n ? "," : "") << h.dims[n];
      for (int n = 0; n <= bound && pass; ++n)
        if (h.dims[n] != binomial(n + d - 1, d - 1)) {
          pass = false;
          os << " (degree " << n << ": expected " << binomial(n + d - 1, d - 1) << ")";
        }
    } catch (const Error& e) {
      pass = false;
      os << e.what();
    }
    add("hilbert", bound, pass, os.str());
  }
  if (g == 4) {
    const bool inf = detect_infinite_gk(D);
    add("finite growth screen", 2, !inf, inf ? "no x4^2, x4x3 or x3x4 term: infinite GK dimension" : "");
  }

  // Shape of the presentation.
  if (g == 4) {
    const auto t = is_type_A_shape(D);
    add("type A shape", 3, t.ok, t.diagnostic);
  } else {
    bool pass = dim == 3;
    std::string detail = pass ? "" : "needs 3 generators and 3 quadratic relations";
    if (pass && !higher.empty()) {
      int top = 0;
      for (const auto& h : higher) top = std::max(top, h.degree());
      const auto done = complete(Dq.ring, Dq.relations, top);
      for (const auto& h : higher)
        if (!done.system.normal_form(h).is_zero()) {
          pass = false;
          detail = "relation " + h.to_string() + " is not implied by the quadratic relations";
          break;
        }
    }
    add("quadratic shape", 3, pass, detail);
  }

  // Scalar matrix S and exactness.
  if (dim != 0) {
    try {
      v.S = solve_S(Dq, false);
      std::ostringstream os;
      os << "solution space dimension " << v.S->basis.size();
      if (!v.S->block_of.empty()) os << ", block-diagonal " << (v.S->block_diagonal ? "yes" : "no");
      if (v.S->det_ratio) os << ", det(S2)/det(S1) = " << v.S->det_ratio->to_string();
      add("invertible S", 2, true, os.str());
    } catch (const Error& e) {
      add("invertible S", 2, false, e.what());
    }
  } else {
    add("invertible S", 2, false, "presentation shape not supported");
  }
  if (v.S) {
    const auto ex = check_exactness(Dq, v.S->distinguished.S, bound);
    add("exactness", bound, ex.direct.exact, ex.direct.describe_failure());
    add("dual exactness", bound, ex.dual.exact, ex.dual.describe_failure());
  } else {
    add("exactness", bound, false, "no invertible S");
    add("dual exactness", bound, false, "no invertible S");
  }

  v.opposite_iso = find_opposite_isomorphism(D);
  // The dual complex already covers the Gorenstein side; this is a report only.
  add("opposite isomorphism", bound, v.opposite_iso.has_value(),
      v.opposite_iso ? v.opposite_iso->description : "no monomial change maps D^op onto D");
  v.lines.back().informational = true;

  v.regular = std::all_of(v.lines.begin(), v.lines.end(),
                          [](const VerdictLine& l) { return l.pass || l.informational; });
  if (v.regular) {
    v.summary = "regular to degree " + std::to_string(bound);
  } else {
    for (const auto& l : v.lines)
      if (!l.pass && !l.informational) {
        v.summary = "fails: " + l.name + (l.detail.empty() ? "" : " (" + l.detail + ")");
        break;
      }
  }
  return v;
}

}  // namespace ncalg
