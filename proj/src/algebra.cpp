#include "ncalg/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ncalg/parse.hpp"

namespace ncalg {

namespace {

long word_code(const Word& w, int g) {
  long v = 0;
  for (int i = 0; i < w.degree(); ++i) v = v * g + w[i];
  return v;
}

SparseVec coded(const NcPoly& p, int g) {
  std::map<int, FieldElement> acc;
  for (const auto& [w, c] : p.terms()) acc.emplace(static_cast<int>(word_code(w, g)), c);
  return {acc.begin(), acc.end()};
}

// Relation span, one echelon basis per degree.
class GradedSpan {
 public:
  explicit GradedSpan(const AlgebraPresentation& P) : field_(P.field()), g_(P.generator_count()) {
    for (const auto& r : P.relations) add(r);
  }
  bool add(const NcPoly& r) {
    if (r.is_zero()) return false;
    auto it = by_degree_.try_emplace(r.degree(), field_).first;
    return it->second.add(coded(r, g_));
  }
  bool contains(const NcPoly& r) const {
    if (r.is_zero()) return true;
    auto it = by_degree_.find(r.degree());
    return it != by_degree_.end() && it->second.contains(coded(r, g_));
  }
  std::map<int, int> ranks() const {
    std::map<int, int> out;
    for (const auto& [d, b] : by_degree_)
      if (b.rank()) out[d] = b.rank();
    return out;
  }

 private:
  FieldPtr field_;
  int g_;
  std::map<int, EchelonBasis> by_degree_;
};

NcPoly monomial_image(const NcPoly& f, const RingPtr& ring, const std::vector<int>& perm,
                      const std::vector<FieldElement>& scale) {
  NcPoly out(ring);
  for (const auto& [w, c] : f.terms()) {
    std::string s(w.letters());
    FieldElement k = c;
    for (auto& ch : s) {
      const int l = static_cast<unsigned char>(ch);
      k *= scale[l];
      ch = static_cast<char>(perm[l]);
    }
    out.add_term(Word(std::move(s)), k);
  }
  return out;
}

// Letter of generator `name`, or the letter of the given rank from the top.
int letter_or_rank(const Alphabet& al, const std::string& name, int from_top) {
  const int l = al.letter(name);
  return l >= 0 ? l : al.size() - 1 - from_top;
}

}  // namespace

std::vector<NcPoly> AlgebraPresentation::relations_of_degree(int d) const {
  std::vector<NcPoly> out;
  for (const auto& r : relations)
    if (r.degree() == d) out.push_back(r);
  return out;
}

NcPoly transfer(const NcPoly& f, const RingPtr& to) {
  if (!f.field()->same_as(*to->field)) throw Error(ErrorCode::MixedFields, "relation lives in a different field");
  const Alphabet& from = *f.ring()->alphabet;
  std::vector<int> map(from.size());
  for (int l = 0; l < from.size(); ++l) map[l] = to->alphabet->letter(from.name(l));
  NcPoly out(to);
  for (const auto& [w, c] : f.terms()) {
    std::string s(w.letters());
    for (auto& ch : s) {
      const int m = map[static_cast<unsigned char>(ch)];
      if (m < 0)
        throw Error(ErrorCode::SharedGeneratorMismatch,
                    "generator " + from.name(static_cast<unsigned char>(ch)) + " is missing from the target");
      ch = static_cast<char>(m);
    }
    out.add_term(Word(std::move(s)), c);
  }
  return out;
}

bool same_relation_span(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (!a.ring->same_as(*b.ring)) return false;
  GradedSpan sa(a), sb(b);
  if (sa.ranks() != sb.ranks()) return false;
  for (const auto& r : b.relations)
    if (!sa.contains(r)) return false;
  return true;
}

PushoutResult pushout(const PushoutSpec& spec) {
  const auto& A = spec.A;
  const auto& B = spec.B;
  const auto& C = spec.C;
  if (!A.field()->same_as(*B.field()) || !A.field()->same_as(*C.field()))
    throw Error(ErrorCode::MixedFields, "pushout inputs use different coefficient fields");
  std::set<std::string> shared(spec.shared_generators.begin(), spec.shared_generators.end());
  const auto c_names = C.alphabet().names_descending();
  if (std::set<std::string>(c_names.begin(), c_names.end()) != shared)
    throw Error(ErrorCode::SharedGeneratorMismatch, "C's generators differ from the shared generator list");
  for (const auto& n : shared)
    if (A.alphabet().letter(n) < 0 || B.alphabet().letter(n) < 0)
      throw Error(ErrorCode::SharedGeneratorMismatch, "shared generator " + n + " missing from A or B");

  int cdeg = 0;
  for (const auto& r : C.relations) cdeg = std::max(cdeg, r.degree());
  const int bound = cdeg + 2;
  for (const AlgebraPresentation* X : {&A, &B}) {
    auto done = complete(X->ring, X->relations, bound);
    for (const auto& r : C.relations) {
      NcPoly nf = done.system.normal_form(transfer(r, X->ring));
      if (!nf.is_zero())
        throw Error(ErrorCode::SubalgebraRelationFails,
                    "degree " + std::to_string(r.degree()) + " relation " + r.to_string() + " of " + C.label +
                        " does not hold in " + X->label);
    }
  }

  std::vector<std::string> names;
  for (const auto& n : B.alphabet().names_descending())
    if (!shared.count(n)) names.push_back(n);
  for (const auto& n : A.alphabet().names_descending())
    if (!shared.count(n) && std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  for (const auto& n : c_names) names.push_back(n);
  auto ring = make_ring(names, A.field());

  PushoutResult res{AlgebraPresentation{ring, {}, A.label + "_u_" + B.label}, bound};
  GradedSpan span(res.D);
  for (const AlgebraPresentation* X : {&A, &B})
    for (const auto& r : X->relations) {
      NcPoly t = transfer(r, ring);
      if (span.add(t)) res.D.relations.push_back(std::move(t));
    }
  return res;
}

namespace {

// Rank of K: coefficients of (main x2, main x1) in the relations of the
// span that involve neither `other` nor main^2.
int k_rank(const std::vector<NcPoly>& quadratics, int main, int other, const FieldPtr& field) {
  auto group = [&](const Word& w) {
    if (w[0] == other || w[1] == other) return 0;
    if (w[0] == main && w[1] == main) return 1;
    return 2;
  };
  std::map<Word, int> col;
  std::vector<Word> words;
  for (const auto& q : quadratics)
    for (const auto& [w, c] : q.terms()) words.push_back(w);
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    const int ga = group(a), gb = group(b);
    return ga != gb ? ga < gb : b < a;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = static_cast<int>(i);
  EchelonBasis basis(field);
  for (const auto& q : quadratics) {
    std::map<int, FieldElement> acc;
    for (const auto& [w, c] : q.terms()) acc.emplace(col[w], c);
    basis.add(SparseVec(acc.begin(), acc.end()));
  }
  DenseMatrix K;
  const Word w2({main, 1}), w1({main, 0});
  for (const auto& row : basis.rows()) {
    if (group(words[row.front().first]) != 2) continue;
    std::vector<FieldElement> k{FieldElement(field), FieldElement(field)};
    for (const auto& [c, x] : row) {
      if (words[c] == w2) k[0] = x;
      if (words[c] == w1) k[1] = x;
    }
    K.push_back(k);
  }
  return K.empty() ? 0 : dense_rank(K);
}

}  // namespace

TypeAReport is_type_A_shape(const AlgebraPresentation& D) {
  TypeAReport rep;
  if (D.generator_count() != 4) {
    rep.diagnostic = "needs 4 generators, found " + std::to_string(D.generator_count());
    return rep;
  }
  const int x1 = 0, x2 = 1, x3 = 2, x4 = 3;
  auto sys = RewriteSystem::from_relations(D.ring, D.relations);
  std::vector<NcPoly> quad;
  for (const auto& r : sys.rules())
    if (r.degree == 2) quad.push_back(r.relation());
  if (quad.size() != 6) {
    rep.diagnostic = "expected 6 independent quadratic relations, found " + std::to_string(quad.size());
    return rep;
  }
  const std::vector<Word> want{Word({x3, x3}), Word({x3, x1}), Word({x3, x2}),
                               Word({x4, x1}), Word({x4, x2}), Word({x4, x4})};
  std::vector<NcPoly> ordered;
  for (const auto& w : want) {
    auto it = std::find_if(quad.begin(), quad.end(), [&](const NcPoly& q) { return q.leading_term().first == w; });
    if (it == quad.end()) {
      const auto q2 = D.relations_of_degree(2);
      const bool ka = k_rank(q2, x3, x4, D.field()) < 2;
      const bool kb = k_rank(q2, x4, x3, D.field()) < 2;
      rep.k_singular = ka || kb;
      rep.diagnostic = rep.k_singular ? "NotNormalizable: matrix K is singular"
                                      : "no quadratic relation with leading word " + w.to_string(D.alphabet());
      return rep;
    }
    ordered.push_back(*it);
  }
  for (int i = 0; i < 6; ++i) {
    const int banned = i < 3 ? x4 : x3;
    for (const auto& [w, c] : ordered[i].terms())
      if (w.letters().find(static_cast<char>(banned)) != std::string::npos) {
        rep.diagnostic = "relation with leading word " + want[i].to_string(D.alphabet()) +
                         " has a term outside its variable subset: " + w.to_string(D.alphabet());
        return rep;
      }
  }
  rep.quadratic = ordered;
  auto done = complete(sys, 3);
  std::set<Word> cubic_leads;
  for (const auto& r : done.system.rules())
    if (r.degree == 3) {
      cubic_leads.insert(r.lead);
      rep.cubic.push_back(r.relation());
    }
  const std::set<Word> expect{Word({x2, x2, x1}), Word({x2, x1, x1})};
  if (cubic_leads != expect) {
    std::string got;
    for (const auto& w : cubic_leads) got += (got.empty() ? "" : ", ") + w.to_string(D.alphabet());
    rep.diagnostic = "degree 3 completion leads are {" + got + "}, expected {x2^2*x1, x2*x1^2}";
    return rep;
  }
  rep.ok = true;
  return rep;
}

long degree3_dimension_test(const AlgebraPresentation& D) {
  return brute_force_dimension(D.ring, D.relations, 3);
}

bool detect_infinite_gk(const AlgebraPresentation& D) {
  const int x4 = letter_or_rank(D.alphabet(), "x4", 0);
  const int x3 = letter_or_rank(D.alphabet(), "x3", 1);
  const std::set<Word> bad{Word({x4, x4}), Word({x4, x3}), Word({x3, x4})};
  for (const auto& r : D.relations)
    for (const auto& [w, c] : r.terms())
      if (bad.count(w)) return false;
  return true;
}

LinearChange LinearChange::identity(const FieldPtr& f, int n) {
  LinearChange L;
  L.matrix.assign(n, std::vector<FieldElement>(n, FieldElement(f)));
  for (int i = 0; i < n; ++i) L.matrix[i][i] = FieldElement(f, 1L);
  return L;
}

LinearChange LinearChange::monomial(const std::vector<int>& perm, const std::vector<FieldElement>& scale) {
  const int n = static_cast<int>(perm.size());
  LinearChange L = identity(scale.at(0).field(), n);
  for (int i = 0; i < n; ++i) {
    L.matrix[i][i] = FieldElement(scale[0].field());
    L.matrix[i][perm[i]] = scale[i];
  }
  return L;
}

std::string LinearChange::describe(const Alphabet& al) const {
  std::ostringstream os;
  bool any = false;
  const int n = static_cast<int>(matrix.size());
  auto ring = make_ring(al.names_descending(), matrix.at(0).at(0).field());
  for (int i = n - 1; i >= 0; --i) {
    NcPoly img(ring);
    for (int j = 0; j < n; ++j) img.add_term(Word({j}), matrix[i][j]);
    if (img == NcPoly::generator(ring, i)) continue;
    os << (any ? ", " : "") << al.name(i) << " -> " << img.to_string();
    any = true;
  }
  return any ? os.str() : "identity";
}

AlgebraPresentation apply_change(const AlgebraPresentation& D, const LinearChange& L) {
  const int n = D.generator_count();
  if (static_cast<int>(L.matrix.size()) != n) throw Error(ErrorCode::InvalidArgument, "change has the wrong size");
  if (determinant(L.matrix).is_zero()) throw Error(ErrorCode::SingularChange, "linear change is singular");
  std::vector<NcPoly> image;
  for (int i = 0; i < n; ++i) {
    NcPoly p(D.ring);
    for (int j = 0; j < n; ++j) p.add_term(Word({j}), L.matrix[i][j]);
    image.push_back(std::move(p));
  }
  AlgebraPresentation out{D.ring, {}, D.label};
  for (const auto& r : D.relations) {
    NcPoly acc(D.ring);
    for (const auto& [w, c] : r.terms()) {
      NcPoly t = NcPoly::constant(D.ring, c);
      for (int k = 0; k < w.degree(); ++k) t = t * image[w[k]];
      acc += t;
    }
    out.relations.push_back(std::move(acc));
  }
  return out;
}

AlgebraPresentation opposite(const AlgebraPresentation& D) {
  AlgebraPresentation out{D.ring, {}, D.label + "^op"};
  for (const auto& r : D.relations) out.relations.push_back(r.reversed());
  return out;
}

namespace {

// Roots of unity among +-g^k for the field generator g, plus +-1.
std::vector<FieldElement> small_units(const FieldPtr& f) {
  std::vector<FieldElement> out{FieldElement(f, 1L), FieldElement(f, -1L)};
  if (f->is_rational()) return out;
  const FieldElement g = FieldElement::generator(f);
  FieldElement p = g;
  int order = 0;
  for (int k = 1; k <= 48; ++k) {
    if (p.is_one()) {
      order = k;
      break;
    }
    p *= g;
  }
  if (order == 0) return out;
  p = g;
  for (int k = 1; k < order; ++k) {
    for (const FieldElement& c : {p, -p})
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    p *= g;
  }
  return out;
}

bool maps_onto(const AlgebraPresentation& op, const GradedSpan& target, const std::vector<int>& perm,
               const std::vector<FieldElement>& scale) {
  for (const auto& r : op.relations)
    if (!target.contains(monomial_image(r, op.ring, perm, scale))) return false;
  return true;
}

}  // namespace

bool opposite_iso_by_negating_x1(const AlgebraPresentation& D) {
  const int n = D.generator_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<FieldElement> scale(n, FieldElement(D.field(), 1L));
  scale[letter_or_rank(D.alphabet(), "x1", n - 1)] = FieldElement(D.field(), -1L);
  return maps_onto(opposite(D), GradedSpan(D), perm, scale);
}

std::optional<OppositeIso> find_opposite_isomorphism(const AlgebraPresentation& D) {
  const int n = D.generator_count();
  const FieldPtr& f = D.field();
  const AlgebraPresentation op = opposite(D);
  const GradedSpan target(D);
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  {
    std::vector<FieldElement> scale(n, FieldElement(f, 1L));
    scale[letter_or_rank(D.alphabet(), "x1", n - 1)] = FieldElement(f, -1L);
    if (maps_onto(op, target, id, scale)) {
      auto L = LinearChange::monomial(id, scale);
      return OppositeIso{L, L.describe(D.alphabet())};
    }
  }
  // Permutations that keep {x1, x2} and the other generators as blocks.
  const int x1 = letter_or_rank(D.alphabet(), "x1", n - 1);
  const int x2 = letter_or_rank(D.alphabet(), "x2", n - 2);
  std::vector<int> low{x1, x2}, high;
  for (int i = 0; i < n; ++i)
    if (i != x1 && i != x2) high.push_back(i);
  std::vector<std::vector<int>> perms;
  std::vector<int> lp = low;
  std::sort(lp.begin(), lp.end());
  do {
    std::vector<int> hp = high;
    std::sort(hp.begin(), hp.end());
    do {
      std::vector<int> perm(n);
      for (std::size_t i = 0; i < low.size(); ++i) perm[low[i]] = lp[i];
      for (std::size_t i = 0; i < high.size(); ++i) perm[high[i]] = hp[i];
      perms.push_back(perm);
    } while (std::next_permutation(hp.begin(), hp.end()));
  } while (std::next_permutation(lp.begin(), lp.end()));

  const auto units = small_units(f);
  std::vector<FieldElement> scale(n, FieldElement(f, 1L));
  std::vector<int> idx(n, 0);
  for (const auto& perm : perms) {
    // scale[x1] stays 1: a common factor on all generators preserves every span.
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      for (int i = 0; i < n; ++i) scale[i] = i == x1 ? FieldElement(f, 1L) : units[idx[i]];
      if (maps_onto(op, target, perm, scale)) {
        auto L = LinearChange::monomial(perm, scale);
        return OppositeIso{L, L.describe(D.alphabet())};
      }
      int k = 0;
      for (; k < n; ++k) {
        if (k == x1) continue;
        if (++idx[k] < static_cast<int>(units.size())) break;
        idx[k] = 0;
      }
      if (k == n) break;
    }
  }
  return std::nullopt;
}

A04Conditions a04_generic_check(const A04Coefficients& a) {
  A04Conditions r;
  const FieldPtr& f = a.a1.field();
  r.k1 = -(a.a4 * a.a15) - a.a1 * a.a25;
  r.k2 = a.a4 * a.a21 + a.a5 * a.a11;
  r.k3 = a.a5 - a.a21 * a.a25;
  r.k4 = a.a4 + a.a11 * a.a25;
  r.k5 = a.a11 * a.a15 - a.a1;
  r.rank_ok = !(r.k1 * r.k4 - r.k2 * r.k3).is_zero() || !(r.k1 * r.k5 + r.k2 * r.k4).is_zero() ||
              !(r.k3 * r.k5 + r.k4 * r.k4).is_zero();

  // Unknowns ordered (s1, s2, s3).
  DenseMatrix cons{{-(a.a15 * r.k4) + a.a25 * r.k5, r.k3, -r.k4}, {a.a11 * r.k3 + a.a21 * r.k4, r.k4, r.k5}};
  const auto basis = dense_nullspace(cons, f);
  r.solution_dimension = static_cast<int>(basis.size());
  auto build = [&](const FieldElement& s1, const FieldElement& s2, const FieldElement& s3) {
    return DenseMatrix{{s1, s2, s3},
                       {s2, -(a.a11 * s3 + a.a21 * s2 + a.a1 * s1), -(a.a4 * s1)},
                       {s3, -(a.a4 * s1), -(a.a15 * s3 + a.a25 * s2 + a.a5 * s1)}};
  };
  // Small integer combinations of the solution basis, first nonsingular one wins.
  const int m = r.solution_dimension;
  static const int kVals[] = {0, 1, -1, 2, -2};
  std::vector<int> coef(m, 0);
  bool found = false;
  while (m > 0 && !found) {
    bool nonzero = false;
    std::vector<FieldElement> s(3, FieldElement(f));
    for (int i = 0; i < m; ++i) {
      if (coef[i]) nonzero = true;
      for (int j = 0; j < 3; ++j) s[j] += FieldElement(f, static_cast<long>(kVals[coef[i]])) * basis[i][j];
    }
    if (nonzero) {
      DenseMatrix S = build(s[0], s[1], s[2]);
      FieldElement d = determinant(S);
      if (r.S_A.empty() || !d.is_zero()) {
        r.s1 = s[0];
        r.s2 = s[1];
        r.s3 = s[2];
        r.S_A = S;
        r.det = d;
      }
      if (!d.is_zero()) found = true;
    }
    int k = 0;
    for (; k < m; ++k) {
      if (++coef[k] < 5) break;
      coef[k] = 0;
    }
    if (k == m) break;
  }
  r.det_ok = found;
  r.verdict = r.rank_ok && r.det_ok;
  if (!r.rank_ok)
    r.failing = "rank condition: k1k4-k2k3, k1k5+k2k4 and k3k5+k4^2 all vanish";
  else if (!r.det_ok)
    r.failing = "no nonsingular S_A among the solutions";
  return r;
}

AlgebraPresentation a04_presentation(const A04Coefficients& a) {
  auto ring = make_ring({"x3", "x2", "x1"}, a.a1.field());
  ParameterMap p{{"a1", a.a1}, {"a4", a.a4}, {"a5", a.a5}, {"a11", a.a11},
                 {"a15", a.a15}, {"a21", a.a21}, {"a25", a.a25}};
  AlgebraPresentation P{ring, {}, "A04"};
  for (const char* s : {"x3^2 - a5*x2^2 - a4*x2*x1 - a4*x1*x2 - a1*x1^2",
                        "x3*x1 - a25*x2^2 + x1*x3 - a21*x1^2",
                        "x3*x2 + x2*x3 - a15*x2^2 - a11*x1^2",
                        "x2^2*x1 - x1*x2^2", "x2*x1^2 - x1^2*x2"})
    P.relations.push_back(parse_ncpoly(s, ring, p));
  return P;
}

}  // namespace ncalg
