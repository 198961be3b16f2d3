#include "ncalg/comm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "ncalg/errors.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg {

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxCommVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kMaxCommVars; ++i) m.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kMaxCommVars; ++i) m.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxCommVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.e[i] = static_cast<std::int16_t>(power);
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kMaxCommVars; ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

bool grevlex_greater(const Monomial& a, const Monomial& b, int nvars) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = nvars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

CommPoly::CommPoly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxCommVars) throw Error(ErrorCode::InvalidArgument, "too many commutative variables");
}

CommPoly CommPoly::constant(FieldPtr field, int nvars, const FieldElement& c) {
  CommPoly p(std::move(field), nvars);
  p.add_term(Monomial{}, c);
  return p;
}

CommPoly CommPoly::variable(FieldPtr field, int nvars, int i) {
  CommPoly p(field, nvars);
  p.add_term(Monomial::var(i), FieldElement(field, 1L));
  return p;
}

int CommPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void CommPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& x) { return grevlex_greater(t.first, x, nvars_); });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term(m, c));
  }
}

namespace {

// a + s * (m * b), merged in order.
std::vector<CommPoly::Term> merge_scaled(const std::vector<CommPoly::Term>& a, const std::vector<CommPoly::Term>& b,
                                         const Monomial& m, const FieldElement& s, int nvars) {
  std::vector<CommPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial bm = b[j].first * m;
    if (i == a.size() || grevlex_greater(bm, a[i].first, nvars)) {
      out.emplace_back(bm, b[j].second * s);
      ++j;
    } else if (a[i].first == bm) {
      FieldElement c = a[i].second + b[j].second * s;
      if (!c.is_zero()) out.emplace_back(bm, std::move(c));
      ++i;
      ++j;
    } else {
      out.push_back(a[i++]);
    }
  }
  return out;
}

}  // namespace

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  terms_ = merge_scaled(terms_, o.terms_, Monomial{}, FieldElement(field_, 1L), nvars_);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  terms_ = merge_scaled(terms_, o.terms_, Monomial{}, FieldElement(field_, -1L), nvars_);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out(a.field_, std::max(a.nvars_, b.nvars_));
  for (const auto& [m, c] : a.terms_) out.terms_ = merge_scaled(out.terms_, b.terms_, m, c, out.nvars_);
  return out;
}

CommPoly CommPoly::operator*(const FieldElement& c) const {
  CommPoly out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace_back(m, x * c);
  return out;
}

CommPoly CommPoly::times_term(const Monomial& m, const FieldElement& c) const {
  CommPoly out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [t, x] : terms_) out.terms_.emplace_back(t * m, x * c);
  return out;
}

CommPoly CommPoly::operator-() const { return *this * FieldElement(field_, -1L); }

CommPoly CommPoly::monic() const {
  if (is_zero()) return *this;
  return *this * terms_.front().second.inverse();
}

FieldElement CommPoly::evaluate(const std::vector<FieldElement>& point) const {
  FieldElement acc(field_);
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m.e[i]) t *= point.at(i).pow(m.e[i]);
    acc += t;
  }
  return acc;
}

CommPoly CommPoly::substitute(int i, const FieldElement& c) const {
  CommPoly out(field_, nvars_);
  for (const auto& [m, x] : terms_) {
    Monomial r = m;
    r.e[i] = 0;
    out.add_term(r, x * c.pow(m.e[i]));
  }
  return out;
}

CommPoly CommPoly::widened(int nvars) const {
  CommPoly out(field_, nvars);
  for (const auto& [m, x] : terms_) out.add_term(m, x);
  return out;
}

CommPoly CommPoly::derivative(int i) const {
  CommPoly out(field_, nvars_);
  for (const auto& [m, x] : terms_) {
    if (!m.e[i]) continue;
    Monomial r = m;
    r.e[i] = static_cast<std::int16_t>(r.e[i] - 1);
    out.add_term(r, x * FieldElement(field_, static_cast<long>(m.e[i])));
  }
  return out;
}

std::string CommPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mag;
    bool negative = false;
    if (c.needs_parens()) {
      mag = "(" + c.to_string() + ")";
    } else {
      mag = c.to_string();
      if (!mag.empty() && mag[0] == '-') {
        negative = true;
        mag = mag.substr(1);
      }
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty())
      os << mag;
    else
      os << (mag == "1" ? "" : mag + "*") << mono;
  }
  return os.str();
}

bool operator==(const CommPoly& a, const CommPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

CommPoly poly_determinant(const std::vector<std::vector<CommPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  if (n == 1) return m[0][0];
  const FieldPtr& f = m[0][0].field();
  const int nv = m[0][0].nvars();
  CommPoly acc(f, nv);
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<CommPoly>> minor;
    for (int i = 1; i < n; ++i) {
      minor.emplace_back();
      for (int k = 0; k < n; ++k)
        if (k != j) minor.back().push_back(m[i][k]);
    }
    CommPoly t = m[0][j] * poly_determinant(minor);
    if (j % 2)
      acc -= t;
    else
      acc += t;
  }
  return acc;
}

namespace {

int nvars_of(const CommIdeal& I) { return static_cast<int>(I.variables.size()); }

CommPoly full_reduce(CommPoly p, const std::vector<CommPoly>& G) {
  const int nv = p.nvars();
  std::vector<CommPoly::Term> rem;
  while (!p.is_zero()) {
    const Monomial lm = p.leading().first;
    const FieldElement lc = p.leading().second;
    const CommPoly* div = nullptr;
    for (const auto& g : G)
      if (g.leading().first.divides(lm)) {
        div = &g;
        break;
      }
    if (div) {
      p -= div->times_term(lm / div->leading().first, lc / div->leading().second);
    } else {
      rem.emplace_back(lm, lc);
      p.drop_leading();
    }
  }
  CommPoly out(p.field(), nv);
  for (auto& [m, c] : rem) out.add_term(m, c);
  return out;
}

}  // namespace

CommPoly reduce(const CommPoly& f, const CommIdeal& I) {
  if (!I.has_basis) throw Error(ErrorCode::InvalidArgument, "ideal has no Groebner basis yet");
  return full_reduce(f, I.basis);
}

CommIdeal buchberger(CommIdeal I) {
  const int nv = nvars_of(I);
  std::vector<CommPoly> G;
  for (const auto& g : I.generators) {
    CommPoly r = G.empty() ? g : full_reduce(g, G);
    if (!r.is_zero()) G.push_back(r.monic());
  }
  std::set<std::pair<int, int>> pending;
  for (int j = 0; j < static_cast<int>(G.size()); ++j)
    for (int i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const std::pair<int, int>& p) {
    return Monomial::lcm(G[p.first].leading().first, G[p.second].leading().first);
  };
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (grevlex_greater(best_lcm, l, nv)) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    const Monomial& li = G[i].leading().first;
    const Monomial& lj = G[j].leading().first;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k) {
      if (k == i || k == j || !G[k].leading().first.divides(best_lcm)) continue;
      if (!pending.count({std::min(i, k), std::max(i, k)}) && !pending.count({std::min(j, k), std::max(j, k)}))
        chain = true;
    }
    if (chain) continue;
    const FieldElement one(G[i].field(), 1L);
    CommPoly s = G[i].times_term(best_lcm / li, one) - G[j].times_term(best_lcm / lj, one);
    CommPoly r = full_reduce(s, G);
    if (r.is_zero()) continue;
    G.push_back(r.monic());
    const int n = static_cast<int>(G.size()) - 1;
    for (int k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimal, then reduced.
  std::vector<CommPoly> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < G.size() && !drop; ++b) {
      if (a == b) continue;
      const Monomial& la = G[a].leading().first;
      const Monomial& lb = G[b].leading().first;
      if (lb.divides(la) && (!(la == lb) || b < a)) drop = true;
    }
    if (!drop) minimal.push_back(G[a]);
  }
  std::vector<CommPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<CommPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (a != b) others.push_back(minimal[b]);
    reduced.push_back(full_reduce(minimal[a], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const CommPoly& a, const CommPoly& b) {
    return grevlex_greater(b.leading().first, a.leading().first, nv);
  });
  I.basis = std::move(reduced);
  I.has_basis = true;
  return I;
}

namespace {

bool is_unit_ideal(const CommIdeal& I) {
  return std::any_of(I.basis.begin(), I.basis.end(), [](const CommPoly& g) { return g.leading().first.degree() == 0; });
}

// Pure-power bounds per variable, or nullopt when some variable has none.
std::optional<std::vector<int>> power_bounds(const CommIdeal& I) {
  const int nv = nvars_of(I);
  std::vector<int> bound(nv, -1);
  for (const auto& g : I.basis) {
    const Monomial& m = g.leading().first;
    int support = -1, count = 0;
    for (int i = 0; i < nv; ++i)
      if (m.e[i]) {
        support = i;
        ++count;
      }
    if (count == 1 && (bound[support] < 0 || m.e[support] < bound[support])) bound[support] = m.e[support];
  }
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return std::nullopt;
  return bound;
}

}  // namespace

std::vector<Monomial> standard_monomials(const CommIdeal& I) {
  if (!I.has_basis) throw Error(ErrorCode::InvalidArgument, "ideal has no Groebner basis yet");
  if (is_unit_ideal(I)) return {};
  const auto bounds = power_bounds(I);
  if (!bounds) throw Error(ErrorCode::InvalidArgument, "ideal is not zero-dimensional");
  const int nv = nvars_of(I);
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int)> walk = [&](int i) {
    if (i == nv) {
      for (const auto& g : I.basis)
        if (g.leading().first.divides(m)) return;
      out.push_back(m);
      return;
    }
    for (int k = 0; k < (*bounds)[i]; ++k) {
      m.e[i] = static_cast<std::int16_t>(k);
      walk(i + 1);
    }
    m.e[i] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a, nv); });
  return out;
}

std::optional<long> quotient_dimension(const CommIdeal& I) {
  if (!I.has_basis) return quotient_dimension(buchberger(I));
  if (is_unit_ideal(I)) return 0;
  if (!power_bounds(I)) return std::nullopt;
  return static_cast<long>(standard_monomials(I).size());
}

int ideal_dimension(const CommIdeal& I) {
  if (!I.has_basis) return ideal_dimension(buchberger(I));
  if (is_unit_ideal(I)) return -1;
  const int nv = nvars_of(I);
  int best = 0;
  for (int mask = 0; mask < (1 << nv); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : I.basis) {
      const Monomial& m = g.leading().first;
      bool inside = true;
      for (int i = 0; i < nv; ++i)
        if (m.e[i] && !(mask & (1 << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

int uni_degree(const UniPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[i].is_zero()) return i;
  return -1;
}

namespace {

void trim(UniPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  const int db = uni_degree(b);
  const FieldElement inv = b[db].inverse();
  trim(a);
  while (uni_degree(a) >= db) {
    const int da = uni_degree(a);
    const FieldElement q = a[da] * inv;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const FieldElement inv = a.back().inverse();
    for (auto& x : a) x *= inv;
  }
  return a;
}

UniPoly uni_derivative(const UniPoly& a) {
  UniPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * FieldElement(a[i].field(), static_cast<long>(i)));
  return d;
}

UniPoly characteristic_polynomial(std::vector<std::vector<FieldElement>> H, const FieldPtr& field) {
  const int n = static_cast<int>(H.size());
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (!H[i][j].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(H[piv], H[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(H[r][piv], H[r][j + 1]);
    }
    const FieldElement inv = H[j + 1][j].inverse();
    for (int i = j + 2; i < n; ++i) {
      if (H[i][j].is_zero()) continue;
      const FieldElement f = H[i][j] * inv;
      for (int c = 0; c < n; ++c) H[i][c] -= f * H[j + 1][c];
      for (int r = 0; r < n; ++r) H[r][j + 1] += f * H[r][i];
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod h_{m,m-1}) p_{k-i-1}
  std::vector<UniPoly> p(n + 1);
  p[0] = {FieldElement(field, 1L)};
  for (int k = 1; k <= n; ++k) {
    UniPoly q(k + 1, FieldElement(field));
    for (int d = 0; d < static_cast<int>(p[k - 1].size()); ++d) {
      q[d + 1] += p[k - 1][d];
      q[d] -= H[k - 1][k - 1] * p[k - 1][d];
    }
    FieldElement t(field, 1L);
    for (int i = 1; i < k; ++i) {
      t *= H[k - i][k - i - 1];
      const FieldElement f = H[k - i - 1][k - 1] * t;
      if (f.is_zero()) continue;
      for (int d = 0; d < static_cast<int>(p[k - i - 1].size()); ++d) q[d] -= f * p[k - i - 1][d];
    }
    p[k] = std::move(q);
  }
  return p[n];
}

long distinct_points(const CommIdeal& I, const std::vector<int>& coordinate_vars) {
  if (!I.has_basis) return distinct_points(buchberger(I), coordinate_vars);
  const auto B = standard_monomials(I);
  const int n = static_cast<int>(B.size());
  if (n <= 1) return n;
  const FieldPtr field = I.basis.front().field();
  const int nv = nvars_of(I);
  auto index_of = [&](const Monomial& m) {
    for (int k = 0; k < n; ++k)
      if (B[k] == m) return k;
    throw Error(ErrorCode::InvalidArgument, "normal form left the staircase");
  };
  static const int kWeights[][4] = {{1, 3, 7, 13}, {1, -2, 5, -11}, {2, 1, -3, 17}};
  long best = 0;
  for (const auto& w : kWeights) {
    CommPoly ell(field, nv);
    for (std::size_t k = 0; k < coordinate_vars.size(); ++k)
      ell.add_term(Monomial::var(coordinate_vars[k]), FieldElement(field, static_cast<long>(w[k % 4])));
    std::vector<std::vector<FieldElement>> M(n, std::vector<FieldElement>(n, FieldElement(field)));
    for (int c = 0; c < n; ++c) {
      CommPoly img = full_reduce(ell.times_term(B[c], FieldElement(field, 1L)), I.basis);
      for (const auto& [m, x] : img.terms()) M[index_of(m)][c] = x;
    }
    UniPoly chi = characteristic_polynomial(M, field);
    UniPoly g = uni_gcd(chi, uni_derivative(chi));
    best = std::max<long>(best, uni_degree(chi) - uni_degree(g));
    if (best == n) break;
  }
  return best;
}

}  // namespace ncalg
