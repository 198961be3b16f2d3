#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>

#include "ncalg/linalg.hpp"

namespace ncalg {

namespace {

constexpr int kUnbounded = INT_MAX / 2;

using TermMap = std::map<Word, FieldElement, std::greater<Word>>;

void accumulate(TermMap& m, Word w, const FieldElement& c) {
  auto [it, inserted] = m.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// Sparse coordinates of homogeneous polynomials over a shared descending word index.
class WordIndex {
 public:
  void collect(const NcPoly& p) {
    for (const auto& [w, c] : p.terms()) words_.insert(w);
  }
  void freeze() {
    int i = 0;
    for (const auto& w : words_) col_[w] = i++;
    by_col_.assign(words_.begin(), words_.end());
  }
  SparseVec vec(const NcPoly& p) const {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) v.emplace_back(col_.at(w), c);
    return v;  // terms are descending, so columns ascend
  }
  NcPoly poly(const RingPtr& ring, const SparseVec& v) const {
    NcPoly p(ring);
    for (const auto& [c, x] : v) p.add_term(by_col_[c], x);
    return p;
  }

 private:
  std::set<Word, std::greater<Word>> words_;
  std::map<Word, int, std::greater<Word>> col_;
  std::vector<Word> by_col_;
};

RewriteRule rule_from(const NcPoly& monic_relation) {
  auto [lead, c] = monic_relation.leading_term();
  NcPoly tail = -(monic_relation - NcPoly(monic_relation.ring(), lead, c));
  return RewriteRule{lead, std::move(tail), lead.degree()};
}

}  // namespace

NcPoly RewriteRule::relation() const {
  NcPoly r(tail.ring(), lead, FieldElement(tail.field(), 1L));
  return r - tail;
}

void RewriteSystem::add_rule(RewriteRule r) {
  by_lead_[r.lead.letters()] = static_cast<int>(rules_.size());
  const int len = r.lead.degree();
  if (std::find(lead_lengths_.begin(), lead_lengths_.end(), len) == lead_lengths_.end()) {
    lead_lengths_.push_back(len);
    std::sort(lead_lengths_.begin(), lead_lengths_.end());
  }
  rules_.push_back(std::move(r));
}

int RewriteSystem::rule_with_lead(const Word& w) const {
  auto it = by_lead_.find(w.letters());
  return it == by_lead_.end() ? -1 : it->second;
}

std::pair<int, int> RewriteSystem::find_match(const Word& w, int from) const {
  const std::string& s = w.letters();
  const int n = static_cast<int>(s.size());
  for (int pos = from; pos < n; ++pos) {
    for (int len : lead_lengths_) {
      if (pos + len > n) break;
      auto it = by_lead_.find(s.substr(pos, len));
      if (it != by_lead_.end()) return {it->second, pos};
    }
  }
  return {-1, -1};
}

bool RewriteSystem::has_lead_suffix(const Word& w) const {
  const std::string& s = w.letters();
  for (int len : lead_lengths_) {
    if (len > static_cast<int>(s.size())) break;
    if (by_lead_.count(s.substr(s.size() - len))) return true;
  }
  return false;
}

NcPoly RewriteSystem::normal_form(const NcPoly& f) const {
  NcPoly out(ring_);
  TermMap todo(f.terms().begin(), f.terms().end());
  while (!todo.empty()) {
    auto node = todo.extract(todo.begin());
    const Word& w = node.key();
    const FieldElement& c = node.mapped();
    auto [ri, pos] = find_match(w, 0);
    if (ri < 0) {
      out.add_term(w, c);
      continue;
    }
    const RewriteRule& r = rules_[ri];
    const Word u = w.sub(0, pos);
    const Word v = w.sub(pos + r.lead.degree(), w.degree() - pos - r.lead.degree());
    for (const auto& [tw, tc] : r.tail.terms()) accumulate(todo, u * tw * v, c * tc);
  }
  return out;
}

NcPoly normal_form(const NcPoly& f, const RewriteSystem& sys) { return sys.normal_form(f); }

// Completion state machine; a friend of RewriteSystem.
struct Completion {
  // Adds the degree-d rules spanned by `inputs` (input relations) and
  // `spolys` (overlap S-polynomials) to `work`.
  static void absorb_degree(RewriteSystem& work, const std::vector<NcPoly>& inputs,
                            const std::vector<std::pair<Word, NcPoly>>& spolys,
                            std::vector<AmbiguityReport>* reports, std::vector<RewriteRule>* new_rules) {
    const RingPtr& ring = work.ring_;
    std::vector<NcPoly> in_red, sp_red;
    WordIndex index;
    for (const auto& p : inputs) {
      in_red.push_back(work.normal_form(p));
      index.collect(in_red.back());
    }
    for (const auto& [w, p] : spolys) {
      sp_red.push_back(work.normal_form(p));
      index.collect(sp_red.back());
    }
    index.freeze();

    EchelonBasis basis(ring->field);
    for (const auto& p : in_red) basis.add(index.vec(p));
    const std::vector<int> input_pivots = basis.pivots();
    for (std::size_t i = 0; i < sp_red.size(); ++i) {
      SparseVec residual = basis.reduce(index.vec(sp_red[i]));
      if (reports) {
        NcPoly res = index.poly(ring, residual);
        const bool ok = res.is_zero();
        reports->push_back(AmbiguityReport{spolys[i].first, std::move(res), ok});
      }
    }
    for (const auto& p : sp_red) basis.add(index.vec(p));
    basis.make_reduced();

    std::vector<RewriteRule> fresh;
    for (const auto& row : basis.rows()) {
      RewriteRule r = rule_from(index.poly(ring, row));
      const bool is_new =
          !std::binary_search(input_pivots.begin(), input_pivots.end(), row.front().first);
      if (is_new && new_rules) new_rules->push_back(r);
      fresh.push_back(std::move(r));
    }
    std::sort(fresh.begin(), fresh.end(), [](const RewriteRule& a, const RewriteRule& b) { return a.lead < b.lead; });
    for (auto& r : fresh) work.add_rule(std::move(r));
  }

  // All overlap S-polynomials of total degree d, sorted by overlap word.
  static std::vector<std::pair<Word, NcPoly>> overlaps(const RewriteSystem& sys, int d) {
    std::vector<std::pair<Word, NcPoly>> out;
    const auto& rules = sys.rules_;
    for (const auto& ri : rules) {
      const int a = ri.lead.degree();
      for (const auto& rj : rules) {
        const int b = rj.lead.degree();
        const int k = a + b - d;  // overlap length
        if (k < 1 || k >= a || k >= b) continue;
        if (ri.lead.letters().compare(a - k, k, rj.lead.letters(), 0, k) != 0) continue;
        const Word u = ri.lead.sub(0, a - k);
        const Word v = rj.lead.sub(k, b - k);
        NcPoly s = ri.tail.sandwich(Word(), v) - rj.tail.sandwich(u, Word());
        out.emplace_back(ri.lead * v, std::move(s));
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }
};

RewriteSystem RewriteSystem::from_relations(const RingPtr& ring, const std::vector<NcPoly>& relations) {
  std::map<int, std::vector<NcPoly>> by_degree;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.ring()->same_as(*ring)) throw Error(ErrorCode::MixedAlphabets, "relation over a different ring");
    if (!r.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "relation is not homogeneous: " + r.to_string());
    by_degree[r.degree()].push_back(r);
  }
  RewriteSystem sys(ring);
  for (const auto& [d, rels] : by_degree) Completion::absorb_degree(sys, rels, {}, nullptr, nullptr);
  sys.completed_through_ = by_degree.empty() ? kUnbounded : by_degree.begin()->first;
  return sys;
}

CompletionResult complete(const RewriteSystem& sys, int bound) {
  std::map<int, std::vector<NcPoly>> by_degree;
  for (const auto& r : sys.rules()) by_degree[r.degree].push_back(r.relation());
  CompletionResult res{RewriteSystem(sys.ring()), {}, {}};
  const int top = std::max(bound, by_degree.empty() ? 0 : by_degree.rbegin()->first);
  for (int d = 1; d <= top; ++d) {
    std::vector<std::pair<Word, NcPoly>> sp;
    if (d <= bound) sp = Completion::overlaps(res.system, d);
    auto it = by_degree.find(d);
    static const std::vector<NcPoly> none;
    const auto& inputs = it == by_degree.end() ? none : it->second;
    if (inputs.empty() && sp.empty()) continue;
    Completion::absorb_degree(res.system, inputs, sp, &res.ambiguities, &res.new_rules);
  }
  res.system.completed_through_ = res.system.rules().empty() ? kUnbounded : bound;
  return res;
}

CompletionResult complete(const RingPtr& ring, const std::vector<NcPoly>& relations, int bound) {
  return complete(RewriteSystem::from_relations(ring, relations), bound);
}

std::vector<Word> enumerate_basis(const RewriteSystem& sys, int degree) {
  if (degree > sys.completed_through())
    throw Error(ErrorCode::NotCompletedThatFar,
                "system completed through degree " + std::to_string(sys.completed_through()) +
                    ", asked for degree " + std::to_string(degree));
  const int g = sys.ring()->alphabet->size();
  std::vector<Word> cur{Word()};
  for (int n = 1; n <= degree; ++n) {
    std::vector<Word> next;
    for (const auto& w : cur)
      for (int l = 0; l < g; ++l) {
        Word x = w * Word({l});
        if (!sys.has_lead_suffix(x)) next.push_back(std::move(x));
      }
    cur = std::move(next);
  }
  return cur;  // extension by ascending letters keeps lexicographic order
}

HilbertFunction hilbert_function(const RewriteSystem& sys, int N) {
  if (N > sys.completed_through())
    throw Error(ErrorCode::NotCompletedThatFar,
                "system completed through degree " + std::to_string(sys.completed_through()) +
                    ", asked for degree " + std::to_string(N));
  const int g = sys.ring()->alphabet->size();
  HilbertFunction h;
  std::vector<Word> cur{Word()};
  h.dims.push_back(1);
  for (int n = 1; n <= N; ++n) {
    std::vector<Word> next;
    for (const auto& w : cur)
      for (int l = 0; l < g; ++l) {
        Word x = w * Word({l});
        if (!sys.has_lead_suffix(x)) next.push_back(std::move(x));
      }
    cur = std::move(next);
    h.dims.push_back(static_cast<long>(cur.size()));
  }
  return h;
}

long brute_force_dimension(const RingPtr& ring, const std::vector<NcPoly>& relations, int n) {
  const int g = ring->alphabet->size();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= g;
  auto code = [g](const Word& w) {
    long v = 0;
    for (int i = 0; i < w.degree(); ++i) v = v * g + w[i];
    return static_cast<int>(v);
  };
  EchelonBasis basis(ring->field);
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    const int e = r.degree();
    if (e > n) continue;
    for (int left = 0; left <= n - e; ++left) {
      const auto us = all_words(g, left);
      const auto vs = all_words(g, n - e - left);
      for (const auto& u : us)
        for (const auto& v : vs) {
          std::map<int, FieldElement> acc;
          for (const auto& [w, c] : r.terms()) acc.emplace(code(u * w * v), c);
          basis.add(SparseVec(acc.begin(), acc.end()));
        }
    }
  }
  return total - basis.rank();
}

std::string hilbert_csv(const HilbertFunction& h) {
  std::ostringstream os;
  for (std::size_t n = 0; n < h.dims.size(); ++n) os << n << "," << h.dims[n] << "\n";
  return os.str();
}

}  // namespace ncalg
