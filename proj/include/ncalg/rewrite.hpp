#pragma once

// Degree-truncated Diamond Lemma machinery for homogeneous relations:
// normal forms, overlap completion, normal-word bases and Hilbert functions.

#include <string>
#include <unordered_map>
#include <vector>

#include "ncalg/ncpoly.hpp"

namespace ncalg {

/// The monic relation lead - tail, oriented as lead -> tail.
struct RewriteRule {
  Word lead;
  NcPoly tail;  // every word strictly smaller than lead, same degree
  int degree = 0;

  NcPoly relation() const;
};

struct AmbiguityReport {
  Word overlap_word;
  NcPoly residual;  // normal form of the S-polynomial before new rules of its degree were added
  bool resolved = false;
};

struct HilbertFunction {
  std::vector<long> dims;  // dims[n] for n = 0..N

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

struct CompletionResult;

class RewriteSystem {
 public:
  explicit RewriteSystem(RingPtr ring) : ring_(std::move(ring)) {}
  /// Inter-reduced system from arbitrary homogeneous relations, not completed.
  static RewriteSystem from_relations(const RingPtr& ring, const std::vector<NcPoly>& relations);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  /// Degree through which the system is known confluent; -1 before completion.
  int completed_through() const noexcept { return completed_through_; }

  NcPoly normal_form(const NcPoly& f) const;
  bool is_reducible(const Word& w) const { return find_match(w, 0).first >= 0; }
  /// Index of the rule whose lead equals `w`, or -1.
  int rule_with_lead(const Word& w) const;

 private:
  friend struct Completion;
  /// (rule index, position) of the leftmost lead occurrence at or after `from`.
  std::pair<int, int> find_match(const Word& w, int from) const;
  /// True when some lead is a suffix of w.
  bool has_lead_suffix(const Word& w) const;
  void add_rule(RewriteRule r);
  friend std::vector<Word> enumerate_basis(const RewriteSystem&, int);
  friend HilbertFunction hilbert_function(const RewriteSystem&, int);
  friend CompletionResult complete(const RewriteSystem&, int);

  RingPtr ring_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<std::string, int> by_lead_;
  std::vector<int> lead_lengths_;  // distinct, ascending
  int completed_through_ = -1;
};

struct CompletionResult {
  RewriteSystem system;
  std::vector<AmbiguityReport> ambiguities;
  std::vector<RewriteRule> new_rules;  // rules created by unresolved overlaps
};

/// Completes `sys` on all words of degree <= bound, degree by degree.
CompletionResult complete(const RewriteSystem& sys, int bound);
/// Convenience: from_relations followed by complete.
CompletionResult complete(const RingPtr& ring, const std::vector<NcPoly>& relations, int bound);

NcPoly normal_form(const NcPoly& f, const RewriteSystem& sys);
/// Irreducible words of exactly `degree`, ascending. Throws NotCompletedThatFar.
std::vector<Word> enumerate_basis(const RewriteSystem& sys, int degree);
/// Counts of irreducible words in degrees 0..N. Throws NotCompletedThatFar.
HilbertFunction hilbert_function(const RewriteSystem& sys, int N);

/// dim of the degree-n piece of k<X>/(relations), computed as
/// (#words) - rank span{u r v} with no rewriting. Independent oracle.
long brute_force_dimension(const RingPtr& ring, const std::vector<NcPoly>& relations, int n);

/// "degree,dim" lines.
std::string hilbert_csv(const HilbertFunction& h);

}  // namespace ncalg
