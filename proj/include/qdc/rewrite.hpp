#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdc/ncalg.hpp"

namespace qdc {

// Time budget exhausted mid-computation; callers report the unit as skipped.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Oriented rewrite rule: lhs word -> rhs polynomial, every rhs word strictly
// smaller than lhs in the graded-lexicographic order.
struct Rule {
  Word lhs;
  Polynomial rhs;
  std::string source;  // provenance tag, e.g. "eq-ss3"
};

class RuleSet {
 public:
  explicit RuleSet(int n) : n_(n) {}

  int n() const { return n_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  std::size_t max_lhs_len() const { return max_lhs_len_; }

  // Validates order decrease and lhs uniqueness.
  void add(Rule r);

  // Rule whose lhs equals w[pos, pos+len), or nullptr.
  const Rule* match(const Word& w, std::size_t pos, std::size_t len) const;

 private:
  int n_;
  std::vector<Rule> rules_;
  std::unordered_map<GenId, std::size_t> single_;           // length-1 lhs
  std::unordered_map<std::uint32_t, std::size_t> pairs_;    // length-2 lhs
  std::unordered_map<Word, std::size_t, WordHash> longer_;  // completion rules
  std::size_t max_lhs_len_ = 0;
};

enum class Strategy { leftmost, rightmost, seeded };

struct ReduceOptions {
  std::uint64_t step_cap = 1'000'000;
  Strategy strategy = Strategy::leftmost;
  std::uint64_t seed = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Exhaustive rewriting to the unique normal form (unique when the rule set
// is confluent; the strategy option exists to test exactly that). Throws
// ReduceLimitError past step_cap and BudgetExceeded past the deadline.
Polynomial reduce(const Polynomial& p, const RuleSet& rules, const ReduceOptions& opt = {});

struct OrientResult {
  std::vector<Rule> rules;
  std::vector<Word> good_words;  // irreducible degree-2 words of the span
};

// Gaussian elimination over Q(p, x) on the span of the relation components,
// pivoting on the order-largest word of each reduced row. Throws OrientError
// when a nonzero row has no word to isolate (pure-scalar contradiction).
OrientResult orient_relations(const std::vector<Polynomial>& relations, int n,
                              const std::string& source);

struct CriticalPair {
  Word overlap;
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  Polynomial difference;  // nonzero normal form separating the two reductions
};

// All overlap/inclusion ambiguities up to max_degree whose two one-step
// reductions do not join; empty result certifies local confluence, and with
// the degree-graded order that is confluence on the bounded degrees.
std::vector<CriticalPair> overlap_check(const RuleSet& rules, int max_degree,
                                        const ReduceOptions& opt = {});

struct CompletionResult {
  RuleSet rules;
  bool truncated = false;
  int added = 0;
};

// Bounded Knuth-Bendix-style completion: orients unresolved critical pairs
// into new rules until everything joins or a bound trips.
CompletionResult complete_bounded(const RuleSet& rules, int max_degree, int max_rules,
                                  const ReduceOptions& opt = {});

}  // namespace qdc
