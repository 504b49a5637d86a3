#include <doctest.h>

#include <random>

#include "qdc/errors.hpp"
#include "qdc/presentation.hpp"
#include "qdc/rewrite.hpp"

using namespace qdc;

namespace {

Polynomial gen(Kind k, int i, int j, int n) { return Polynomial::generator(Gen{k, i, j}, n); }

Polynomial random_word_poly(std::mt19937_64& rng, int n, const std::vector<Kind>& kinds,
                            int max_len = 4) {
  std::uniform_int_distribution<int> nterms(1, 5), len(0, max_len), idx(1, n),
      kind(0, static_cast<int>(kinds.size()) - 1), coeff(-7, 7);
  Polynomial p(n);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i)
      w.push_back(gen_id(Gen{kinds[static_cast<std::size_t>(kind(rng))], idx(rng), idx(rng)}, n));
    int c = coeff(rng);
    if (c == 0) c = 3;
    p = p + Polynomial::from_word(w, Scalar::integer(c, n));
  }
  return p;
}

// Copy of a rule set with one rhs coefficient multiplied by q.
RuleSet broken_copy(const RuleSet& rules, int n) {
  RuleSet out(n);
  bool broken = false;
  for (const Rule& r : rules.rules()) {
    Rule c = r;
    if (!broken && !c.rhs.is_zero()) {
      c.rhs = Scalar::q(n) * c.rhs;
      broken = true;
    }
    out.add(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("empty relation list orients to an empty rule set") {
  OrientResult r = orient_relations({}, 2, "none");
  CHECK(r.rules.empty());
  CHECK(r.good_words.empty());
}

TEST_CASE("frt_T(2) orients to 6 rules with decreasing T-pair lhs") {
  Presentation pres = make_presentation(PresName::frt_T, 2);
  CHECK(pres.rules.size() == 6);
  for (const Rule& r : pres.rules.rules()) {
    REQUIRE(r.lhs.size() == 2);
    Gen a = gen_from_id(r.lhs[0], 2), b = gen_from_id(r.lhs[1], 2);
    CHECK(a.kind == Kind::T);
    CHECK(b.kind == Kind::T);
    CHECK(r.lhs[0] > r.lhs[1]);  // order-largest words are pivots
    CHECK(r.source == "eq-zum-TT");
  }
}

TEST_CASE("inner-derivation pairing produces rules with degree-0 tails") {
  Presentation pres = make_presentation(PresName::swz, 2);
  int tails = 0;
  for (const Rule& r : pres.rules.rules()) {
    if (r.source != "eq-861-ImOm") continue;
    Gen a = gen_from_id(r.lhs[0], 2), b = gen_from_id(r.lhs[1], 2);
    CHECK(a.kind == Kind::Im);
    CHECK(b.kind == Kind::Om);
    for (const auto& [w, c] : r.rhs.terms())
      if (w.empty()) ++tails;
  }
  CHECK(tails > 0);
}

TEST_CASE("a pure-scalar relation is unorientable") {
  std::vector<Polynomial> rels;
  rels.push_back(Polynomial::scalar(Scalar::one(2)));
  CHECK_THROWS_AS(orient_relations(rels, 2, "bogus"), OrientError);
}

TEST_CASE("defining relations reduce to zero") {
  for (PresName p : {PresName::frt_T, PresName::swz, PresName::lbasis, PresName::fp}) {
    Presentation pres = make_presentation(p, 2);
    for (const auto& fam : pres.families)
      for (const auto& comp : fam.components)
        CHECK(reduce(comp, pres.rules).is_zero());
  }
}

TEST_CASE("frt_T(2): reduce(T11 T22 - T22 T11) = lam T12 T21") {
  int n = 2;
  Presentation pres = make_presentation(PresName::frt_T, n);
  Polynomial lhs = gen(Kind::T, 1, 1, n) * gen(Kind::T, 2, 2, n) -
                   gen(Kind::T, 2, 2, n) * gen(Kind::T, 1, 1, n);
  Polynomial expect =
      Scalar::lambda(n) * (gen(Kind::T, 1, 2, n) * gen(Kind::T, 2, 1, n));
  CHECK(reduce(lhs, pres.rules) == expect);
}

TEST_CASE("reduce of xi_x squared is zero in swz(2)") {
  Presentation pres = make_presentation(PresName::swz, 2);
  Polynomial xi = xi_x(2);
  CHECK(reduce(xi * xi, pres.rules).is_zero());
}

TEST_CASE("reduce is idempotent and strategy independent on a confluent set") {
  std::mt19937_64 rng(2718);
  Presentation pres = make_presentation(PresName::lbasis, 2);
  std::vector<Kind> kinds = {Kind::T, Kind::L, Kind::OmL, Kind::ImL};
  ReduceOptions left, right, seeded;
  right.strategy = Strategy::rightmost;
  seeded.strategy = Strategy::seeded;
  for (int it = 0; it < 200; ++it) {
    seeded.seed = static_cast<std::uint64_t>(it) * 7919u + 13u;
    Polynomial p = random_word_poly(rng, 2, kinds);
    Polynomial nf = reduce(p, pres.rules, left);
    CHECK(reduce(nf, pres.rules, left) == nf);
    CHECK(reduce(p, pres.rules, right) == nf);
    CHECK(reduce(p, pres.rules, seeded) == nf);
  }
}

TEST_CASE("step cap trips as a diagnostic") {
  Presentation pres = make_presentation(PresName::swz, 2);
  Polynomial xi = xi_x(2);
  ReduceOptions opt;
  opt.step_cap = 3;
  CHECK_THROWS_AS(reduce(xi * xi, pres.rules, opt), ReduceLimitError);
}

TEST_CASE("compiled rule sets are inter-reduced: every rhs is a normal form") {
  for (PresName p : {PresName::frt_T, PresName::swz, PresName::lbasis, PresName::fp}) {
    Presentation pres = make_presentation(p, 2);
    for (const Rule& r : pres.rules.rules()) CHECK(reduce(r.rhs, pres.rules) == r.rhs);
  }
}

TEST_CASE("overlap check: shipped rule sets are confluent at degree 3") {
  for (PresName p : {PresName::frt_T, PresName::swz, PresName::lbasis, PresName::fp}) {
    Presentation pres = make_presentation(p, 2);
    CHECK(overlap_check(pres.rules, 3).empty());
  }
}

TEST_CASE("overlap check: a broken coefficient yields unresolved pairs") {
  Presentation pres = make_presentation(PresName::frt_T, 2);
  RuleSet broken = broken_copy(pres.rules, 2);
  CHECK_FALSE(overlap_check(broken, 3).empty());
}

TEST_CASE("bounded completion leaves a confluent set unchanged") {
  Presentation pres = make_presentation(PresName::frt_T, 2);
  CompletionResult res = complete_bounded(pres.rules, 3, 100);
  CHECK(res.added == 0);
  CHECK_FALSE(res.truncated);
  CHECK(res.rules.size() == pres.rules.size());
}

TEST_CASE("bounded completion grows a broken rule set") {
  Presentation pres = make_presentation(PresName::frt_T, 2);
  RuleSet broken = broken_copy(pres.rules, 2);
  CompletionResult res = complete_bounded(broken, 3, 50);
  CHECK(res.added >= 1);
}

TEST_CASE("completion with max_rules=0 reports truncation") {
  Presentation pres = make_presentation(PresName::frt_T, 2);
  RuleSet broken = broken_copy(pres.rules, 2);
  CompletionResult res = complete_bounded(broken, 3, 0);
  CHECK(res.truncated);
  CHECK(res.added == 0);
  CHECK(res.rules.size() == broken.size());
}

TEST_CASE("random ideal members reduce to zero (completeness on confluent sets)") {
  std::mt19937_64 rng(8191);
  for (PresName name : {PresName::swz, PresName::lbasis}) {
    Presentation pres = make_presentation(name, 2);
    std::vector<Kind> kinds =
        name == PresName::swz ? std::vector<Kind>{Kind::T, Kind::L, Kind::Om, Kind::Im}
                              : std::vector<Kind>{Kind::T, Kind::L, Kind::OmL, Kind::ImL};
    std::vector<const Polynomial*> rels;
    for (const auto& fam : pres.families)
      for (const auto& comp : fam.components) rels.push_back(&comp);
    std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
    for (int it = 0; it < 25; ++it) {
      // random two-sided multiple of a defining relation: always in the ideal
      Polynomial left = random_word_poly(rng, 2, kinds, 2);
      Polynomial right = random_word_poly(rng, 2, kinds, 2);
      Polynomial member = left * *rels[pick(rng)] * right;
      ReduceOptions opt;
      opt.step_cap = 10'000'000;
      CHECK(reduce(member, pres.rules, opt).is_zero());
    }
  }
}

TEST_CASE("bounded completion closes the fp(3) rule set at degree 3") {
  // fp(3) is the one shipped presentation whose quadratic rules are not
  // confluent under the global order; completion finds the missing cubic
  // companions and resolves every degree-3 ambiguity.
  Presentation pres = make_presentation(PresName::fp, 3);
  CHECK_FALSE(overlap_check(pres.rules, 3).empty());
  ReduceOptions opt;
  opt.step_cap = 50'000'000;
  CompletionResult res = complete_bounded(pres.rules, 3, 400, opt);
  CHECK_FALSE(res.truncated);
  CHECK(res.added > 0);
  CHECK(res.added <= 100);
  CHECK(overlap_check(res.rules, 3, opt).empty());
}

TEST_CASE("duplicate lhs and non-decreasing rules are rejected") {
  int n = 2;
  RuleSet rules(n);
  Word lhs = {gen_id(Gen{Kind::T, 2, 2}, n), gen_id(Gen{Kind::T, 1, 1}, n)};
  rules.add(Rule{lhs, Polynomial::zero(n), "t"});
  CHECK_THROWS_AS(rules.add(Rule{lhs, Polynomial::zero(n), "t"}), OrientError);
  Word big = {gen_id(Gen{Kind::L, 2, 2}, n), gen_id(Gen{Kind::L, 2, 2}, n)};
  Polynomial bad_rhs = Polynomial::from_word(
      Word{gen_id(Gen{Kind::L, 2, 2}, n), gen_id(Gen{Kind::L, 2, 2}, n)}, Scalar::one(n));
  CHECK_THROWS_AS(rules.add(Rule{big, bad_rhs, "t"}), OrientError);
}
