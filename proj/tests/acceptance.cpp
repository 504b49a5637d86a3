// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are asserted in wall-clock milliseconds.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qdc/battery.hpp"
#include "qdc/errors.hpp"
#include "qdc/report.hpp"
#include "qdc/rewrite.hpp"

using namespace qdc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void report(const std::string& id, bool ok, std::int64_t ms, const std::string& what) {
  std::printf("[%s] %-3s (%6lld ms)  %s\n", ok ? "PASS" : "FAIL", id.c_str(),
              static_cast<long long>(ms), what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool passed(const CheckResult& r) { return r.status == CheckStatus::pass; }

// A11 first part: the scalar-field property battery.
bool scalar_field_properties() {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> coeff(-9, 9), dp(0, 3), dx(0, 2), nt(1, 3), pt(2, 997);
  auto poly = [&] {
    std::vector<IntPoly::Term> t;
    int k = nt(rng);
    for (int i = 0; i < k; ++i) t.push_back({Monomial{dp(rng), dx(rng)}, mpz_class(coeff(rng))});
    return IntPoly::from_terms(std::move(t));
  };
  auto rand_scalar = [&](int n) {
    IntPoly num = poly(), den;
    do {
      den = poly();
    } while (den.is_zero());
    return Scalar::fraction(std::move(num), std::move(den), n);
  };
  auto eval_resampling = [&](const Scalar& s) {
    for (;;) {
      mpq_class p0(pt(rng), pt(rng)), x0(pt(rng), pt(rng));
      p0.canonicalize();
      x0.canonicalize();
      try {
        return eval_at(s, p0, x0);
      } catch (const EvalError&) {
      }
    }
  };
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + (i % 3);
    Scalar a = rand_scalar(n), b = rand_scalar(n), c = rand_scalar(n);
    Scalar assoc = (a + b) + c - (a + (b + c));
    Scalar distr = a * (b + c) - (a * b + a * c);
    Scalar massoc = (a * b) * c - (a * (b * c));
    if (!assoc.is_zero() || !distr.is_zero() || !massoc.is_zero()) return false;
    if (!a.is_zero() && !(a * a.inverse() == Scalar::one(n))) return false;
    if (eval_resampling(distr + massoc) != 0) return false;
  }
  // eval_at soundness: nonzero scalars evaluate nonzero under resampling
  for (int i = 0; i < 100; ++i) {
    Scalar s = rand_scalar(1 + (i % 3));
    if (s.is_zero()) continue;
    int tries = 0;
    while (eval_resampling(s) == 0 && tries < 64) ++tries;
    if (tries >= 64) return false;
  }
  return true;
}

}  // namespace

int main() {
  BatteryOptions opt;  // standard convention, permuted-strategy verification on

  // A1: YBE + Hecke for N in 1..4, under 5 s.
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 4; ++n) ok = ok && passed(run_check("ybe_hecke", n, opt));
    auto ms = ms_since(t0);
    report("A1", ok && ms < 5000, ms, "ybe_hecke passes for N in {1,2,3,4} in < 5 s");
  }

  // A2: zero unresolved degree-3 critical pairs, under 5 min.
  {
    auto t0 = Clock::now();
    bool ok = passed(run_check("pbw_overlaps:frt_T", 2, opt)) &&
              passed(run_check("pbw_overlaps:frt_T", 3, opt)) &&
              passed(run_check("pbw_overlaps:swz", 2, opt)) &&
              passed(run_check("pbw_overlaps:lbasis", 2, opt)) &&
              passed(run_check("pbw_overlaps:fp", 2, opt));
    auto ms = ms_since(t0);
    report("A2", ok && ms < 300000, ms,
           "no unresolved degree-3 pairs: frt_T(2,3), swz(2), lbasis(2), fp(2) in < 5 min");
  }

  // A3: fp embedding, all components at N=2; (s2')+(s2'') at N=3 in 15 min.
  {
    auto t0 = Clock::now();
    bool ok2 = passed(run_check("fp_embedding", 2, opt));
    BatteryOptions b3 = opt;
    b3.budget_ms = 900000;
    bool ok3 = passed(run_check("fp_embedding", 3, b3));
    auto ms = ms_since(t0);
    report("A3", ok2 && ok3 && ms < 900000, ms,
           "fp_embedding: all families at N=2; (s2')+(s2'') at N=3 within 15 min");
  }

  // A4: Omega_x relation and xi_x^2 = 0 at N=2 with symbolic x, under 2 min.
  {
    auto t0 = Clock::now();
    bool ok = passed(run_check("omega_x_relation", 2, opt)) &&
              passed(run_check("xi_nilpotent", 2, opt));
    auto ms = ms_since(t0);
    report("A4", ok && ms < 120000, ms, "omega_x_relation and xi_nilpotent at N=2 in < 2 min");
  }

  // A5: helper identities at N=2 and N=3.
  {
    auto t0 = Clock::now();
    bool ok = passed(run_check("helper_identities", 2, opt)) &&
              passed(run_check("helper_identities", 3, opt));
    auto ms = ms_since(t0);
    report("A5", ok, ms, "helper_identities at N=2 and N=3");
  }

  // A6: the W/Wbar relations at N=2.
  {
    auto t0 = Clock::now();
    bool ok = passed(run_check("w_relations", 2, opt)) &&
              passed(run_check("ww_relation", 2, opt)) &&
              passed(run_check("wwbar_identity", 2, opt));
    auto ms = ms_since(t0);
    report("A6", ok, ms, "w_relations, ww_relation, wwbar_identity at N=2");
  }

  // A7: det_q centrality at N=2,3; trace-killing at N=2,3,4.
  {
    auto t0 = Clock::now();
    bool ok = passed(run_check("detq_central", 2, opt)) &&
              passed(run_check("detq_central", 3, opt));
    for (int n = 2; n <= 4; ++n) ok = ok && passed(run_check("qtrace_traceless", n, opt));
    auto ms = ms_since(t0);
    report("A7", ok, ms, "detq_central at N=2,3 and qtrace_traceless at N=2,3,4");
  }

  // A8: the inverse-free basis-change derivation at N=2.
  {
    auto t0 = Clock::now();
    bool ok = passed(run_check("omegaL_basis_change", 2, opt));
    auto ms = ms_since(t0);
    report("A8", ok, ms, "omegaL_basis_change at N=2");
  }

  // A9: every canned mutation flips at least one check, with a witness.
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (Mutation m : {Mutation::kappa_q, Mutation::rhat_entry, Mutation::traceless_projector,
                       Mutation::ss4_constant, Mutation::qtrace_weights}) {
      BatteryOptions bo = opt;
      bo.mutation = m;
      bool flipped = false;
      for (const std::string& name :
           {std::string("ybe_hecke"), std::string("qtrace_traceless"),
            std::string("helper_identities"), std::string("fp_embedding")}) {
        CheckResult r = run_check(name, 2, bo);
        if (r.status == CheckStatus::fail && r.witness && !r.witness->is_zero()) {
          flipped = true;
          break;
        }
      }
      if (!flipped) {
        std::printf("       mutation %s flipped nothing\n", mutation_name(m).c_str());
        ok = false;
      }
    }
    auto ms = ms_since(t0);
    report("A9", ok, ms, "each of the 5 mutations flips a check to fail with a witness");
  }

  // A10 + A11: determinism and the N=2 wall-clock budget.
  {
    auto t0 = Clock::now();
    auto r1 = run_suite(Suite::all, 2, opt);
    auto suite_ms = ms_since(t0);
    auto r2 = run_suite(Suite::all, 2, opt);
    std::string j1 = report_json(r1, "all", 2, opt, true);
    std::string j2 = report_json(r2, "all", 2, opt, true);
    BatteryOptions seeded = opt;
    seeded.strategy = Strategy::seeded;
    seeded.seed = 20260808;
    auto r3 = run_suite(Suite::all, 2, seeded);
    std::string j3 = report_json(r3, "all", 2, seeded, true);
    bool ok = all_passed(r1) && !any_skipped(r1) && j1 == j2 && j1 == j3;
    report("A10", ok, ms_since(t0),
           "two stable runs byte-identical; seeded strategy reproduces every normal form");

    auto t1 = Clock::now();
    bool scal = scalar_field_properties();
    auto scal_ms = ms_since(t1);
    report("A11", suite_ms < 120000 && scal && scal_ms < 30000,
           suite_ms + scal_ms,
           "full N=2 suite in < 2 min; scalar property battery (1000 samples) in < 30 s");
  }

  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
