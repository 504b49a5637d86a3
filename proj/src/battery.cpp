#include "qdc/battery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
}

struct Ctx {
  int N;
  BatteryOptions opt;
  std::optional<Clock::time_point> deadline;
  std::map<PresName, Presentation> cache;

  BuildOptions build_opts() const { return BuildOptions{opt.convention, opt.mutation, deadline}; }

  const Presentation& pres(PresName p) {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, make_presentation(p, N, build_opts())).first;
    return it->second;
  }

  ReduceOptions ropt() const {
    ReduceOptions r;
    r.step_cap = opt.step_cap;
    r.strategy = opt.strategy;
    r.seed = opt.seed;
    r.deadline = deadline;
    return r;
  }

  // A different redex-selection strategy for the stability cross-check.
  ReduceOptions ropt_permuted() const {
    ReduceOptions r = ropt();
    r.strategy = opt.strategy == Strategy::rightmost ? Strategy::seeded : Strategy::rightmost;
    r.seed = opt.seed ^ 0x5bd1e995ull;
    return r;
  }
};

CheckResult make_pass(const std::string& name, int N) {
  CheckResult r;
  r.name = name;
  r.N = N;
  r.status = CheckStatus::pass;
  return r;
}

CheckResult make_fail(const std::string& name, int N, Polynomial witness, std::string detail) {
  CheckResult r;
  r.name = name;
  r.N = N;
  r.status = CheckStatus::fail;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

CheckResult make_skip(const std::string& name, int N, std::string reason) {
  CheckResult r;
  r.name = name;
  r.N = N;
  r.status = CheckStatus::skip;
  r.detail = std::move(reason);
  return r;
}

struct Component {
  std::string label;
  Polynomial poly;
};

void collect_matrix(std::vector<Component>& out, const std::string& label, const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero())
        out.push_back({label + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                       m.at(i, j)});
}

CheckResult reduce_all_to_zero(Ctx& ctx, const std::string& name, const RuleSet& rules,
                               const std::vector<Component>& comps) {
  for (const auto& comp : comps) {
    Polynomial nf = reduce(comp.poly, rules, ctx.ropt());
    if (!nf.is_zero()) {
      Polynomial again = reduce(nf, rules, ctx.ropt());
      if (!(again == nf))
        throw InternalCheckError("failure witness does not re-reduce to itself");
      return make_fail(name, ctx.N, std::move(nf), comp.label);
    }
    if (ctx.opt.verify_permuted) {
      Polynomial nf2 = reduce(comp.poly, rules, ctx.ropt_permuted());
      if (!nf2.is_zero())
        return make_fail(name, ctx.N, std::move(nf2),
                         comp.label + " (permuted strategy disagrees)");
    }
  }
  return make_pass(name, ctx.N);
}

// ---- C1 ----
CheckResult check_ybe_hecke(Ctx& ctx) {
  int N = ctx.N;
  ScalarMatrix r = context_rhat(N, ctx.build_opts());
  ScalarMatrix id_n = ScalarMatrix::identity(N, N);
  ScalarMatrix r12 = ScalarMatrix::kron(r, id_n);
  ScalarMatrix r23 = ScalarMatrix::kron(id_n, r);
  ScalarMatrix ybe = r12 * r23 * r12 - r23 * r12 * r23;
  ScalarMatrix hecke =
      r * r - r.scaled(Scalar::lambda(N)) - ScalarMatrix::identity(N * N, N);
  auto first_nonzero = [N](const ScalarMatrix& m) {
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        if (!m.get(i, j).is_zero()) return Polynomial::scalar(m.get(i, j));
    return Polynomial::zero(N);
  };
  if (!ybe.is_zero())
    return make_fail("ybe_hecke", N, first_nonzero(ybe), "Yang-Baxter residual nonzero");
  if (!hecke.is_zero())
    return make_fail("ybe_hecke", N, first_nonzero(hecke), "Hecke residual nonzero");
  return make_pass("ybe_hecke", N);
}

// ---- C2 ----
CheckResult check_qtrace_traceless(Ctx& ctx) {
  int N = ctx.N;
  if (N < 2) return make_skip("qtrace_traceless", N, "requires N >= 2");
  PolyMatrix ot = omega_tilde_lbasis(N, ctx.build_opts());
  Polynomial tr = qtrace(ot, context_weights(N, ctx.build_opts()));
  if (!tr.is_zero())
    return make_fail("qtrace_traceless", N, std::move(tr), "Tr_q(Omega-tilde) != 0");
  return make_pass("qtrace_traceless", N);
}

// ---- C3 ----
CheckResult check_detq_central(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::frt_T);
  Polynomial det = det_q_T(N);
  std::vector<Component> comps;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Polynomial t = Polynomial::generator(Gen{Kind::T, i, j}, N);
      comps.push_back({"[det_q T, T[" + std::to_string(i) + "," + std::to_string(j) + "]]",
                       det * t - t * det});
    }
  return reduce_all_to_zero(ctx, "detq_central", pres.rules, comps);
}

// ---- C4 ----
CheckResult check_pbw(Ctx& ctx, const std::string& filter) {
  std::vector<PresName> targets;
  if (filter.empty())
    targets = {PresName::frt_T, PresName::swz, PresName::lbasis, PresName::fp};
  else
    targets = {pres_from_name(filter)};
  std::string name = filter.empty() ? "pbw_overlaps" : "pbw_overlaps:" + filter;
  for (PresName p : targets) {
    if (p != PresName::frt_T && ctx.N < 2) continue;
    const Presentation& pres = ctx.pres(p);
    auto pairs = overlap_check(pres.rules, ctx.opt.max_degree, ctx.ropt());
    if (!pairs.empty()) {
      Polynomial w = pairs.front().difference;
      return make_fail(name, ctx.N, std::move(w),
                       pres_name(p) + ": " + std::to_string(pairs.size()) +
                           " unresolved critical pairs");
    }
  }
  return make_pass(name, ctx.N);
}

// ---- C5 ----
CheckResult check_helper_identities(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::lbasis);
  BuildOptions b = ctx.build_opts();
  Polynomial tr = tr_q_omL(N, b);
  PolyMatrix ot = omega_tilde_lbasis(N, b);
  Scalar coeff = Scalar::lambda(N) * Scalar::q_pow(N, N) *
                 (context_kappa(N, b) - Scalar::one(N));
  std::vector<Component> comps;
  comps.push_back({"(Tr_q OmL)^2", tr * tr});
  PolyMatrix sq = ot * ot;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      comps.push_back({"[Tr_q OmL, Om-tilde]+ - lam q^N (kappa-1) Om-tilde^2 at [" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                       tr * ot.at(i, j) + ot.at(i, j) * tr - coeff * sq.at(i, j)});
  return reduce_all_to_zero(ctx, "helper_identities", pres.rules, comps);
}

// ---- C6 ----
CheckResult check_fp_embedding(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::lbasis);
  BuildOptions b = ctx.build_opts();
  ScalarMatrix rhat = context_rhat(N, b);
  PolyMatrix R = lift(rhat), Ri = lift(rhat_inverse(rhat));
  PolyMatrix ot = omega_tilde_lbasis(N, b);
  PolyMatrix ot1 = embed1(ot), ot2 = embed2(ot);
  PolyMatrix t1 = embed1(PolyMatrix::generators(Kind::T, N));
  PolyMatrix t2 = embed2(PolyMatrix::generators(Kind::T, N));
  PolyMatrix l1 = embed1(PolyMatrix::generators(Kind::L, N));
  PolyMatrix l2 = embed2(PolyMatrix::generators(Kind::L, N));
  PolyMatrix im1 = embed1(PolyMatrix::generators(Kind::ImL, N));
  Scalar kappa = context_kappa(N, b);

  std::vector<Component> comps;
  // (s2'): the T/L families coincide with lbasis relations; the Omega-tilde
  // families carry the substituted projection.
  collect_matrix(comps, "s2p-TT", R * t1 * t2 - t1 * t2 * R);
  collect_matrix(comps, "s2p-TL", (t1 * l2).scaled(Scalar::p_pow(2, N)) - R * l1 * R * t1);
  collect_matrix(comps, "s2p-TOm", t1 * ot2 - R * ot1 * Ri * t1);
  collect_matrix(comps, "s2p-LL", R * l1 * R * l1 - l1 * R * l1 * R);
  collect_matrix(comps, "s2p-LOm", R * l1 * R * ot1 - ot1 * R * l1 * R);
  // (s2'')
  {
    PolyMatrix sq1 = embed1(ot * ot);
    collect_matrix(comps, "s2pp", R * ot1 * R * ot1 + ot1 * R * ot1 * Ri -
                                      sq1.scaled(kappa) - (R * sq1 * R).scaled(kappa));
  }
  // (ss4), N=2 scope; at larger N the acceptance budget covers (s2')+(s2'').
  if (N == 2) {
    Scalar c = kappa / (Scalar::lambda(N) * (Scalar::one(N) - kappa));
    if (ctx.opt.mutation == Mutation::ss4_constant) c = c * Scalar::q(N);
    PolyMatrix rhs = PolyMatrix::identity(N * N, N).scaled(c) - R;
    collect_matrix(comps, "ss4", im1 * Ri * ot1 * R + R * ot1 * Ri * im1 - rhs);
  }
  CheckResult r = reduce_all_to_zero(ctx, "fp_embedding", pres.rules, comps);
  if (r.status == CheckStatus::pass && N > 2)
    r.detail = "families s2'+s2''; the ss4 components run at N=2";
  return r;
}

// ---- C7 ----
CheckResult check_omega_x(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::swz);
  ScalarMatrix rhat = context_rhat(N, ctx.build_opts());
  PolyMatrix R = lift(rhat), Ri = lift(rhat_inverse(rhat));
  PolyMatrix ox1 = embed1(omega_x_matrix(N));
  std::vector<Component> comps;
  collect_matrix(comps, "omega_x", R * ox1 * Ri * ox1 + ox1 * Ri * ox1 * Ri);
  return reduce_all_to_zero(ctx, "omega_x_relation", pres.rules, comps);
}

// ---- C8 ----
CheckResult check_xi_nilpotent(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::swz);
  Polynomial xi = xi_x(N, ctx.build_opts());
  std::vector<Component> comps;
  comps.push_back({"xi_x^2", xi * xi});
  return reduce_all_to_zero(ctx, "xi_nilpotent", pres.rules, comps);
}

// ---- C9 ----
CheckResult check_leibniz_closure(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::swz);
  Polynomial xi = xi_x(N, ctx.build_opts());
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      std::string label = "T[" + std::to_string(i) + "," + std::to_string(j) + "]";
      Polynomial t = Polynomial::generator(Gen{Kind::T, i, j}, N);
      // T is even: d_x T = [xi, T] as a plain commutator.
      Polynomial u = reduce(xi * t - t * xi, pres.rules, ctx.ropt());
      if (u.is_zero()) {
        CheckResult r;
        r.name = "leibniz_closure";
        r.N = N;
        r.status = CheckStatus::fail;
        r.detail = "d_x " + label + " reduced to zero";
        return r;
      }
      if (u.homogeneous_parity() != std::optional<int>(1) ||
          u.uniform_form_degree() != std::optional<int>(1))
        return make_fail("leibniz_closure", N, std::move(u),
                         "d_x " + label + " is not of uniform form-degree 1");
      if (ctx.opt.verify_permuted) {
        Polynomial u2 = reduce(xi * t - t * xi, pres.rules, ctx.ropt_permuted());
        if (!(u2 == u))
          return make_fail("leibniz_closure", N, std::move(u2),
                           "d_x " + label + " (permuted strategy disagrees)");
      }
      // u is odd: d_x u = [xi, u] as an anticommutator.
      Polynomial v = reduce(xi * u + u * xi, pres.rules, ctx.ropt());
      if (!v.is_zero())
        return make_fail("leibniz_closure", N, std::move(v), "d_x d_x " + label + " != 0");
      if (ctx.opt.verify_permuted) {
        Polynomial v2 = reduce(xi * u + u * xi, pres.rules, ctx.ropt_permuted());
        if (!v2.is_zero())
          return make_fail("leibniz_closure", N, std::move(v2),
                           "d_x d_x " + label + " (permuted strategy disagrees)");
      }
    }
  return make_pass("leibniz_closure", N);
}

// ---- C10 ----
CheckResult check_w_relations(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::lbasis);
  ScalarMatrix rhat = context_rhat(N, ctx.build_opts());
  PolyMatrix Ri = lift(rhat_inverse(rhat));
  PolyMatrix R = lift(rhat);
  PolyMatrix w1 = embed1(w_matrix(N)), wb1 = embed1(wbar_matrix(N));
  std::vector<Component> comps;
  collect_matrix(comps, "s7-mixed", Ri * wb1 * R * w1 - w1 * Ri * wb1 * R);
  collect_matrix(comps, "s7-wbar", Ri * wb1 * Ri * wb1 - wb1 * Ri * wb1 * Ri);
  collect_matrix(comps, "s7-w", Ri * w1 * Ri * w1 - w1 * Ri * w1 * Ri);
  return reduce_all_to_zero(ctx, "w_relations", pres.rules, comps);
}

// Entrywise normal form of Wbar * W; shared by C11 and C12.
PolyMatrix reduced_wbar_w(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::lbasis);
  PolyMatrix m = wbar_matrix(N) * w_matrix(N);
  PolyMatrix out(N, N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) out.at(i, j) = reduce(m.at(i, j), pres.rules, ctx.ropt());
  return out;
}

// ---- C11 ----
CheckResult check_ww_relation(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::lbasis);
  ScalarMatrix rhat = context_rhat(N, ctx.build_opts());
  PolyMatrix Ri = lift(rhat_inverse(rhat));
  PolyMatrix m1 = embed1(reduced_wbar_w(ctx));
  std::vector<Component> comps;
  collect_matrix(comps, "s8", Ri * m1 * Ri * m1 - m1 * Ri * m1 * Ri);
  return reduce_all_to_zero(ctx, "ww_relation", pres.rules, comps);
}

// ---- C12 ----
CheckResult check_wwbar_identity(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::lbasis);
  BuildOptions b = ctx.build_opts();
  Scalar kappa = context_kappa(N, b);
  Scalar lam = Scalar::lambda(N);
  PolyMatrix ot = omega_tilde_lbasis(N, b);
  PolyMatrix iml = PolyMatrix::generators(Kind::ImL, N);
  PolyMatrix anti = ot * iml + iml * ot;
  PolyMatrix quart = iml * ot * ot * iml;
  Scalar c = (Scalar::one(N) - kappa).inverse();
  PolyMatrix rhs = PolyMatrix::identity(N, N).scaled(c) - anti.scaled(lam) +
                   quart.scaled(lam * lam * (Scalar::one(N) - kappa));
  PolyMatrix lhs = wbar_matrix(N) * w_matrix(N);
  std::vector<Component> comps;
  collect_matrix(comps, "wwbar", lhs - rhs);
  return reduce_all_to_zero(ctx, "wwbar_identity", pres.rules, comps);
}

// ---- C13 ----
CheckResult check_omegaL_basis_change(Ctx& ctx) {
  int N = ctx.N;
  const Presentation& pres = ctx.pres(PresName::swz);
  ScalarMatrix rhat = context_rhat(N, ctx.build_opts());
  PolyMatrix R = lift(rhat), Ri = lift(rhat_inverse(rhat));
  // Omega^L := L Omega, the inverse-free direction of the basis change.
  PolyMatrix oml = PolyMatrix::generators(Kind::L, N) * PolyMatrix::generators(Kind::Om, N);
  PolyMatrix o1 = embed1(oml), o2 = embed2(oml);
  PolyMatrix t1 = embed1(PolyMatrix::generators(Kind::T, N));
  std::vector<Component> comps;
  collect_matrix(comps, "s2-TOmL", t1 * o2 - R * o1 * Ri * t1);
  collect_matrix(comps, "s2-OmLOmL", R * o1 * R * o1 + o1 * R * o1 * Ri);
  return reduce_all_to_zero(ctx, "omegaL_basis_change", pres.rules, comps);
}

// Crude pre-flight scale estimate for the budget gate.
std::int64_t estimate_ms(int N) {
  double n = static_cast<double>(N);
  return static_cast<std::int64_t>(std::pow(n, 8) / 500.0) + 1;
}

CheckResult run_check_impl(Ctx& ctx, const std::string& name) {
  auto t0 = Clock::now();
  CheckResult r;
  try {
    if (ctx.deadline) {
      auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                           *ctx.deadline - t0)
                           .count();
      if (remaining < estimate_ms(ctx.N)) {
        r = make_skip(name, ctx.N, "time budget exhausted (pre-flight estimate)");
        r.millis = ms_between(t0, Clock::now());
        return r;
      }
    }
    bool is_heavy =
        name == "w_relations" || name == "ww_relation" || name == "wwbar_identity";
    if (is_heavy && ctx.N >= 3 && !ctx.opt.heavy) {
      r = make_skip(name, ctx.N, "N >= 3 runs behind the heavy opt-in (use --heavy)");
      r.millis = ms_between(t0, Clock::now());
      return r;
    }
    if (name == "ybe_hecke")
      r = check_ybe_hecke(ctx);
    else if (name == "qtrace_traceless")
      r = check_qtrace_traceless(ctx);
    else if (name == "detq_central")
      r = check_detq_central(ctx);
    else if (name == "pbw_overlaps" || name.rfind("pbw_overlaps:", 0) == 0)
      r = check_pbw(ctx, name == "pbw_overlaps" ? "" : name.substr(13));
    else if (name == "helper_identities")
      r = check_helper_identities(ctx);
    else if (name == "fp_embedding")
      r = check_fp_embedding(ctx);
    else if (name == "omega_x_relation")
      r = check_omega_x(ctx);
    else if (name == "xi_nilpotent")
      r = check_xi_nilpotent(ctx);
    else if (name == "leibniz_closure")
      r = check_leibniz_closure(ctx);
    else if (name == "w_relations")
      r = check_w_relations(ctx);
    else if (name == "ww_relation")
      r = check_ww_relation(ctx);
    else if (name == "wwbar_identity")
      r = check_wwbar_identity(ctx);
    else if (name == "omegaL_basis_change")
      r = check_omegaL_basis_change(ctx);
    else
      throw std::invalid_argument("unknown check: " + name);
  } catch (const BudgetExceeded& e) {
    r = make_skip(name, ctx.N, e.what());
  } catch (const OrientError& e) {
    r = make_skip(name, ctx.N, std::string("presentation construction failed: ") + e.what());
  } catch (const InternalCheckError& e) {
    r = make_skip(name, ctx.N, std::string("construction self-check failed: ") + e.what());
  } catch (const ReduceLimitError& e) {
    r = make_skip(name, ctx.N, e.what());
  } catch (const DimensionError& e) {
    r = make_skip(name, ctx.N, e.what());
  }
  r.millis = ms_between(t0, Clock::now());
  return r;
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::matrix: return "matrix";
    case Suite::swz: return "swz";
    case Suite::lbasis: return "lbasis";
    case Suite::fp_embed: return "fp-embed";
  }
  return "?";
}

Suite suite_from_name(const std::string& s) {
  if (s == "all") return Suite::all;
  if (s == "matrix") return Suite::matrix;
  if (s == "swz") return Suite::swz;
  if (s == "lbasis") return Suite::lbasis;
  if (s == "fp-embed") return Suite::fp_embed;
  throw std::invalid_argument("unknown suite: " + s);
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "ybe_hecke",        "qtrace_traceless", "detq_central",   "pbw_overlaps",
      "helper_identities", "fp_embedding",     "omega_x_relation", "xi_nilpotent",
      "leibniz_closure",  "w_relations",      "ww_relation",    "wwbar_identity",
      "omegaL_basis_change"};
  return names;
}

std::vector<std::string> suite_checks(Suite s) {
  switch (s) {
    case Suite::all: return check_names();
    case Suite::matrix: return {"ybe_hecke", "qtrace_traceless", "detq_central"};
    case Suite::swz: return {"omega_x_relation", "xi_nilpotent", "leibniz_closure"};
    case Suite::lbasis:
      return {"helper_identities", "w_relations", "ww_relation", "wwbar_identity"};
    case Suite::fp_embed: return {"helper_identities", "fp_embedding", "omegaL_basis_change"};
  }
  return {};
}

CheckResult run_check(const std::string& name, int N, const BatteryOptions& opt) {
  Ctx ctx{N, opt, {}, {}};
  if (opt.budget_ms >= 0)
    ctx.deadline = Clock::now() + std::chrono::milliseconds(opt.budget_ms);
  return run_check_impl(ctx, name);
}

std::vector<CheckResult> run_suite(Suite suite, int N, const BatteryOptions& opt) {
  Ctx ctx{N, opt, {}, {}};
  if (opt.budget_ms >= 0)
    ctx.deadline = Clock::now() + std::chrono::milliseconds(opt.budget_ms);
  std::vector<CheckResult> out;
  for (const std::string& name : suite_checks(suite)) out.push_back(run_check_impl(ctx, name));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status != CheckStatus::fail;
  });
}

bool any_skipped(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == CheckStatus::skip; });
}

bool any_failed(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

}  // namespace qdc
