#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qdc/rewrite.hpp"

namespace qdc {

enum class PresName { frt_T, swz, lbasis, fp };

std::string pres_name(PresName p);
PresName pres_from_name(const std::string& s);

// Canned single-coefficient mutations used as negative controls: each must
// flip at least one battery check.
enum class Mutation {
  none,
  kappa_q,              // kappa_q -> q * kappa_q
  rhat_entry,           // first lambda entry of R zeroed
  traceless_projector,  // 1/N_q coefficient of the traceless projection scaled by q
  ss4_constant,         // kappa/(lambda(1-kappa)) scaled by q
  qtrace_weights        // first q-trace weight scaled by q
};

std::string mutation_name(Mutation m);
Mutation mutation_from_name(const std::string& s);

struct BuildOptions {
  Convention convention = Convention::standard;
  Mutation mutation = Mutation::none;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct RelationFamily {
  std::string tag;                     // stable identifier, e.g. "eq-ss3"
  std::vector<Polynomial> components;  // each equal to zero in the algebra
  int rank = 0;                        // rules contributed after elimination
};

struct Presentation {
  PresName name;
  int N;
  BuildOptions options;
  std::vector<Gen> generators;
  std::vector<RelationFamily> families;
  RuleSet rules;

  Presentation(PresName nm, int N_, BuildOptions opt, int rules_n)
      : name(nm), N(N_), options(std::move(opt)), rules(rules_n) {}
};

// Builds generators, relation components and the compiled rule set.
// frt_T allows N >= 1; the differential presentations require N >= 2.
Presentation make_presentation(PresName name, int N, const BuildOptions& opt = {});

// R-matrix as used by presentations and checks, mutation hook included.
ScalarMatrix context_rhat(int N, const BuildOptions& opt);
// q-trace weights, mutation hook included.
std::vector<Scalar> context_weights(int N, const BuildOptions& opt);
// kappa_q, mutation hook included.
Scalar context_kappa(int N, const BuildOptions& opt);

// ---- defined symbols ----

// Traceless projection applied to a matrix of 1-forms:
// m - (Tr_q m / N_q) * Id.
PolyMatrix traceless_projection(const PolyMatrix& m, const BuildOptions& opt);
// Omega-tilde inside lbasis: the projection of the OmL generator matrix.
PolyMatrix omega_tilde_lbasis(int N, const BuildOptions& opt = {});
// Omega-tilde as fp primitives: OmT generators with the (N, N) entry
// eliminated through Tr_q = 0.
PolyMatrix omega_tilde_fp(int N, const BuildOptions& opt = {});
// Tr_q of the OmL generator matrix.
Polynomial tr_q_omL(int N, const BuildOptions& opt = {});
// W L = L (1 - lambda Omega Im), swz generators; no inverse needed.
PolyMatrix wl_matrix(int N);
// Omega_x = Omega (1 + x W L), swz generators, x symbolic.
PolyMatrix omega_x_matrix(int N);
// xi_x = (q^N / lambda) Tr_q(Omega (1 + x W L)), swz generators.
Polynomial xi_x(int N, const BuildOptions& opt = {});
// W = 1 - lambda OmL ImL and Wbar = 1 - lambda ImL OmL, lbasis generators.
PolyMatrix w_matrix(int N);
PolyMatrix wbar_matrix(int N);
// det_q of the T generator matrix.
Polynomial det_q_T(int N);

// The full defined-symbol table for one N.
struct DefinedSymbols {
  PolyMatrix omega_tilde;  // traceless projection of OmL
  PolyMatrix wl;           // W L, swz generators
  PolyMatrix omega_x;      // Omega (1 + x W L), swz generators
  Polynomial xi;           // xi_x, swz generators
  PolyMatrix w;            // 1 - lambda OmL ImL
  PolyMatrix wbar;         // 1 - lambda ImL OmL
  Polynomial tr_omL;       // Tr_q of the OmL matrix
  Polynomial det_T;        // det_q of the T matrix
};

DefinedSymbols defined_symbols(int N, const BuildOptions& opt = {});

}  // namespace qdc
