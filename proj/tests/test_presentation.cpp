#include <doctest.h>

#include <map>

#include "qdc/errors.hpp"
#include "qdc/presentation.hpp"

using namespace qdc;

namespace {

Polynomial gen(Kind k, int i, int j, int n) { return Polynomial::generator(Gen{k, i, j}, n); }

std::map<std::string, int> family_ranks(const Presentation& p) {
  std::map<std::string, int> out;
  for (const auto& f : p.families) out[f.tag] = f.rank;
  return out;
}

}  // namespace

TEST_CASE("frt_T(1): a single generator and no relations") {
  Presentation p = make_presentation(PresName::frt_T, 1);
  CHECK(p.generators.size() == 1);
  CHECK(p.rules.size() == 0);
  for (const auto& f : p.families) CHECK(f.rank == 0);
}

TEST_CASE("lbasis(2): 16 generators, the ten relation families") {
  Presentation p = make_presentation(PresName::lbasis, 2);
  CHECK(p.generators.size() == 16);
  int per_kind[4] = {0, 0, 0, 0};
  for (const Gen& g : p.generators) {
    if (g.kind == Kind::T) ++per_kind[0];
    if (g.kind == Kind::L) ++per_kind[1];
    if (g.kind == Kind::OmL) ++per_kind[2];
    if (g.kind == Kind::ImL) ++per_kind[3];
  }
  for (int k = 0; k < 4; ++k) CHECK(per_kind[k] == 4);

  // Ranks frozen from the first derivation of the component systems.
  std::map<std::string, int> expect = {
      {"eq-s2-TT", 6},      {"eq-s2-TL", 16},     {"eq-s2-TOmL", 16},
      {"eq-s2-OmLOmL", 10}, {"eq-s2-LL", 6},      {"eq-s2-LOmL", 16},
      {"eq-s3-TImL", 16},   {"eq-s3-ImLImL", 10}, {"eq-s3-LImL", 16},
      {"eq-ss3", 16}};
  CHECK(family_ranks(p) == expect);
}

TEST_CASE("swz(2) family ranks") {
  Presentation p = make_presentation(PresName::swz, 2);
  std::map<std::string, int> expect = {
      {"eq-zum-TT", 6},   {"eq-zum-TL", 16},   {"eq-zum-TOm", 16},
      {"eq-zum-OmOm", 10}, {"eq-zum-LL", 6},   {"eq-zum-LOm", 16},
      {"eq-861-TIm", 16}, {"eq-861-ImOm", 16}, {"eq-861-LIm", 16},
      {"eq-861-ImIm", 10}};
  CHECK(family_ranks(p) == expect);
}

TEST_CASE("fp(N) carries N^2-1 independent one-form generators") {
  for (int n = 2; n <= 3; ++n) {
    Presentation p = make_presentation(PresName::fp, n);
    int omt = 0;
    bool has_nn = false;
    for (const Gen& g : p.generators)
      if (g.kind == Kind::OmT) {
        ++omt;
        if (g.row == n && g.col == n) has_nn = true;
      }
    CHECK(omt == n * n - 1);
    CHECK_FALSE(has_nn);
  }
}

TEST_CASE("fp(2): the eliminated corner is q^-2 times the first diagonal entry") {
  // Tr_q = 0 with weights (q^-1, q): OmT[2,2] = -q^-2 OmT[1,1].
  PolyMatrix ot = omega_tilde_fp(2);
  Polynomial expect = Scalar::q_pow(-2, 2) * gen(Kind::OmT, 1, 1, 2);
  CHECK(ot.at(1, 1) == -expect);
  CHECK(qtrace(ot, qtrace_weights(2)).is_zero());
}

TEST_CASE("differential presentations require N >= 2") {
  CHECK_THROWS_AS(make_presentation(PresName::swz, 1), DimensionError);
  CHECK_THROWS_AS(make_presentation(PresName::lbasis, 1), DimensionError);
  CHECK_THROWS_AS(make_presentation(PresName::fp, 1), DimensionError);
}

TEST_CASE("self-consistency: every relation reduces to zero, N in {2,3}") {
  for (int n = 2; n <= 3; ++n)
    for (PresName name : {PresName::frt_T, PresName::swz, PresName::lbasis, PresName::fp}) {
      Presentation p = make_presentation(name, n);
      for (const auto& fam : p.families)
        for (const auto& comp : fam.components)
          CHECK(reduce(comp, p.rules).is_zero());
    }
}

TEST_CASE("defined symbols: Tr_q Omega^L at N=2") {
  Polynomial expect =
      Scalar::q_pow(-1, 2) * gen(Kind::OmL, 1, 1, 2) + Scalar::q(2) * gen(Kind::OmL, 2, 2, 2);
  CHECK(tr_q_omL(2) == expect);
}

TEST_CASE("defined symbols: xi_0 is (q^N/lam) Tr_q Omega") {
  int n = 2;
  Polynomial xi = xi_x(n);
  Scalar pref = Scalar::q_pow(n, n) / Scalar::lambda(n);
  Polynomial xi0 = pref * qtrace(PolyMatrix::generators(Kind::Om, n), qtrace_weights(n));
  // The x-independent part of xi_x equals xi_0; every other term carries x.
  Polynomial rest = xi - xi0;
  for (const auto& [w, c] : rest.terms()) {
    CHECK(c.den().degree_x() <= 0);
    CHECK(c.num().min_ex() >= 1);
  }
}

TEST_CASE("defined symbols: Wbar entries match 1 - lam ImL OmL") {
  int n = 2;
  PolyMatrix wb = wbar_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial expect(n);
      if (i == j) expect = Polynomial::unit(n);
      for (int k = 0; k < n; ++k)
        expect = expect - Scalar::lambda(n) * (gen(Kind::ImL, i + 1, k + 1, n) *
                                               gen(Kind::OmL, k + 1, j + 1, n));
      CHECK(wb.at(i, j) == expect);
    }
}

TEST_CASE("defined symbols: WL needs no inverse and has degree <= 3 entries") {
  PolyMatrix wl = wl_matrix(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(wl.at(i, j).max_degree() <= 3);
}

TEST_CASE("the defined-symbol table is consistent with its pieces") {
  int n = 2;
  DefinedSymbols tab = defined_symbols(n);
  CHECK(tab.xi == xi_x(n));
  CHECK(tab.det_T == det_q_T(n));
  CHECK(tab.tr_omL == tr_q_omL(n));
  CHECK(qtrace(tab.omega_tilde, qtrace_weights(n)).is_zero());
  // Omega_x at x -> 0 collapses to the Omega generators
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial diff = tab.omega_x.at(i, j) -
                        Polynomial::generator(Gen{Kind::Om, i + 1, j + 1}, n);
      for (const auto& [w, c] : diff.terms()) CHECK(c.num().min_ex() >= 1);
    }
}

TEST_CASE("mutations perturb the construction hooks") {
  BuildOptions m;
  m.mutation = Mutation::traceless_projector;
  CHECK_FALSE(qtrace(omega_tilde_lbasis(2, m), qtrace_weights(2)).is_zero());

  BuildOptions w;
  w.mutation = Mutation::qtrace_weights;
  CHECK_FALSE(context_weights(2, w)[0] == qtrace_weights(2)[0]);

  BuildOptions k;
  k.mutation = Mutation::kappa_q;
  CHECK(context_kappa(2, k) == Scalar::q(2) * Scalar::kappa_q(2));
}
