#include <doctest.h>

#include <random>

#include "qdc/errors.hpp"
#include "qdc/expr.hpp"
#include "qdc/presentation.hpp"
#include "qdc/rewrite.hpp"

using namespace qdc;

namespace {

Polynomial gen(Kind k, int i, int j, int n) { return Polynomial::generator(Gen{k, i, j}, n); }

Scalar random_scalar(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coeff(-9, 9), dp(0, 3), dx(0, 2), nt(1, 2);
  auto poly = [&] {
    std::vector<IntPoly::Term> t;
    int k = nt(rng);
    for (int i = 0; i < k; ++i) t.push_back({Monomial{dp(rng), dx(rng)}, mpz_class(coeff(rng))});
    return IntPoly::from_terms(std::move(t));
  };
  IntPoly num = poly(), den;
  do {
    den = poly();
  } while (den.is_zero());
  if (num.is_zero()) num = IntPoly::constant(1);
  return Scalar::fraction(std::move(num), std::move(den), n);
}

Polynomial random_poly(std::mt19937_64& rng, int n) {
  std::vector<Kind> kinds = {Kind::T, Kind::L, Kind::Om,  Kind::OmL,
                             Kind::OmT, Kind::Im, Kind::ImL};
  std::uniform_int_distribution<int> nterms(1, 5), len(0, 4), idx(1, n),
      kk(0, static_cast<int>(kinds.size()) - 1);
  Polynomial p(n);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i)
      w.push_back(gen_id(Gen{kinds[static_cast<std::size_t>(kk(rng))], idx(rng), idx(rng)}, n));
    p = p + Polynomial::from_word(w, random_scalar(rng, n));
  }
  return p;
}

}  // namespace

TEST_CASE("two-letter word") {
  Polynomial p = parse_expr("T[1,2]*Om[2,1]", 2);
  CHECK(p == gen(Kind::T, 1, 2, 2) * gen(Kind::Om, 2, 1, 2));
}

TEST_CASE("scalar expression as a degree-0 polynomial") {
  Polynomial p = parse_expr("q^2 - lam*x", 2);
  Polynomial expect =
      Polynomial::scalar(Scalar::q_pow(2, 2) - Scalar::lambda(2) * Scalar::x(2));
  CHECK(p == expect);
  CHECK(p.max_degree() == 0);
}

TEST_CASE("index out of range is a parse error with a position") {
  CHECK_THROWS_AS(parse_expr("T[0,1]", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("T[1,3]", 2), ParseError);
  try {
    parse_expr("T[0,1]", 2);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(parse_expr("T[1,1", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("foo", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("q +", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("q) ", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("T[1,1]/T[1,1]", 2), ParseError);  // non-scalar divisor
  CHECK_THROWS_AS(parse_expr("1/(q - q)", 2), ParseError);      // zero divisor
  CHECK_THROWS_AS(parse_expr("T[1,1]^-1", 2), ParseError);      // negative word power
}

TEST_CASE("powers, unary minus, division") {
  CHECK(parse_expr("q^-2", 2) == Polynomial::scalar(Scalar::q_pow(-2, 2)));
  CHECK(parse_expr("-q", 2) == Polynomial::scalar(-Scalar::q(2)));
  CHECK(parse_expr("(q^2 - 1)/(q^2 + 1)", 2) ==
        Polynomial::scalar((Scalar::q_pow(2, 2) - Scalar::one(2)) /
                           (Scalar::q_pow(2, 2) + Scalar::one(2))));
  CHECK(parse_expr("T[1,2]^3", 2) ==
        gen(Kind::T, 1, 2, 2) * gen(Kind::T, 1, 2, 2) * gen(Kind::T, 1, 2, 2));
  CHECK(parse_expr("Nq", 2) == Polynomial::scalar(Scalar::n_q(2)));
  CHECK(parse_expr("kq", 2) == Polynomial::scalar(Scalar::kappa_q(2)));
}

TEST_CASE("built-in composite symbols") {
  CHECK(parse_expr("XiX", 2) == xi_x(2));
  CHECK(parse_expr("DetT", 2) == det_q_T(2));
  CHECK(parse_expr("TrOmL", 2) == tr_q_omL(2));
  Presentation pres = make_presentation(PresName::swz, 2);
  CHECK(reduce(parse_expr("XiX*XiX", 2), pres.rules).is_zero());
}

TEST_CASE("already-normal input is unchanged by reduce") {
  Presentation pres = make_presentation(PresName::swz, 2);
  Polynomial p = parse_expr("T[1,1]", 2);
  CHECK(print_poly(reduce(p, pres.rules)) == "T[1,1]");
}

TEST_CASE("round trip on 500 random polynomials") {
  std::mt19937_64 rng(31415);
  for (int it = 0; it < 500; ++it) {
    int n = 2 + (it % 3);
    Polynomial p = random_poly(rng, n);
    std::string s = print_poly(p);
    CHECK(parse_expr(s, n) == p);
  }
}

TEST_CASE("printing is deterministic") {
  std::mt19937_64 rng(161803);
  for (int it = 0; it < 50; ++it) {
    Polynomial p = random_poly(rng, 2);
    CHECK(print_poly(p) == print_poly(p));
  }
  CHECK(print_poly(Polynomial::zero(2)) == "0");
}
