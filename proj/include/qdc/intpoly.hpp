#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qdc {

// Monomial p^ep * x^ex, exponents >= 0. The term order used everywhere
// (leading terms, exact division, the denominator sign convention) is
// lexicographic on (ex, ep).
struct Monomial {
  std::int32_t ep = 0;
  std::int32_t ex = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline bool mono_less(const Monomial& a, const Monomial& b) {
  if (a.ex != b.ex) return a.ex < b.ex;
  return a.ep < b.ep;
}

// Polynomial in Z[p, x]. Terms are kept sorted descending with no zero
// coefficients, so representation is canonical and operator== is structural.
class IntPoly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  IntPoly() = default;

  static IntPoly constant(long v);
  static IntPoly constant(mpz_class v);
  static IntPoly monomial(mpz_class c, int ep, int ex);
  // Sorts and merges; drops zero coefficients.
  static IntPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  // -1 for the zero polynomial.
  int degree_p() const;
  int degree_x() const;
  // Smallest exponent appearing in any term; 0 for the zero polynomial.
  int min_ep() const;
  int min_ex() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const mpz_class& leading_coeff() const;
  const Monomial& leading_mono() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

  IntPoly mul_monomial(const mpz_class& c, int ep, int ex) const;
  // Divides every exponent pair by the stated monomial; exponents must not go negative.
  IntPoly shift_down(int ep, int ex) const;

  // Exact division; throws DivideByZeroError for b == 0 and
  // InternalCheckError if the division is not exact.
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b);

  // gcd of all coefficients, >= 0 (0 only for the zero polynomial).
  mpz_class content() const;
  IntPoly divide_content(const mpz_class& c) const;

  // Full gcd including integer content and monomial factors; leading
  // coefficient positive. gcd(0, b) = |b| normalized.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  mpq_class eval(const mpq_class& p0, const mpq_class& x0) const;

  IntPoly pow(unsigned k) const;

  // Canonical string, terms descending: "2*p^3*x - p + 1".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qdc
