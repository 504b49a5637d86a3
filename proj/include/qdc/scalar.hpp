#pragma once

#include <string>
#include <tuple>

#include "qdc/intpoly.hpp"

namespace qdc {

// Element of the coefficient field Q(p, x) with q = p^N. Canonical form:
// gcd-reduced fraction, denominator with positive leading coefficient,
// zero stored as 0/1. Immutable value type.
class Scalar {
 public:
  static Scalar zero(int n);
  static Scalar one(int n);
  static Scalar integer(long v, int n);
  static Scalar integer(mpz_class v, int n);
  static Scalar rational(mpz_class num, mpz_class den, int n);
  // Normalizes; throws DivideByZeroError on a zero denominator.
  static Scalar fraction(IntPoly num, IntPoly den, int n);

  static Scalar p(int n) { return p_pow(1, n); }
  static Scalar x(int n);
  static Scalar q(int n) { return p_pow(n, n); }
  static Scalar p_pow(long k, int n);
  // q^k = p^(k*n); k may be negative.
  static Scalar q_pow(long k, int n) { return p_pow(k * n, n); }
  static Scalar lambda(int n);   // q - q^-1
  static Scalar n_q(int n);      // (q^N - q^-N) / (q - q^-1)
  static Scalar kappa_q(int n);  // lambda q^N (N_q + lambda q^N)^-1

  int n() const { return n_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;  // throws DivideByZeroError on zero
  Scalar pow(long k) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Raw evaluation; throws EvalError at a pole.
  mpq_class eval(const mpq_class& p0, const mpq_class& x0) const;

  // Canonical string: "num", "(num)" or "(num)/(den)".
  std::string str() const;

 private:
  Scalar(IntPoly num, IntPoly den, int n);
  IntPoly num_;
  IntPoly den_;
  int n_;
};

// (lambda, N_q, kappa_q) for the given N.
std::tuple<Scalar, Scalar, Scalar> constants(int n);

// Evaluation with the generic-q guard: throws EvalError at poles and at
// degenerate points p0 in {0, 1, -1}; callers resample.
mpq_class eval_at(const Scalar& s, const mpq_class& p0, const mpq_class& x0);

}  // namespace qdc
