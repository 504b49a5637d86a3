#include "qdc/scalar.hpp"

#include <utility>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

void require_same_n(const Scalar& a, const Scalar& b) {
  if (a.n() != b.n())
    throw MixedContextError("scalar arithmetic across different N (" + std::to_string(a.n()) +
                            " vs " + std::to_string(b.n()) + ")");
}

}  // namespace

Scalar::Scalar(IntPoly num, IntPoly den, int n)
    : num_(std::move(num)), den_(std::move(den)), n_(n) {}

Scalar Scalar::zero(int n) { return {IntPoly{}, IntPoly::constant(1), n}; }

Scalar Scalar::one(int n) { return {IntPoly::constant(1), IntPoly::constant(1), n}; }

Scalar Scalar::integer(long v, int n) { return {IntPoly::constant(v), IntPoly::constant(1), n}; }

Scalar Scalar::integer(mpz_class v, int n) {
  return {IntPoly::constant(std::move(v)), IntPoly::constant(1), n};
}

Scalar Scalar::rational(mpz_class num, mpz_class den, int n) {
  return fraction(IntPoly::constant(std::move(num)), IntPoly::constant(std::move(den)), n);
}

Scalar Scalar::fraction(IntPoly num, IntPoly den, int n) {
  if (den.is_zero()) throw DivideByZeroError("scalar with zero denominator");
  if (n < 1) throw MixedContextError("scalar requires N >= 1");
  if (num.is_zero()) return zero(n);
  IntPoly g = IntPoly::gcd(num, den);
  if (!g.is_one()) {
    num = IntPoly::exact_div(num, g);
    den = IntPoly::exact_div(den, g);
  }
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den), n};
}

Scalar Scalar::x(int n) { return {IntPoly::monomial(1, 0, 1), IntPoly::constant(1), n}; }

Scalar Scalar::p_pow(long k, int n) {
  if (n < 1) throw MixedContextError("scalar requires N >= 1");
  if (k >= 0) return {IntPoly::monomial(1, static_cast<int>(k), 0), IntPoly::constant(1), n};
  return {IntPoly::constant(1), IntPoly::monomial(1, static_cast<int>(-k), 0), n};
}

Scalar Scalar::lambda(int n) { return q(n) - q_pow(-1, n); }

Scalar Scalar::n_q(int n) { return (q_pow(n, n) - q_pow(-n, n)) / lambda(n); }

Scalar Scalar::kappa_q(int n) {
  Scalar lqn = lambda(n) * q_pow(n, n);
  return lqn / (n_q(n) + lqn);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_n(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_)
    return Scalar::fraction(a.num_ + b.num_, a.den_, a.n_);
  // Henrici: split off g = gcd of the denominators to keep gcds small.
  IntPoly g = IntPoly::gcd(a.den_, b.den_);
  if (g.is_one()) {
    // Coprime denominators: the sum is already reduced.
    IntPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return Scalar::zero(a.n_);
    return {std::move(num), a.den_ * b.den_, a.n_};
  }
  IntPoly da = IntPoly::exact_div(a.den_, g);
  IntPoly db = IntPoly::exact_div(b.den_, g);
  IntPoly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return Scalar::zero(a.n_);
  IntPoly h = IntPoly::gcd(num, g);
  if (!h.is_one()) {
    num = IntPoly::exact_div(num, h);
    g = IntPoly::exact_div(g, h);
  }
  return {std::move(num), g * da * db, a.n_};
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const { return {-num_, den_, n_}; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_n(a, b);
  if (a.is_zero() || b.is_zero()) return Scalar::zero(a.n_);
  IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
  IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
  IntPoly num = IntPoly::exact_div(a.num_, g1) * IntPoly::exact_div(b.num_, g2);
  IntPoly den = IntPoly::exact_div(a.den_, g2) * IntPoly::exact_div(b.den_, g1);
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den), a.n_};
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivideByZeroError("inverse of zero scalar");
  IntPoly num = den_, den = num_;
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den), n_};
}

Scalar Scalar::pow(long k) const {
  if (k == 0) return one(n_);
  Scalar base = k > 0 ? *this : inverse();
  unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
  return {base.num_.pow(e), base.den_.pow(e), n_};
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_n(a, b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

mpq_class Scalar::eval(const mpq_class& p0, const mpq_class& x0) const {
  mpq_class d = den_.eval(p0, x0);
  if (d == 0) throw EvalError("pole at the evaluation point");
  mpq_class r = num_.eval(p0, x0) / d;
  r.canonicalize();
  return r;
}

std::string Scalar::str() const {
  if (den_.is_one()) {
    if (num_.size() <= 1) return num_.str();
    return "(" + num_.str() + ")";
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::tuple<Scalar, Scalar, Scalar> constants(int n) {
  return {Scalar::lambda(n), Scalar::n_q(n), Scalar::kappa_q(n)};
}

mpq_class eval_at(const Scalar& s, const mpq_class& p0, const mpq_class& x0) {
  if (p0 == 0 || p0 == 1 || p0 == -1)
    throw EvalError("degenerate point: p0 must avoid {0, 1, -1}");
  return s.eval(p0, x0);
}

}  // namespace qdc
