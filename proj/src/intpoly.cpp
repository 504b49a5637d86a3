#include "qdc/intpoly.hpp"

#include <algorithm>
#include <map>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(b, a); }
};

}  // namespace

IntPoly IntPoly::constant(long v) { return constant(mpz_class(v)); }

IntPoly IntPoly::constant(mpz_class v) {
  IntPoly r;
  if (v != 0) r.terms_.push_back({Monomial{0, 0}, std::move(v)});
  return r;
}

IntPoly IntPoly::monomial(mpz_class c, int ep, int ex) {
  IntPoly r;
  if (c != 0) r.terms_.push_back({Monomial{ep, ex}, std::move(c)});
  return r;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, mpz_class, MonoGreater> acc;
  for (auto& [m, c] : terms) acc[m] += c;
  IntPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  return r;
}

bool IntPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{0, 0});
}

bool IntPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Monomial{0, 0} && terms_[0].second == 1;
}

int IntPoly::degree_p() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.ep);
  return d;
}

int IntPoly::degree_x() const {
  return terms_.empty() ? -1 : terms_.front().first.ex;
}

int IntPoly::min_ep() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first.ep;
  for (const auto& [m, c] : terms_) d = std::min(d, m.ep);
  return d;
}

int IntPoly::min_ex() const {
  return terms_.empty() ? 0 : terms_.back().first.ex;
}

const mpz_class& IntPoly::leading_coeff() const {
  static const mpz_class zero = 0;
  return terms_.empty() ? zero : terms_.front().second;
}

const Monomial& IntPoly::leading_mono() const {
  static const Monomial none{};
  return terms_.empty() ? none : terms_.front().first;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->first == ib->first) {
      mpz_class c = ia->second + ib->second;
      if (c != 0) r.terms_.push_back({ia->first, std::move(c)});
      ++ia;
      ++ib;
    } else if (mono_less(ib->first, ia->first)) {
      r.terms_.push_back(*ia++);
    } else {
      r.terms_.push_back(*ib++);
    }
  }
  r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
  r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

IntPoly IntPoly::mul_monomial(const mpz_class& c, int ep, int ex) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& [m, k] : r.terms_) {
    m.ep += ep;
    m.ex += ex;
    k *= c;
  }
  return r;
}

IntPoly IntPoly::shift_down(int ep, int ex) const {
  IntPoly r = *this;
  for (auto& [m, k] : r.terms_) {
    m.ep -= ep;
    m.ex -= ex;
    if (m.ep < 0 || m.ex < 0) throw InternalCheckError("shift_down: negative exponent");
  }
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial())
    return b.mul_monomial(a.terms_[0].second, a.terms_[0].first.ep, a.terms_[0].first.ex);
  if (b.is_monomial())
    return a.mul_monomial(b.terms_[0].second, b.terms_[0].first.ep, b.terms_[0].first.ex);
  std::map<Monomial, mpz_class, MonoGreater> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      acc[Monomial{ma.ep + mb.ep, ma.ex + mb.ex}] += ca * cb;
  IntPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  return r;
}

IntPoly IntPoly::exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivideByZeroError("exact_div by zero polynomial");
  if (b.is_one()) return a;
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& [mb, cb] = b.terms_[0];
    IntPoly r = a;
    for (auto& [m, c] : r.terms_) {
      m.ep -= mb.ep;
      m.ex -= mb.ex;
      mpz_class qc, rem;
      mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
      if (m.ep < 0 || m.ex < 0 || rem != 0) throw InternalCheckError("exact_div: not divisible");
      c = std::move(qc);
    }
    return r;
  }
  IntPoly rem = a;
  std::vector<Term> quot;
  const auto& [lbm, lbc] = b.terms_[0];
  while (!rem.is_zero()) {
    const auto& [lm, lc] = rem.terms_[0];
    Monomial qm{lm.ep - lbm.ep, lm.ex - lbm.ex};
    mpz_class qc, r2;
    mpz_fdiv_qr(qc.get_mpz_t(), r2.get_mpz_t(), lc.get_mpz_t(), lbc.get_mpz_t());
    if (qm.ep < 0 || qm.ex < 0 || r2 != 0) throw InternalCheckError("exact_div: not divisible");
    quot.push_back({qm, qc});
    rem = rem - b.mul_monomial(qc, qm.ep, qm.ex);
  }
  return from_terms(std::move(quot));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::divide_content(const mpz_class& c) const {
  if (c == 1) return *this;
  IntPoly r = *this;
  for (auto& [m, k] : r.terms_) k /= c;
  return r;
}

namespace {

// Dense univariate polynomial in p over Z, index = degree.
using Dense = std::vector<mpz_class>;

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense to_dense_p(const IntPoly& f) {
  Dense d(static_cast<std::size_t>(std::max(0, f.degree_p() + 1)));
  for (const auto& [m, c] : f.terms()) d[static_cast<std::size_t>(m.ep)] = c;
  trim(d);
  return d;
}

IntPoly from_dense_p(const Dense& d) {
  std::vector<IntPoly::Term> t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) t.push_back({Monomial{static_cast<int>(i), 0}, d[i]});
  return IntPoly::from_terms(std::move(t));
}

mpz_class dense_content(const Dense& d) {
  mpz_class g = 0;
  for (const auto& c : d) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void dense_divide(Dense& d, const mpz_class& c) {
  if (c == 1) return;
  for (auto& k : d) k /= c;
}

// Pseudo-remainder of a by b; both nonzero, deg a >= deg b.
Dense dense_prem(Dense a, const Dense& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// gcd of primitive univariate polynomials, returned primitive with lc > 0.
Dense dense_gcd_pp(Dense a, Dense b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {mpz_class(1)};
    Dense r = dense_prem(a, b);
    a = std::move(b);
    mpz_class c = dense_content(r);
    if (c != 0) dense_divide(r, c);
    b = std::move(r);
  }
  if (a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// gcd over Z[p] of p-only polynomials, full (content included), lc > 0.
IntPoly gcd_univ_p(const IntPoly& a, const IntPoly& b) {
  mpz_class ca = a.content(), cb = b.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Dense da = to_dense_p(a.divide_content(ca));
  Dense db = to_dense_p(b.divide_content(cb));
  Dense g = dense_gcd_pp(std::move(da), std::move(db));
  return from_dense_p(g).mul_monomial(c, 0, 0);
}

// View of a polynomial as univariate in x with coefficients in Z[p].
using XPoly = std::vector<IntPoly>;

XPoly to_xpoly(const IntPoly& f) {
  XPoly v(static_cast<std::size_t>(std::max(0, f.degree_x() + 1)));
  std::vector<std::vector<IntPoly::Term>> buckets(v.size());
  for (const auto& [m, c] : f.terms())
    buckets[static_cast<std::size_t>(m.ex)].push_back({Monomial{m.ep, 0}, c});
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = IntPoly::from_terms(std::move(buckets[i]));
  return v;
}

IntPoly from_xpoly(const XPoly& v) {
  std::vector<IntPoly::Term> t;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& [m, c] : v[i].terms())
      t.push_back({Monomial{m.ep, static_cast<int>(i)}, c});
  return IntPoly::from_terms(std::move(t));
}

void xtrim(XPoly& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

IntPoly xcontent(const XPoly& v) {
  IntPoly g;
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_univ_p(g, c);
    if (g.is_one()) break;
  }
  return g;
}

void xdivide(XPoly& v, const IntPoly& g) {
  if (g.is_one()) return;
  for (auto& c : v)
    if (!c.is_zero()) c = IntPoly::exact_div(c, g);
}

XPoly xprem(XPoly a, const XPoly& b) {
  const IntPoly& lb = b.back();
  while (a.size() >= b.size()) {
    IntPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - la * b[i];
    xtrim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  auto normalized = [](IntPoly f) {
    if (!f.is_zero() && f.leading_coeff() < 0) f = -f;
    return f;
  };
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a == b || a == -b) return normalized(a);

  // Common monomial factor first; keeps the recursive gcds small.
  int mp = std::min(a.min_ep(), b.min_ep());
  int mx = std::min(a.min_ex(), b.min_ex());
  IntPoly a0 = a.shift_down(a.min_ep(), a.min_ex());
  IntPoly b0 = b.shift_down(b.min_ep(), b.min_ex());

  mpz_class ca = a0.content(), cb = b0.content();
  mpz_class ic;
  mpz_gcd(ic.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a0 = a0.divide_content(ca);
  b0 = b0.divide_content(cb);

  IntPoly g;
  if (a0.is_one() || b0.is_one() || a0.is_monomial() || b0.is_monomial()) {
    g = constant(1);  // coprime after monomial/content extraction
  } else if (a0.degree_x() <= 0 && b0.degree_x() <= 0) {
    g = gcd_univ_p(a0, b0);
  } else if (a0.degree_x() <= 0 || b0.degree_x() <= 0) {
    // One side x-free: gcd divides the x-content of the other.
    const IntPoly& xfree = a0.degree_x() <= 0 ? a0 : b0;
    const IntPoly& other = a0.degree_x() <= 0 ? b0 : a0;
    g = gcd_univ_p(xfree, xcontent(to_xpoly(other)));
  } else {
    XPoly A = to_xpoly(a0), B = to_xpoly(b0);
    IntPoly na = xcontent(A), nb = xcontent(B);
    IntPoly cg = gcd_univ_p(na, nb);
    xdivide(A, na);
    xdivide(B, nb);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty() && B.size() > 1) {
      XPoly R = xprem(A, B);
      A = std::move(B);
      if (!R.empty()) xdivide(R, xcontent(R));
      B = std::move(R);
    }
    if (!B.empty()) {
      g = cg;  // x-primitive parts coprime
    } else {
      xdivide(A, xcontent(A));
      g = cg * from_xpoly(A);
    }
  }
  g = g.mul_monomial(ic, mp, mx);
  return normalized(std::move(g));
}

mpq_class IntPoly::eval(const mpq_class& p0, const mpq_class& x0) const {
  mpq_class acc = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < m.ep; ++i) t *= p0;
    for (int i = 0; i < m.ex; ++i) t *= x0;
    acc += t;
  }
  return acc;
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly r = constant(1);
  IntPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    if (m.ep > 0) vars += (m.ep == 1) ? "p" : "p^" + std::to_string(m.ep);
    if (m.ex > 0) {
      if (!vars.empty()) vars += "*";
      vars += (m.ex == 1) ? "x" : "x^" + std::to_string(m.ex);
    }
    if (vars.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += vars;
    }
  }
  return out;
}

}  // namespace qdc
