#include "qdc/expr.hpp"

#include <cctype>

#include "qdc/errors.hpp"
#include "qdc/presentation.hpp"

namespace qdc {

namespace {

struct Parser {
  const std::string& in;
  int N;
  std::size_t pos = 0;

  explicit Parser(const std::string& s, int n) : in(s), N(n) {}

  void skip_ws() {
    while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < in.size() && in[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < in.size() ? in[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < in.size() && (in[pos] == '-' || in[pos] == '+')) {
      neg = in[pos] == '-';
      ++pos;
    }
    if (pos >= in.size() || !std::isdigit(static_cast<unsigned char>(in[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) {
      v = v * 10 + (in[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < in.size() && std::isalpha(static_cast<unsigned char>(in[pos]))) ++pos;
    if (start == pos) fail("expected identifier");
    return in.substr(start, pos - start);
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= in.size()) fail("unexpected end of input");
    char c = in[pos];
    if (c == '(') {
      ++pos;
      Polynomial e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::scalar(Scalar::integer(parse_int(), N));
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected atom");
    std::size_t at = pos;
    std::string id = parse_ident();
    if (auto kind = kind_from_name(id)) {
      if (!eat('[')) fail("expected '[' after generator kind");
      long row = parse_int();
      if (!eat(',')) fail("expected ','");
      long col = parse_int();
      if (!eat(']')) fail("expected ']'");
      if (row < 1 || row > N || col < 1 || col > N) {
        pos = at;
        fail("generator index out of range 1.." + std::to_string(N));
      }
      return Polynomial::generator(Gen{*kind, static_cast<int>(row), static_cast<int>(col)}, N);
    }
    if (id == "q") return Polynomial::scalar(Scalar::q(N));
    if (id == "p") return Polynomial::scalar(Scalar::p(N));
    if (id == "x") return Polynomial::scalar(Scalar::x(N));
    if (id == "lam") return Polynomial::scalar(Scalar::lambda(N));
    if (id == "Nq") return Polynomial::scalar(Scalar::n_q(N));
    if (id == "kq") return Polynomial::scalar(Scalar::kappa_q(N));
    if (id == "XiX") return xi_x(N);
    if (id == "DetT") return det_q_T(N);
    if (id == "TrOmL") return tr_q_omL(N);
    pos = at;
    fail("unknown identifier '" + id + "'");
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (eat('^')) {
      std::size_t at = pos;
      long k = parse_int();
      if (base.max_degree() <= 0) {
        // Degree-0 operand: exponentiate the scalar part.
        if (k > 1000000 || k < -1000000) {
          pos = at;
          fail("scalar exponent magnitude capped at 10^6");
        }
        Scalar s = Scalar::zero(N);
        if (!base.is_zero()) s = base.terms().begin()->second;
        if (s.is_zero() && k <= 0) {
          pos = at;
          fail("zero to a non-positive power");
        }
        return Polynomial::scalar(s.pow(k));
      }
      if (k < 0) {
        pos = at;
        fail("negative power of a non-scalar expression");
      }
      if (k > 64) {
        pos = at;
        fail("word exponent capped at 64");
      }
      Polynomial r = Polynomial::unit(N);
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial r = parse_factor();
    for (;;) {
      if (eat('*')) {
        r = r * parse_factor();
      } else if (eat('/')) {
        std::size_t at = pos;
        Polynomial d = parse_factor();
        if (d.max_degree() > 0) {
          pos = at;
          fail("division by a non-scalar expression");
        }
        if (d.is_zero()) {
          pos = at;
          fail("division by zero");
        }
        r = d.terms().begin()->second.inverse() * r;
      } else {
        return r;
      }
    }
  }

  Polynomial parse_expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = in[pos++] == '-';
    Polynomial r = parse_term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+'))
        r = r + parse_term();
      else if (eat('-'))
        r = r - parse_term();
      else
        return r;
    }
  }
};

}  // namespace

Polynomial parse_expr(const std::string& input, int N) {
  if (N < 1) throw DimensionError("parse_expr requires N >= 1");
  Parser p(input, N);
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != input.size()) p.fail("trailing input");
  return r;
}

std::string print_poly(const Polynomial& p) { return p.str(); }

}  // namespace qdc
