#include "qdc/ncalg.hpp"

#include <algorithm>
#include <numeric>

#include "qdc/errors.hpp"

namespace qdc {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::T: return "T";
    case Kind::L: return "L";
    case Kind::Om: return "Om";
    case Kind::OmL: return "OmL";
    case Kind::OmT: return "OmT";
    case Kind::Im: return "Im";
    case Kind::ImL: return "ImL";
  }
  return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  for (int k = 0; k < kKindCount; ++k)
    if (name == kind_name(static_cast<Kind>(k))) return static_cast<Kind>(k);
  return std::nullopt;
}

int kind_parity(Kind k) {
  switch (k) {
    case Kind::T:
    case Kind::L: return 0;
    default: return 1;
  }
}

int kind_form_degree(Kind k) {
  switch (k) {
    case Kind::Om:
    case Kind::OmL:
    case Kind::OmT: return 1;
    case Kind::Im:
    case Kind::ImL: return -1;
    default: return 0;
  }
}

// Index direction inside a kind is part of the monomial order. The kinds
// whose quadratic relations carry the R-inverse braiding (Om, OmT, ImL) sort
// with reversed indices; that direction is what makes the compiled rule sets
// confluent at degree 3.
bool kind_index_reversed(Kind k) {
  return k == Kind::Om || k == Kind::OmT || k == Kind::ImL;
}

GenId gen_id(const Gen& g, int N) {
  if (g.row < 1 || g.row > N || g.col < 1 || g.col > N)
    throw DimensionError("generator index out of 1..N");
  int r = kind_index_reversed(g.kind) ? N - g.row : g.row - 1;
  int c = kind_index_reversed(g.kind) ? N - g.col : g.col - 1;
  return static_cast<GenId>((static_cast<int>(g.kind) * N + r) * N + c);
}

Gen gen_from_id(GenId id, int N) {
  int v = id;
  int col = v % N;
  v /= N;
  int row = v % N;
  v /= N;
  Kind k = static_cast<Kind>(v);
  if (kind_index_reversed(k)) return Gen{k, N - row, N - col};
  return Gen{k, row + 1, col + 1};
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (GenId g : w) {
    h ^= static_cast<std::size_t>(g) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

int word_parity(const Word& w, int N) {
  int s = 0;
  for (GenId g : w) s += kind_parity(gen_from_id(g, N).kind);
  return s & 1;
}

int word_form_degree(const Word& w, int N) {
  int s = 0;
  for (GenId g : w) s += kind_form_degree(gen_from_id(g, N).kind);
  return s;
}

Polynomial Polynomial::unit(int n) {
  Polynomial p(n);
  p.terms_.emplace(Word{}, Scalar::one(n));
  return p;
}

Polynomial Polynomial::scalar(Scalar c) {
  Polynomial p(c.n());
  if (!c.is_zero()) p.terms_.emplace(Word{}, std::move(c));
  return p;
}

Polynomial Polynomial::generator(const Gen& g, int n) {
  Polynomial p(n);
  p.terms_.emplace(Word{gen_id(g, n)}, Scalar::one(n));
  return p;
}

Polynomial Polynomial::from_word(Word w, Scalar c) {
  Polynomial p(c.n());
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw MixedContextError("polynomial sum across different N");
  Polynomial r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  Polynomial r(n_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw MixedContextError("polynomial product across different N");
  Polynomial r(a.n_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
  if (c.n() != a.n()) throw MixedContextError("scalar multiple across different N");
  Polynomial r(a.n_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : a.terms_) r.terms_.emplace(w, c * v);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::optional<int> Polynomial::homogeneous_parity() const {
  std::optional<int> p;
  for (const auto& [w, c] : terms_) {
    int wp = word_parity(w, n_);
    if (!p)
      p = wp;
    else if (*p != wp)
      return std::nullopt;
  }
  return p.value_or(0);
}

std::optional<int> Polynomial::uniform_form_degree() const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    int wd = word_form_degree(w, n_);
    if (!d)
      d = wd;
    else if (*d != wd)
      return std::nullopt;
  }
  return d.value_or(0);
}

int Polynomial::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

Polynomial Polynomial::substitute(const std::map<GenId, Polynomial>& table) const {
  for (const auto& [id, image] : table) {
    auto par = image.homogeneous_parity();
    if (!par || *par != kind_parity(gen_from_id(id, n_).kind))
      throw ParityError("substitution image violates generator parity");
  }
  Polynomial out(n_);
  for (const auto& [w, c] : terms_) {
    Polynomial prod = Polynomial::scalar(c);
    for (GenId g : w) {
      auto it = table.find(g);
      if (it == table.end())
        prod = prod * Polynomial::from_word(Word{g}, Scalar::one(n_));
      else
        prod = prod * it->second;
    }
    out = out + prod;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    // Pull the sign out of the numerator's leading coefficient for display.
    bool neg = c.num().leading_coeff() < 0;
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ws;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) ws += "*";
      Gen g = gen_from_id(w[i], n_);
      ws += std::string(kind_name(g.kind)) + "[" + std::to_string(g.row) + "," +
            std::to_string(g.col) + "]";
    }
    if (ws.empty()) {
      out += mag.str();
    } else {
      if (mag.is_one())
        out += ws;
      else
        out += mag.str() + "*" + ws;
    }
  }
  return out;
}

Polynomial graded_commutator(const Polynomial& a, const Polynomial& b) {
  auto pa = a.homogeneous_parity(), pb = b.homogeneous_parity();
  if (!pa || !pb) throw ParityError("graded commutator of non-homogeneous arguments");
  Polynomial ab = a * b;
  Polynomial ba = b * a;
  return (*pa * *pb) % 2 ? ab + ba : ab - ba;
}

PolyMatrix::PolyMatrix(int rows, int cols, int n) : rows_(rows), cols_(cols), n_(n) {
  a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Polynomial(n));
}

PolyMatrix PolyMatrix::identity(int dim, int n) {
  PolyMatrix m(dim, dim, n);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Polynomial::unit(n);
  return m;
}

PolyMatrix PolyMatrix::generators(Kind k, int N) {
  PolyMatrix m(N, N, N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) m.at(i - 1, j - 1) = Polynomial::generator(Gen{k, i, j}, N);
  return m;
}

Polynomial& PolyMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionError("PolyMatrix::at");
  return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(c)];
}

const Polynomial& PolyMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionError("PolyMatrix::at");
  return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(c)];
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("PolyMatrix product dimension mismatch");
  if (a.n_ != b.n_) throw MixedContextError("PolyMatrix product across different N");
  PolyMatrix r(a.rows_, b.cols_, a.n_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Polynomial& av = a.at(i, k);
      if (av.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Polynomial& bv = b.at(k, j);
        if (bv.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + av * bv;
      }
    }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("PolyMatrix sum dimension mismatch");
  PolyMatrix r = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = r.at(i, j) + b.at(i, j);
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("PolyMatrix difference dimension mismatch");
  PolyMatrix r = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = r.at(i, j) - b.at(i, j);
  return r;
}

PolyMatrix PolyMatrix::scaled(const Scalar& c) const {
  PolyMatrix r = *this;
  for (auto& e : r.a_) e = c * e;
  return r;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix embed1(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("embed1 requires a square matrix");
  int N = m.rows();
  PolyMatrix r(N * N, N * N, m.n());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (m.at(i, j).is_zero()) continue;
      for (int a = 0; a < N; ++a) r.at(i * N + a, j * N + a) = m.at(i, j);
    }
  return r;
}

PolyMatrix embed2(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("embed2 requires a square matrix");
  int N = m.rows();
  PolyMatrix r(N * N, N * N, m.n());
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (m.at(a, b).is_zero()) continue;
      for (int i = 0; i < N; ++i) r.at(i * N + a, i * N + b) = m.at(a, b);
    }
  return r;
}

PolyMatrix lift(const ScalarMatrix& m) {
  PolyMatrix r(m.dim(), m.dim(), m.n());
  for (int i = 0; i < m.dim(); ++i)
    for (const auto& [j, v] : m.row(i)) r.at(i, j) = Polynomial::scalar(v);
  return r;
}

Polynomial qtrace(const PolyMatrix& m, const std::vector<Scalar>& weights) {
  if (m.rows() != m.cols() || m.rows() != static_cast<int>(weights.size()))
    throw DimensionError("qtrace: weights must match a square matrix");
  Polynomial acc(m.n());
  for (int i = 0; i < m.rows(); ++i)
    acc = acc + weights[static_cast<std::size_t>(i)] * m.at(i, i);
  return acc;
}

Polynomial qdet(const PolyMatrix& m, bool column_ordered) {
  if (m.rows() != m.cols()) throw DimensionError("qdet requires a square matrix");
  int N = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(m.n());
  Scalar minus_q = -Scalar::q(m.n());
  do {
    int inv = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    Polynomial prod = Polynomial::scalar(minus_q.pow(inv));
    for (int i = 0; i < N; ++i) {
      int s = perm[static_cast<std::size_t>(i)];
      prod = prod * (column_ordered ? m.at(s, i) : m.at(i, s));
    }
    det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace qdc
