#include "qdc/rmatrix.hpp"

#include <algorithm>
#include <map>

#include "qdc/errors.hpp"

namespace qdc {

ScalarMatrix ScalarMatrix::identity(int dim, int n) {
  ScalarMatrix m(dim, n);
  for (int i = 0; i < dim; ++i) m.set(i, i, Scalar::one(n));
  return m;
}

void ScalarMatrix::set(int row, int col, Scalar v) {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw DimensionError("ScalarMatrix::set out of range");
  auto& r = rows_[static_cast<std::size_t>(row)];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == col) {
    if (v.is_zero())
      r.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    r.insert(it, {col, std::move(v)});
  }
}

Scalar ScalarMatrix::get(int row, int col) const {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw DimensionError("ScalarMatrix::get out of range");
  const auto& r = rows_[static_cast<std::size_t>(row)];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return Scalar::zero(n_);
}

std::size_t ScalarMatrix::nonzeros() const {
  std::size_t k = 0;
  for (const auto& r : rows_) k += r.size();
  return k;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("matrix product dimension mismatch");
  if (a.n_ != b.n_) throw MixedContextError("matrix product across different N");
  ScalarMatrix r(a.dim_, a.n_);
  for (int i = 0; i < a.dim_; ++i) {
    std::map<int, Scalar> acc;
    for (const auto& [k, av] : a.rows_[static_cast<std::size_t>(i)]) {
      for (const auto& [j, bv] : b.rows_[static_cast<std::size_t>(k)]) {
        Scalar prod = av * bv;
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, std::move(prod));
        else
          it->second = it->second + prod;
      }
    }
    auto& row = r.rows_[static_cast<std::size_t>(i)];
    for (auto& [j, v] : acc)
      if (!v.is_zero()) row.push_back({j, std::move(v)});
  }
  return r;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("matrix sum dimension mismatch");
  ScalarMatrix r = a;
  for (int i = 0; i < b.dim_; ++i)
    for (const auto& [j, v] : b.rows_[static_cast<std::size_t>(i)]) {
      Scalar s = r.get(i, j) + v;
      r.set(i, j, std::move(s));
    }
  return r;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a + b.scaled(Scalar::integer(-1, a.n_));
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& c) const {
  ScalarMatrix r(dim_, n_);
  if (c.is_zero()) return r;
  for (int i = 0; i < dim_; ++i)
    for (const auto& [j, v] : rows_[static_cast<std::size_t>(i)])
      r.rows_[static_cast<std::size_t>(i)].push_back({j, v * c});
  return r;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.dim_ != b.dim_ || a.n_ != b.n_) return false;
  return (a - b).is_zero();
}

ScalarMatrix ScalarMatrix::kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.n_ != b.n_) throw MixedContextError("kron across different N");
  ScalarMatrix r(a.dim_ * b.dim_, a.n_);
  for (int ia = 0; ia < a.dim_; ++ia)
    for (const auto& [ja, va] : a.rows_[static_cast<std::size_t>(ia)])
      for (int ib = 0; ib < b.dim_; ++ib)
        for (const auto& [jb, vb] : b.rows_[static_cast<std::size_t>(ib)])
          r.set(ia * b.dim_ + ib, ja * b.dim_ + jb, va * vb);
  return r;
}

ScalarMatrix ScalarMatrix::dense_inverse() const {
  int d = dim_;
  // Augmented dense elimination.
  std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto& row = m[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(2 * d));
    for (int j = 0; j < d; ++j) row.push_back(get(i, j));
    for (int j = 0; j < d; ++j)
      row.push_back(i == j ? Scalar::one(n_) : Scalar::zero(n_));
  }
  for (int c = 0; c < d; ++c) {
    int pivot = -1;
    for (int i = c; i < d; ++i)
      if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw DivideByZeroError("dense_inverse: singular matrix");
    std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(pivot)]);
    Scalar inv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)].inverse();
    for (int j = 0; j < 2 * d; ++j)
      m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] =
          m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] * inv;
    for (int i = 0; i < d; ++i) {
      if (i == c) continue;
      Scalar f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = 0; j < 2 * d; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    }
  }
  ScalarMatrix r(d, n_);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Scalar v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + j)];
      if (!v.is_zero()) r.set(i, j, std::move(v));
    }
  return r;
}

std::string convention_name(Convention c) {
  return c == Convention::standard ? "standard" : "inverse";
}

Convention convention_from_name(const std::string& name) {
  if (name == "standard") return Convention::standard;
  if (name == "inverse") return Convention::inverse;
  throw std::invalid_argument("unknown R-matrix convention: " + name);
}

ScalarMatrix build_rhat(int N, Convention convention) {
  if (N < 1) throw DimensionError("build_rhat requires N >= 1");
  ScalarMatrix r(N * N, N);
  Scalar q = Scalar::q(N);
  Scalar lam = Scalar::lambda(N);
  auto idx = [N](int i, int j) { return i * N + j; };
  for (int i = 0; i < N; ++i) r.set(idx(i, i), idx(i, i), q);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) r.set(idx(i, j), idx(j, i), Scalar::one(N));
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) r.set(idx(i, j), idx(i, j), lam);
  if (convention == Convention::inverse) return rhat_inverse(r);
  return r;
}

ScalarMatrix rhat_inverse(const ScalarMatrix& rhat) {
  int n = rhat.n();
  ScalarMatrix id = ScalarMatrix::identity(rhat.dim(), n);
  // R - lambda for the standard solution; the inverse solution is Hecke with
  // -lambda, so its inverse is R + lambda.
  for (const Scalar& shift : {Scalar::lambda(n), -Scalar::lambda(n)}) {
    ScalarMatrix inv = rhat - id.scaled(shift);
    if (rhat * inv == id) return inv;
  }
  throw InternalCheckError("rhat_inverse: Hecke shortcut does not invert the input");
}

bool check_ybe(const ScalarMatrix& rhat, int N) {
  ScalarMatrix id_n = ScalarMatrix::identity(N, rhat.n());
  ScalarMatrix r12 = ScalarMatrix::kron(rhat, id_n);
  ScalarMatrix r23 = ScalarMatrix::kron(id_n, rhat);
  return (r12 * r23 * r12 - r23 * r12 * r23).is_zero();
}

bool check_ybe(int N, Convention convention) { return check_ybe(build_rhat(N, convention), N); }

bool check_hecke(const ScalarMatrix& rhat) {
  int n = rhat.n();
  ScalarMatrix id = ScalarMatrix::identity(rhat.dim(), n);
  ScalarMatrix sq = rhat * rhat;
  // R - R^-1 = lambda for the standard solution; its inverse satisfies the
  // mirrored identity with -lambda. Both count as Hecke.
  return (sq - rhat.scaled(Scalar::lambda(n)) - id).is_zero() ||
         (sq + rhat.scaled(Scalar::lambda(n)) - id).is_zero();
}

bool check_hecke(int N, Convention convention) {
  return check_hecke(build_rhat(N, convention));
}

std::vector<Scalar> qtrace_weights(int N) {
  std::vector<Scalar> w;
  w.reserve(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) w.push_back(Scalar::q_pow(-N - 1 + 2 * i, N));
  return w;
}

Scalar qtrace(const ScalarMatrix& m, const std::vector<Scalar>& weights) {
  if (m.dim() != static_cast<int>(weights.size()))
    throw DimensionError("qtrace: weight count must match matrix size");
  Scalar acc = Scalar::zero(m.n());
  for (int i = 0; i < m.dim(); ++i) acc = acc + weights[static_cast<std::size_t>(i)] * m.get(i, i);
  return acc;
}

}  // namespace qdc
