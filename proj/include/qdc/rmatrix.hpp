#pragma once

#include <string>
#include <vector>

#include "qdc/scalar.hpp"

namespace qdc {

// Square matrix over Q(p, x), stored as sparse rows. Immutable in practice:
// built once, then read.
class ScalarMatrix {
 public:
  using Entry = std::pair<int, Scalar>;  // (col, value), rows sorted by col

  ScalarMatrix(int dim, int n) : dim_(dim), n_(n), rows_(static_cast<std::size_t>(dim)) {}

  static ScalarMatrix identity(int dim, int n);

  int dim() const { return dim_; }
  int n() const { return n_; }

  void set(int row, int col, Scalar v);
  // Zero scalar for absent entries.
  Scalar get(int row, int col) const;
  const std::vector<Entry>& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  std::size_t nonzeros() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  ScalarMatrix scaled(const Scalar& c) const;
  bool is_zero() const;
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

  // Kronecker product; dim = a.dim * b.dim, row index a_row * b.dim + b_row.
  static ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b);

  // Dense Gaussian-elimination inverse; independent of the Hecke shortcut.
  ScalarMatrix dense_inverse() const;

 private:
  int dim_;
  int n_;
  std::vector<std::vector<Entry>> rows_;
};

enum class Convention { standard, inverse };

std::string convention_name(Convention c);
Convention convention_from_name(const std::string& name);

// GL_q(N) braid R-matrix on (C^N)^2, dim N^2; tensor index (i, j) -> i*N + j
// with i, j in 0..N-1. `standard` selects the Hecke solution whose q-trace
// over the second factor is q^N times the identity; `inverse` its inverse.
ScalarMatrix build_rhat(int N, Convention convention = Convention::standard);

// R^-1 = R - lambda * Id (Hecke); verifies the product against the identity
// and throws InternalCheckError when the input is not Hecke.
ScalarMatrix rhat_inverse(const ScalarMatrix& rhat);

// Braid Yang-Baxter: R12 R23 R12 = R23 R12 R23 on (C^N)^3.
bool check_ybe(const ScalarMatrix& rhat, int N);
bool check_ybe(int N, Convention convention = Convention::standard);

// Hecke: R - R^-1 = lambda Id, accepted with either sign of lambda (the
// inverse solution satisfies the mirrored identity).
bool check_hecke(const ScalarMatrix& rhat);
bool check_hecke(int N, Convention convention = Convention::standard);

// q-trace weights w_i = q^(-N-1+2i), i = 1..N.
std::vector<Scalar> qtrace_weights(int N);

// Weighted trace of a square ScalarMatrix of size N.
Scalar qtrace(const ScalarMatrix& m, const std::vector<Scalar>& weights);

}  // namespace qdc
