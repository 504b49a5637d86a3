#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdc/rmatrix.hpp"
#include "qdc/scalar.hpp"

namespace qdc {

// Generator kinds, in normal-order precedence. T and L are even; the
// form/derivation kinds are odd.
enum class Kind : std::uint8_t { T = 0, L = 1, Om = 2, OmL = 3, OmT = 4, Im = 5, ImL = 6 };

constexpr int kKindCount = 7;

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);
int kind_parity(Kind k);       // 0 or 1
int kind_form_degree(Kind k);  // +1 forms, -1 inner derivations, 0 otherwise

// Indexed generator, 1-based indices in 1..N.
struct Gen {
  Kind kind;
  int row;
  int col;
  friend bool operator==(const Gen&, const Gen&) = default;
};

// Dense generator id preserving (kind, row, col) lexicographic order.
using GenId = std::uint16_t;
GenId gen_id(const Gen& g, int N);
Gen gen_from_id(GenId id, int N);

using Word = std::vector<GenId>;

// Graded lexicographic order: by length, then by ids left to right.
bool word_less(const Word& a, const Word& b);
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return word_less(b, a); }
};
struct WordHash {
  std::size_t operator()(const Word& w) const;
};

int word_parity(const Word& w, int N);
int word_form_degree(const Word& w, int N);

// Finite Scalar-weighted sum of words in the free graded algebra.
// Terms are kept in descending word order with nonzero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Word, Scalar, WordGreater>;

  explicit Polynomial(int n) : n_(n) {}
  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial unit(int n);  // empty word with coefficient 1
  static Polynomial scalar(Scalar c);
  static Polynomial generator(const Gen& g, int n);
  static Polynomial from_word(Word w, Scalar c);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Word& w, const Scalar& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& a);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Parity if every word agrees (zero counts as homogeneous of parity 0).
  std::optional<int> homogeneous_parity() const;
  std::optional<int> uniform_form_degree() const;
  int max_degree() const;  // word length; -1 for zero

  // Ring homomorphism replacing generators by polynomials; identity on
  // generators absent from the table. Throws ParityError if an image does
  // not match its generator's parity.
  Polynomial substitute(const std::map<GenId, Polynomial>& table) const;

  std::string str() const;  // canonical, deterministic term order

 private:
  int n_;
  TermMap terms_;
};

// ab - (-1)^(|a||b|) ba on parity-homogeneous arguments.
Polynomial graded_commutator(const Polynomial& a, const Polynomial& b);

// rows x cols matrix with Polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int n);
  static PolyMatrix identity(int dim, int n);
  // N x N matrix of generators of the given kind.
  static PolyMatrix generators(Kind k, int N);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int n() const { return n_; }
  Polynomial& at(int r, int c);
  const Polynomial& at(int r, int c) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Scalar& c) const;
  bool is_zero() const;

 private:
  int rows_, cols_, n_;
  std::vector<Polynomial> a_;
};

// A (x) Id and Id (x) A on the N^2-dimensional tensor space; tensor index
// (i, a) -> i*N + a.
PolyMatrix embed1(const PolyMatrix& m);
PolyMatrix embed2(const PolyMatrix& m);
// ScalarMatrix lifted to constant polynomial entries.
PolyMatrix lift(const ScalarMatrix& m);
// Weighted trace over a square PolyMatrix.
Polynomial qtrace(const PolyMatrix& m, const std::vector<Scalar>& weights);

// q-determinant: sum over permutations of (-q)^inv(sigma) with row-ordered
// products; the column-ordered variant is a cross-check.
Polynomial qdet(const PolyMatrix& m, bool column_ordered = false);

}  // namespace qdc
