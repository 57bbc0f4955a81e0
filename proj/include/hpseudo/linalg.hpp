#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpseudo/rational.hpp"

namespace hp {

using Vec = std::vector<Q>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Q& s) const;
  Matrix& operator+=(const Matrix& o);
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  Vec row(int i) const;
  Vec col(int j) const;
  Q trace() const;
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix from_rows(const std::vector<Vec>& rows, int cols);
Matrix from_cols(const std::vector<Vec>& cols, int rows);

struct Echelon {
  Matrix R;
  std::vector<int> pivots;
};

// Reduced row echelon form, pivots chosen left to right.
Echelon rref(Matrix m);
int rank(const Matrix& m);
// Kernel basis in reduced form: one vector per free column, with a 1 there.
std::vector<Vec> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Particular solution with free variables set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Q& s);

// Sparse vector: sorted (index, value) pairs without zeros.
using SparseVec = std::vector<std::pair<long, Q>>;
SparseVec to_sparse(const std::map<long, Q>& m);

// Incremental sparse elimination. Pivot of a stored row is its smallest index,
// so the span of rows with pivot >= k is the intersection with {entries < k vanish}.
class Eliminator {
 public:
  explicit Eliminator(bool track = false) : track_(track) {}
  // True if v was independent of everything added before.
  bool add(const SparseVec& v);
  bool in_span(const SparseVec& v) const;
  SparseVec reduce(const SparseVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int count_pivots_at_least(long k) const;
  std::vector<long> pivots() const;
  // Vanishing combinations of inserted vectors, indexed by insertion order.
  const std::vector<SparseVec>& relations() const { return relations_; }
  int inserted() const { return inserted_; }
  std::vector<SparseVec> basis() const;

 private:
  struct Row {
    std::map<long, Q> v;
    std::map<long, Q> combo;
  };
  bool track_;
  int inserted_ = 0;
  std::map<long, Row> rows_;  // pivot -> row, pivot entry normalized to 1
  std::vector<SparseVec> relations_;
};

// Canonical reduced basis of the span of the given dense vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vs, int dim);

}  // namespace hp
