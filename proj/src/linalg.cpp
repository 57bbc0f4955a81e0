#include "hpseudo/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hp {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Q& x = (*this)(i, k);
      if (hp::is_zero(x)) continue;
      for (int j = 0; j < o.c_; ++j)
        if (!hp::is_zero(o(k, j))) m(i, j) += x * o(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  m += o;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Matrix Matrix::operator*(const Q& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!hp::is_zero(x)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("apply: size mismatch");
  Vec out(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!hp::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

Vec Matrix::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Q Matrix::trace() const {
  Q t = 0;
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
  }
  os << "]";
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Matrix from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  return m;
}

Matrix from_cols(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  return m;
}

Echelon rref(Matrix m) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Q f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.R = std::move(m);
  return e;
}

int rank(const Matrix& m) {
  Eliminator el;
  for (int i = 0; i < m.rows(); ++i) {
    SparseVec v;
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) v.emplace_back(j, m(i, j));
    el.add(v);
  }
  return el.rank();
}

std::vector<Vec> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.R(static_cast<int>(k), f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(aug);
  Vec x(a.cols());
  for (size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == a.cols()) return std::nullopt;
    x[e.pivots[k]] = e.R(static_cast<int>(k), a.cols());
  }
  return x;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_scale(const Vec& a, const Q& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

SparseVec to_sparse(const std::map<long, Q>& m) {
  SparseVec v;
  for (const auto& [k, x] : m)
    if (!is_zero(x)) v.emplace_back(k, x);
  return v;
}

namespace {

void axpy(std::map<long, Q>& w, const Q& f, const std::map<long, Q>& row) {
  for (const auto& [k, x] : row) {
    auto it = w.find(k);
    if (it == w.end()) {
      w.emplace(k, -f * x);
    } else {
      it->second -= f * x;
      if (is_zero(it->second)) w.erase(it);
    }
  }
}

}  // namespace

SparseVec Eliminator::reduce(const SparseVec& v) const {
  std::map<long, Q> w;
  for (const auto& [k, x] : v)
    if (!is_zero(x)) w[k] += x;
  auto it = w.begin();
  while (it != w.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    long key = it->first;
    Q f = it->second;
    axpy(w, f, r->second.v);
    it = w.upper_bound(key);
  }
  return to_sparse(w);
}

bool Eliminator::add(const SparseVec& v) {
  int tag = inserted_++;
  std::map<long, Q> w, combo;
  for (const auto& [k, x] : v)
    if (!is_zero(x)) w[k] += x;
  if (track_) combo[tag] = 1;
  auto it = w.begin();
  while (it != w.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    long key = it->first;
    Q f = it->second;
    axpy(w, f, r->second.v);
    if (track_) axpy(combo, f, r->second.combo);
    it = w.upper_bound(key);
  }
  if (w.empty()) {
    if (track_) relations_.push_back(to_sparse(combo));
    return false;
  }
  long p = w.begin()->first;
  Q inv = 1 / w.begin()->second;
  for (auto& [k, x] : w) x *= inv;
  for (auto& [k, x] : combo) x *= inv;
  rows_[p] = Row{std::move(w), std::move(combo)};
  return true;
}

bool Eliminator::in_span(const SparseVec& v) const { return reduce(v).empty(); }

int Eliminator::count_pivots_at_least(long k) const {
  int n = 0;
  for (auto it = rows_.lower_bound(k); it != rows_.end(); ++it) ++n;
  return n;
}

std::vector<long> Eliminator::pivots() const {
  std::vector<long> p;
  for (const auto& [k, r] : rows_) p.push_back(k);
  return p;
}

std::vector<SparseVec> Eliminator::basis() const {
  std::vector<SparseVec> b;
  for (const auto& [k, r] : rows_) b.push_back(to_sparse(r.v));
  return b;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, int dim) {
  if (vs.empty()) return {};
  Echelon e = rref(from_rows(vs, dim));
  std::vector<Vec> out;
  for (size_t k = 0; k < e.pivots.size(); ++k) out.push_back(e.R.row(static_cast<int>(k)));
  return out;
}

}  // namespace hp
