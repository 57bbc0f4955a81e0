#include "hpseudo/forms.hpp"

#include <algorithm>
#include <bit>

namespace hp {

namespace {

std::vector<int> members(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) v.push_back(i);
  return v;
}

// Sign of the permutation sorting idx; 0 on repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j] == idx[j + 1]) return 0;
  return sign;
}

}  // namespace

Forms::Forms(const LieAlgebraSpec& s) : s_(s), n_(s.dim), subsets_(s.dim + 1), index_(1u << s.dim, -1) {
  for (unsigned m = 0; m < (1u << n_); ++m) subsets_[std::popcount(m)].push_back(m);
  for (auto& v : subsets_) {
    std::sort(v.begin(), v.end(), [](unsigned a, unsigned b) { return members(a) < members(b); });
    for (size_t i = 0; i < v.size(); ++i) index_[v[i]] = static_cast<int>(i);
  }
}

int Forms::count(int deg) const {
  if (deg < 0 || deg > n_) return 0;
  return static_cast<int>(subsets_[deg].size());
}

std::string Forms::label(int deg, int idx) const {
  if (deg == 0) return "1";
  std::string s;
  for (int i : members(subsets_[deg][idx])) s += (s.empty() ? "x" : "^x") + std::to_string(i + 1);
  return s;
}

FormElement Forms::basis(int deg, int idx) const {
  FormElement f = zero(deg);
  f.c[idx] = 1;
  return f;
}

Q Forms::eval(const FormElement& a, const std::vector<int>& idx) const {
  std::vector<int> t = idx;
  int sg = sort_sign(t);
  if (!sg) return 0;
  unsigned mask = 0;
  for (int i : t) mask |= 1u << i;
  return sg > 0 ? a.c[index_[mask]] : -a.c[index_[mask]];
}

FormElement Forms::wedge(const FormElement& a, const FormElement& b) const {
  FormElement r = zero(a.deg + b.deg);
  if (a.deg + b.deg > n_) return r;
  for (int i = 0; i < count(a.deg); ++i) {
    if (is_zero(a.c[i])) continue;
    unsigned K = subsets_[a.deg][i];
    for (int j = 0; j < count(b.deg); ++j) {
      if (is_zero(b.c[j])) continue;
      unsigned L = subsets_[b.deg][j];
      if (K & L) continue;
      std::vector<int> t = members(K);
      for (int x : members(L)) t.push_back(x);
      int sg = sort_sign(t);
      r.c[index_[K | L]] += sg * a.c[i] * b.c[j];
    }
  }
  return r;
}

FormElement Forms::d0(const FormElement& a) const {
  FormElement r = zero(a.deg + 1);
  if (a.deg + 1 > n_) return r;
  for (int idx = 0; idx < count(a.deg + 1); ++idx) {
    std::vector<int> k = members(subsets_[a.deg + 1][idx]);
    Q v = 0;
    for (size_t i = 0; i < k.size(); ++i)
      for (size_t j = i + 1; j < k.size(); ++j) {
        std::vector<int> rest;
        for (size_t t = 0; t < k.size(); ++t)
          if (t != i && t != j) rest.push_back(k[t]);
        Q part = 0;
        for (int m = 0; m < n_; ++m) {
          const Q& c = s_.C(k[i], k[j], m);
          if (is_zero(c)) continue;
          std::vector<int> tup{m};
          tup.insert(tup.end(), rest.begin(), rest.end());
          part += c * eval(a, tup);
        }
        v += (i + j) % 2 ? -part : part;
      }
    r.c[idx] = v;
  }
  return r;
}

FormElement Forms::contract(const Vec& v, const FormElement& a) const {
  FormElement r = zero(a.deg - 1);
  if (a.deg == 0) return r;
  for (int idx = 0; idx < count(a.deg - 1); ++idx) {
    std::vector<int> k = members(subsets_[a.deg - 1][idx]);
    Q x = 0;
    for (int m = 0; m < n_; ++m) {
      if (is_zero(v[m])) continue;
      std::vector<int> tup{m};
      tup.insert(tup.end(), k.begin(), k.end());
      x += v[m] * eval(a, tup);
    }
    r.c[idx] = x;
  }
  return r;
}

FormElement Forms::gl_act(const Matrix& A, const FormElement& a) const {
  FormElement r = zero(a.deg);
  for (int idx = 0; idx < count(a.deg); ++idx) {
    std::vector<int> k = members(subsets_[a.deg][idx]);
    Q x = 0;
    for (size_t t = 0; t < k.size(); ++t)
      for (int m = 0; m < n_; ++m) {
        const Q& coef = A(m, k[t]);
        if (is_zero(coef)) continue;
        std::vector<int> tup = k;
        tup[t] = m;
        x -= coef * eval(a, tup);
      }
    r.c[idx] = x;
  }
  return r;
}

FormElement Forms::omega_form() const {
  FormElement w = zero(2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) w.c[index_[(1u << i) | (1u << j)]] = s_.omega(i, j);
  return w;
}

FormElement Forms::chi_form() const {
  FormElement w = zero(1);
  for (int i = 0; i < n_; ++i) w.c[i] = s_.chi[i];
  return w;
}

Matrix Forms::psi_matrix(int deg) const {
  Matrix m(count(deg + 2), count(deg));
  for (int j = 0; j < count(deg); ++j) {
    FormElement im = psi(basis(deg, j));
    for (int i = 0; i < count(deg + 2); ++i) m(i, j) = im.c[i];
  }
  return m;
}

Matrix Forms::gl_matrix(const Matrix& A, int deg) const {
  Matrix m(count(deg), count(deg));
  for (int j = 0; j < count(deg); ++j) {
    FormElement im = gl_act(A, basis(deg, j));
    for (int i = 0; i < count(deg); ++i) m(i, j) = im.c[i];
  }
  return m;
}

Matrix Forms::d0_matrix(int deg) const {
  Matrix m(count(deg + 1), count(deg));
  for (int j = 0; j < count(deg); ++j) {
    FormElement im = d0(basis(deg, j));
    for (int i = 0; i < count(deg + 1); ++i) m(i, j) = im.c[i];
  }
  return m;
}

std::vector<Vec> Forms::subspace_I(int deg) const {
  if (deg < 2) return {};
  Matrix p = psi_matrix(deg - 2);
  std::vector<Vec> cols;
  for (int j = 0; j < p.cols(); ++j) cols.push_back(p.col(j));
  return span_basis(cols, count(deg));
}

std::vector<Vec> Forms::subspace_J(int deg) const {
  if (deg + 2 > n_) {
    std::vector<Vec> all;
    for (int i = 0; i < count(deg); ++i) all.push_back(basis(deg, i).c);
    return all;
  }
  return span_basis(kernel(psi_matrix(deg)), count(deg));
}

Matrix Forms::psi_power_iso(int m) const {
  int N = n_ / 2;
  Matrix acc = Matrix::identity(count(N - m));
  for (int t = 0; t < m; ++t) acc = psi_matrix(N - m + 2 * t) * acc;
  return acc;
}

}  // namespace hp
