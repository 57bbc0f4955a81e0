#include "hpseudo/sprep.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace hp {

namespace {

SparseVec dense_to_sparse(const Vec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(static_cast<long>(i), v[i]);
  return s;
}

Matrix elementary(int n, int a, int b) {
  Matrix m(n, n);
  m(a, b) = 1;
  return m;
}

}  // namespace

int SpRep::f_slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

Matrix SpRep::rho(const Matrix& A) const {
  Matrix B = (omega * A) * Q(-1);
  Matrix out(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(B(i, j))) out += F(i, j) * (-B(i, j));
  return out;
}

Matrix SpRep::rho_gl(const Matrix& A) const {
  if (!gl) throw std::logic_error("representation carries no gl action");
  Matrix out(dim, dim);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!is_zero(A(a, b))) out += (*gl)[a * n + b] * A(a, b);
  return out;
}

SpRep rep_from_gl(const LieAlgebraSpec& s, std::vector<Matrix> gl, std::string label) {
  SpRep r;
  r.n = s.dim;
  r.dim = gl.empty() ? 0 : gl[0].rows();
  r.label = std::move(label);
  r.omega = s.omega;
  r.gl = std::move(gl);
  DerivedData dd = derive_invariants(s);
  for (int i = 0; i < s.dim; ++i)
    for (int j = i; j < s.dim; ++j) r.f.push_back(r.rho_gl(f_upper(dd, i, j)));
  return r;
}

SpRep rep_from_f(const LieAlgebraSpec& s, std::vector<Matrix> f, std::string label) {
  SpRep r;
  r.n = s.dim;
  r.label = std::move(label);
  r.omega = s.omega;
  if (f.empty()) throw std::invalid_argument("no f matrices");
  if (static_cast<int>(f.size()) != s.dim * (s.dim + 1) / 2)
    throw std::invalid_argument("expected one matrix per f^{ij} with i <= j");
  r.dim = f[0].rows();
  for (const auto& m : f)
    if (m.rows() != r.dim || m.cols() != r.dim) throw std::invalid_argument("f matrices must be square of equal size");
  r.f = std::move(f);
  return r;
}

ValidationReport validate_sp_rep(const LieAlgebraSpec& s, const SpRep& r) {
  ValidationReport rep;
  DerivedData dd = derive_invariants(s);
  CheckItem br{"sp bracket relations", true, ""};
  for (int i = 0; i < s.dim && br.pass; ++i)
    for (int j = i; j < s.dim && br.pass; ++j)
      for (int k = 0; k < s.dim && br.pass; ++k)
        for (int l = k; l < s.dim && br.pass; ++l) {
          Matrix c = commutator(f_upper(dd, i, j), f_upper(dd, k, l));
          if (!(commutator(r.F(i, j), r.F(k, l)) == r.rho(c))) {
            br.pass = false;
            br.witness = "f" + std::to_string(i + 1) + std::to_string(j + 1) + ",f" + std::to_string(k + 1) +
                         std::to_string(l + 1);
          }
        }
  rep.items.push_back(br);
  return rep;
}

SpRep trivial_rep(const LieAlgebraSpec& s) {
  std::vector<Matrix> gl(s.dim * s.dim, Matrix(1, 1));
  return rep_from_gl(s, gl, "0");
}

SpRep scalar_gl_rep(const LieAlgebraSpec& s, const Q& k) {
  std::vector<Matrix> gl;
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) gl.push_back(Matrix::identity(1) * (a == b ? k / s.dim : Q(0)));
  return rep_from_gl(s, gl, "scalar");
}

SpRep vector_rep(const LieAlgebraSpec& s) {
  std::vector<Matrix> gl;
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) gl.push_back(elementary(s.dim, a, b));
  return rep_from_gl(s, gl, "d");
}

SpRep sym2_rep(const LieAlgebraSpec& s) {
  const int n = s.dim;
  std::vector<std::pair<int, int>> mon;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) mon.emplace_back(i, j);
  auto idx = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    for (size_t t = 0; t < mon.size(); ++t)
      if (mon[t] == std::make_pair(i, j)) return static_cast<int>(t);
    return -1;
  };
  std::vector<Matrix> gl;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix m(static_cast<int>(mon.size()), static_cast<int>(mon.size()));
      for (size_t t = 0; t < mon.size(); ++t) {
        auto [i, j] = mon[t];
        if (b == i) m(idx(a, j), static_cast<int>(t)) += 1;
        if (b == j) m(idx(i, a), static_cast<int>(t)) += 1;
      }
      gl.push_back(m);
    }
  return rep_from_gl(s, gl, "S2d");
}

SpRep forms_rep(const LieAlgebraSpec& s, int deg) {
  Forms F(s);
  std::vector<Matrix> gl;
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) gl.push_back(F.gl_matrix(elementary(s.dim, a, b), deg));
  return rep_from_gl(s, gl, "Omega^" + std::to_string(deg));
}

Vec Quotient::project(const Vec& v) const {
  Vec w = v;
  for (size_t r = 0; r < sub.size(); ++r) {
    Q f = w[pivots[r]];
    if (is_zero(f)) continue;
    for (int k = 0; k < ambient; ++k)
      if (!is_zero(sub[r][k])) w[k] -= f * sub[r][k];
  }
  Vec q(complement.size());
  for (size_t i = 0; i < complement.size(); ++i) q[i] = w[complement[i]];
  return q;
}

Vec Quotient::lift(const Vec& q) const {
  Vec v(ambient);
  for (size_t i = 0; i < complement.size(); ++i) v[complement[i]] = q[i];
  return v;
}

Quotient make_quotient(const std::vector<Vec>& sub, int ambient) {
  Quotient qt;
  qt.ambient = ambient;
  qt.sub = span_basis(sub, ambient);
  std::vector<bool> piv(ambient, false);
  for (const auto& r : qt.sub)
    for (int k = 0; k < ambient; ++k)
      if (!is_zero(r[k])) {
        qt.pivots.push_back(k);
        piv[k] = true;
        break;
      }
  for (int k = 0; k < ambient; ++k)
    if (!piv[k]) qt.complement.push_back(k);
  return qt;
}

std::optional<Vec> coords_in(const std::vector<Vec>& basis, const Vec& v) {
  Vec c(basis.size());
  Vec w = v;
  for (size_t r = 0; r < basis.size(); ++r) {
    int p = -1;
    for (size_t k = 0; k < basis[r].size(); ++k)
      if (!is_zero(basis[r][k])) {
        p = static_cast<int>(k);
        break;
      }
    c[r] = w[p] / basis[r][p];
    if (is_zero(c[r])) continue;
    for (size_t k = 0; k < w.size(); ++k) w[k] -= c[r] * basis[r][k];
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return c;
}

SpRep forms_quotient_rep(const LieAlgebraSpec& s, const Forms& F, int deg) {
  Quotient qt = make_quotient(F.subspace_I(deg), F.count(deg));
  DerivedData dd = derive_invariants(s);
  std::vector<Matrix> f;
  for (int a = 0; a < s.dim; ++a)
    for (int b = a; b < s.dim; ++b) {
      Matrix full = F.gl_matrix(f_upper(dd, a, b), deg);
      Matrix m(qt.dim(), qt.dim());
      for (int j = 0; j < qt.dim(); ++j) {
        Vec e(qt.dim());
        e[j] = 1;
        Vec im = qt.project(full.apply(qt.lift(e)));
        for (int i = 0; i < qt.dim(); ++i) m(i, j) = im[i];
      }
      f.push_back(m);
    }
  SpRep r = rep_from_f(s, f, "Omega^" + std::to_string(deg) + "/I^" + std::to_string(deg));
  return r;
}

SpRep forms_J_rep(const LieAlgebraSpec& s, const Forms& F, int deg) {
  std::vector<Vec> J = F.subspace_J(deg);
  int k = static_cast<int>(J.size());
  DerivedData dd = derive_invariants(s);
  std::vector<Matrix> f;
  for (int a = 0; a < s.dim; ++a)
    for (int b = a; b < s.dim; ++b) {
      Matrix full = F.gl_matrix(f_upper(dd, a, b), deg);
      Matrix m(k, k);
      for (int j = 0; j < k; ++j) {
        auto c = coords_in(J, full.apply(J[j]));
        if (!c) throw std::logic_error("J^n is not sp-stable");
        for (int i = 0; i < k; ++i) m(i, j) = (*c)[i];
      }
      f.push_back(m);
    }
  return rep_from_f(s, f, "J^" + std::to_string(deg));
}

SpRep build_fundamental_rep(const LieAlgebraSpec& s, int n) {
  if (n < 0 || n > s.N()) throw std::out_of_range("fundamental representation index out of range");
  Forms F(s);
  SpRep r = forms_J_rep(s, F, s.dim - n);
  r.label = n == 0 ? "0" : "pi" + std::to_string(n);
  return r;
}

SymplecticFrame symplectic_frame(const LieAlgebraSpec& s) {
  const int n = s.dim, N = n / 2;
  auto om = [&](const Vec& u, const Vec& v) {
    Q t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(u[i]) && !is_zero(v[j])) t += u[i] * s.omega(i, j) * v[j];
    return t;
  };
  std::vector<Vec> rest;
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    rest.push_back(e);
  }
  std::vector<Vec> ps, qs;
  while (!rest.empty()) {
    Vec u = rest.front();
    size_t k = 1;
    while (k < rest.size() && is_zero(om(u, rest[k]))) ++k;
    if (k == rest.size()) throw std::invalid_argument("omega is degenerate");
    Vec q = vec_scale(rest[k], 1 / om(u, rest[k]));
    ps.push_back(u);
    qs.push_back(q);
    std::vector<Vec> next;
    for (size_t t = 1; t < rest.size(); ++t) {
      if (t == k) continue;
      Vec w = rest[t];
      Q a = om(w, q), b = om(w, u);
      w = vec_add(vec_add(w, vec_scale(u, -a)), vec_scale(q, b));
      next.push_back(w);
    }
    rest.swap(next);
  }
  SymplecticFrame fr;
  std::vector<Vec> cols = ps;
  cols.insert(cols.end(), qs.begin(), qs.end());
  fr.P = from_cols(cols, n);
  Matrix Pinv = *inverse(fr.P);
  auto conv = [&](const Matrix& m) { return fr.P * m * Pinv; };
  auto E = [&](int a, int b) { return elementary(n, a, b); };
  for (int a = 0; a < N; ++a) fr.cartan.push_back(conv(E(a, a) - E(N + a, N + a)));
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      fr.raising.push_back(conv(E(a, b) - E(N + b, N + a)));
      fr.lowering.push_back(conv(E(b, a) - E(N + a, N + b)));
      fr.raising.push_back(conv(E(a, N + b) + E(b, N + a)));
      fr.lowering.push_back(conv(E(N + b, a) + E(N + a, b)));
    }
  for (int a = 0; a < N; ++a) {
    fr.raising.push_back(conv(E(a, N + a)));
    fr.lowering.push_back(conv(E(N + a, a)));
  }
  return fr;
}

namespace {

// Weight spaces as bases of column vectors.
std::map<std::vector<int>, std::vector<Vec>> weight_spaces(const SymplecticFrame& fr, const SpRep& r) {
  std::map<std::vector<int>, std::vector<Vec>> cur;
  std::vector<Vec> all;
  for (int i = 0; i < r.dim; ++i) {
    Vec e(r.dim);
    e[i] = 1;
    all.push_back(e);
  }
  cur[{}] = all;
  const int K = std::min(24, 2 * r.dim + 4);
  for (const auto& h : fr.cartan) {
    Matrix H = r.rho(h);
    std::map<std::vector<int>, std::vector<Vec>> next;
    for (const auto& [w, basis] : cur) {
      Matrix B = from_cols(basis, r.dim);
      int found = 0;
      for (int mu = -K; mu <= K; ++mu) {
        Matrix M = (H - Matrix::identity(r.dim) * Q(mu)) * B;
        auto ker = kernel(M);
        if (ker.empty()) continue;
        std::vector<Vec> vs;
        for (const auto& c : ker) vs.push_back(B.apply(c));
        auto w2 = w;
        w2.push_back(mu);
        next[w2] = vs;
        found += static_cast<int>(vs.size());
      }
      if (found != static_cast<int>(basis.size()))
        throw std::runtime_error("Cartan action is not diagonalizable with integral weights");
    }
    cur.swap(next);
  }
  return cur;
}

std::vector<Vec> hw_vectors(const SymplecticFrame& fr, const SpRep& r, const std::vector<Vec>& basis) {
  Matrix B = from_cols(basis, r.dim);
  std::vector<Vec> rows;
  for (const auto& e : fr.raising) {
    Matrix M = r.rho(e) * B;
    for (int i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
  }
  Matrix S = from_rows(rows, static_cast<int>(basis.size()));
  std::vector<Vec> out;
  for (const auto& c : kernel(S)) out.push_back(B.apply(c));
  return out;
}

}  // namespace

WeightMap highest_weights(const SymplecticFrame& fr, const SpRep& r) {
  WeightMap out;
  if (r.dim == 0) return out;
  for (const auto& [w, basis] : weight_spaces(fr, r)) {
    int m = static_cast<int>(hw_vectors(fr, r, basis).size());
    if (m) out[w] = m;
  }
  return out;
}

std::vector<int> fundamental_weight(int N, int n) {
  std::vector<int> w(N, 0);
  for (int i = 0; i < n; ++i) w[i] = 1;
  return w;
}

std::string weight_label(const std::vector<int>& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    int a = m[i] - (i + 1 < m.size() ? m[i + 1] : 0);
    if (!a) continue;
    if (!s.empty()) s += "+";
    if (a != 1) s += std::to_string(a);
    s += "pi" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string labels_string(const WeightMap& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, k] : w) {
    os << (first ? "" : " + ") << (k > 1 ? std::to_string(k) + "*" : "") << weight_label(m);
    first = false;
  }
  return first ? "none" : os.str();
}

std::map<std::vector<int>, std::vector<Vec>> isotypic_components(const SymplecticFrame& fr, const SpRep& r) {
  std::map<std::vector<int>, std::vector<Vec>> out;
  if (r.dim == 0) return out;
  std::vector<Matrix> low;
  for (const auto& l : fr.lowering) low.push_back(r.rho(l));
  for (const auto& [w, basis] : weight_spaces(fr, r)) {
    auto hw = hw_vectors(fr, r, basis);
    if (hw.empty()) continue;
    Eliminator el;
    std::vector<Vec> span;
    std::deque<Vec> todo(hw.begin(), hw.end());
    while (!todo.empty()) {
      Vec v = todo.front();
      todo.pop_front();
      if (!el.add(dense_to_sparse(v))) continue;
      span.push_back(v);
      for (const auto& L : low) todo.push_back(L.apply(v));
    }
    out[w] = span_basis(span, r.dim);
  }
  return out;
}

}  // namespace hp
