#include "hpseudo/algebra_data.hpp"

#include <sstream>

namespace hp {

namespace {

std::string triple(int i, int j, int k) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
  return os.str();
}

std::string pair(int i, int j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(std::string n, int d)
    : name(std::move(n)), dim(d), c(static_cast<size_t>(d) * d * d), chi(d), omega(d, d) {}

void LieAlgebraSpec::set_bracket(int i, int j, int k, const Q& v) {
  c[(static_cast<size_t>(i) * dim + j) * dim + k] = v;
  c[(static_cast<size_t>(j) * dim + i) * dim + k] = -v;
}

bool LieAlgebraSpec::abelian() const {
  for (const auto& x : c)
    if (!is_zero(x)) return false;
  return true;
}

bool LieAlgebraSpec::chi_zero() const { return vec_is_zero(chi); }

bool ValidationReport::ok() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return it.name + (it.witness.empty() ? "" : " at " + it.witness);
  return "";
}

ValidationReport validate_spec(const LieAlgebraSpec& s) {
  ValidationReport rep;
  const int n = s.dim;
  CheckItem even{"even dimension", n >= 2 && n % 2 == 0 && n <= 8, ""};
  if (!even.pass) even.witness = "dim=" + std::to_string(n);
  rep.items.push_back(even);
  if (!even.pass) return rep;

  CheckItem anti{"antisymmetry", true, ""};
  for (int i = 0; i < n && anti.pass; ++i)
    for (int j = 0; j < n && anti.pass; ++j)
      for (int k = 0; k < n && anti.pass; ++k)
        if (s.C(i, j, k) != -s.C(j, i, k)) {
          anti.pass = false;
          anti.witness = triple(i, j, k);
        }
  rep.items.push_back(anti);

  CheckItem jac{"jacobi", true, ""};
  for (int i = 0; i < n && jac.pass; ++i)
    for (int j = i + 1; j < n && jac.pass; ++j)
      for (int k = j + 1; k < n && jac.pass; ++k)
        for (int l = 0; l < n && jac.pass; ++l) {
          Q t = 0;
          for (int m = 0; m < n; ++m)
            t += s.C(i, j, m) * s.C(m, k, l) + s.C(j, k, m) * s.C(m, i, l) + s.C(k, i, m) * s.C(m, j, l);
          if (!is_zero(t)) {
            jac.pass = false;
            jac.witness = triple(i, j, k);
          }
        }
  rep.items.push_back(jac);

  CheckItem tr{"trace form", true, ""};
  for (int i = 0; i < n && tr.pass; ++i)
    for (int j = 0; j < n && tr.pass; ++j) {
      Q t = 0;
      for (int k = 0; k < n; ++k) t += s.C(i, j, k) * s.chi[k];
      if (!is_zero(t)) {
        tr.pass = false;
        tr.witness = pair(i, j);
      }
    }
  rep.items.push_back(tr);

  CheckItem skew{"omega skew", true, ""};
  for (int i = 0; i < n && skew.pass; ++i)
    for (int j = 0; j < n && skew.pass; ++j)
      if (s.omega(i, j) != -s.omega(j, i)) {
        skew.pass = false;
        skew.witness = pair(i, j);
      }
  rep.items.push_back(skew);

  CheckItem inv{"omega invertible", inverse(s.omega).has_value(), ""};
  rep.items.push_back(inv);

  CheckItem cyc{"omega-chi cocycle", true, ""};
  auto term = [&](int a, int b, int c3) -> Q {
    Q t = 0;
    for (int k = 0; k < n; ++k) t += s.C(a, b, k) * s.omega(k, c3);
    return t - s.chi[a] * s.omega(b, c3);
  };
  for (int i = 0; i < n && cyc.pass; ++i)
    for (int j = 0; j < n && cyc.pass; ++j)
      for (int k = 0; k < n && cyc.pass; ++k)
        if (!is_zero(term(i, j, k) + term(j, k, i) + term(k, i, j))) {
          cyc.pass = false;
          cyc.witness = triple(i, j, k);
        }
  rep.items.push_back(cyc);
  return rep;
}

DerivedData derive_invariants(const LieAlgebraSpec& s) {
  const int n = s.dim;
  DerivedData d;
  auto r = inverse(s.omega);
  if (!r) throw std::invalid_argument("omega is singular");
  d.r = *r;
  d.s.assign(n, 0);
  d.rho.assign(n, 0);
  d.phi.assign(n, 0);
  d.chi_up.assign(n, 0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      d.s[k] += s.chi[i] * d.r(i, k);
      d.chi_up[k] += d.r(k, i) * s.chi[i];
      for (int j = 0; j < n; ++j) d.rho[k] += d.r(i, j) * s.C(i, j, k) / 2;
    }
  for (int a = 0; a < n; ++a) {
    d.phi[a] = -s.chi[a];
    for (int m = 0; m < n; ++m) d.phi[a] += d.rho[m] * s.omega(m, a);
  }
  for (int i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(k, j) = s.C(i, j, k);
    d.ad.push_back(m);
  }
  for (int k = 0; k < n; ++k) {
    Matrix A(n, n);
    for (int i = 0; i < n; ++i) A += d.ad[i] * d.r(k, i);
    for (int m = 0; m < n; ++m)
      for (int j = 0; j < n; ++j) A(m, j) += d.r(k, m) * s.chi[j];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(s.C(i, j, k))) A += e_upper(d, i, j) * (s.C(i, j, k) / 2);
    A += Matrix::identity(n) * (-d.chi_up[k] / 2);
    d.adsp.push_back(A);
  }
  return d;
}

Matrix e_upper(const DerivedData& dd, int i, int j) {
  int n = dd.r.rows();
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, j) = dd.r(i, k);
  return m;
}

Matrix f_upper(const DerivedData& dd, int i, int j) {
  return (e_upper(dd, i, j) + e_upper(dd, j, i)) * Q(-1, 2);
}

Matrix sp_coords(const LieAlgebraSpec& s, const Matrix& A) { return (s.omega * A) * Q(-1); }

bool in_sp(const LieAlgebraSpec& s, const Matrix& A) {
  Matrix B = sp_coords(s, A);
  return B == B.transpose();
}

ZetaResult solve_frobenius_splitting(const LieAlgebraSpec& s) {
  const int n = s.dim;
  std::vector<Vec> rows;
  Vec rhs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec row(n);
      for (int k = 0; k < n; ++k) row[k] = -s.C(i, j, k);
      rows.push_back(row);
      rhs.push_back(s.omega(i, j));
    }
  Matrix A = from_rows(rows, n);
  ZetaResult z;
  auto sol = solve(A, rhs);
  if (!sol) return z;
  z.exists = true;
  z.zeta = *sol;
  z.unique = rank(A) == n;
  return z;
}

DPrimeModule DPrimeModule::trivial(int n) {
  DPrimeModule m;
  m.dim = 1;
  m.act.assign(n, Matrix(1, 1));
  return m;
}

DPrimeModule DPrimeModule::shifted(const Vec& psi) const {
  DPrimeModule m = *this;
  for (size_t i = 0; i < m.act.size(); ++i) m.act[i] += Matrix::identity(dim) * psi[i];
  return m;
}

ValidationReport validate_dprime_module(const LieAlgebraSpec& s, const DPrimeModule& m) {
  ValidationReport rep;
  const int n = s.dim;
  CheckItem shape{"shape", static_cast<int>(m.act.size()) == n, ""};
  for (const auto& a : m.act)
    if (a.rows() != m.dim || a.cols() != m.dim) shape.pass = false;
  rep.items.push_back(shape);
  if (!shape.pass) return rep;
  CheckItem br{"bracket relation", true, ""};
  for (int i = 0; i < n && br.pass; ++i)
    for (int j = i + 1; j < n && br.pass; ++j) {
      Matrix rhs = Matrix::identity(m.dim) * (s.omega(i, j) * m.lambda);
      for (int k = 0; k < n; ++k) rhs += m.act[k] * s.C(i, j, k);
      if (!(commutator(m.act[i], m.act[j]) == rhs)) {
        br.pass = false;
        br.witness = pair(i, j);
      }
    }
  rep.items.push_back(br);
  CheckItem cen{"central compatibility", m.lambda == 0 || s.chi_zero(), ""};
  rep.items.push_back(cen);
  return rep;
}

LieAlgebraSpec spec_A2() {
  LieAlgebraSpec s("A2", 2);
  s.omega(0, 1) = 1;
  s.omega(1, 0) = -1;
  return s;
}

LieAlgebraSpec spec_F2() {
  LieAlgebraSpec s = spec_A2();
  s.name = "F2";
  s.set_bracket(0, 1, 0, 1);
  return s;
}

LieAlgebraSpec spec_X2() {
  LieAlgebraSpec s = spec_F2();
  s.name = "X2";
  s.chi[1] = 1;
  return s;
}

LieAlgebraSpec spec_A4() {
  LieAlgebraSpec s("A4", 4);
  s.omega(0, 1) = 1;
  s.omega(1, 0) = -1;
  s.omega(2, 3) = 1;
  s.omega(3, 2) = -1;
  return s;
}

LieAlgebraSpec spec_F4() {
  LieAlgebraSpec s = spec_A4();
  s.name = "F4";
  s.set_bracket(0, 1, 0, 1);
  s.set_bracket(2, 3, 2, 1);
  return s;
}

std::vector<LieAlgebraSpec> battery() { return {spec_A2(), spec_F2(), spec_X2(), spec_A4(), spec_F4()}; }

LieAlgebraSpec permute_basis(const LieAlgebraSpec& s, const std::vector<int>& p) {
  LieAlgebraSpec t(s.name, s.dim);
  for (int i = 0; i < s.dim; ++i) {
    t.chi[i] = s.chi[p[i]];
    for (int j = 0; j < s.dim; ++j) {
      t.omega(i, j) = s.omega(p[i], p[j]);
      for (int k = 0; k < s.dim; ++k)
        t.c[(static_cast<size_t>(i) * s.dim + j) * s.dim + k] = s.C(p[i], p[j], p[k]);
    }
  }
  return t;
}

}  // namespace hp
