#include "hpseudo/complexes.hpp"

#include <stdexcept>

#include "hpseudo/parallel.hpp"

namespace hp {

DeRham::DeRham(std::shared_ptr<const Hopf> H, std::vector<Matrix> pi)
    : H_(std::move(H)), s_(H_->spec()), F_(s_), pi_(std::move(pi)) {
  if (pi_.empty()) pi_.assign(s_.dim, Matrix(1, 1));
  if (static_cast<int>(pi_.size()) != s_.dim) throw std::invalid_argument("d-module has wrong number of matrices");
  dpi_ = pi_[0].rows();
}

std::vector<Matrix> DeRham::pi_shift(const Q& t) const {
  std::vector<Matrix> out = pi_;
  for (int i = 0; i < s_.dim; ++i) out[i] += Matrix::identity(dpi_) * (t * s_.chi[i]);
  return out;
}

ModulePtr DeRham::cached(const std::string& key, const std::function<ModulePtr()>& make) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(key, make()).first->second;
}

namespace {

DPrimeModule as_dprime(const std::vector<Matrix>& act) {
  DPrimeModule m;
  m.dim = act[0].rows();
  m.act = act;
  return m;
}

std::string key(const char* kind, int n, const Q& t) { return std::string(kind) + std::to_string(n) + ":" + to_string(t); }

}  // namespace

ModulePtr DeRham::omega(int n, const Q& t) const {
  return cached(key("O", n, t), [&] {
    return make_t_module(H_, as_dprime(pi_shift(t - frac(n, 2))), forms_rep(s_, n),
                         twist_label(t - frac(n, 2), "Omega^" + std::to_string(n)));
  });
}

ModulePtr DeRham::quotient(int n, const Q& t) const {
  return cached(key("Q", n, t), [&] {
    return make_t_module(H_, as_dprime(pi_shift(t - frac(n, 2))), forms_quotient_rep(s_, F_, n),
                         twist_label(t - frac(n, 2), "R(pi" + std::to_string(n) + ")"));
  });
}

ModulePtr DeRham::jpart(int n, const Q& t) const {
  return cached(key("J", n, t), [&] {
    return make_t_module(H_, as_dprime(pi_shift(t - frac(n, 2))), forms_J_rep(s_, F_, n),
                         twist_label(t - frac(n, 2), "R(pi" + std::to_string(s_.dim - n) + ")"));
  });
}

ModElem DeRham::d_form(int n, const Q& t, int p, const Vec& alpha) const {
  const int D1 = F_.count(n + 1);
  std::vector<Matrix> rho = pi_shift(t);
  FormElement a{n, alpha};
  ModElem out;
  FormElement da = F_.d0(a);
  for (int j = 0; j < D1; ++j) out.add(MI{}, p * D1 + j, da.c[j]);
  for (int k = 0; k < s_.dim; ++k) {
    FormElement b = F_.wedge(F_.basis(1, k), a);
    for (int j = 0; j < D1; ++j) {
      if (is_zero(b.c[j])) continue;
      out.add(MI::unit(k), p * D1 + j, -b.c[j]);
      for (int p2 = 0; p2 < dpi_; ++p2)
        if (!is_zero(rho[k](p2, p))) out.add(MI{}, p2 * D1 + j, rho[k](p2, p) * b.c[j]);
    }
  }
  return out;
}

ModElem DeRham::regroup(const ModElem& x, int from_dim, int to_dim, const std::function<Vec(const Vec&)>& f) const {
  std::map<std::pair<MI, int>, Vec> groups;
  for (const auto& [k, q] : x.t) {
    auto& v = groups[{k.first, k.second / from_dim}];
    if (v.empty()) v.assign(from_dim, Q(0));
    v[k.second % from_dim] = q;
  }
  ModElem out;
  for (const auto& [g, v] : groups) {
    Vec w = f(v);
    for (int j = 0; j < to_dim; ++j) out.add(g.first, g.second * to_dim + j, w[j]);
  }
  return out;
}

ModuleMap DeRham::d(int n, const Q& t) const {
  ModuleMap m;
  m.src = omega(n, t);
  m.dst = omega(n + 1, t);
  m.label = "d^" + std::to_string(n + 1);
  const int D = F_.count(n);
  for (int p = 0; p < dpi_; ++p)
    for (int a = 0; a < D; ++a) m.images.push_back(d_form(n, t, p, F_.basis(n, a).c));
  return m;
}

ModuleMap DeRham::d_quotient(int n, const Q& t) const {
  ModuleMap m;
  m.src = quotient(n, t);
  m.dst = quotient(n + 1, t);
  m.label = "d^" + std::to_string(n + 1);
  Quotient q0 = make_quotient(F_.subspace_I(n), F_.count(n));
  Quotient q1 = make_quotient(F_.subspace_I(n + 1), F_.count(n + 1));
  for (int p = 0; p < dpi_; ++p)
    for (int c = 0; c < q0.dim(); ++c) {
      Vec e(q0.dim());
      e[c] = 1;
      ModElem y = d_form(n, t, p, q0.lift(e));
      m.images.push_back(regroup(y, F_.count(n + 1), q1.dim(), [&](const Vec& v) { return q1.project(v); }));
    }
  return m;
}

namespace {

Vec j_coords(const std::vector<Vec>& J, const Vec& v) {
  auto c = coords_in(J, v);
  if (!c) throw std::logic_error("form is not in J");
  return *c;
}

}  // namespace

ModuleMap DeRham::d_j(int n, const Q& t) const {
  ModuleMap m;
  m.src = jpart(n, t);
  m.dst = jpart(n + 1, t);
  m.label = "d^" + std::to_string(n + 1);
  std::vector<Vec> J0 = F_.subspace_J(n), J1 = F_.subspace_J(n + 1);
  for (int p = 0; p < dpi_; ++p)
    for (const Vec& b : J0) {
      ModElem y = d_form(n, t, p, b);
      m.images.push_back(regroup(y, F_.count(n + 1), static_cast<int>(J1.size()),
                                 [&](const Vec& v) { return j_coords(J1, v); }));
    }
  return m;
}

ModuleMap DeRham::psi_chi(int n, const Q& t) const {
  ModuleMap m;
  m.src = omega(n, t);
  m.dst = omega(n + 2, t + 1);
  m.shift = 0;
  m.label = "Psi_chi";
  Matrix P = F_.psi_matrix(n);
  const int D = F_.count(n), D2 = F_.count(n + 2);
  for (int p = 0; p < dpi_; ++p)
    for (int a = 0; a < D; ++a) {
      ModElem img;
      for (int j = 0; j < D2; ++j) img.add(MI{}, p * D2 + j, P(j, a));
      m.images.push_back(img);
    }
  return m;
}

ModuleMap DeRham::rumin(const Q& t) const {
  const int N = this->N();
  ModuleMap m;
  m.src = quotient(N, t);
  m.dst = jpart(N, t - 1);
  m.shift = 2;
  m.label = "d^R";
  Quotient q = make_quotient(F_.subspace_I(N), F_.count(N));
  std::vector<Vec> J = F_.subspace_J(N);
  auto inv = inverse(F_.psi_matrix(N - 1));
  if (!inv) throw std::logic_error("Psi is not invertible in the middle degree");
  ModuleMap dlow = d(N - 1, t - 1);
  for (int p = 0; p < dpi_; ++p)
    for (int c = 0; c < q.dim(); ++c) {
      Vec e(q.dim());
      e[c] = 1;
      ModElem da = d_form(N, t, p, q.lift(e));
      ModElem beta = regroup(da, F_.count(N + 1), F_.count(N - 1), [&](const Vec& v) { return inv->apply(v); });
      ModElem z = dlow.apply(beta);
      m.images.push_back(regroup(z, F_.count(N), static_cast<int>(J.size()), [&](const Vec& v) { return j_coords(J, v); }));
    }
  return m;
}

ModElem DeRham::lift_quotient(int n, const ModElem& x) const {
  Quotient q = make_quotient(F_.subspace_I(n), F_.count(n));
  return regroup(x, q.dim(), F_.count(n), [&](const Vec& v) { return q.lift(v); });
}

ModElem DeRham::lift_j(int n, const ModElem& x) const {
  std::vector<Vec> J = F_.subspace_J(n);
  const int D = F_.count(n);
  return regroup(x, static_cast<int>(J.size()), D, [&](const Vec& v) {
    Vec out(D);
    for (size_t i = 0; i < J.size(); ++i)
      if (!is_zero(v[i])) out = vec_add(out, vec_scale(J[i], v[i]));
    return out;
  });
}

Complex DeRham::pseudo_de_rham(const Q& t) const {
  Complex c;
  for (int n = 0; n <= s_.dim; ++n) {
    c.terms.push_back(omega(n, t));
    c.labels.push_back(omega(n, t)->label());
    if (n < s_.dim) c.maps.push_back(d(n, t));
  }
  return c;
}

Complex DeRham::csdr() const {
  const int N = this->N();
  Complex c;
  for (int n = 0; n <= N; ++n) {
    c.terms.push_back(quotient(n, 0));
    if (n < N) c.maps.push_back(d_quotient(n, 0));
  }
  c.maps.push_back(rumin(0));
  for (int n = N; n <= 2 * N; ++n) {
    c.terms.push_back(jpart(n, -1));
    if (n < 2 * N) c.maps.push_back(d_j(n, -1));
  }
  for (const auto& t : c.terms) c.labels.push_back(t->label());
  return c;
}

ModuleMap de_rham_d(const DeRham& dr, int n) { return dr.d(n, 0); }
ModuleMap psi_chi_map(const DeRham& dr, int n) { return dr.psi_chi(n, 0); }
ModuleMap rumin_map(const DeRham& dr) { return dr.rumin(0); }
Complex build_csdr_complex(const DeRham& dr) { return dr.csdr(); }

bool ExactnessReport::exact_at(int term) const {
  for (const auto& r : rows)
    if (r.term == term && !r.exact) return false;
  return true;
}

ExactnessReport exactness_check(const Complex& c, int cap, const std::vector<int>& terms) {
  ExactnessReport rep;
  for (size_t t = 0; t + 1 < c.maps.size(); ++t)
    if (!compose(c.maps[t + 1], c.maps[t]).is_zero()) rep.zero_compositions = false;
  const int n = c.terms[0]->hopf().dim();
  for (int t : terms)
    for (int k = 0; k <= cap; ++k) {
      ExactnessRow row;
      row.term = t;
      row.degree = k;
      int size = FilBasis(n, k, c.terms[t]->dim0()).size();
      row.kernel = t < static_cast<int>(c.maps.size()) ? size - rank(c.maps[t].block(k)) : size;
      if (t > 0) {
        int kin = k - c.maps[t - 1].shift;
        row.image = kin >= 0 ? rank(c.maps[t - 1].block(kin)) : 0;
      }
      row.exact = row.kernel == row.image;
      rep.rows.push_back(row);
    }
  return rep;
}

std::vector<int> cokernel_profile(const Complex& c, int cap) {
  const int n = c.terms[0]->hopf().dim();
  const ModuleMap& last = c.maps.back();
  std::vector<int> out;
  for (int k = 0; k <= cap; ++k) {
    int size = FilBasis(n, k, c.terms.back()->dim0()).size();
    int kin = k - last.shift;
    out.push_back(size - (kin >= 0 ? rank(last.block(kin)) : 0));
  }
  return out;
}

std::string twist_label(const Q& coeff, const std::string& rep) {
  std::string pi = "Pi";
  if (coeff != 0) {
    std::string c = coeff == -1 ? "-" : coeff == 1 ? "" : to_string(coeff);
    pi += "_{" + c + "chi}";
  }
  return "T(" + pi + "," + rep + ")";
}

}  // namespace hp
