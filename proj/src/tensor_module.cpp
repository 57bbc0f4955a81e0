#include "hpseudo/tensor_module.hpp"

#include <stdexcept>

#include "hpseudo/parallel.hpp"

namespace hp {

Matrix rep_of(const Hopf& H, const std::vector<Matrix>& act, MI m) {
  int d = act.empty() ? 1 : act[0].rows();
  Matrix out = Matrix::identity(d);
  for (int k = 0; k < H.dim(); ++k)
    for (int e = 1; e <= m[k]; ++e) out = out * act[k] * Q(1, e);
  return out;
}

Matrix rep_of(const Hopf& H, const std::vector<Matrix>& act, const HElement& h) {
  int d = act.empty() ? 1 : act[0].rows();
  Matrix out(d, d);
  for (const auto& [m, q] : h.t) out += rep_of(H, act, m) * q;
  return out;
}

PseudoModule::PseudoModule(std::shared_ptr<const Hopf> H, int dim0, std::string label)
    : H_(std::move(H)), dim0_(dim0), label_(std::move(label)), cache_(dim0) {}

const T2& PseudoModule::act_gen(int v) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_[v]) return *cache_[v];
  }
  T2 x = compute_gen(v);
  std::lock_guard<std::mutex> lock(mu_);
  if (!cache_[v]) cache_[v] = std::move(x);
  return *cache_[v];
}

T2 PseudoModule::act_elem(const ModElem& x) const {
  T2 out;
  for (const auto& [k, q] : x.t) {
    const T2& g = act_gen(k.second);
    if (k.first.zero()) {
      out += g * q;
    } else {
      out += mul_left(*H_, HElement::one(), HElement::basis(k.first, q), g);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

VModule::VModule(std::shared_ptr<const Hopf> H, DPrimeModule pi, SpRep U, std::string label)
    : PseudoModule(H, pi.dim * U.dim, std::move(label)),
      pi_(std::move(pi)),
      U_(std::move(U)),
      dd_(derive_invariants(H->spec())) {}

Matrix VModule::rho_d(int l) const { return kron(pi_.act[l], Matrix::identity(U_.dim)); }

Matrix VModule::rho_d_upper(int k) const {
  int n = hopf().dim();
  Matrix a(pi_.dim, pi_.dim);
  for (int l = 0; l < n; ++l)
    if (!is_zero(dd_.r(k, l))) a += pi_.act[l] * dd_.r(k, l);
  return kron(a, Matrix::identity(U_.dim));
}

Matrix VModule::rho_f(int i, int j) const { return kron(Matrix::identity(pi_.dim), U_.F(i, j)); }

Matrix VModule::rho_sp(const Matrix& A) const { return kron(Matrix::identity(pi_.dim), U_.rho(A)); }

Matrix VModule::rho_c() const { return Matrix::identity(dim0()) * pi_.lambda; }

namespace {

void add_column(T2& out, const HElement& f, const HElement& g, const Matrix& M, int v, const Q& scale) {
  for (int w = 0; w < M.rows(); ++w)
    if (!is_zero(M(w, v))) add_simple(out, f, g, w, scale * M(w, v));
}

}  // namespace

T2 VModule::compute_gen(int v) const {
  const Hopf& H = hopf();
  int n = H.dim();
  T2 out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) add_column(out, H.mul(H.gen_bar(i), H.gen_bar(j)), HElement::one(), rho_f(i, j), v, 1);
  for (int k = 0; k < n; ++k) {
    HElement gb = H.gen_bar(k);
    add_column(out, gb, HElement::one(), rho_d_upper(k) + rho_sp(dd_.adsp[k]), v, -1);
    ModElem up;
    for (int l = 0; l < n; ++l) up.add(MI::unit(l), v, dd_.r(k, l));
    out += two_sided(H, gb, HElement::one(), up);
  }
  add_simple(out, HElement::one(), HElement::one(), v, pi_.lambda);
  return out;
}

std::shared_ptr<const VModule> make_v_module(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, const SpRep& U,
                                             const std::string& label) {
  if (static_cast<int>(pi.act.size()) != H->dim()) throw std::invalid_argument("d'-module has wrong number of matrices");
  if (pi.lambda != 0) {
    if (!H->spec().chi_zero()) throw std::invalid_argument("central character requires chi = 0");
    if (!solve_frobenius_splitting(H->spec()).exists)
      throw std::invalid_argument("central character requires omega = d0(zeta)");
  }
  return std::make_shared<VModule>(std::move(H), pi, U, label);
}

std::shared_ptr<const VModule> make_t_module(std::shared_ptr<const Hopf> H, const DPrimeModule& pi, const SpRep& U,
                                             const std::string& label) {
  DerivedData dd = derive_invariants(H->spec());
  Vec minus_phi = vec_scale(dd.phi, Q(-1));
  return make_v_module(std::move(H), pi.shifted(minus_phi), U, label);
}

// ---------------------------------------------------------------------------

WRestricted::WRestricted(std::shared_ptr<const Hopf> H, DPrimeModule pi, SpRep U)
    : PseudoModule(H, pi.dim * U.dim, "W-restricted"),
      pi_(std::move(pi)),
      U_(std::move(U)),
      dd_(derive_invariants(H->spec())) {
  if (!U_.has_gl()) throw std::invalid_argument("W(d)-tensor module needs a gl(d)-module");
}

T2 WRestricted::w_act_gen(int i, int v) const {
  int n = hopf().dim();
  Matrix Ip = Matrix::identity(pi_.dim), Iu = Matrix::identity(U_.dim);
  T2 out;
  add_simple(out, HElement::one(), HElement::basis(MI::unit(i)), v, -1);
  Matrix cur = kron(pi_.act[i], Iu) + kron(Ip, U_.rho_gl(dd_.ad[i]));
  add_column(out, HElement::one(), HElement::one(), cur, v, 1);
  for (int j = 0; j < n; ++j) {
    Matrix E(n, n);
    E(i, j) = 1;
    add_column(out, hopf().gen(j), HElement::one(), kron(Ip, U_.rho_gl(E)), v, 1);
  }
  return out;
}

T2 WRestricted::compute_gen(int v) const {
  T2 out;
  for (const auto& [k, q] : iota_embed(hopf(), dd_).t)
    out += mul_left(hopf(), HElement::basis(k.first, q), HElement::one(), w_act_gen(k.second, v));
  return out;
}

// ---------------------------------------------------------------------------

TwistedModule::TwistedModule(std::vector<Matrix> pi_act, ModulePtr base)
    : PseudoModule(base->hopf_ptr(), (pi_act.empty() ? 1 : pi_act[0].rows()) * base->dim0(), "T_Pi(" + base->label() + ")"),
      pi_(std::move(pi_act)),
      dpi_(pi_.empty() ? 1 : pi_[0].rows()),
      base_(std::move(base)) {}

T2 TwistedModule::compute_gen(int idx) const {
  const Hopf& H = hopf();
  int d0 = base_->dim0();
  int p = idx / d0, i = idx % d0;
  T2 out;
  std::map<uint64_t, CoproductTerms> cps;
  for (const auto& [k, q] : base_->act_gen(i).t) {
    MI g{k.m[1]};
    auto it = cps.find(g.code);
    if (it == cps.end()) it = cps.emplace(g.code, H.coproduct(HElement::basis(g))).first;
    for (const auto& [pr, c] : it->second) {
      Matrix S = rep_of(H, pi_, H.antipode(HElement::basis(pr.second)));
      for (int p2 = 0; p2 < dpi_; ++p2)
        if (!is_zero(S(p2, p))) out.add(TKey<2>{{k.m[0], pr.first.code}, p2 * d0 + k.v}, q * c * S(p2, p));
    }
  }
  return out;
}

ModulePtr twist_module(const std::vector<Matrix>& pi_act, ModulePtr base) {
  return std::make_shared<TwistedModule>(pi_act, std::move(base));
}

bool same_action(const PseudoModule& a, const PseudoModule& b) {
  if (a.dim0() != b.dim0()) return false;
  for (int v = 0; v < a.dim0(); ++v)
    if (!(a.act_gen(v) == b.act_gen(v))) return false;
  return true;
}

bool check_module_axiom(const PseudoModule& M, const ModElem& v) {
  const Hopf& H = M.hopf();
  DerivedData dd = derive_invariants(H.spec());
  T2 ev = M.act_elem(v);
  T3 lhs = compose_outer(H, h_generator_bracket(H, dd), [&](int) { return ev; });
  T3 x = compose_inner(H, ev, [&](int m) { return M.act_gen(m); });
  return lhs == x - swap12(x);
}

bool check_module_axiom_generators(const PseudoModule& M) {
  std::vector<char> ok(M.dim0(), 0);
  parallel_for(M.dim0(), [&](int v) { ok[v] = check_module_axiom(M, ModElem::gen(v)); });
  for (char c : ok)
    if (!c) return false;
  return true;
}

// ---------------------------------------------------------------------------

FilBasis::FilBasis(int n, int k_, int dim0_) : k(k_), dim0(dim0_) {
  if (k >= 0) mis = multi_indices_upto(n, k);
  for (size_t i = 0; i < mis.size(); ++i) pos[mis[i]] = static_cast<int>(i);
}

int FilBasis::index(MI m, int v) const {
  auto it = pos.find(m);
  return it == pos.end() ? -1 : it->second * dim0 + v;
}

ModElem FilBasis::element(int idx) const {
  ModElem x;
  x.add(mis[idx / dim0], idx % dim0, 1);
  return x;
}

Vec FilBasis::coords(const ModElem& x) const {
  Vec c(size());
  for (const auto& [k_, q] : x.t) {
    int i = index(k_.first, k_.second);
    if (i < 0) throw std::out_of_range("element outside the filtration piece");
    c[i] = q;
  }
  return c;
}

ModElem ModuleMap::apply(const ModElem& x) const {
  const Hopf& H = src->hopf();
  ModElem out;
  for (const auto& [k, q] : x.t) {
    if (k.first.zero())
      out += images[k.second] * q;
    else
      out += h_times(H, HElement::basis(k.first, q), images[k.second]);
  }
  return out;
}

Matrix ModuleMap::block(int k) const {
  int n = src->hopf().dim();
  FilBasis sb(n, k, src->dim0()), tb(n, k + shift, dst->dim0());
  std::vector<Vec> cols(sb.size());
  parallel_for(sb.size(), [&](int j) { cols[j] = tb.coords(apply(sb.element(j))); });
  return from_cols(cols, tb.size());
}

bool ModuleMap::is_zero() const {
  for (const auto& x : images)
    if (!x.zero()) return false;
  return true;
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
  ModuleMap m;
  m.src = first.src;
  m.dst = second.dst;
  m.shift = first.shift + second.shift;
  m.label = second.label + "∘" + first.label;
  for (const auto& x : first.images) m.images.push_back(second.apply(x));
  return m;
}

T2 push_forward(const Hopf& H, const T2& x, const ModuleMap& m) {
  T2 out;
  for (const auto& [k, q] : x.t)
    out += two_sided(H, HElement::basis(MI{k.m[0]}, q), HElement::basis(MI{k.m[1]}), m.images[k.v]);
  return out;
}

bool check_homomorphism(const ModuleMap& m) {
  const Hopf& H = m.src->hopf();
  std::vector<char> ok(m.src->dim0(), 0);
  parallel_for(m.src->dim0(), [&](int v) {
    ok[v] = m.dst->act_elem(m.images[v]) == push_forward(H, m.src->act_gen(v), m);
  });
  for (char c : ok)
    if (!c) return false;
  return true;
}

ModuleMap twist_map(const std::vector<Matrix>& pi_act, const ModuleMap& m, ModulePtr src, ModulePtr dst) {
  const Hopf& H = m.src->hopf();
  int dpi = pi_act.empty() ? 1 : pi_act[0].rows();
  int d0 = m.src->dim0(), d1 = m.dst->dim0();
  ModuleMap t;
  t.src = std::move(src);
  t.dst = std::move(dst);
  t.shift = m.shift;
  t.label = "T_Pi(" + m.label + ")";
  t.images.assign(dpi * d0, ModElem{});
  for (int p = 0; p < dpi; ++p)
    for (int i = 0; i < d0; ++i) {
      ModElem& img = t.images[p * d0 + i];
      for (const auto& [k, q] : m.images[i].t)
        for (const auto& [pr, c] : H.coproduct(HElement::basis(k.first))) {
          Matrix S = rep_of(H, pi_act, H.antipode(HElement::basis(pr.second)));
          for (int p2 = 0; p2 < dpi; ++p2)
            if (!is_zero(S(p2, p))) img.add(pr.first, p2 * d1 + k.second, q * c * S(p2, p));
        }
    }
  return t;
}

}  // namespace hp
