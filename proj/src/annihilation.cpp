#include "hpseudo/annihilation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hp {

WJetElement WJetElement::zero(int n, int order) {
  WJetElement w;
  w.comp.resize(n);
  for (auto& c : w.comp) c.order = order;
  return w;
}

int WJetElement::order() const {
  int o = comp.empty() ? 0 : comp[0].order;
  for (const auto& c : comp) o = std::min(o, c.order);
  return o;
}

WJetElement WJetElement::operator+(const WJetElement& o) const {
  if (comp.size() != o.comp.size()) throw std::invalid_argument("W-jet size mismatch");
  WJetElement r;
  for (size_t k = 0; k < comp.size(); ++k) r.comp.push_back(comp[k] + o.comp[k]);
  return r;
}

WJetElement WJetElement::operator-(const WJetElement& o) const { return *this + o * Q(-1); }

WJetElement WJetElement::operator*(const Q& q) const {
  WJetElement r;
  for (const auto& c : comp) r.comp.push_back(c * q);
  return r;
}

WJetElement WJetElement::truncated(int m) const {
  WJetElement r;
  for (const auto& c : comp) r.comp.push_back(c.truncated(m));
  return r;
}

bool WJetElement::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const JetElement& c) { return c.zero(); });
}

std::string WJetElement::str(int n) const {
  std::string s;
  for (size_t k = 0; k < comp.size(); ++k) {
    if (comp[k].zero()) continue;
    s += "[d" + std::to_string(k + 1) + "]\n" + comp[k].str(n);
  }
  return s.empty() ? "0\n" : s;
}

bool wjets_agree(const WJetElement& a, const WJetElement& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t k = 0; k < a.comp.size(); ++k)
    if (!jets_agree(a.comp[k], b.comp[k])) return false;
  return true;
}

int jet_filtration(const JetElement& x) {
  int lo = x.order + 1;
  for (const auto& [m, q] : x.t) lo = std::min(lo, m.deg());
  return lo - 1;
}

std::vector<JetElement> annihilation_bracket(const Hopf& H, const GenBracket& br, int dim0,
                                             const std::vector<JetElement>& x, const std::vector<JetElement>& y) {
  if (static_cast<int>(x.size()) != dim0 || static_cast<int>(y.size()) != dim0)
    throw std::invalid_argument("annihilation bracket: wrong number of components");
  int order = 1 << 20;
  for (const auto& j : x) order = std::min(order, j.order);
  for (const auto& j : y) order = std::min(order, j.order);
  // Largest degree drop over all generator brackets.
  std::vector<std::vector<T2>> gens(dim0, std::vector<T2>(dim0));
  int drop = 0;
  for (int a = 0; a < dim0; ++a)
    for (int b = 0; b < dim0; ++b) {
      gens[a][b] = br(a, b);
      for (const auto& [k, q] : gens[a][b].t) drop = std::max(drop, std::max(MI{k.m[0]}.deg(), MI{k.m[1]}.deg()));
    }
  int out = order - drop;
  if (out < 0) throw std::invalid_argument("annihilation bracket: jet order too small");
  std::vector<JetElement> r(dim0);
  for (auto& j : r) j.order = out;
  for (int a = 0; a < dim0; ++a) {
    if (x[a].zero()) continue;
    for (int b = 0; b < dim0; ++b) {
      if (y[b].zero()) continue;
      for (const auto& [k, q] : gens[a][b].t) {
        JetElement xf = H.act_right(x[a], HElement::basis(MI{k.m[0]})).truncated(out);
        JetElement yg = H.act_right(y[b], HElement::basis(MI{k.m[1]})).truncated(out);
        r[k.v] = r[k.v] + H.jet_multiply(xf, yg) * q;
      }
    }
  }
  return r;
}

AnnElement p_bracket(const Hopf& H, const DerivedData& dd, const AnnElement& x, const AnnElement& y) {
  int n = H.dim();
  int out = std::min(x.order, y.order) - 1;
  if (out < 0) throw std::invalid_argument("p_bracket: jet order too small");
  std::vector<JetElement> xb(n), yb(n);
  for (int i = 0; i < n; ++i) {
    xb[i] = H.act_right(x, H.gen_bar(i)).truncated(out);
    yb[i] = H.act_right(y, H.gen_bar(i)).truncated(out);
  }
  JetElement r;
  r.order = out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(dd.r(i, j))) r = r + H.jet_multiply(xb[i], yb[j]) * dd.r(i, j);
  return r;
}

WJetElement w_jet_bracket(const Hopf& H, const WJetElement& u, const WJetElement& v) {
  WJetElement r;
  r.comp = annihilation_bracket(H, w_bracket(H.spec()), H.dim(), u.comp, v.comp);
  return r;
}

WJetElement iota_star(const Hopf& H, const DerivedData& dd, const AnnElement& x) {
  int n = H.dim();
  WJetElement w = WJetElement::zero(n, x.order - 1);
  // x ⊗_H Σ_k h_k⊗∂_k = Σ_k x h_k ⊗ ∂_k with ι(e) = Σ_k h_k⊗∂_k.
  ModElem ie = iota_embed(H, dd);
  std::map<int, HElement> h;
  for (const auto& [key, q] : ie.t) h[key.second].add(key.first, q);
  for (const auto& [k, hk] : h) w.comp[k] = H.act_right(x, hk).truncated(x.order - 1);
  return w;
}

namespace {

// ⟨x, b_(1) S(a)⟩ b_(2) ⊗ w summed over the terms (a, b, w) of a tensor.
ModElem pair_out(const Hopf& H, const AnnElement& x, const T2& t) {
  std::map<uint64_t, HElement> sa;
  std::map<uint64_t, CoproductTerms> cop;
  std::map<std::pair<uint64_t, uint64_t>, Q> pairing;
  ModElem out;
  for (const auto& [k, q] : t.t) {
    MI a{k.m[0]}, b{k.m[1]};
    auto s = sa.find(a.code);
    if (s == sa.end()) s = sa.emplace(a.code, H.antipode(HElement::basis(a))).first;
    auto c = cop.find(b.code);
    if (c == cop.end()) c = cop.emplace(b.code, H.coproduct(HElement::basis(b))).first;
    for (const auto& [pr, cq] : c->second) {
      auto key = std::make_pair(pr.first.code, a.code);
      auto p = pairing.find(key);
      if (p == pairing.end()) p = pairing.emplace(key, H.pair(x, H.mul(HElement::basis(pr.first), s->second))).first;
      if (is_zero(p->second)) continue;
      out.add(pr.second, k.v, q * cq * p->second);
    }
  }
  return out;
}

}  // namespace

std::map<MI, ModElem> fourier_coefficients(const PseudoModule& M, const ModElem& v) {
  const Hopf& H = M.hopf();
  std::map<MI, ModElem> out;
  if (v.zero()) return out;
  T2 ev = M.act_elem(v);
  std::map<uint64_t, HElement> sa;
  std::map<uint64_t, CoproductTerms> cop;
  std::map<std::pair<uint64_t, uint64_t>, HElement> prod;
  for (const auto& [k, q] : ev.t) {
    MI a{k.m[0]}, b{k.m[1]};
    auto s = sa.find(a.code);
    if (s == sa.end()) s = sa.emplace(a.code, H.antipode(HElement::basis(a))).first;
    auto c = cop.find(b.code);
    if (c == cop.end()) c = cop.emplace(b.code, H.coproduct(HElement::basis(b))).first;
    for (const auto& [pr, cq] : c->second) {
      auto key = std::make_pair(pr.first.code, a.code);
      auto p = prod.find(key);
      if (p == prod.end()) p = prod.emplace(key, H.mul(HElement::basis(pr.first), s->second)).first;
      for (const auto& [I, ci] : p->second.t) out[I].add(pr.second, k.v, q * cq * ci);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.zero() ? out.erase(it) : std::next(it);
  return out;
}

ModElem ann_act(const PseudoModule& M, const AnnElement& x, const ModElem& v) {
  if (v.zero()) return {};
  if (x.order < v.degree() + 2) throw std::invalid_argument("ann_act: jet order below degree + 2");
  return pair_out(M.hopf(), x, M.act_elem(v));
}

T2 reconstruct_action(const PseudoModule& M, const ModElem& v, bool twisted) {
  const Hopf& H = M.hopf();
  int n = H.dim();
  T2 out;
  if (v.zero()) return out;
  int order = v.degree() + 2;
  JetElement em = H.exp_minus_chi(order);
  T2 ev = M.act_elem(v);
  for (MI I : multi_indices_upto(n, order)) {
    JetElement x = JetElement::coord(order, I);
    if (twisted) x = H.jet_multiply(x, em);
    ModElem w = pair_out(H, x, ev);
    if (w.zero()) continue;
    HElement s = H.antipode(HElement::basis(I));
    if (twisted) s = H.bar(s, H.spec().chi);
    out += two_sided(H, s, HElement::one(), w);
  }
  return out;
}

Matrix gl_image(const WJetElement& w) {
  int n = static_cast<int>(w.comp.size());
  Matrix m(n, n);
  for (int a = 0; a < n; ++a) {
    if (!is_zero(w.comp[a].coeff(MI{}))) throw std::invalid_argument("gl_image: element not in W_0");
    for (int l = 0; l < n; ++l) m(a, l) = -w.comp[a].coeff(MI::unit(l));
  }
  return m;
}

DistinguishedImages distinguished_images(const Hopf& H, const DerivedData& dd, int order) {
  const LieAlgebraSpec& s = H.spec();
  int n = H.dim();
  DistinguishedImages rep;
  JetElement em = H.exp_minus_chi(order);
  auto low = [](const WJetElement& w) { return w.truncated(1); };

  if (!iota_star(H, dd, em).is_zero()) {
    rep.kernel_ok = false;
    rep.failures.push_back("iota_*(e^{-chi}) != 0");
  }
  // Centrality against coordinate jets of degree ≤ 2 and a mixed one.
  std::vector<JetElement> probes;
  for (MI m : multi_indices_upto(n, 2)) probes.push_back(JetElement::coord(order, m));
  JetElement mixed = em;
  for (int k = 0; k < n; ++k) mixed = mixed + JetElement::coord(order, MI::unit(k).plus(k, 1), frac(k + 1, 2));
  probes.push_back(mixed);
  for (const auto& y : probes)
    if (!p_bracket(H, dd, em, y).zero()) {
      rep.central_ok = false;
      rep.failures.push_back("e^{-chi} not central");
      break;
    }

  auto upper = [&](int k) {
    Vec v(n);
    for (int l = 0; l < n; ++l) v[l] = dd.r(k, l);
    return v;
  };
  for (int k = 0; k < n; ++k) {
    WJetElement lhs = low(iota_star(H, dd, H.jet_multiply(JetElement::coord(order, MI::unit(k)), em)));
    WJetElement rhs = WJetElement::zero(n, 1);
    Vec uk = upper(k);
    for (int l = 0; l < n; ++l) rhs.comp[l] = rhs.comp[l] + em.truncated(1) * uk[l];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Q& c = s.C(i, j, k);
        if (is_zero(c)) continue;
        JetElement xj = H.jet_multiply(JetElement::coord(order, MI::unit(j)), em).truncated(1);
        Vec ui = upper(i);
        for (int l = 0; l < n; ++l) rhs.comp[l] = rhs.comp[l] - xj * (c * ui[l]);
      }
    if (!wjets_agree(lhs, rhs)) {
      rep.linear_ok = false;
      rep.failures.push_back("x^" + std::to_string(k + 1) + " e^{-chi} image differs");
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      JetElement x = H.jet_multiply(H.jet_multiply(JetElement::coord(order, MI::unit(i)),
                                                   JetElement::coord(order, MI::unit(j))),
                                    em);
      WJetElement w = low(iota_star(H, dd, x));
      Matrix m;
      try {
        m = gl_image(w);
      } catch (const std::invalid_argument&) {
        rep.quadratic_ok = false;
        rep.failures.push_back("x^i x^j e^{-chi} image outside W_0");
        continue;
      }
      rep.quadratic.push_back(m);
      if (!(m == f_upper(dd, i, j) * Q(2))) {
        rep.quadratic_ok = false;
        rep.failures.push_back("x^" + std::to_string(i + 1) + " x^" + std::to_string(j + 1) + " image != 2 f");
      }
    }
  return rep;
}

SingAction::SingAction(const PseudoModule& M) : M_(M), dd_(derive_invariants(M.hopf().spec())) {}

ModElem SingAction::f(int i, int j, const ModElem& v) const {
  if (v.zero()) return {};
  int o = v.degree() + 2;
  JetElement x = M_.hopf().jet_multiply(JetElement::coord(o, MI::unit(i)), JetElement::coord(o, MI::unit(j)));
  return ann_act(M_, x, v) * frac(1, 2);
}

ModElem SingAction::c(const ModElem& v) const {
  if (v.zero()) return {};
  return ann_act(M_, M_.hopf().exp_minus_chi(v.degree() + 2), v);
}

ModElem SingAction::sp(const Matrix& A, const ModElem& v) const {
  const LieAlgebraSpec& s = M_.hopf().spec();
  Matrix B = sp_coords(s, A);
  ModElem r;
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j)
      if (!is_zero(B(i, j))) r += f(i, j, v) * (-B(i, j));
  return r;
}

ModElem SingAction::dhat_upper(int k, const ModElem& v) const {
  if (v.zero()) return {};
  const Hopf& H = M_.hopf();
  const LieAlgebraSpec& s = H.spec();
  int n = s.dim;
  int o = v.degree() + 2;
  JetElement x = H.jet_multiply(JetElement::coord(o, MI::unit(k)), H.exp_minus_chi(o));
  ModElem r = ann_act(M_, x, v) - sp(dd_.adsp[k], v);
  HElement up;
  for (int l = 0; l < n; ++l) up.add(MI::unit(l), dd_.r(k, l));
  r += h_times(H, up, v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(s.C(i, j, k))) r += f(i, j, v) * s.C(i, j, k);
  return r;
}

ModElem SingAction::dhat(int l, const ModElem& v) const {
  // ∂_l = Σ_k ω_lk ∂^k
  const LieAlgebraSpec& s = M_.hopf().spec();
  ModElem r;
  for (int k = 0; k < s.dim; ++k)
    if (!is_zero(s.omega(l, k))) r += dhat_upper(k, v) * s.omega(l, k);
  return r;
}

}  // namespace hp
