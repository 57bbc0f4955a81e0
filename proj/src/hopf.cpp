#include "hpseudo/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <random>
#include <tuple>

namespace hp {

std::vector<MI> multi_indices_upto(int n, int k) {
  std::vector<MI> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      out.push_back(MI::from(e));
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MI> sub_indices(MI I, int n) {
  std::vector<MI> out{MI{}};
  for (int k = 0; k < n; ++k) {
    std::vector<MI> next;
    for (MI m : out)
      for (int a = 0; a <= I[k]; ++a) next.push_back(m.plus(k, a));
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HElement HElement::scalar(const Q& q) {
  HElement h;
  h.add(MI{}, q);
  return h;
}

HElement HElement::basis(MI m, const Q& q) {
  HElement h;
  h.add(m, q);
  return h;
}

void HElement::add(MI m, const Q& q) {
  if (is_zero(q)) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, q);
  } else {
    it->second += q;
    if (is_zero(it->second)) t.erase(it);
  }
}

HElement& HElement::operator+=(const HElement& o) {
  for (const auto& [m, q] : o.t) add(m, q);
  return *this;
}

HElement& HElement::operator-=(const HElement& o) {
  for (const auto& [m, q] : o.t) add(m, -q);
  return *this;
}

HElement HElement::operator+(const HElement& o) const {
  HElement h = *this;
  h += o;
  return h;
}

HElement HElement::operator-(const HElement& o) const {
  HElement h = *this;
  h -= o;
  return h;
}

HElement HElement::operator*(const Q& q) const {
  HElement h;
  if (is_zero(q)) return h;
  h.t = t;
  for (auto& [m, x] : h.t) x *= q;
  return h;
}

int HElement::degree() const {
  int d = -1;
  for (const auto& [m, q] : t) d = std::max(d, m.deg());
  return d;
}

Q HElement::coeff(MI m) const {
  auto it = t.find(m);
  return it == t.end() ? Q(0) : it->second;
}

std::string HElement::str(int n) const {
  std::ostringstream os;
  for (const auto& [m, q] : t) os << m.str(n) << ": " << to_string(q) << "\n";
  return os.str();
}

JetElement JetElement::coord(int order, MI m, const Q& q) {
  JetElement x;
  x.order = order;
  if (m.deg() <= order) x.add(m, q);
  return x;
}

void JetElement::add(MI m, const Q& q) {
  if (is_zero(q) || m.deg() > order) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, q);
  } else {
    it->second += q;
    if (is_zero(it->second)) t.erase(it);
  }
}

JetElement JetElement::operator+(const JetElement& o) const {
  JetElement x = truncated(std::min(order, o.order));
  for (const auto& [m, q] : o.t) x.add(m, q);
  return x;
}

JetElement JetElement::operator-(const JetElement& o) const { return *this + o * Q(-1); }

JetElement JetElement::operator*(const Q& q) const {
  JetElement x;
  x.order = order;
  if (is_zero(q)) return x;
  x.t = t;
  for (auto& [m, v] : x.t) v *= q;
  return x;
}

JetElement JetElement::truncated(int m) const {
  JetElement x;
  x.order = m;
  for (const auto& [k, q] : t)
    if (k.deg() <= m) x.t.emplace(k, q);
  return x;
}

Q JetElement::coeff(MI m) const {
  auto it = t.find(m);
  return it == t.end() ? Q(0) : it->second;
}

std::string JetElement::str(int n) const {
  std::ostringstream os;
  os << "order " << order << "\n";
  for (const auto& [m, q] : t) os << m.str(n) << ": " << to_string(q) << "\n";
  return os.str();
}

bool jets_agree(const JetElement& a, const JetElement& b) {
  int m = std::min(a.order, b.order);
  return a.truncated(m).t == b.truncated(m).t;
}

Hopf::Hopf(LieAlgebraSpec s) : s_(std::move(s)), n_(s_.dim), abelian_(s_.abelian()) {}

HElement Hopf::gen_bar(int i) const {
  HElement h = gen(i);
  h.add(MI{}, -s_.chi[i]);
  return h;
}

HElement Hopf::mul_gen(MI k, int j) const {
  auto key = std::make_pair(k.code, j);
  {
    std::shared_lock lk(mu_);
    auto it = gen_memo_.find(key);
    if (it != gen_memo_.end()) return it->second;
  }
  HElement res;
  int m = k.last();
  if (m <= j) {
    res.add(k.plus(j, 1), k[j] + 1);
  } else {
    // ∂^(K) = ∂^(K−e_m)∂_m / k_m and ∂_m∂_j = ∂_j∂_m + [∂_m,∂_j].
    MI km = k.plus(m, -1);
    HElement a = mul_gen(km, j);
    res = mul_gen_elem(a, m);
    for (int l = 0; l < n_; ++l) {
      const Q& c = s_.C(m, j, l);
      if (!is_zero(c)) res += mul_gen(km, l) * c;
    }
    res = res * (Q(1) / k[m]);
  }
  std::unique_lock lk(mu_);
  gen_memo_.emplace(key, res);
  return res;
}

HElement Hopf::mul_gen_elem(const HElement& h, int j) const {
  HElement r;
  for (const auto& [m, q] : h.t) r += mul_gen(m, j) * q;
  return r;
}

HElement Hopf::mul_basis(MI a, MI b) const {
  if (b.zero()) return HElement::basis(a);
  if (a.zero()) return HElement::basis(b);
  if (abelian_) {
    Q c = 1;
    for (int k = 0; k < n_; ++k) c *= binomial(a[k] + b[k], a[k]);
    return HElement::basis(a + b, c);
  }
  auto key = std::make_pair(a.code, b.code);
  {
    std::shared_lock lk(mu_);
    auto it = pair_memo_.find(key);
    if (it != pair_memo_.end()) return it->second;
  }
  HElement res = HElement::basis(a);
  Q denom = 1;
  for (int k = 0; k < n_; ++k)
    for (int t = 0; t < b[k]; ++t) {
      res = mul_gen_elem(res, k);
      denom *= t + 1;
    }
  res = res * (Q(1) / denom);
  std::unique_lock lk(mu_);
  pair_memo_.emplace(key, res);
  return res;
}

HElement Hopf::mul(const HElement& a, const HElement& b) const {
  HElement r;
  for (const auto& [ma, qa] : a.t)
    for (const auto& [mb, qb] : b.t) r += mul_basis(ma, mb) * (qa * qb);
  return r;
}

CoproductTerms Hopf::coproduct(const HElement& h) const {
  CoproductTerms out;
  for (const auto& [m, q] : h.t)
    for (MI j : sub_indices(m, n_)) out[{j, m - j}] += q;
  return out;
}

HElement Hopf::antipode(const HElement& h) const {
  HElement r;
  for (const auto& [m, q] : h.t) {
    HElement p = HElement::one();
    for (int k = n_ - 1; k >= 0; --k)
      if (m[k]) p = mul(p, HElement::basis(MI{}.plus(k, m[k])));
    r += p * (m.deg() % 2 ? -q : q);
  }
  return r;
}

HElement Hopf::bar(const HElement& h, const Vec& chi) const {
  HElement r;
  for (const auto& [m, q] : h.t)
    for (MI j : sub_indices(m, n_)) {
      Q c = q;
      for (int k = 0; k < n_; ++k) {
        int e = m[k] - j[k];
        if (e) c *= qpow(-chi[k], e) / factorial(e);
      }
      r.add(j, c);
    }
  return r;
}

HElement Hopf::bar_inverse(const HElement& h, const Vec& chi) const { return antipode(bar(antipode(h), chi)); }

Q Hopf::pair(const JetElement& x, const HElement& h) const {
  if (h.degree() > x.order) throw std::logic_error("jet pairing beyond truncation order");
  Q r = 0;
  for (const auto& [m, q] : h.t) {
    auto it = x.t.find(m);
    if (it != x.t.end()) r += q * it->second;
  }
  return r;
}

JetElement Hopf::jet_multiply(const JetElement& x, const JetElement& y) const {
  JetElement z;
  z.order = std::min(x.order, y.order);
  for (const auto& [a, qa] : x.t)
    for (const auto& [b, qb] : y.t)
      if (a.deg() + b.deg() <= z.order) z.add(a + b, qa * qb);
  return z;
}

JetElement Hopf::act_left(const HElement& h, const JetElement& x) const {
  JetElement z;
  int dh = std::max(0, h.degree());
  z.order = x.order - dh;
  if (z.order < 0) throw std::logic_error("jet action beyond truncation order");
  HElement sh = antipode(h);
  for (MI m : multi_indices_upto(n_, z.order)) z.add(m, pair(x, mul(sh, HElement::basis(m))));
  return z;
}

JetElement Hopf::act_right(const JetElement& x, const HElement& h) const {
  JetElement z;
  int dh = std::max(0, h.degree());
  z.order = x.order - dh;
  if (z.order < 0) throw std::logic_error("jet action beyond truncation order");
  HElement sh = antipode(h);
  for (MI m : multi_indices_upto(n_, z.order)) z.add(m, pair(x, mul(HElement::basis(m), sh)));
  return z;
}

JetElement Hopf::exp_minus_chi(int order) const {
  JetElement z;
  z.order = order;
  for (MI m : multi_indices_upto(n_, order)) {
    Q c = 1;
    for (int k = 0; k < n_ && !is_zero(c); ++k)
      if (m[k]) c *= qpow(-s_.chi[k], m[k]) / factorial(m[k]);
    z.add(m, c);
  }
  return z;
}

}  // namespace hp

namespace hp {

namespace {

HElement random_element(std::mt19937& rng, int n, int maxdeg) {
  auto all = multi_indices_upto(n, maxdeg);
  HElement h;
  for (int t = 0; t < 4; ++t) {
    int c = static_cast<int>(rng() % 7) - 3;
    h.add(all[rng() % all.size()], Q(c) / (1 + t % 2));
  }
  return h;
}

CoproductTerms prune(CoproductTerms x) {
  for (auto it = x.begin(); it != x.end();) it = is_zero(it->second) ? x.erase(it) : std::next(it);
  return x;
}

}  // namespace

std::vector<CheckItem> check_hopf_axioms(const Hopf& H, unsigned seed, int trials, int maxdeg) {
  std::mt19937 rng(seed);
  const LieAlgebraSpec& s = H.spec();
  const int n = H.dim();
  std::vector<CheckItem> items;
  for (const char* name : {"coproduct multiplicative", "coassociativity", "antipode", "counit",
                           "antipode anti-homomorphism", "antipode involution", "bar automorphism"})
    items.push_back({name, true, ""});
  auto fail = [&](int k, const HElement& f) {
    if (items[k].pass) items[k] = {items[k].name, false, f.str(n)};
  };
  for (int trial = 0; trial < trials; ++trial) {
    HElement f = random_element(rng, n, maxdeg), g = random_element(rng, n, maxdeg - 1);
    HElement fg = H.mul(f, g);
    CoproductTerms df = H.coproduct(f), rhs;
    for (const auto& [a, qa] : df)
      for (const auto& [b, qb] : H.coproduct(g)) {
        HElement x = H.mul_basis(a.first, b.first), y = H.mul_basis(a.second, b.second);
        for (const auto& [mx, cx] : x.t)
          for (const auto& [my, cy] : y.t) rhs[{mx, my}] += qa * qb * cx * cy;
      }
    if (H.coproduct(fg) != prune(rhs)) fail(0, f);

    // (Δ⊗id)Δ = (id⊗Δ)Δ as maps into H⊗H⊗H
    std::map<std::tuple<MI, MI, MI>, Q> left, right;
    for (const auto& [k, q] : df) {
      for (const auto& [k2, q2] : H.coproduct(HElement::basis(k.first))) left[{k2.first, k2.second, k.second}] += q * q2;
      for (const auto& [k2, q2] : H.coproduct(HElement::basis(k.second))) right[{k.first, k2.first, k2.second}] += q * q2;
    }
    for (auto* m : {&left, &right})
      for (auto it = m->begin(); it != m->end();) it = is_zero(it->second) ? m->erase(it) : std::next(it);
    if (left != right) fail(1, f);

    HElement sl, sr, cl, cr;
    for (const auto& [k, q] : df) {
      HElement a = HElement::basis(k.first), b = HElement::basis(k.second);
      sl += H.mul(H.antipode(a), b) * q;
      sr += H.mul(a, H.antipode(b)) * q;
      cl += b * (q * H.counit(a));
      cr += a * (q * H.counit(b));
    }
    HElement eps = HElement::scalar(H.counit(f));
    if (sl != eps || sr != eps) fail(2, f);
    if (cl != f || cr != f) fail(3, f);
    if (H.antipode(fg) != H.mul(H.antipode(g), H.antipode(f))) fail(4, f);
    if (H.antipode(H.antipode(f)) != f) fail(5, f);
    if (H.bar(fg, s.chi) != H.mul(H.bar(f, s.chi), H.bar(g, s.chi)) || H.bar(f, s.chi).degree() != f.degree() ||
        H.bar_inverse(H.bar(f, s.chi), s.chi) != f)
      fail(6, f);
  }
  return items;
}

}  // namespace hp
