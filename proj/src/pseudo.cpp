#include "hpseudo/pseudo.hpp"

#include <sstream>

namespace hp {

ModElem ModElem::gen(int v, const Q& q) {
  ModElem x;
  x.add(MI{}, v, q);
  return x;
}

ModElem ModElem::term(const HElement& h, int v) {
  ModElem x;
  for (const auto& [m, q] : h.t) x.add(m, v, q);
  return x;
}

void ModElem::add(MI m, int v, const Q& q) {
  if (is_zero(q)) return;
  auto key = std::make_pair(m, v);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, q);
  } else {
    it->second += q;
    if (is_zero(it->second)) t.erase(it);
  }
}

ModElem& ModElem::operator+=(const ModElem& o) {
  for (const auto& [k, q] : o.t) add(k.first, k.second, q);
  return *this;
}

ModElem ModElem::operator+(const ModElem& o) const {
  ModElem r = *this;
  r += o;
  return r;
}

ModElem ModElem::operator-(const ModElem& o) const {
  ModElem r = *this;
  for (const auto& [k, q] : o.t) r.add(k.first, k.second, -q);
  return r;
}

ModElem ModElem::operator*(const Q& q) const {
  ModElem r;
  if (is_zero(q)) return r;
  r.t = t;
  for (auto& [k, x] : r.t) x *= q;
  return r;
}

int ModElem::degree() const {
  int d = -1;
  for (const auto& [k, q] : t) d = std::max(d, k.first.deg());
  return d;
}

std::string ModElem::str(int n) const {
  std::ostringstream os;
  for (const auto& [k, q] : t) os << k.first.str(n) << "[" << k.second + 1 << "]: " << to_string(q) << "\n";
  return os.str();
}

ModElem h_times(const Hopf& H, const HElement& h, const ModElem& x) {
  ModElem r;
  for (const auto& [k, q] : x.t)
    for (const auto& [a, c] : h.t)
      for (const auto& [m, p] : H.mul_basis(a, k.first).t) r.add(m, k.second, q * c * p);
  return r;
}

std::string t2_str(const T2& x, int n) {
  std::ostringstream os;
  for (const auto& [k, q] : x.t)
    os << MI{k.m[0]}.str(n) << "⊗" << MI{k.m[1]}.str(n) << "[" << k.v + 1 << "]: " << to_string(q) << "\n";
  return os.str();
}

namespace {

TKey<2> key2(MI a, MI b, int v) { return TKey<2>{{a.code, b.code}, v}; }
TKey<3> key3(MI a, MI b, MI c, int v) { return TKey<3>{{a.code, b.code, c.code}, v}; }

// Products a·b for basis elements, expanded.
const HElement& cached_mul(const Hopf& H, std::map<std::pair<uint64_t, uint64_t>, HElement>& memo, MI a, MI b) {
  auto key = std::make_pair(a.code, b.code);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, H.mul_basis(a, b)).first->second;
}

}  // namespace

void add_simple(T2& out, const HElement& f, const HElement& g, int w, const Q& q) {
  for (const auto& [a, x] : f.t)
    for (const auto& [b, y] : g.t) out.add(key2(a, b, w), q * x * y);
}

T2 two_sided(const Hopf& H, const HElement& f, const HElement& g, const ModElem& v) {
  T2 out;
  for (const auto& [k, q] : v.t) {
    CoproductTerms cp = H.coproduct(HElement::basis(k.first));
    for (const auto& [pr, c] : cp) {
      HElement a = H.mul(f, HElement::basis(pr.first));
      HElement b = H.mul(g, HElement::basis(pr.second));
      add_simple(out, a, b, k.second, q * c);
    }
  }
  return out;
}

T2 mul_left(const Hopf& H, const HElement& h1, const HElement& h2, const T2& x) {
  T2 out;
  std::map<std::pair<uint64_t, uint64_t>, HElement> memo;
  for (const auto& [k, q] : x.t)
    for (const auto& [a, c1] : h1.t)
      for (const auto& [b, c2] : h2.t) {
        const HElement& p1 = cached_mul(H, memo, a, MI{k.m[0]});
        const HElement& p2 = cached_mul(H, memo, b, MI{k.m[1]});
        for (const auto& [m1, y1] : p1.t)
          for (const auto& [m2, y2] : p2.t) out.add(key2(m1, m2, k.v), q * c1 * c2 * y1 * y2);
      }
  return out;
}

NormalForm left_normal(const Hopf& H, const T2& x) {
  NormalForm nf;
  for (const auto& [k, q] : x.t) {
    MI a{k.m[0]}, b{k.m[1]};
    for (const auto& [pr, c] : H.coproduct(HElement::basis(b))) {
      HElement lead = H.mul(HElement::basis(a), H.antipode(HElement::basis(pr.first)));
      for (const auto& [m, y] : lead.t) nf[m].add(pr.second, k.v, q * c * y);
    }
  }
  for (auto it = nf.begin(); it != nf.end();) it = it->second.zero() ? nf.erase(it) : std::next(it);
  return nf;
}

NormalForm right_normal(const Hopf& H, const T2& x) {
  NormalForm nf;
  for (const auto& [k, q] : x.t) {
    MI a{k.m[0]}, b{k.m[1]};
    for (const auto& [pr, c] : H.coproduct(HElement::basis(a))) {
      HElement lead = H.mul(HElement::basis(b), H.antipode(HElement::basis(pr.second)));
      for (const auto& [m, y] : lead.t) nf[m].add(pr.first, k.v, q * c * y);
    }
  }
  for (auto it = nf.begin(); it != nf.end();) it = it->second.zero() ? nf.erase(it) : std::next(it);
  return nf;
}

T2 from_left_normal(const Hopf& H, const NormalForm& nf) {
  T2 out;
  for (const auto& [m, v] : nf) out += two_sided(H, HElement::basis(m), HElement::one(), v);
  return out;
}

T2 from_right_normal(const Hopf& H, const NormalForm& nf) {
  T2 out;
  for (const auto& [m, v] : nf) out += two_sided(H, HElement::one(), HElement::basis(m), v);
  return out;
}

T2 bracket_elems(const Hopf& H, const GenBracket& br, const ModElem& x, const ModElem& y) {
  T2 out;
  std::map<std::pair<int, int>, T2> cache;
  for (const auto& [kx, qx] : x.t)
    for (const auto& [ky, qy] : y.t) {
      auto key = std::make_pair(kx.second, ky.second);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, br(kx.second, ky.second)).first;
      if (it->second.zero()) continue;
      out += mul_left(H, HElement::basis(kx.first, qx), HElement::basis(ky.first, qy), it->second);
    }
  return out;
}

T3 compose_outer(const Hopf& H, const T2& xy, const std::function<T2(int)>& act) {
  T3 out;
  std::map<int, T2> inner;
  std::map<std::pair<uint64_t, uint64_t>, HElement> memo;
  std::map<uint64_t, CoproductTerms> cps;
  for (const auto& [k, q] : xy.t) {
    auto it = inner.find(k.v);
    if (it == inner.end()) it = inner.emplace(k.v, act(k.v)).first;
    MI f{k.m[0]}, g{k.m[1]};
    for (const auto& [ik, iq] : it->second.t) {
      MI p{ik.m[0]}, r{ik.m[1]};
      auto ct = cps.find(p.code);
      if (ct == cps.end()) ct = cps.emplace(p.code, H.coproduct(HElement::basis(p))).first;
      for (const auto& [pr, c] : ct->second) {
        const HElement& a = cached_mul(H, memo, f, pr.first);
        const HElement& b = cached_mul(H, memo, g, pr.second);
        for (const auto& [ma, ya] : a.t)
          for (const auto& [mb, yb] : b.t) out.add(key3(ma, mb, r, ik.v), q * iq * c * ya * yb);
      }
    }
  }
  return out;
}

T3 compose_inner(const Hopf& H, const T2& yz, const std::function<T2(int)>& act) {
  T3 out;
  std::map<int, T2> inner;
  std::map<std::pair<uint64_t, uint64_t>, HElement> memo;
  std::map<uint64_t, CoproductTerms> cps;
  for (const auto& [k, q] : yz.t) {
    auto it = inner.find(k.v);
    if (it == inner.end()) it = inner.emplace(k.v, act(k.v)).first;
    MI f{k.m[0]}, g{k.m[1]};
    for (const auto& [ik, iq] : it->second.t) {
      MI p{ik.m[0]}, r{ik.m[1]};
      auto ct = cps.find(r.code);
      if (ct == cps.end()) ct = cps.emplace(r.code, H.coproduct(HElement::basis(r))).first;
      for (const auto& [pr, c] : ct->second) {
        const HElement& a = cached_mul(H, memo, f, pr.first);
        const HElement& b = cached_mul(H, memo, g, pr.second);
        for (const auto& [ma, ya] : a.t)
          for (const auto& [mb, yb] : b.t) out.add(key3(p, ma, mb, ik.v), q * iq * c * ya * yb);
      }
    }
  }
  return out;
}

T3 swap12(const T3& x) {
  T3 out;
  for (const auto& [k, q] : x.t) out.add(TKey<3>{{k.m[1], k.m[0], k.m[2]}, k.v}, q);
  return out;
}

T2 swap(const T2& x) {
  T2 out;
  for (const auto& [k, q] : x.t) out.add(TKey<2>{{k.m[1], k.m[0]}, k.v}, q);
  return out;
}

GenBracket w_bracket(const LieAlgebraSpec& s) {
  return [s](int i, int j) {
    T2 out;
    for (int k = 0; k < s.dim; ++k) out.add(key2(MI{}, MI{}, k), s.C(i, j, k));
    out.add(key2(MI{}, MI::unit(i), j), -1);
    out.add(key2(MI::unit(j), MI{}, i), 1);
    return out;
  };
}

T2 w_bracket_elems(const Hopf& H, const HElement& f, const Vec& a, const HElement& g, const Vec& b) {
  GenBracket br = w_bracket(H.spec());
  T2 gens;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (!is_zero(a[i]) && !is_zero(b[j])) gens += br(static_cast<int>(i), static_cast<int>(j)) * (a[i] * b[j]);
  return mul_left(H, f, g, gens);
}

GenBracket cur_gl_bracket(int n) {
  return [n](int x, int y) {
    int a = x / n, b = x % n, c = y / n, d = y % n;
    T2 out;
    if (b == c) out.add(key2(MI{}, MI{}, a * n + d), 1);
    if (d == a) out.add(key2(MI{}, MI{}, c * n + b), -1);
    return out;
  };
}

namespace {

T2 r_bracket(const Hopf& H, const Matrix& r) {
  int n = H.dim();
  T2 out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(r(i, j))) add_simple(out, H.gen_bar(i), H.gen_bar(j), 0, r(i, j));
  return out;
}

}  // namespace

T2 h_generator_bracket(const Hopf& H, const DerivedData& dd) { return r_bracket(H, dd.r); }

GenBracket h_bracket(const Hopf& H, const DerivedData& dd, const Matrix* r_override) {
  T2 ee = r_bracket(H, r_override ? *r_override : dd.r);
  return [ee](int, int) { return ee; };
}

bool check_skew(const Hopf& H, int dimV0, const GenBracket& br) {
  (void)H;
  for (int a = 0; a < dimV0; ++a)
    for (int b = a; b < dimV0; ++b)
      if (!(br(b, a) + swap(br(a, b))).zero()) return false;
  return true;
}

bool check_jacobi_elems(const Hopf& H, const GenBracket& br, const ModElem& x, const ModElem& y, const ModElem& z) {
  auto br_elem = [&](const ModElem& a, const ModElem& b) { return bracket_elems(H, br, a, b); };
  T3 lhs = compose_outer(H, br_elem(x, y), [&](int m) { return br_elem(ModElem::gen(m), z); });
  T3 r1 = compose_inner(H, br_elem(y, z), [&](int m) { return br_elem(x, ModElem::gen(m)); });
  T3 r2 = swap12(compose_inner(H, br_elem(x, z), [&](int m) { return br_elem(y, ModElem::gen(m)); }));
  return lhs == r1 - r2;
}

bool check_jacobi(const Hopf& H, int dimV0, const GenBracket& br) {
  for (int a = 0; a < dimV0; ++a)
    for (int b = 0; b < dimV0; ++b)
      for (int c = 0; c < dimV0; ++c)
        if (!check_jacobi_elems(H, br, ModElem::gen(a), ModElem::gen(b), ModElem::gen(c))) return false;
  return true;
}

ModElem iota_embed(const Hopf& H, const DerivedData& dd) {
  int n = H.dim();
  ModElem out;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!is_zero(dd.r(i, k))) out += ModElem::term(H.gen_bar(i), k) * (-dd.r(i, k));
  return out;
}

bool check_iota_homomorphism(const Hopf& H, const DerivedData& dd) {
  ModElem io = iota_embed(H, dd);
  T2 lhs = bracket_elems(H, w_bracket(H.spec()), io, io);
  T2 rhs;
  for (const auto& [k, q] : h_generator_bracket(H, dd).t)
    rhs += two_sided(H, HElement::basis(MI{k.m[0]}), HElement::basis(MI{k.m[1]}), io) * q;
  return lhs == rhs;
}

ModElem matrix_term(const HElement& h, const Matrix& M) {
  ModElem out;
  int n = static_cast<int>(M.rows());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!is_zero(M(a, b))) out += ModElem::term(h, a * n + b) * M(a, b);
  return out;
}

ModElem tau_of_e(const Hopf& H, const DerivedData& dd) {
  int n = H.dim();
  ModElem out;
  for (const auto& [k, q] : iota_embed(H, dd).t) {
    HElement h = HElement::basis(k.first, q);
    int i = k.second;
    out += matrix_term(h, dd.ad[i]);
    for (int j = 0; j < n; ++j) {
      Matrix E(n, n);
      E(i, j) = 1;
      out += matrix_term(H.mul(h, H.gen(j)), E);
    }
  }
  return out;
}

namespace {

ModElem quadratic_f_part(const Hopf& H, const DerivedData& dd) {
  int n = H.dim();
  ModElem out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out += matrix_term(H.mul(H.gen_bar(i), H.gen_bar(j)), f_upper(dd, i, j));
  return out;
}

}  // namespace

ModElem tau_expression_adsp(const Hopf& H, const DerivedData& dd) {
  int n = H.dim();
  ModElem out = quadratic_f_part(H, dd);
  // (id⊗ad^sp)(e) with e = Σ h_k⊗∂_k and ∂_k = Σ_j ω_kj ∂^j
  const Matrix& om = H.spec().omega;
  for (const auto& [k, q] : iota_embed(H, dd).t) {
    Matrix A(n, n);
    for (int j = 0; j < n; ++j)
      if (!is_zero(om(k.second, j))) A = A + dd.adsp[j] * om(k.second, j);
    out += matrix_term(HElement::basis(k.first, q), A);
  }
  HElement s;
  for (int k = 0; k < n; ++k) s.add(MI::unit(k), dd.s[k]);
  out += matrix_term(s * Q(1, 2), Matrix::identity(n));
  return out;
}

ModElem tau_expression_dual(const Hopf& H, const DerivedData& dd) {
  int n = H.dim();
  ModElem out = quadratic_f_part(H, dd);
  for (int k = 0; k < n; ++k) {
    Matrix A = dd.adsp[k] + Matrix::identity(n) * (dd.chi_up[k] / 2);
    out += matrix_term(H.gen_bar(k) * Q(-1), A);
  }
  return out;
}

}  // namespace hp
