#include <random>

#include "doctest.h"
#include "hpseudo/hopf.hpp"
#include "oracles.hpp"

using namespace hp;

namespace {

MI mi(std::vector<int> e) { return MI::from(e); }

HElement tensor_apply_mul(const Hopf& H, const CoproductTerms& t, bool antipode_left) {
  HElement r;
  for (const auto& [k, q] : t) {
    HElement a = HElement::basis(k.first), b = HElement::basis(k.second);
    r += (antipode_left ? H.mul(H.antipode(a), b) : H.mul(a, H.antipode(b))) * q;
  }
  return r;
}

}  // namespace

TEST_CASE("PBW products") {
  Hopf A(spec_A2());
  CHECK(A.mul_basis(mi({1, 0}), mi({1, 0})) == HElement::basis(mi({2, 0}), 2));
  Hopf F(spec_F2());
  HElement expect = HElement::basis(mi({1, 1})) - HElement::basis(mi({1, 0}));
  CHECK(F.mul(F.gen(1), F.gen(0)) == expect);
  HElement h = HElement::basis(mi({2, 1}), Q(3, 2));
  CHECK(F.mul(HElement::one(), h) == h);
  CHECK(F.mul(h, HElement::one()) == h);
}

TEST_CASE("PBW products agree with word straightening") {
  for (const auto& s : battery()) {
    INFO(s.name);
    Hopf H(s);
    auto idx = multi_indices_upto(s.dim, s.dim == 2 ? 4 : 2);
    for (MI a : idx)
      for (MI b : idx) CHECK(H.mul_basis(a, b) == oracle::word_product(s, a, b));
  }
}

TEST_CASE("coproduct, antipode, counit, bar") {
  Hopf A(spec_A2());
  CoproductTerms d = A.coproduct(HElement::basis(mi({2, 0})));
  CHECK(d.size() == 3);
  CHECK(d[{mi({1, 0}), mi({1, 0})}] == 1);
  CHECK(A.coproduct(HElement::one()).size() == 1);
  CHECK(A.antipode(HElement::basis(mi({0, 2}))) == HElement::basis(mi({0, 2})));
  LieAlgebraSpec s = spec_A2();
  s.chi = {Q(3), Q(0)};
  Hopf B(s);
  HElement b = B.bar(B.gen(0), s.chi);
  CHECK(b == B.gen(0) - HElement::scalar(3));
  CHECK(B.bar_inverse(B.gen(0), s.chi) == B.gen(0) + HElement::scalar(3));
  CHECK(B.bar_inverse(b, s.chi) == B.gen(0));
}

TEST_CASE("Hopf axioms on random elements") {
  std::mt19937 rng(7);
  for (const auto& s : battery()) {
    INFO(s.name);
    Hopf H(s);
    for (int trial = 0; trial < 4; ++trial) {
      HElement f = oracle::random_h(rng, s.dim, 4), g = oracle::random_h(rng, s.dim, 3);
      HElement fg = H.mul(f, g);
      // Δ(fg) = Δ(f)Δ(g)
      CoproductTerms lhs = H.coproduct(fg), rhs;
      for (const auto& [a, qa] : H.coproduct(f))
        for (const auto& [b, qb] : H.coproduct(g)) {
          HElement x = H.mul_basis(a.first, b.first), y = H.mul_basis(a.second, b.second);
          for (const auto& [mx, cx] : x.t)
            for (const auto& [my, cy] : y.t) rhs[{mx, my}] += qa * qb * cx * cy;
        }
      for (auto it = rhs.begin(); it != rhs.end();) it = is_zero(it->second) ? rhs.erase(it) : std::next(it);
      CHECK(lhs == rhs);
      // S(h1)h2 = ε(h) = h1 S(h2)
      CHECK(tensor_apply_mul(H, H.coproduct(f), true) == HElement::scalar(H.counit(f)));
      CHECK(tensor_apply_mul(H, H.coproduct(f), false) == HElement::scalar(H.counit(f)));
      // ε(h1)h2 = h
      HElement c;
      for (const auto& [k, q] : H.coproduct(f)) c += HElement::basis(k.second) * (q * (k.first.zero() ? 1 : 0));
      CHECK(c == f);
      // S(h1)h2 ⊗ h3 = 1⊗h
      std::map<std::pair<MI, MI>, Q> tri;
      for (const auto& [k, q] : H.coproduct(f))
        for (const auto& [k2, q2] : H.coproduct(HElement::basis(k.first))) {
          HElement p = H.mul(H.antipode(HElement::basis(k2.first)), HElement::basis(k2.second));
          for (const auto& [m, x] : p.t) tri[{m, k.second}] += q * q2 * x;
        }
      for (auto it = tri.begin(); it != tri.end();) it = is_zero(it->second) ? tri.erase(it) : std::next(it);
      std::map<std::pair<MI, MI>, Q> want;
      for (const auto& [m, q] : f.t) want[{MI{}, m}] = q;
      CHECK(tri == want);
      // S anti-homomorphism, S² = id, bar automorphism preserving degree
      CHECK(H.antipode(fg) == H.mul(H.antipode(g), H.antipode(f)));
      CHECK(H.antipode(H.antipode(f)) == f);
      CHECK(H.bar(fg, s.chi) == H.mul(H.bar(f, s.chi), H.bar(g, s.chi)));
      CHECK(H.bar(f, s.chi).degree() == f.degree());
      CHECK(H.bar_inverse(H.bar(f, s.chi), s.chi) == f);
    }
  }
}

TEST_CASE("jets: duality, products and actions") {
  std::mt19937 rng(11);
  for (const auto& s : battery()) {
    if (s.dim != 2) continue;
    INFO(s.name);
    Hopf H(s);
    for (MI a : multi_indices_upto(2, 3))
      for (MI b : multi_indices_upto(2, 3)) CHECK(H.pair(JetElement::coord(3, a), HElement::basis(b)) == (a == b ? 1 : 0));
    JetElement x = oracle::random_jet(rng, 2, 6), y = oracle::random_jet(rng, 2, 6);
    JetElement xy = H.jet_multiply(x, y);
    for (MI m : multi_indices_upto(2, 6)) {
      Q want = 0;
      for (const auto& [k, q] : H.coproduct(HElement::basis(m)))
        want += q * H.pair(x, HElement::basis(k.first)) * H.pair(y, HElement::basis(k.second));
      CHECK(H.pair(xy, HElement::basis(m)) == want);
    }
    // derivation property of the left action of ∂
    for (int i = 0; i < 2; ++i) {
      JetElement lhs = H.act_left(H.gen(i), xy);
      JetElement rhs = H.jet_multiply(H.act_left(H.gen(i), x), y) + H.jet_multiply(x, H.act_left(H.gen(i), y));
      CHECK(jets_agree(lhs, rhs));
      JetElement l2 = H.act_right(xy, H.gen(i));
      JetElement r2 = H.jet_multiply(H.act_right(x, H.gen(i)), y) + H.jet_multiply(x, H.act_right(y, H.gen(i)));
      CHECK(jets_agree(l2, r2));
    }
    CHECK_THROWS(H.pair(JetElement::coord(1, MI{}), HElement::basis(mi({2, 0}))));
  }
}

TEST_CASE("exp(-chi) and bar compatibility") {
  Hopf A(spec_A2());
  JetElement e = A.exp_minus_chi(4);
  CHECK(e.t.size() == 1);
  CHECK(e.coeff(MI{}) == 1);
  LieAlgebraSpec X = spec_X2();
  Hopf H(X);
  JetElement ex = H.exp_minus_chi(4);
  // character: ⟨e^{−χ}, hk⟩ = ⟨e^{−χ},h⟩⟨e^{−χ},k⟩
  for (MI a : multi_indices_upto(2, 2))
    for (MI b : multi_indices_upto(2, 2))
      CHECK(H.pair(ex, H.mul_basis(a, b)) == H.pair(ex, HElement::basis(a)) * H.pair(ex, HElement::basis(b)));
  // (x e^{−χ}) ∂̄ = (x∂) e^{−χ} for x = x¹ at order 3
  JetElement x1 = JetElement::coord(4, MI::unit(0));
  for (int i = 0; i < 2; ++i) {
    JetElement lhs = H.act_right(H.jet_multiply(x1, ex), H.gen_bar(i));
    JetElement rhs = H.jet_multiply(H.act_right(x1, H.gen(i)), ex);
    CHECK(jets_agree(lhs.truncated(3), rhs.truncated(3)));
  }
  // {x_I e^{−χ}} is dual to {S(bar(S ∂^(J)))}
  for (MI a : multi_indices_upto(2, 3))
    for (MI b : multi_indices_upto(2, 3)) {
      JetElement xe = H.jet_multiply(JetElement::coord(3, a), ex.truncated(3));
      HElement d = H.bar_inverse(HElement::basis(b), X.chi);
      CHECK(H.pair(xe, d) == (a == b ? 1 : 0));
    }
}
