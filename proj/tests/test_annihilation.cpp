#include <random>

#include "doctest.h"
#include "hpseudo/annihilation.hpp"
#include "oracles.hpp"

using namespace hp;

namespace {

std::shared_ptr<const Hopf> hopf(const LieAlgebraSpec& s) { return std::make_shared<const Hopf>(s); }

ModElem random_elem(std::mt19937& rng, int n, int dim0, int maxdeg, int terms = 3) {
  ModElem x;
  std::uniform_int_distribution<int> coef(-3, 3), vv(0, dim0 - 1);
  auto all = multi_indices_upto(n, maxdeg);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int t = 0; t < terms; ++t) x.add(all[pick(rng)], vv(rng), Q(coef(rng)));
  return x;
}

// Abelian, χ = 0: x ↦ Σ r^{ij} ∂x/∂t^i ∂y/∂t^j on monomials, with x_I = t^I.
JetElement poisson_oracle(const LieAlgebraSpec& s, const JetElement& x, const JetElement& y) {
  auto dr = derive_invariants(s);
  int n = s.dim;
  JetElement r;
  r.order = std::min(x.order, y.order) - 1;
  auto deriv = [&](const JetElement& f, int i) {
    JetElement g;
    g.order = f.order - 1;
    for (const auto& [m, q] : f.t)
      if (m[i]) g.add(m.plus(i, -1), q * m[i]);
    return g;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (dr.r(i, j) == 0) continue;
      JetElement a = deriv(x, i), b = deriv(y, j);
      for (const auto& [ma, qa] : a.t)
        for (const auto& [mb, qb] : b.t)
          if (ma.deg() + mb.deg() <= r.order) r.add(ma + mb, qa * qb * dr.r(i, j));
    }
  return r;
}

DPrimeModule lambda_module(const LieAlgebraSpec& s, const Q& lambda) {
  ZetaResult z = solve_frobenius_splitting(s);
  DPrimeModule p = DPrimeModule::trivial(s.dim);
  p.lambda = lambda;
  for (int i = 0; i < s.dim; ++i) p.act[i] = Matrix::identity(1) * (z.zeta[i] * lambda);
  return p;
}

ModElem column(const Matrix& M, int u) {
  ModElem r;
  for (int w = 0; w < M.rows(); ++w) r.add(MI{}, w, M(w, u));
  return r;
}

}  // namespace

TEST_CASE("P bracket of coordinates on A2") {
  Hopf H(spec_A2());
  auto dd = derive_invariants(H.spec());
  // x^1 ∂_1 = x^2 ∂_2 = −1, the cross terms vanish, so [x^1, x^2] = r^{12} = −1.
  JetElement x1 = JetElement::coord(3, MI::unit(0)), x2 = JetElement::coord(3, MI::unit(1));
  JetElement b = p_bracket(H, dd, x1, x2);
  JetElement expect = JetElement::coord(2, MI{}, Q(-1));
  CHECK(b.t == expect.t);
}

TEST_CASE("P bracket is the Poisson bracket for abelian specs") {
  std::mt19937 rng(11);
  for (const auto& s : {spec_A2(), spec_A4()}) {
    Hopf H(s);
    auto dd = derive_invariants(s);
    for (int t = 0; t < 6; ++t) {
      JetElement x = oracle::random_jet(rng, s.dim, 4), y = oracle::random_jet(rng, s.dim, 4);
      CHECK(p_bracket(H, dd, x, y).t == poisson_oracle(s, x, y).t);
    }
  }
}

TEST_CASE("e^{-chi} spans the kernel of iota_* and is central") {
  std::mt19937 rng(5);
  for (const auto& s : battery()) {
    Hopf H(s);
    auto dd = derive_invariants(s);
    for (int order = 2; order <= 4; ++order) {
      JetElement em = H.exp_minus_chi(order);
      CHECK(iota_star(H, dd, em).is_zero());
      for (int t = 0; t < 3; ++t) CHECK(p_bracket(H, dd, em, oracle::random_jet(rng, s.dim, order)).zero());
      // Kernel dimension of ι_* on jets of this order.
      auto mis = multi_indices_upto(s.dim, order);
      auto out = multi_indices_upto(s.dim, order - 1);
      Matrix m(static_cast<int>(out.size()) * s.dim, static_cast<int>(mis.size()));
      for (size_t c = 0; c < mis.size(); ++c) {
        WJetElement w = iota_star(H, dd, JetElement::coord(order, mis[c]));
        for (int k = 0; k < s.dim; ++k)
          for (size_t r = 0; r < out.size(); ++r) m(static_cast<int>(r) * s.dim + k, static_cast<int>(c)) = w.comp[k].coeff(out[r]);
      }
      CHECK(static_cast<int>(mis.size()) - rank(m) == 1);
    }
  }
}

TEST_CASE("iota_* is a Lie homomorphism on jets") {
  std::mt19937 rng(17);
  for (const auto& s : battery()) {
    Hopf H(s);
    auto dd = derive_invariants(s);
    for (int t = 0; t < 4; ++t) {
      JetElement x = oracle::random_jet(rng, s.dim, 5), y = oracle::random_jet(rng, s.dim, 5);
      WJetElement lhs = iota_star(H, dd, p_bracket(H, dd, x, y));
      WJetElement rhs = w_jet_bracket(H, iota_star(H, dd, x), iota_star(H, dd, y));
      CHECK(wjets_agree(lhs, rhs));
    }
  }
}

TEST_CASE("filtration of P brackets") {
  for (const auto& s : {spec_F2(), spec_X2(), spec_A4()}) {
    Hopf H(s);
    auto dd = derive_invariants(s);
    int order = 6;
    for (MI a : multi_indices_upto(s.dim, 3))
      for (MI b : multi_indices_upto(s.dim, 3)) {
        JetElement x = JetElement::coord(order, a), y = JetElement::coord(order, b);
        // x ∈ P_{|a|-2}, y ∈ P_{|b|-2}; the bracket lies in P_{|a|+|b|-4} = fil_{|a|+|b|-3} X.
        CHECK(jet_filtration(p_bracket(H, dd, x, y)) >= a.deg() + b.deg() - 3);
      }
  }
}

TEST_CASE("annihilation images on the battery") {
  for (const auto& s : battery()) {
    Hopf H(s);
    auto dd = derive_invariants(s);
    auto rep = distinguished_images(H, dd, 4);
    INFO(s.name);
    CHECK(rep.kernel_ok);
    CHECK(rep.central_ok);
    CHECK(rep.linear_ok);
    CHECK(rep.quadratic_ok);
  }
  // A2: x^1 x^2 ↦ 2 f^{12} = −(e^{12}+e^{21}).
  Hopf H(spec_A2());
  auto dd = derive_invariants(H.spec());
  auto rep = distinguished_images(H, dd, 4);
  Matrix want = (e_upper(dd, 0, 1) + e_upper(dd, 1, 0)) * Q(-1);
  CHECK(rep.quadratic[1] == want);
  CHECK(!rep.quadratic[1].is_zero());
}

TEST_CASE("F2 linear image carries the structure constant correction") {
  Hopf H(spec_F2());
  auto dd = derive_invariants(H.spec());
  JetElement em = H.exp_minus_chi(3);
  bool differs = false;
  for (int k = 0; k < 2; ++k) {
    WJetElement w = iota_star(H, dd, H.jet_multiply(JetElement::coord(3, MI::unit(k)), em)).truncated(1);
    WJetElement plain = WJetElement::zero(2, 1);
    for (int l = 0; l < 2; ++l) plain.comp[l] = em.truncated(1) * dd.r(k, l);
    if (!wjets_agree(w, plain)) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("ann_act on the trivial module kills high coordinates") {
  auto H = hopf(spec_A2());
  auto V = make_v_module(H, DPrimeModule::trivial(2), trivial_rep(H->spec()));
  ModElem v = ModElem::gen(0);
  for (MI I : multi_indices_upto(2, 4)) {
    ModElem r = ann_act(*V, JetElement::coord(4, I), v);
    if (I.deg() >= 3) CHECK(r.zero());
  }
  CHECK_THROWS_AS(ann_act(*V, JetElement::coord(1, MI{}), v), std::invalid_argument);
}

TEST_CASE("rho_sing on constants recovers the module data") {
  struct Case {
    LieAlgebraSpec s;
    bool lam;
  };
  for (const auto& c : {Case{spec_A2(), false}, Case{spec_F2(), false}, Case{spec_F2(), true}, Case{spec_X2(), false},
                        Case{spec_A4(), false}, Case{spec_F4(), false}}) {
    auto H = hopf(c.s);
    int n = c.s.dim;
    DPrimeModule pi = c.lam ? lambda_module(c.s, 1) : DPrimeModule::trivial(n);
    for (const SpRep& U : {vector_rep(c.s), trivial_rep(c.s)}) {
      auto V = make_v_module(H, pi, U);
      SingAction rs(*V);
      INFO(c.s.name, " ", U.label);
      for (int u = 0; u < V->dim0(); ++u) {
        ModElem v = ModElem::gen(u);
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) CHECK(rs.f(i, j, v) == column(V->rho_f(i, j), u));
        for (int l = 0; l < n; ++l) CHECK(rs.dhat(l, v) == column(V->rho_d(l), u));
        CHECK(rs.c(v) == column(V->rho_c(), u));
      }
    }
  }
}

TEST_CASE("pseudoaction reconstructed from Fourier coefficients") {
  std::mt19937 rng(23);
  for (const auto& s : battery()) {
    auto H = hopf(s);
    auto V = make_t_module(H, DPrimeModule::trivial(s.dim), vector_rep(s));
    for (int t = 0; t < 3; ++t) {
      ModElem v = random_elem(rng, s.dim, V->dim0(), 2);
      T2 e = V->act_elem(v);
      CHECK(reconstruct_action(*V, v, false) == e);
      CHECK(reconstruct_action(*V, v, true) == e);
    }
  }
}

TEST_CASE("ann_act is a Lie algebra action") {
  std::mt19937 rng(31);
  for (const auto& s : {spec_A2(), spec_F2(), spec_X2()}) {
    auto H = hopf(s);
    auto dd = derive_invariants(s);
    auto V = make_v_module(H, DPrimeModule::trivial(s.dim), vector_rep(s));
    for (int t = 0; t < 4; ++t) {
      ModElem v = random_elem(rng, s.dim, V->dim0(), 1);
      JetElement x = oracle::random_jet(rng, s.dim, 5, 5), y = oracle::random_jet(rng, s.dim, 5, 5);
      ModElem lhs = ann_act(*V, p_bracket(*H, dd, x, y), v);
      ModElem rhs = ann_act(*V, x, ann_act(*V, y, v)) - ann_act(*V, y, ann_act(*V, x, v));
      CHECK(lhs == rhs);
    }
  }
}
