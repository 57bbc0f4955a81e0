#include "doctest.h"
#include "hpseudo/complexes.hpp"

using namespace hp;

namespace {

std::shared_ptr<const Hopf> hopf(const LieAlgebraSpec& s) { return std::make_shared<const Hopf>(s); }

Matrix m2(Q a, Q b, Q c, Q d) { return from_rows({{a, b}, {c, d}}, 2); }

std::vector<Matrix> two_dim_pi(const LieAlgebraSpec& s) {
  if (s.abelian()) return {m2(0, 1, 0, 0), m2(2, 0, 0, 2)};
  return {m2(0, 1, 0, 0), m2(0, 0, 0, 1)};
}

bool same_images(const ModuleMap& a, const ModuleMap& b) { return a.images == b.images; }

}  // namespace

TEST_CASE("d on functions") {
  auto s = spec_A2();
  DeRham dr(hopf(s), {});
  ModuleMap d0 = dr.d(0, 0);
  ModElem expect = ModElem::term(dr.hopf().gen(0), 0) * Q(-1) - ModElem::term(dr.hopf().gen(1), 1);
  CHECK(d0.images[0] == expect);
}

TEST_CASE("pseudo de Rham differential") {
  for (const auto& s : battery()) {
    INFO(s.name);
    auto H = hopf(s);
    std::vector<std::vector<Matrix>> pis = {{}};
    if (s.dim == 2) pis.push_back(two_dim_pi(s));
    for (const auto& pi : pis) {
      DeRham dr(H, pi);
      for (int n = 0; n < s.dim; ++n) {
        ModuleMap d = dr.d(n, 0);
        CHECK(check_homomorphism(d));
        if (n + 1 < s.dim) CHECK(compose(dr.d(n + 1, 0), d).is_zero());
      }
    }
  }
}

TEST_CASE("Psi_chi intertwines the differentials") {
  for (const auto& s : {spec_A2(), spec_X2(), spec_F4()}) {
    INFO(s.name);
    auto H = hopf(s);
    DeRham dr(H, s.dim == 2 ? two_dim_pi(s) : std::vector<Matrix>{});
    for (int n = 0; n + 2 <= s.dim; ++n) {
      CHECK(check_homomorphism(dr.psi_chi(n, 0)));
      if (n + 3 <= s.dim) CHECK(same_images(compose(dr.psi_chi(n + 1, 0), dr.d(n, 0)), compose(dr.d(n + 2, 1), dr.psi_chi(n, 0))));
    }
  }
}

TEST_CASE("Rumin map example") {
  auto s = spec_A2();
  DeRham dr(hopf(s), {});
  ModuleMap R = dr.rumin(0);
  // x¹ in quotient coordinates: I¹ = 0, so the quotient is all of Ω¹
  ModElem img = dr.lift_j(1, R.images[0]);
  const Hopf& H = dr.hopf();
  ModElem expect = ModElem::term(H.mul(H.gen(1), H.gen(0)), 0) * Q(-1) - ModElem::term(H.mul(H.gen(1), H.gen(1)), 1);
  CHECK(img == expect);
}

TEST_CASE("conformally symplectic complex") {
  for (const auto& s : {spec_A2(), spec_F2(), spec_X2(), spec_A4()}) {
    INFO(s.name);
    auto H = hopf(s);
    DeRham dr(H, s.dim == 2 ? two_dim_pi(s) : std::vector<Matrix>{});
    Complex c = dr.csdr();
    REQUIRE(c.terms.size() == static_cast<size_t>(s.dim + 2));
    for (const auto& m : c.maps) CHECK(check_homomorphism(m));
    int cap = s.dim == 2 ? 3 : 2;
    std::vector<int> terms;
    for (int t = 0; t < s.dim; ++t) terms.push_back(t);
    ExactnessReport rep = exactness_check(c, cap, terms);
    CHECK(rep.zero_compositions);
    for (int t : terms) CHECK(rep.exact_at(t));
  }
  DeRham dr(hopf(spec_A2()), {});
  Complex c = dr.csdr();
  std::vector<int> dims;
  for (const auto& t : c.terms) dims.push_back(t->dim0());
  CHECK(dims == std::vector<int>{1, 2, 2, 1});
  DeRham dx(hopf(spec_X2()), {});
  Complex cx = dx.csdr();
  CHECK(cx.labels[0] == "T(Pi,R(pi0))");
  CHECK(cx.labels[1] == "T(Pi_{-1/2chi},R(pi1))");
  CHECK(cx.labels[2] == "T(Pi_{-3/2chi},R(pi1))");
  CHECK(cx.labels[3] == "T(Pi_{-2chi},R(pi0))");
}

TEST_CASE("pseudo de Rham exactness and top cokernel") {
  for (const auto& s : {spec_A2(), spec_F2()}) {
    INFO(s.name);
    DeRham dr(hopf(s), {});
    Complex c = dr.pseudo_de_rham();
    ExactnessReport rep = exactness_check(c, 3, {0, 1});
    CHECK(rep.zero_compositions);
    CHECK(rep.exact_at(0));
    CHECK(rep.exact_at(1));
    CHECK(cokernel_profile(c, 3) == std::vector<int>{1, 1, 1, 1});
  }
}

TEST_CASE("twisting the de Rham differential") {
  for (const auto& s : {spec_A2(), spec_X2()}) {
    INFO(s.name);
    auto H = hopf(s);
    auto pi = two_dim_pi(s);
    DeRham plain(H, {}), twisted(H, pi);
    for (int n = 0; n < 2; ++n) {
      ModuleMap t = twist_map(pi, plain.d(n, 0), twisted.omega(n, 0), twisted.omega(n + 1, 0));
      CHECK(same_images(t, twisted.d(n, 0)));
    }
    ModuleMap t0 = twist_map(pi, plain.d(0, 0), twisted.omega(0, 0), twisted.omega(1, 0));
    ModuleMap t1 = twist_map(pi, plain.d(1, 0), twisted.omega(1, 0), twisted.omega(2, 0));
    CHECK(compose(t1, t0).is_zero());
  }
}
