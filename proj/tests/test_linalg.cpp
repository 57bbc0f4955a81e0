#include "doctest.h"
#include "hpseudo/linalg.hpp"
#include "hpseudo/multiindex.hpp"

using namespace hp;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational(" -4 ") == Q(-4));
  CHECK(parse_rational("\"7/3\"") == Q(7, 3));
  CHECK(to_string(Q(-2, 4)) == "-1/2");
  CHECK(to_string(Q(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("rank, kernel and inverse") {
  Matrix m(3, 3);
  int v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  CHECK(rank(m) == 2);
  auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(vec_is_zero(m.apply(ker[0])));
  CHECK_FALSE(inverse(m).has_value());
  Matrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  auto x = solve(a, {Q(3), Q(2)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
}

TEST_CASE("sparse eliminator tracks relations and filtered pivots") {
  Eliminator el(true);
  CHECK(el.add({{0, Q(1)}, {2, Q(1)}}));
  CHECK(el.add({{1, Q(1)}, {2, Q(-1)}}));
  CHECK_FALSE(el.add({{0, Q(2)}, {1, Q(2)}, {2, Q(0)}}));
  REQUIRE(el.relations().size() == 1);
  // relation: 2*v0 + 2*v1 - v2 = 0
  auto rel = el.relations()[0];
  CHECK(rel.size() == 3);
  CHECK(el.rank() == 2);
  CHECK(el.in_span({{0, Q(1)}, {1, Q(1)}}));
  CHECK_FALSE(el.in_span({{2, Q(1)}}));
  // span ∩ {coords 0,1 vanish}: nothing
  CHECK(el.count_pivots_at_least(2) == 0);
  Eliminator e2;
  e2.add({{0, Q(1)}, {3, Q(1)}});
  e2.add({{0, Q(1)}, {2, Q(1)}});
  CHECK(e2.count_pivots_at_least(2) == 1);
}

TEST_CASE("multi-index packing and order") {
  MI a = MI::from({2, 0});
  MI b = MI::from({1, 1});
  MI c = MI::from({0, 2});
  CHECK(a.deg() == 2);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(MI::unit(0) < MI::unit(1));
  CHECK(MI::unit(1) < a);
  CHECK((a + b) == MI::from({3, 1}));
  CHECK(((a + b) - b) == a);
  CHECK(b.last() == 1);
  CHECK(multi_indices_upto(2, 2).size() == 6);
  CHECK(multi_indices_upto(4, 3).size() == 35);
  CHECK(sub_indices(b, 2).size() == 4);
}
