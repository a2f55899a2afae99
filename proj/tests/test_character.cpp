#include <algorithm>
#include <set>

#include "doctest.h"
#include "strata/character.hpp"

using namespace strata;

TEST_CASE("character table of the Klein four-group") {
  FiniteGroup klein = from_permutations({{2, 1, 3, 4}, {1, 2, 4, 3}});
  auto t = character_table(klein);
  CHECK(t.num_classes() == 4);
  CHECK(t.num_chars() == 4);
  for (long long d : t.degrees) CHECK(d == 1);
}

TEST_CASE("character table of Gp(3,3)") {
  FiniteGroup g = build_Gp(3, 3);
  auto t = character_table(g);
  CHECK(t.num_classes() == 11);
  int linear = 0, deg3 = 0;
  long long sum_sq = 0;
  for (long long d : t.degrees) {
    sum_sq += d * d;
    if (d == 1) ++linear;
    if (d == 3) ++deg3;
  }
  CHECK(sum_sq == 27);
  CHECK(linear == 9);
  CHECK(deg3 == 2);
}

TEST_CASE("character table of G2(5) contains a degree-4 irreducible") {
  FiniteGroup g = build_G2(5);
  auto t = character_table(g);
  CHECK(std::count(t.degrees.begin(), t.degrees.end(), 4) >= 1);
}

TEST_CASE("explicit family representations match the generic path") {
  {
    FiniteGroup g = build_G2(5);
    auto t = character_table(g);
    auto v = g2_family_character(t, 5);
    CHECK(table_contains(t, v));
    // The character of V has degree 4 at the identity class.
    CHECK(v[0].rational_part() == Rational(4));
  }
  {
    FiniteGroup g = build_Gp(3, 3);
    auto t = character_table(g);
    auto v = gp_family_character(t, 3, 3);
    CHECK(table_contains(t, v));
    CHECK(v[0].rational_part() == Rational(3));
  }
}

TEST_CASE("rational irreducibles") {
  {
    // Orbit of the 4-dimensional character of the order-2^n group has size
    // 2^{n-5}.
    for (int n : {5, 6}) {
      FiniteGroup g = build_G2(n);
      auto t = character_table(g);
      auto irreps = rational_irreps(t);
      auto family = g2_family_character(t, n);
      bool found = false;
      for (const auto& w : irreps) {
        if (w.degree == 4 && table_contains(t, family)) {
          // find the orbit containing the family character
          for (int row : w.members) {
            if (t.chars[row] == family) {
              CHECK(w.field_degree == (1LL << (n - 5)));
              CHECK(w.multiplicity == 4);
              found = true;
            }
          }
        }
      }
      CHECK(found);
    }
  }
  {
    // Orbit of the little-groups character has size phi(p^{n-2}); all
    // non-linear characters fall into a single rational irreducible.
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}, {3, 4}}) {
      FiniteGroup g = build_Gp(p, n);
      auto t = character_table(g);
      auto irreps = rational_irreps(t);
      long long expected = 1;
      for (int i = 0; i + 3 < n; ++i) expected *= p;
      expected *= (p - 1);  // phi(p^{n-2}) = p^{n-3}(p-1)
      bool found = false;
      for (const auto& w : irreps) {
        if (w.degree == p) {
          CHECK(w.field_degree == expected);
          found = true;
        }
      }
      CHECK(found);
    }
  }
  {
    FiniteGroup g = build_Gp(3, 3);
    auto t = character_table(g);
    auto irreps = rational_irreps(t);
    CHECK(irreps.front().trivial);
    CHECK(irreps.front().field_degree == 1);
    CHECK(irreps.front().degree == 1);
  }
  {
    FiniteGroup d3 = from_permutations({{2, 3, 1}, {2, 1, 3}});
    auto t = character_table(d3);  // fine: exponent 6 = 2*3
    CHECK(t.num_chars() == 3);
    CHECK_THROWS_AS(rational_irreps(t), std::invalid_argument);  // not nilpotent
  }
}

TEST_CASE("column orthogonality holds exactly") {
  for (auto g : {build_G2(5), build_Gp(3, 3)}) {
    auto t = character_table(g);
    int r = t.num_classes();
    for (int k = 0; k < r; ++k) {
      for (int k2 = 0; k2 < r; ++k2) {
        CycNumber sum;
        for (int i = 0; i < r; ++i) {
          sum += t.chars[i][k] * t.chars[i][k2].conjugate();
        }
        Rational expected =
            k == k2 ? Rational(g.size(), static_cast<long long>(t.classes[k].size()))
                    : Rational(0);
        CHECK(sum == CycNumber::from_rational(expected));
      }
    }
  }
}

TEST_CASE("table size cap") {
  // A cyclic group over the cap is rejected.
  std::vector<int> cycle(600);
  for (int i = 0; i < 600; ++i) cycle[i] = (i + 1) % 600 + 1;
  CHECK_THROWS_AS(character_table(from_permutations({cycle})),
                  std::invalid_argument);
}
