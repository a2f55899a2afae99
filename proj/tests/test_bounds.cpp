#include <algorithm>

#include "doctest.h"
#include "strata/bounds.hpp"

using namespace strata;

TEST_CASE("max order coefficients") {
  CHECK(max_order_coefficient(GroupClass::nilpotent(), 1) == Rational(8));
  CHECK(max_order_coefficient(GroupClass::prime(3), 2) == Rational(3, 2));
  CHECK(max_order_coefficient(GroupClass::prime(5), 1) == Rational(5, 2));
  CHECK(max_order_coefficient(GroupClass::prime(2), 4) == Rational(4, 3));
  CHECK_THROWS_AS(max_order_coefficient(GroupClass::nilpotent(), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroupClass::prime(6), std::invalid_argument);
}

TEST_CASE("extremal signatures") {
  auto nil1 = extremal_signatures(GroupClass::prime(2), 1);
  REQUIRE(nil1.size() == 1);
  CHECK(nil1[0] == Signature(0, {2, 2, 2, 4}));

  auto p3d1 = extremal_signatures(GroupClass::prime(3), 1);
  REQUIRE(p3d1.size() == 2);
  CHECK(p3d1[0] == Signature(0, {3, 3, 3, 3}));
  CHECK(p3d1[1] == Signature(1, {3}));

  auto p5d1 = extremal_signatures(GroupClass::prime(5), 1);
  REQUIRE(p5d1.size() == 1);
  CHECK(p5d1[0] == Signature(1, {5}));

  auto nil3 = extremal_signatures(GroupClass::nilpotent(), 3);
  REQUIRE(nil3.size() == 1);
  CHECK(nil3[0] == Signature(0, {2, 2, 2, 2, 2, 2}));
}

TEST_CASE("minimal area search") {
  auto nil1 = min_area_search(1, SearchConstraint::nilpotent_admissible);
  CHECK(nil1.min_area == Rational(1, 4));
  REQUIRE(nil1.argmin.size() == 1);
  CHECK(nil1.argmin[0] == Signature(0, {2, 2, 2, 4}));

  auto nil2 = min_area_search(2, SearchConstraint::nilpotent_admissible);
  CHECK(nil2.min_area == Rational(1, 2));
  REQUIRE(nil2.argmin.size() == 1);
  CHECK(nil2.argmin[0] == Signature(0, {2, 2, 2, 2, 2}));

  auto p5 = min_area_search(1, SearchConstraint::periods_p_powers, 5);
  CHECK(p5.min_area == Rational(4, 5));
  REQUIRE(p5.argmin.size() == 1);
  CHECK(p5.argmin[0] == Signature(1, {5}));
}

TEST_CASE("search agrees with the closed forms on a grid") {
  for (long long p : {2, 3, 5, 7, 11}) {
    for (int d = 1; d <= 6; ++d) {
      GroupClass cls = GroupClass::prime(p);
      auto res = min_area_search(d, SearchConstraint::periods_p_powers, p);
      CHECK(res.min_area == 2 / max_order_coefficient(cls, d));
      CHECK(res.argmin == extremal_signatures(cls, d));
    }
  }
  for (int d = 1; d <= 6; ++d) {
    auto res = min_area_search(d, SearchConstraint::nilpotent_admissible);
    CHECK(res.min_area == 2 / max_order_coefficient(GroupClass::nilpotent(), d));
    CHECK(res.argmin == extremal_signatures(GroupClass::nilpotent(), d));
  }
}

TEST_CASE("coefficient is non-increasing in d") {
  for (long long p : {2, 3, 5, 7, 11}) {
    for (int d = 1; d < 8; ++d) {
      CHECK(max_order_coefficient(GroupClass::prime(p), d) >=
            max_order_coefficient(GroupClass::prime(p), d + 1));
    }
  }
}

TEST_CASE("extremal signatures satisfy the constraints") {
  for (int d = 1; d <= 6; ++d) {
    for (auto& sig : extremal_signatures(GroupClass::nilpotent(), d)) {
      CHECK(is_nilpotent_admissible(sig));
      CHECK(teichmuller_dim(sig) == d);
    }
    for (long long p : {3, 5, 7}) {
      for (auto& sig : extremal_signatures(GroupClass::prime(p), d)) {
        CHECK(teichmuller_dim(sig) == d);
        for (long long m : sig.periods()) CHECK(m == p);
      }
    }
  }
}

TEST_CASE("equality only at the extremal signatures") {
  for (long long p : {2, 3, 5}) {
    for (int d = 1; d <= 4; ++d) {
      auto res = min_area_search(d, SearchConstraint::periods_p_powers, p);
      Rational bound = 2 / max_order_coefficient(GroupClass::prime(p), d);
      CHECK(res.min_area == bound);
      auto ext = extremal_signatures(GroupClass::prime(p), d);
      for (auto& sig : res.argmin) {
        CHECK(std::find(ext.begin(), ext.end(), sig) != ext.end());
      }
    }
  }
}

TEST_CASE("check_action_against_bound") {
  FiniteGroup g2 = build_G2(5);
  CHECK(check_action_against_bound(g2, Signature(0, {2, 2, 2, 4}), 1) ==
        BoundVerdict::extremal);
  FiniteGroup gp = build_Gp(3, 3);
  CHECK(check_action_against_bound(gp, Signature(1, {3}), 1) ==
        BoundVerdict::extremal);
  FiniteGroup gp5 = build_Gp(5, 3);
  CHECK(check_action_against_bound(gp5, Signature(1, {5}), 1) ==
        BoundVerdict::extremal);
  // Non-integral genus: vacuously consistent.
  FiniteGroup c2 = cyclic_group(2);
  CHECK(check_action_against_bound(c2, Signature(0, {2, 2, 2, 2, 2}), 2) ==
        BoundVerdict::consistent);
  FiniteGroup d3 = from_permutations({{2, 3, 1}, {2, 1, 3}});
  CHECK_THROWS_AS(check_action_against_bound(d3, Signature(0, {2, 2, 2, 4}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_action_against_bound(g2, Signature(0, {2, 2, 2, 4}), 2),
                  std::invalid_argument);
}
