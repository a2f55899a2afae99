#include <random>

#include "doctest.h"
#include "strata/cyclo.hpp"

using namespace strata;

namespace {

CycNumber cpow(const CycNumber& x, long long e) {
  CycNumber acc = CycNumber::from_rational(1);
  for (long long i = 0; i < e; ++i) acc *= x;
  return acc;
}

CycNumber random_element(std::mt19937_64& rng, long long conductor) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  CycNumber x;
  long long phi = euler_phi_prime_power(conductor);
  for (long long i = 0; i < phi; ++i) {
    CycNumber term = CycNumber::root_of_unity(conductor, i);
    x += term * CycNumber::from_rational(Rational(num(rng), den(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("roots of unity satisfy their defining relations") {
  for (long long n : {4, 8, 9, 25, 27}) {
    CycNumber w = CycNumber::root_of_unity(n, 1);
    CHECK(cpow(w, n) == CycNumber::from_rational(1));
    CHECK(cpow(w, n / 2 + 1) != CycNumber::from_rational(1));
  }
  // Phi_{p^k}(omega) = 0.
  for (long long n : {9, 8, 25}) {
    long long p = (n == 8) ? 2 : (n == 9 ? 3 : 5);
    CycNumber sum;
    for (long long i = 0; i < p; ++i) {
      sum += CycNumber::root_of_unity(n, i * (n / p));
    }
    CHECK(sum.is_zero());
  }
  CycNumber i4 = CycNumber::root_of_unity(4, 1);
  CHECK((i4 + i4.conjugate()).is_zero());
}

TEST_CASE("rational part") {
  CHECK(CycNumber::from_rational(3).rational_part() == Rational(3));
  // A Galois-stable sum collapses to a rational.
  CycNumber sum;
  for (long long t = 1; t < 9; ++t) {
    if (t % 3 == 0) continue;
    sum += CycNumber::root_of_unity(9, t);
  }
  CHECK(sum.rational_part() == Rational(0));
  CHECK_THROWS_WITH_AS(CycNumber::root_of_unity(9, 1).rational_part(),
                       "not rational", std::domain_error);
}

TEST_CASE("galois orbit degree") {
  // omega + conj(omega) generates the maximal real subfield.
  for (auto [n, expect] : std::vector<std::pair<long long, long long>>{
           {8, 2}, {16, 4}, {4, 1}}) {
    CycNumber w = CycNumber::root_of_unity(n, 1);
    CHECK(galois_orbit_degree(w + w.conjugate()) == expect);
  }
  CHECK(galois_orbit_degree(CycNumber::root_of_unity(27, 3)) == 6);   // phi(9)
  CHECK(galois_orbit_degree(CycNumber::root_of_unity(25, 5)) == 4);   // phi(5)
  CHECK(galois_orbit_degree(CycNumber::from_rational(Rational(7, 2))) == 1);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(99);
  for (long long n : {9, 8, 27}) {
    for (int trial = 0; trial < 60; ++trial) {
      CycNumber a = random_element(rng, n);
      CycNumber b = random_element(rng, n);
      CycNumber c = random_element(rng, n);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a.conjugate().conjugate() == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CycNumber::from_rational(1));
      }
      long long deg = galois_orbit_degree(a);
      CHECK(euler_phi_prime_power(n) % deg == 0);
    }
  }
}

TEST_CASE("conductor coercion") {
  CycNumber w3 = CycNumber::root_of_unity(3, 1);
  CycNumber w9 = CycNumber::root_of_unity(9, 3);
  CHECK(w3 == w9);  // lifts into conductor 9
  CHECK_THROWS_AS(CycNumber::root_of_unity(9, 1) + CycNumber::root_of_unity(4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(CycNumber::root_of_unity(6, 1), std::invalid_argument);
}

TEST_CASE("roots for orders 2m with odd m") {
  CycNumber z6 = cyc_root(6, 1);
  CHECK(cpow(z6, 6) == CycNumber::from_rational(1));
  CHECK(cpow(z6, 3) == CycNumber::from_rational(-1));
  CHECK(cpow(z6, 2) == CycNumber::root_of_unity(3, 1));
  CHECK(cyc_root(2, 1) == CycNumber::from_rational(-1));
  CHECK(cyc_root(1, 0) == CycNumber::from_rational(1));
  CHECK_THROWS_AS(cyc_root(12, 1), std::invalid_argument);
  CHECK_THROWS_AS(cyc_root(15, 1), std::invalid_argument);
}
