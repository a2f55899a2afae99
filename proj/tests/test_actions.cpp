#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "strata/actions.hpp"

using namespace strata;

namespace {

FiniteGroup dihedral4() { return from_permutations({{2, 3, 4, 1}, {3, 2, 1, 4}}); }

SurfaceKernelEpimorphism make(const Signature& sig, const FiniteGroup& g,
                              std::vector<int> hyp, std::vector<int> per) {
  return SurfaceKernelEpimorphism{sig, &g, std::move(hyp), std::move(per)};
}

// The canonical epimorphism (s, bs, a, ab) of the order-2^n family.
SurfaceKernelEpimorphism g2_canonical(const FiniteGroup& g) {
  int s = g.generator("s"), b = g.generator("b"), a = g.generator("a");
  return make(Signature(0, {2, 2, 2, 4}), g, {},
              {s, g.mul(b, s), a, g.mul(a, b)});
}

// (alpha, beta, gamma) -> (a, b, a^{p^{n-2}}) of the order-p^n family.
SurfaceKernelEpimorphism gp_canonical(const FiniteGroup& g, long long p, int n) {
  long long q = 1;
  for (int i = 0; i + 2 < n; ++i) q *= p;
  int a = g.generator("a"), b = g.generator("b");
  return make(Signature(1, {p}), g, {a, b}, {g.pow(a, q)});
}

}  // namespace

TEST_CASE("is_surface_kernel") {
  FiniteGroup g = build_G2(5);
  CHECK(is_surface_kernel(g2_canonical(g)).ok);

  FiniteGroup gp = build_Gp(3, 3);
  CHECK(is_surface_kernel(gp_canonical(gp, 3, 3)).ok);

  // (z, sr, sr^2, r): periods and relation hold but generation fails.
  int r = g.generator("r"), s = g.generator("s");
  auto bad = make(Signature(0, {2, 2, 2, 4}), g, {},
                  {g.pow(r, 2), g.mul(s, r), g.mul(s, g.pow(r, 2)), r});
  auto check = is_surface_kernel(bad);
  CHECK_FALSE(check.ok);
  CHECK(check.violation == "images do not generate the group");

  // Wrong order comes first.
  auto wrong = make(Signature(0, {2, 2, 2, 4}), g, {}, {s, s, s, s});
  CHECK_FALSE(is_surface_kernel(wrong).ok);
  CHECK(is_surface_kernel(wrong).violation.find("order") != std::string::npos);

  CHECK_THROWS_AS(is_surface_kernel(make(Signature(0, {2, 2, 2, 4}), g, {}, {s, s})),
                  std::invalid_argument);
}

TEST_CASE("enumerate_actions basics") {
  FiniteGroup g = build_G2(5);
  auto all = enumerate_actions(Signature(0, {2, 2, 2, 4}), g);
  CHECK(!all.empty());
  int s = g.generator("s"), b = g.generator("b");
  // Every epimorphism has exactly two period images in the reflection cosets
  // s<r> and bs<r>.
  auto sr_coset = subgroup_generated(g, {g.generator("r")});
  auto in_reflection = [&](int x) {
    for (int rr : sr_coset) {
      if (x == g.mul(s, rr) || x == g.mul(g.mul(b, s), rr)) return true;
    }
    return false;
  };
  for (const auto& theta : all) {
    int count = 0;
    for (int x : theta.period_images) count += in_reflection(x) ? 1 : 0;
    CHECK(count == 2);
  }

  // Independent brute force for ((1;3), Gp(3,3)).
  FiniteGroup gp = build_Gp(3, 3);
  auto lib = enumerate_actions(Signature(1, {3}), gp);
  long long brute = 0;
  for (int x = 0; x < gp.size(); ++x) {
    for (int y = 0; y < gp.size(); ++y) {
      int z = gp.inv(gp.commutator(x, y));
      if (gp.order(z) != 3) continue;
      if (subgroup_generated(gp, {x, y, z}).size() != 27) continue;
      ++brute;
    }
  }
  CHECK(brute > 0);
  CHECK(static_cast<long long>(lib.size()) == brute);

  // C_2 has no element of order 4.
  CHECK(enumerate_actions(Signature(0, {2, 2, 2, 4}), cyclic_group(2)).empty());
}

TEST_CASE("moves") {
  FiniteGroup gp = build_Gp(3, 3);
  auto theta = gp_canonical(gp, 3, 3);

  // A1 with u = -m k' clears the b-part of the second image: start from
  // x = a^l b^k, y = a^s b^m.
  int a = gp.generator("a"), b = gp.generator("b");
  auto skewed = make(Signature(1, {3}), gp,
                     {gp.mul(gp.pow(a, 2), b), gp.mul(gp.pow(a, 5), gp.pow(b, 2))},
                     {});
  // Complete it to an epimorphism: gamma forced by the relation.
  int z = gp.inv(gp.commutator(skewed.hyperbolic_images[0],
                               skewed.hyperbolic_images[1]));
  skewed.period_images = {z};
  REQUIRE(is_surface_kernel(skewed).ok);
  // k = 1, m = 2, so u = -2 * 1 = -2 modulo 3.
  auto moved = apply_move(skewed, A1Move{-2});
  // Second image now lies in <a>.
  auto a_sub = subgroup_generated(gp, {a});
  CHECK(std::binary_search(a_sub.begin(), a_sub.end(),
                           moved.hyperbolic_images[1]));

  // Braid twice preserves the unordered multiset of conjugacy classes of the
  // period images.
  FiniteGroup g2 = build_G2(5);
  auto canon = g2_canonical(g2);
  auto classes = conjugacy_classes(g2);
  auto class_of = [&](int x) {
    for (size_t c = 0; c < classes.size(); ++c) {
      if (std::binary_search(classes[c].begin(), classes[c].end(), x)) return c;
    }
    return size_t(-1);
  };
  auto braided = apply_move(apply_move(canon, BraidMove{1}), BraidMove{1});
  std::multiset<size_t> before, after;
  for (int x : canon.period_images) before.insert(class_of(x));
  for (int x : braided.period_images) after.insert(class_of(x));
  CHECK(before == after);

  // Conjugation preserves the surface-kernel property.
  std::mt19937_64 rng(11);
  auto all = enumerate_actions(Signature(0, {2, 2, 2, 4}), g2);
  std::uniform_int_distribution<size_t> pick_theta(0, all.size() - 1);
  std::uniform_int_distribution<int> pick_g(0, g2.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto& t = all[pick_theta(rng)];
    auto moved2 = apply_move(t, ConjugateMove{pick_g(rng)});
    CHECK(is_surface_kernel(moved2).ok);
  }

  // Every move output is again surface-kernel (checked inside apply_move,
  // which throws otherwise); exercise each kind once.
  auto auts = automorphisms(g2);
  CHECK(is_surface_kernel(apply_move(canon, AutomorphismMove{&auts[1]})).ok);
  CHECK(is_surface_kernel(apply_move(theta, A2Move{1})).ok);

  // Shape errors.
  CHECK_THROWS_AS(apply_move(canon, A1Move{1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(canon, BraidMove{3}), std::invalid_argument);  // 2 vs 4
  CHECK_THROWS_AS(apply_move(canon, BraidMove{0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(theta, BraidMove{1}), std::invalid_argument);
}

TEST_CASE("classification of the order-p^n family") {
  // Under conjugation alone the canonical tuples theta_m fall into p-1
  // distinct classes, but the A1/A2 closure combined with the full
  // automorphism group (power maps a -> a^u in particular) fuses them into a
  // single orbit; see the verification suite notes. The tests pin the
  // computed truth for this move set.
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}}) {
    FiniteGroup gp = build_Gp(p, n);
    auto classified = classify_with_members(Signature(1, {p}), gp);
    const auto& report = classified.report;
    CHECK(report.total > 0);
    CHECK(report.orbits.size() == 1);
    // Every theta_m = (a, b^m, a^{r^m - 1}) is a valid epimorphism and lies
    // in the enumeration.
    long long q = 1;
    for (int i = 0; i + 1 < n; ++i) q *= p;
    long long r = q / p + 1;
    int a = gp.generator("a"), b = gp.generator("b");
    std::set<int> hit;
    for (int m = 1; m < p; ++m) {
      long long rm = 1;
      for (int i = 0; i < m; ++i) rm = rm * r % q;
      auto theta_m = make(Signature(1, {p}), gp, {a, gp.pow(b, m)},
                          {gp.pow(a, rm - 1)});
      REQUIRE(is_surface_kernel(theta_m).ok);
      auto tuple = theta_m.tuple();
      bool found = false;
      for (size_t i = 0; i < classified.all.size(); ++i) {
        if (classified.all[i].tuple() == tuple) {
          hit.insert(classified.orbit_of[i]);
          found = true;
          break;
        }
      }
      CHECK(found);
    }
    CHECK(hit.size() == 1);
  }
}

TEST_CASE("classification of the order-2^n family (n = 5)") {
  FiniteGroup g = build_G2(5);
  auto report = classify(Signature(0, {2, 2, 2, 4}), g);
  CHECK(report.total > 0);
  CHECK(report.orbits.size() <= 16);  // 2^{2n-6}
}

TEST_CASE("classification of D_4") {
  auto d4 = dihedral4();
  auto report = classify(Signature(0, {2, 2, 2, 4}), d4);
  CHECK(report.orbits.size() >= 1);
}

TEST_CASE("central element claim") {
  for (int n : {5, 6}) {
    FiniteGroup g = build_G2(n);
    CHECK(central_element_claim(Signature(0, {2, 2, 2, 4}), g));
  }
}

TEST_CASE("quotient branch data") {
  FiniteGroup g = build_G2(5);
  auto theta = g2_canonical(g);
  int z = g.pow(g.generator("r"), 2);
  auto bd = quotient_branch_data(theta, {g.identity(), z});
  CHECK(bd.genus == 1);
  CHECK(bd.branch_orders == std::vector<long long>(8, 2));  // 2^{n-2} = 8

  FiniteGroup gp = build_Gp(3, 3);
  auto tp = gp_canonical(gp, 3, 3);
  int a3 = gp.pow(gp.generator("a"), 3);
  auto bdp = quotient_branch_data(tp, subgroup_generated(gp, {a3}));
  CHECK(bdp.genus == 1);
  CHECK(bdp.branch_orders == std::vector<long long>(9, 3));  // p^{n-1} = 9

  auto bd_triv = quotient_branch_data(theta, {g.identity()});
  CHECK(bd_triv.genus == 5);  // 1 + 2^{n-3}
  CHECK(bd_triv.branch_orders.empty());

  CHECK_THROWS_AS(quotient_branch_data(theta, {g.generator("r")}),
                  std::invalid_argument);
}

TEST_CASE("extension witness") {
  CHECK(extension_witness(3, 3));
  CHECK(extension_witness(5, 3));

  // Sanity: with the inverting action all involutions of G' lie in tG and
  // have the form t*a^k.
  FiniteGroup gp = build_Gp(3, 3);
  auto auts = automorphisms(gp);
  int a = gp.generator("a"), b = gp.generator("b");
  const GroupMap* inv_a = nullptr;
  for (auto& f : auts) {
    if (f.apply(a) == gp.inv(a) && f.apply(b) == b) inv_a = &f;
  }
  REQUIRE(inv_a != nullptr);
  FiniteGroup c2 = cyclic_group(2, "t");
  FiniteGroup gprime = semidirect_product(gp, c2, {identity_map(gp), *inv_a});
  int t = gprime.generator("t");
  int aa = gprime.generator("a");
  std::set<int> ta_coset;
  int ak = gprime.identity();
  for (int k = 0; k < 9; ++k) {
    ta_coset.insert(gprime.mul(t, ak));
    ak = gprime.mul(ak, aa);
  }
  for (int x = 1; x < gprime.size(); ++x) {
    if (gprime.order(x) == 2) CHECK(ta_coset.count(x) == 1);
  }
}

TEST_CASE("maximality lookup") {
  auto m = maximality_lookup(Signature(0, {2, 2, 2, 4}));
  CHECK(m.status == MaximalityInfo::Status::maximal);
  auto e = maximality_lookup(Signature(1, {5}));
  CHECK(e.status == MaximalityInfo::Status::extends_to);
  REQUIRE(e.extensions.size() == 1);
  CHECK(e.extensions[0] == Signature(0, {2, 2, 2, 10}));
  CHECK(maximality_lookup(Signature(2, {})).status ==
        MaximalityInfo::Status::unknown);
}

TEST_CASE("classification is a partition and deterministic") {
  FiniteGroup g = build_G2(5);
  auto r1 = classify(Signature(0, {2, 2, 2, 4}), g);
  auto r2 = classify(Signature(0, {2, 2, 2, 4}), g);
  REQUIRE(r1.orbits.size() == r2.orbits.size());
  long long total = 0;
  for (size_t i = 0; i < r1.orbits.size(); ++i) {
    CHECK(r1.orbits[i].representative == r2.orbits[i].representative);
    CHECK(r1.orbits[i].size == r2.orbits[i].size);
    total += r1.orbits[i].size;
  }
  CHECK(total == r1.total);
}
