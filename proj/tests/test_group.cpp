#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "strata/group.hpp"

using namespace strata;

namespace {

FiniteGroup dihedral4() { return from_permutations({{2, 3, 4, 1}, {3, 2, 1, 4}}); }
FiniteGroup klein4() { return from_permutations({{2, 1, 3, 4}, {1, 2, 4, 3}}); }
FiniteGroup dihedral3() { return from_permutations({{2, 3, 1}, {2, 1, 3}}); }

}  // namespace

TEST_CASE("build_G2 sizes and relations") {
  for (int n : {5, 6, 7}) {
    FiniteGroup g = build_G2(n);  // relations are asserted at construction
    CHECK(g.size() == (1 << n));
    int s = g.generator("s"), r = g.generator("r"), a = g.generator("a");
    CHECK(g.mul(g.mul(a, s), a) == g.mul(s, r));
  }
  CHECK_THROWS_AS(build_G2(4), std::invalid_argument);
  CHECK_THROWS_AS(build_G2(3), std::invalid_argument);
}

TEST_CASE("build_G2 element orders") {
  FiniteGroup g6 = build_G2(6);
  int ab = g6.mul(g6.generator("a"), g6.generator("b"));
  CHECK(g6.order(ab) == 4);
  for (int n : {5, 6, 7}) {
    FiniteGroup g = build_G2(n);
    int r = g.generator("r");
    CHECK(g.order(g.pow(r, 1LL << (n - 4))) == 2);  // z
    CHECK(g.order(g.pow(r, 1LL << (n - 5))) == 4);  // w
  }
}

TEST_CASE("build_Gp") {
  FiniteGroup g = build_Gp(3, 3);
  CHECK(g.size() == 27);
  int a = g.generator("a"), b = g.generator("b");
  CHECK(g.order(a) == 9);
  CHECK(g.conj(b, a) == g.pow(a, 4));  // r = p^{n-2}+1 = 4
  // r^k != 1 mod 9 for k = 1, 2: conjugating twice by b is not trivial yet.
  CHECK(g.conj(b, a) != a);
  CHECK(g.conj(b, g.conj(b, a)) != a);
  CHECK(build_Gp(5, 3).size() == 125);
  CHECK_THROWS_AS(build_Gp(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_Gp(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_Gp(3, 2), std::invalid_argument);
}

TEST_CASE("from_permutations") {
  CHECK(dihedral4().size() == 8);
  CHECK(from_permutations({}).size() == 1);
  CHECK(klein4().size() == 4);
  CHECK_THROWS_AS(from_permutations({{1, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(from_permutations({{2, 3, 4, 5, 6, 7, 1}}, 5),
                  std::invalid_argument);  // closure cap
}

TEST_CASE("element orders in the families") {
  FiniteGroup g = build_Gp(3, 4);
  CHECK(g.order(g.generator("a")) == 27);
  CHECK(g.order(g.generator("b")) == 3);
}

TEST_CASE("family builders at larger sizes") {
  CHECK(build_G2(8).size() == 256);
  CHECK(build_Gp(3, 5).size() == 243);
  CHECK(build_Gp(7, 3).size() == 343);
  CHECK_THROWS_AS(build_G2(13), std::invalid_argument);
  CHECK_THROWS_AS(build_Gp(3, 8), std::invalid_argument);
}

TEST_CASE("subgroup_generated") {
  FiniteGroup g = build_G2(5);
  std::vector<int> gens;
  for (auto& [nm, x] : g.generators()) gens.push_back(x);
  CHECK(subgroup_generated(g, gens).size() == 32);
  CHECK(subgroup_generated(g, {}) == std::vector<int>{g.identity()});
  // <z, sr, w> lies inside the dihedral part: a proper subgroup.
  int r = g.generator("r"), s = g.generator("s");
  int z = g.pow(r, 2), w = r;
  auto sub = subgroup_generated(g, {z, g.mul(s, r), w});
  CHECK(sub.size() < 32);
  CHECK(sub.size() == 8);  // <r, sr> = D_4 as permutations of <r,s>
}

TEST_CASE("conjugacy classes") {
  auto klein = klein4();
  CHECK(conjugacy_classes(klein).size() == 4);
  FiniteGroup g = build_G2(5);
  int z = g.pow(g.generator("r"), 2);
  auto classes = conjugacy_classes(g);
  bool z_singleton = false;
  for (auto& cls : classes) {
    if (cls == std::vector<int>{z}) z_singleton = true;
  }
  CHECK(z_singleton);
  CHECK(conjugacy_classes(dihedral4()).size() == 5);
}

TEST_CASE("center, p-group, nilpotency") {
  for (int n : {5, 6}) {
    FiniteGroup g = build_G2(n);
    CHECK(is_p_group(g, 2));
    CHECK(p_group_prime(g) == 2);
    CHECK(is_nilpotent(g));
    auto z = center(g);
    CHECK(z.size() == 2);
  }
  FiniteGroup gp = build_Gp(3, 3);
  CHECK(is_p_group(gp, 3));
  CHECK_FALSE(is_p_group(gp, 2));
  CHECK(is_nilpotent(gp));
  auto d3 = dihedral3();
  CHECK_FALSE(is_nilpotent(d3));
  CHECK(center(d3).size() == 1);
  CHECK(p_group_prime(d3) == 0);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(klein4()).size() == 6);   // GL(2,2)
  CHECK(automorphisms(cyclic_group(4)).size() == 2);

  // Independent oracle: brute force over all generator image pairs, testing
  // multiplicativity on the full table via the a^i b^j normal form.
  FiniteGroup g = build_Gp(3, 3);
  int a = g.generator("a"), b = g.generator("b");
  long long brute = 0;
  for (int x = 0; x < g.size(); ++x) {
    for (int y = 0; y < g.size(); ++y) {
      std::vector<int> f(27);
      for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 3; ++j) {
          f[g.mul(g.pow(a, i), g.pow(b, j))] = g.mul(g.pow(x, i), g.pow(y, j));
        }
      }
      bool hom = true;
      for (int u = 0; u < 27 && hom; ++u) {
        for (int v = 0; v < 27 && hom; ++v) {
          hom = f[g.mul(u, v)] == g.mul(f[u], f[v]);
        }
      }
      std::set<int> image(f.begin(), f.end());
      if (hom && image.size() == 27) ++brute;
    }
  }
  CHECK(automorphisms(g).size() == brute);
}

TEST_CASE("automorphism group structure") {
  FiniteGroup g = build_G2(5);
  auto auts = automorphisms(g);
  CHECK(!auts.empty());
  // Closure under composition and inversion.
  std::set<std::vector<int>> set;
  for (auto& f : auts) set.insert(f.images);
  for (size_t i = 0; i < std::min<size_t>(auts.size(), 12); ++i) {
    for (size_t j = 0; j < std::min<size_t>(auts.size(), 12); ++j) {
      CHECK(set.count(auts[i].compose(auts[j]).images));
    }
    CHECK(set.count(auts[i].inverse_map().images));
  }
  // The canonical-form reduction needs r -> r^{-1}, s -> sr, a -> a, b -> b.
  int r = g.generator("r"), s = g.generator("s");
  bool found = false;
  for (auto& f : auts) {
    if (f.apply(r) == g.inv(r) && f.apply(s) == g.mul(s, r) &&
        f.apply(g.generator("a")) == g.generator("a") &&
        f.apply(g.generator("b")) == g.generator("b")) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("semidirect products") {
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
  CHECK(gprime.size() == 54);
  int t = gprime.generator("t"), aa = gprime.generator("a");
  CHECK(gprime.conj(t, aa) == gprime.inv(aa));
  CHECK(gprime.conj(t, gprime.generator("b")) == gprime.generator("b"));

  // N x| C_1 is N again.
  FiniteGroup c1 = trivial_group();
  FiniteGroup same = semidirect_product(gp, c1, {identity_map(gp)});
  CHECK(same.size() == gp.size());
  for (int x = 0; x < gp.size(); ++x) {
    for (int y = 0; y < gp.size(); ++y) CHECK(same.mul(x, y) == gp.mul(x, y));
  }

  // Rebuilding the order-2^n family from its semidirect pieces gives an
  // isomorphic group.
  // D_{2^{n-3}} = C_{2^{n-3}} x| C_2, then x C_2(b), then x| C_2(a).
  const int n = 5;
  FiniteGroup cr = cyclic_group(1 << (n - 3), "r");
  FiniteGroup cs = cyclic_group(2, "s");
  GroupMap invert{&cr, &cr, {}};
  invert.images.resize(cr.size());
  for (int x = 0; x < cr.size(); ++x) invert.images[x] = cr.inv(x);
  FiniteGroup dih = semidirect_product(cr, cs, {identity_map(cr), invert});
  FiniteGroup cb = cyclic_group(2, "b");
  std::vector<GroupMap> trivial_action(2, identity_map(dih));
  FiniteGroup nsub = semidirect_product(dih, cb, trivial_action);
  // Twist by a: r -> r^{-1}, s -> sr, b -> b r^{2^{n-4}}.
  auto na = automorphisms(nsub);
  int rr = nsub.generator("r"), ss = nsub.generator("s"), bb = nsub.generator("b");
  const GroupMap* twist = nullptr;
  for (auto& f : na) {
    if (f.apply(rr) == nsub.inv(rr) && f.apply(ss) == nsub.mul(ss, rr) &&
        f.apply(bb) == nsub.mul(bb, nsub.pow(rr, 1 << (n - 4)))) {
      twist = &f;
    }
  }
  REQUIRE(twist != nullptr);
  FiniteGroup ca = cyclic_group(2, "a");
  FiniteGroup rebuilt = semidirect_product(nsub, ca, {identity_map(nsub), *twist});
  CHECK(rebuilt.size() == (1 << n));
  GroupMap iso;
  CHECK(find_isomorphism(rebuilt, build_G2(n), &iso));

  // Error path: an action map that is not a homomorphism.
  GroupMap broken = identity_map(gp);
  std::swap(broken.images[1], broken.images[2]);
  CHECK_THROWS_AS(semidirect_product(gp, c2, {identity_map(gp), broken}),
                  std::invalid_argument);
}

TEST_CASE("subgroup classes of order m") {
  FiniteGroup g = build_G2(5);
  auto classes = subgroup_classes_of_order(g, 2);
  CHECK(classes.size() == 5);
  int normal = 0;
  int z = g.pow(g.generator("r"), 2);
  for (auto& cls : classes) {
    if (cls.normal) {
      ++normal;
      REQUIRE(cls.members.size() == 1);
      CHECK(cls.members[0] == std::vector<int>({g.identity(), z}));
    }
  }
  CHECK(normal == 1);

  auto c2 = cyclic_group(2);
  CHECK(subgroup_classes_of_order(c2, 2).size() == 1);

  FiniteGroup gp = build_Gp(3, 3);
  auto classes3 = subgroup_classes_of_order(gp, 3);
  int a3 = gp.pow(gp.generator("a"), 3);
  bool found_normal_a3 = false;
  for (auto& cls : classes3) {
    if (cls.normal && cls.members[0] ==
        std::vector<int>({gp.identity(), a3, gp.mul(a3, a3)})) {
      found_normal_a3 = true;
    }
  }
  CHECK(found_normal_a3);
  CHECK_THROWS_AS(subgroup_classes_of_order(g, 3), std::invalid_argument);
}

TEST_CASE("group invariants") {
  for (auto g : {build_G2(5), build_Gp(3, 3)}) {
    // Center elements commute with everything.
    for (int z : center(g)) {
      for (int x = 0; x < g.size(); ++x) CHECK(g.mul(z, x) == g.mul(x, z));
    }
    // Conjugacy classes partition the group.
    auto classes = conjugacy_classes(g);
    size_t total = 0;
    for (auto& cls : classes) total += cls.size();
    CHECK(total == static_cast<size_t>(g.size()));
  }
  // Conjugation by a restricted to <r,s,b> is an involutive automorphism.
  FiniteGroup g = build_G2(6);
  int a = g.generator("a");
  auto sub = subgroup_generated(
      g, {g.generator("r"), g.generator("s"), g.generator("b")});
  CHECK(sub.size() == static_cast<size_t>(g.size() / 2));
  for (int x : sub) {
    int tx = g.conj(a, x);
    CHECK(std::binary_search(sub.begin(), sub.end(), tx));
    CHECK(g.conj(a, tx) == x);
  }
}
