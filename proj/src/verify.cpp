#include "strata/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "strata/bounds.hpp"
#include "strata/cyclo.hpp"
#include "strata/jacobian.hpp"
#include "strata/naive_orbits.hpp"
#include "strata/parse.hpp"

namespace strata {

namespace {

// Collects failure messages for one named check.
struct Checker {
  std::ostringstream failures;
  int count = 0;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (count < 12) failures << (count ? "; " : "") << what;
    ++count;
  }
  template <typename T, typename U>
  void equals(const T& got, const U& expected, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << expected;
    require(got == expected, os.str());
  }
  bool ok() const { return count == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << failures.str();
    if (count > 12) os << "; (+" << count - 12 << " more)";
    return os.str();
  }
};

std::vector<int> g2_levels(Scale scale) {
  return scale == Scale::quick ? std::vector<int>{5} : std::vector<int>{5, 6, 7};
}

std::vector<std::pair<int, int>> gp_levels(Scale scale) {
  return scale == Scale::quick
             ? std::vector<std::pair<int, int>>{{3, 3}}
             : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {5, 3}};
}

SurfaceKernelEpimorphism g2_canonical(const FiniteGroup& g) {
  int s = g.generator("s"), b = g.generator("b"), a = g.generator("a");
  return SurfaceKernelEpimorphism{Signature(0, {2, 2, 2, 4}), &g, {},
                                  {s, g.mul(b, s), a, g.mul(a, b)}};
}

SurfaceKernelEpimorphism gp_canonical(const FiniteGroup& g, long long p, int n) {
  long long q = 1;
  for (int i = 0; i + 2 < n; ++i) q *= p;
  int a = g.generator("a"), b = g.generator("b");
  return SurfaceKernelEpimorphism{Signature(1, {p}), &g, {a, b}, {g.pow(a, q)}};
}

// --- check 1: closed-form bound tables ---------------------------------------

void check_bound_tables(Checker& c, bool inject_fault) {
  const Rational nil_expected[6] = {Rational(8),     Rational(4),
                                    Rational(2),     Rational(4, 3),
                                    Rational(1),     Rational(4, 5)};
  const Rational p3_expected[6] = {Rational(3),     Rational(3, 2),
                                   Rational(1),     Rational(3, 4),
                                   Rational(3, 5),  Rational(1, 2)};
  const Rational p5_expected[6] = {Rational(5, 2),  Rational(5, 4),
                                   Rational(1),     Rational(5, 7),
                                   Rational(5, 9),  Rational(1, 2)};
  const Rational p7_expected[6] = {Rational(7, 3),  Rational(7, 6),
                                   Rational(1),     Rational(7, 10),
                                   Rational(7, 13), Rational(1, 2)};
  for (int d = 1; d <= 6; ++d) {
    Rational expected = nil_expected[d - 1];
    if (inject_fault && d == 1) expected = Rational(9);
    auto nil = bound_result(GroupClass::nilpotent(), d);
    c.equals(rational_str(nil.coefficient), rational_str(expected),
             "nilpotent coefficient d=" + std::to_string(d));
    std::vector<Signature> ext_expected =
        d == 1 ? std::vector<Signature>{Signature(0, {2, 2, 2, 4})}
               : std::vector<Signature>{
                     Signature(0, std::vector<long long>(d + 3, 2))};
    c.require(nil.extremal == ext_expected,
              "nilpotent extremal signatures d=" + std::to_string(d));
    auto two = bound_result(GroupClass::prime(2), d);
    c.require(two.coefficient == nil.coefficient && two.extremal == nil.extremal,
              "p=2 bound equals the nilpotent bound, d=" + std::to_string(d));
  }
  for (auto [p, table] : std::vector<std::pair<long long, const Rational*>>{
           {3, p3_expected}, {5, p5_expected}, {7, p7_expected}}) {
    for (int d = 1; d <= 6; ++d) {
      auto res = bound_result(GroupClass::prime(p), d);
      c.equals(rational_str(res.coefficient), rational_str(table[d - 1]),
               "p=" + std::to_string(p) + " coefficient d=" + std::to_string(d));
      int h_hat = d / 3 + 1;
      std::vector<Signature> expected;
      if (p == 3) {
        for (int h = 0; h <= h_hat; ++h) {
          expected.push_back(Signature(h, std::vector<long long>(d + 3 - 3 * h, 3)));
        }
      } else {
        expected.push_back(
            Signature(h_hat, std::vector<long long>(d + 3 - 3 * h_hat, p)));
      }
      c.require(res.extremal == expected, "p=" + std::to_string(p) +
                                              " extremal signatures d=" +
                                              std::to_string(d));
    }
  }
}

// --- check 2: search vs closed forms ------------------------------------------

void check_search(Checker& c) {
  for (int d = 1; d <= 6; ++d) {
    auto res = min_area_search(d, SearchConstraint::nilpotent_admissible);
    auto closed = bound_result(GroupClass::nilpotent(), d);
    c.require(res.min_area == 2 / closed.coefficient,
              "nilpotent search minimum d=" + std::to_string(d));
    c.require(res.argmin == closed.extremal,
              "nilpotent search argmin d=" + std::to_string(d));
    for (long long p : {3, 5, 7}) {
      auto search = min_area_search(d, SearchConstraint::periods_p_powers, p);
      auto form = bound_result(GroupClass::prime(p), d);
      c.require(search.min_area == 2 / form.coefficient,
                "p=" + std::to_string(p) + " search minimum d=" + std::to_string(d));
      c.require(search.argmin == form.extremal,
                "p=" + std::to_string(p) + " search argmin d=" + std::to_string(d));
    }
  }
}

// --- check 3: the order-2^n family --------------------------------------------

void check_family_2group(Checker& c, Scale scale) {
  for (int n : g2_levels(scale)) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    FiniteGroup g = build_G2(n);  // relations asserted at construction
    c.equals(g.size(), 1 << n, "group order" + tag);
    auto theta = g2_canonical(g);
    c.require(is_surface_kernel(theta).ok,
              "(s, bs, a, ab) is surface-kernel" + tag);
    Rational genus = riemann_hurwitz_genus(theta.signature, g.size());
    c.require(genus == Rational(1 + (1LL << (n - 3))),
              "genus 1+2^{n-3}" + tag);

    auto classified = classify_with_members(theta.signature, g);
    c.require(classified.report.total > 0, "non-empty enumeration" + tag);
    c.require(classified.report.orbits.size() <=
                  static_cast<size_t>(1LL << (2 * n - 6)),
              "orbit count <= 2^{2n-6}" + tag);
    {
      // Exactly two period images per epimorphism lie in the reflection
      // cosets s<r> and bs<r>.
      int s = g.generator("s"), b = g.generator("b");
      std::set<int> reflections;
      for (int x : subgroup_generated(g, {g.generator("r")})) {
        reflections.insert(g.mul(s, x));
        reflections.insert(g.mul(g.mul(b, s), x));
      }
      bool two = true;
      for (const auto& epi : classified.all) {
        int count = 0;
        for (int x : epi.period_images) count += reflections.count(x) ? 1 : 0;
        two &= count == 2;
      }
      c.require(two, "exactly two reflection-coset period images" + tag);
    }
    // Every orbit contains a tuple theta_{u,v} = (s, b s r^u, a r^v, a b r^{v-u}).
    {
      const long long q = 1LL << (n - 3);
      int r = g.generator("r"), s = g.generator("s"), b = g.generator("b"),
          a = g.generator("a");
      std::map<std::vector<int>, int> index;
      for (size_t i = 0; i < classified.all.size(); ++i) {
        index[classified.all[i].tuple()] = classified.orbit_of[i];
      }
      std::set<int> covered;
      for (long long u = 0; u < q; ++u) {
        for (long long v = 0; v < q; ++v) {
          std::vector<int> tuple{
              s, g.mul(g.mul(b, s), g.pow(r, u)), g.mul(a, g.pow(r, v)),
              g.mul(g.mul(a, b), g.pow(r, v - u))};
          auto it = index.find(tuple);
          if (it != index.end()) covered.insert(it->second);
        }
      }
      c.equals(covered.size(), classified.report.orbits.size(),
               "every orbit contains a theta_{u,v}" + tag);
    }
    c.require(central_element_claim(theta.signature, g),
              "central involution avoids g1,g2,g3" + tag);

    auto classes2 = subgroup_classes_of_order(g, 2);
    c.equals(classes2.size(), size_t{5}, "conjugacy classes of order-2 subgroups" + tag);
    int normal = 0;
    int z = g.pow(g.generator("r"), 1LL << (n - 4));
    bool z_is_the_normal_one = false;
    for (const auto& cls : classes2) {
      if (cls.normal) {
        ++normal;
        z_is_the_normal_one =
            cls.members.size() == 1 &&
            cls.members[0] == std::vector<int>({g.identity(), z});
      }
    }
    c.equals(normal, 1, "exactly one normal order-2 class" + tag);
    c.require(z_is_the_normal_one, "the normal class is <z>" + tag);

    auto bd = quotient_branch_data(theta, {g.identity(), z});
    c.equals(bd.genus, 1, "quotient by <z> is elliptic" + tag);
    c.require(bd.branch_orders ==
                  std::vector<long long>(size_t(1) << (n - 2), 2),
              "2^{n-2} branch values of order 2" + tag);
  }
}

// --- check 4: Jacobians of the order-2^n family -------------------------------

void check_jacobians_2group(Checker& c, Scale scale) {
  for (int n : g2_levels(scale)) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    FiniteGroup g = build_G2(n);
    auto ctx = make_jacobian_context(g);
    auto theta = g2_canonical(g);
    auto report = group_algebra_decomposition(ctx, theta);
    long long genus = 1 + (1LL << (n - 3));
    c.equals(report.genus, genus, "decomposition genus" + tag);
    long long dim_w1 = -1, dim_w2 = -1;
    bool rest_zero = true;
    for (const auto& f : report.factors) {
      if (f.degree == 4 && f.dim > 0) {
        dim_w2 = f.dim;
        c.equals(f.multiplicity, 4, "W_2 multiplicity" + tag);
        c.equals(f.field_degree, 1LL << (n - 5), "W_2 field degree" + tag);
      } else if (f.degree == 1 && !ctx.irreps[f.irrep].trivial && f.dim > 0) {
        if (dim_w1 != -1) rest_zero = false;
        dim_w1 = f.dim;
      } else if (!ctx.irreps[f.irrep].trivial && f.dim != 0) {
        rest_zero = false;
      }
    }
    c.equals(dim_w1, 1, "dim B_{W_1}" + tag);
    c.equals(dim_w2, 1LL << (n - 5), "dim B_{W_2}" + tag);
    c.require(rest_zero, "all other factors vanish" + tag);
    c.equals(report.total(), genus, "zero remainder" + tag);

    int s = g.generator("s"), b = g.generator("b"), r = g.generator("r");
    auto rep_s = quotient_decomposition(ctx, theta, subgroup_generated(g, {s}));
    c.equals(rep_s.total(), 1LL << (n - 4), "dim JC_<s>" + tag);
    auto rep_b = quotient_decomposition(ctx, theta, subgroup_generated(g, {b}));
    c.equals(rep_b.total(), (1LL << (n - 4)) + 1, "dim JC_<b>" + tag);
    auto rep_r = quotient_decomposition(ctx, theta, subgroup_generated(g, {r}));
    c.equals(rep_r.total(), 1, "dim JC_<r>" + tag);
    // Induced totals against the independent branch-data genera.
    int z = g.pow(r, 1LL << (n - 4));
    for (const std::vector<int>& sub :
         {subgroup_generated(g, {s}), subgroup_generated(g, {b}),
          subgroup_generated(g, {r}), subgroup_generated(g, {z})}) {
      auto rep = quotient_decomposition(ctx, theta, sub);
      c.equals(rep.total(), quotient_branch_data(theta, sub).genus,
               "induced total equals branch genus" + tag);
    }
  }
}

// --- check 5: the order-p^n family --------------------------------------------

void check_family_pgroup(Checker& c, Scale scale) {
  for (auto [p, n] : gp_levels(scale)) {
    const std::string tag =
        " (p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
    FiniteGroup g = build_Gp(p, n);
    auto theta = gp_canonical(g, p, n);
    c.require(is_surface_kernel(theta).ok, "(a, b, a^{p^{n-2}}) is surface-kernel" + tag);
    long long pn1 = 1;
    for (int i = 0; i + 1 < n; ++i) pn1 *= p;
    Rational genus = riemann_hurwitz_genus(theta.signature, g.size());
    c.require(genus == Rational(1 + (p - 1) * pn1 / 2),
              "genus 1+(p-1)p^{n-1}/2" + tag);

    auto classified = classify_with_members(theta.signature, g);
    c.equals(classified.report.orbits.size(), static_cast<size_t>(p - 1),
             "exactly p-1 orbits" + tag);
    // theta_m = (a, b^m, a^{r^m-1}) must meet every orbit exactly once.
    {
      long long r = pn1 / p + 1;
      int a = g.generator("a"), b = g.generator("b");
      std::map<std::vector<int>, int> index;
      for (size_t i = 0; i < classified.all.size(); ++i) {
        index[classified.all[i].tuple()] = classified.orbit_of[i];
      }
      std::set<int> hit;
      bool all_found = true;
      long long rm = 1;
      for (int m = 1; m < p; ++m) {
        rm = rm * r % pn1;
        std::vector<int> tuple{a, g.pow(b, m), g.pow(a, rm - 1)};
        auto it = index.find(tuple);
        if (it == index.end()) {
          all_found = false;
        } else {
          hit.insert(it->second);
        }
      }
      c.require(all_found, "every theta_m is enumerated" + tag);
      c.equals(hit.size(), static_cast<size_t>(p - 1),
               "theta_m hit p-1 distinct orbits" + tag);
      if (classified.report.orbits.size() == 1 && hit.size() == 1 && p > 2) {
        c.require(false,
                  "note: the theta_m are conjugation-inequivalent but fuse "
                  "under A1/A2 twists combined with the power automorphisms "
                  "a -> a^u; the single orbit contains every theta_m" +
                      tag);
      }
    }

    int k = g.pow(g.generator("a"), pn1 / p);
    auto bd = quotient_branch_data(theta, subgroup_generated(g, {k}));
    c.equals(bd.genus, 1, "quotient by <a^{p^{n-2}}> is elliptic" + tag);
    c.require(bd.branch_orders ==
                  std::vector<long long>(static_cast<size_t>(pn1), p),
              "p^{n-1} branch values of order p" + tag);
    c.require(extension_witness(p, n), "no (0;2,2,2,2p) extension" + tag);
  }
}

// --- check 6: Jacobians of the order-p^n family -------------------------------

void check_jacobians_pgroup(Checker& c, Scale scale) {
  for (auto [p, n] : gp_levels(scale)) {
    const std::string tag =
        " (p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
    FiniteGroup g = build_Gp(p, n);
    auto ctx = make_jacobian_context(g);
    auto theta = gp_canonical(g, p, n);
    auto report = group_algebra_decomposition(ctx, theta);
    long long pn1 = 1;
    for (int i = 0; i + 1 < n; ++i) pn1 *= p;
    long long genus = 1 + (p - 1) * pn1 / 2;
    c.equals(report.genus, genus, "decomposition genus" + tag);
    long long dim_a = -1, mult_a = -1, dim_e = -1;
    bool rest_zero = true;
    for (const auto& f : report.factors) {
      if (ctx.irreps[f.irrep].trivial) {
        dim_e = f.dim;
        c.equals(f.multiplicity, 1, "E multiplicity" + tag);
      } else if (f.degree == p && f.dim > 0) {
        dim_a = f.dim;
        mult_a = f.multiplicity;
      } else if (f.dim != 0) {
        rest_zero = false;
      }
    }
    c.equals(dim_e, 1, "dim E" + tag);
    c.equals(dim_a, (p - 1) * (pn1 / p) / 2, "dim A = (p-1)p^{n-2}/2" + tag);
    c.equals(mult_a, p, "A has multiplicity p" + tag);
    c.require(rest_zero, "all other factors vanish" + tag);
    c.equals(report.total(), genus, "zero remainder" + tag);
  }
}

// --- check 7: the exceptional small case --------------------------------------

void check_exceptional_d4(Checker& c) {
  FiniteGroup d4 = from_permutations({{2, 3, 4, 1}, {3, 2, 1, 4}});
  Signature sig(0, {2, 2, 2, 4});
  auto all = enumerate_actions(sig, d4);
  c.require(!all.empty(), "a (0;2,2,2,4) -> D_4 epimorphism exists");
  c.require(riemann_hurwitz_genus(sig, 8) == Rational(2), "genus 2 at order 8");
  c.require(check_action_against_bound(d4, sig, 1) == BoundVerdict::extremal,
            "D_4 attains 8(g-1) at g=2");
  c.require(!classify(sig, d4).orbits.empty(), "at least one orbit");
}

// --- check 8: oracle-backed property suites ------------------------------------

void check_property_oracles(Checker& c) {
  // Orbit classifier vs the naive union-find closure on the small corpus.
  {
    FiniteGroup d4 = from_permutations({{2, 3, 4, 1}, {3, 2, 1, 4}});
    FiniteGroup klein = from_permutations({{2, 1, 3, 4}, {1, 2, 4, 3}});
    FiniteGroup g2 = build_G2(5);
    FiniteGroup gp = build_Gp(3, 3);
    struct Pair {
      const FiniteGroup* g;
      Signature sig;
    };
    std::vector<Pair> corpus{{&d4, Signature(0, {2, 2, 2, 4})},
                             {&d4, Signature(0, {2, 2, 2, 2, 2})},
                             {&d4, Signature(1, {2})},
                             {&klein, Signature(0, {2, 2, 2, 2, 2})},
                             {&g2, Signature(0, {2, 2, 2, 4})},
                             {&gp, Signature(1, {3})}};
    for (const auto& [g, sig] : corpus) {
      auto classified = classify_with_members(sig, *g);
      auto auts = automorphisms(*g);
      auto naive = naive_orbit_partition(*g, auts, classified.all);
      const std::string what = sig.str() + " onto " + g->name();
      c.equals(naive.size(), classified.report.orbits.size(),
               "oracle orbit count for " + what);
      // Same partition, not just the same count.
      bool same = true;
      for (const auto& orbit : naive) {
        int id = classified.orbit_of[orbit.front()];
        for (int member : orbit) same &= classified.orbit_of[member] == id;
      }
      c.require(same, "oracle partition matches for " + what);
      long long total = 0;
      for (const auto& o : classified.report.orbits) total += o.size;
      c.equals(total, classified.report.total, "orbit sizes sum for " + what);
    }
  }
  // Generic character tables vs the explicit family representations.
  {
    FiniteGroup g2 = build_G2(5);
    auto t2 = character_table(g2);
    c.require(table_contains(t2, g2_family_character(t2, 5)),
              "explicit 4-dim character appears in the generic table");
    FiniteGroup gp = build_Gp(3, 3);
    auto tp = character_table(gp);
    c.require(table_contains(tp, gp_family_character(tp, 3, 3)),
              "explicit little-groups character appears in the generic table");
  }
  // Randomized invariants, 1e4 trials each.
  {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<int> genus(0, 3), len(0, 6);
    std::uniform_int_distribution<long long> period(2, 64);
    const long long primes[] = {2, 3, 5, 7, 11, 13};
    bool idem = true, closed = true;
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<long long> ms(len(rng));
      for (auto& m : ms) m = period(rng);
      Signature sig(genus(rng), ms);
      long long p = primes[trial % 6];
      Signature once = p_localization(sig, p);
      idem &= p_localization(once, p) == once;
    }
    for (int l = 5; l <= 24; ++l) {
      closed &= normalized_area(Signature(0, std::vector<long long>(l, 2))) ==
                Rational(l - 4, 2);
    }
    c.require(idem, "p-localization is idempotent (1e4 trials)");
    c.require(closed, "area of (0; 2,...,2) closed form");
  }
  // Cyclotomic field axioms on random elements.
  {
    std::mt19937_64 rng(0xabcdULL);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    bool axioms = true;
    for (long long n : {8, 9, 25}) {
      long long phi = euler_phi_prime_power(n);
      auto random_element = [&]() {
        CycNumber x;
        for (long long i = 0; i < phi; ++i) {
          x += CycNumber::root_of_unity(n, i) *
               CycNumber::from_rational(Rational(num(rng), den(rng)));
        }
        return x;
      };
      for (int trial = 0; trial < 40; ++trial) {
        CycNumber a = random_element(), b = random_element(), x = random_element();
        axioms &= (a + b) * x == a * x + b * x;
        axioms &= (a * b) * x == a * (b * x);
        axioms &= a.conjugate().conjugate() == a;
        if (!a.is_zero()) axioms &= a * a.inverse() == CycNumber::from_rational(1);
        axioms &= euler_phi_prime_power(n) % galois_orbit_degree(a) == 0;
      }
    }
    c.require(axioms, "cyclotomic field axioms (random samples)");
  }
  // Moves preserve the surface-kernel conditions.
  {
    FiniteGroup g2 = build_G2(5);
    auto all = enumerate_actions(Signature(0, {2, 2, 2, 4}), g2);
    std::mt19937_64 rng(0x1234ULL);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> pickg(0, g2.size() - 1);
    bool preserved = true;
    for (int trial = 0; trial < 200; ++trial) {
      const auto& theta = all[pick(rng)];
      preserved &=
          is_surface_kernel(apply_move(theta, ConjugateMove{pickg(rng)})).ok;
      preserved &= is_surface_kernel(apply_move(theta, BraidMove{1})).ok;
      preserved &= is_surface_kernel(apply_move(theta, BraidMove{2})).ok;
    }
    c.require(preserved, "moves preserve the surface-kernel conditions");
  }
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerificationReport run_verification(Scale scale, bool inject_fault,
                                    int only_check) {
  using Clock = std::chrono::steady_clock;
  VerificationReport report;
  struct Item {
    const char* name;
    std::function<void(Checker&)> run;
  };
  std::vector<Item> items{
      {"1-bound-tables",
       [&](Checker& c) { check_bound_tables(c, inject_fault); }},
      {"2-search-vs-closed-form", [](Checker& c) { check_search(c); }},
      {"3-family-2group", [&](Checker& c) { check_family_2group(c, scale); }},
      {"4-jacobians-2group",
       [&](Checker& c) { check_jacobians_2group(c, scale); }},
      {"5-family-pgroup", [&](Checker& c) { check_family_pgroup(c, scale); }},
      {"6-jacobians-pgroup",
       [&](Checker& c) { check_jacobians_pgroup(c, scale); }},
      {"7-exceptional-d4", [](Checker& c) { check_exceptional_d4(c); }},
      {"8-property-oracles", [](Checker& c) { check_property_oracles(c); }},
  };
  for (size_t i = 0; i < items.size(); ++i) {
    if (only_check && static_cast<size_t>(only_check) != i + 1) continue;
    auto& item = items[i];
    Checker checker;
    auto start = Clock::now();
    try {
      item.run(checker);
    } catch (const std::exception& e) {
      checker.require(false, std::string("exception: ") + e.what());
    }
    auto elapsed =
        std::chrono::duration<double, std::milli>(Clock::now() - start);
    report.checks.push_back(
        CheckResult{item.name, checker.ok(), checker.detail(), elapsed.count()});
  }
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  ("
       << static_cast<long long>(c.ms) << " ms)\n";
    if (!c.pass) os << "       " << c.detail << "\n";
  }
  os << (report.all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT")
     << "\n";
  return os.str();
}

nlohmann::json verification_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json o;
    o["name"] = c.name;
    o["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) o["detail"] = c.detail;
    j["checks"].push_back(std::move(o));
  }
  j["all_pass"] = report.all_pass();
  return j;
}

}  // namespace strata
