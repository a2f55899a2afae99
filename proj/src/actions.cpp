#include "strata/actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace strata {

std::vector<int> SurfaceKernelEpimorphism::tuple() const {
  std::vector<int> t = hyperbolic_images;
  t.insert(t.end(), period_images.begin(), period_images.end());
  return t;
}

namespace {

int long_relation_image(const SurfaceKernelEpimorphism& theta) {
  const FiniteGroup& g = *theta.group;
  int acc = g.identity();
  for (size_t i = 0; i + 1 < theta.hyperbolic_images.size(); i += 2) {
    acc = g.mul(acc, g.commutator(theta.hyperbolic_images[i],
                                  theta.hyperbolic_images[i + 1]));
  }
  for (int x : theta.period_images) acc = g.mul(acc, x);
  return acc;
}

}  // namespace

SkeCheck is_surface_kernel(const SurfaceKernelEpimorphism& theta) {
  const Signature& sig = theta.signature;
  const FiniteGroup& g = *theta.group;
  size_t h2 = 2 * static_cast<size_t>(sig.genus());
  size_t l = sig.periods().size();
  if (theta.hyperbolic_images.size() != h2 || theta.period_images.size() != l) {
    throw std::invalid_argument("epimorphism arity mismatch with signature " +
                                sig.str());
  }
  for (int x : theta.tuple()) {
    if (x < 0 || x >= g.size()) {
      throw std::invalid_argument("epimorphism image outside the group");
    }
  }
  for (size_t k = 0; k < l; ++k) {
    long long got = g.order(theta.period_images[k]);
    if (got != sig.periods()[k]) {
      std::ostringstream os;
      os << "period image " << k + 1 << " has order " << got << ", expected "
         << sig.periods()[k];
      return {false, os.str()};
    }
  }
  if (long_relation_image(theta) != g.identity()) {
    return {false, "long relation does not map to the identity"};
  }
  if (subgroup_generated(g, theta.tuple()).size() !=
      static_cast<size_t>(g.size())) {
    return {false, "images do not generate the group"};
  }
  return {true, ""};
}

std::vector<SurfaceKernelEpimorphism> enumerate_actions(const Signature& sig,
                                                        const FiniteGroup& g) {
  if (!is_hyperbolic(sig)) throw std::domain_error("not Fuchsian");
  if (!is_integer(riemann_hurwitz_genus(sig, g.size()))) return {};

  const int h = sig.genus();
  const auto& periods = sig.periods();
  const size_t l = periods.size();
  {
    double budget = 1.0;
    for (size_t i = 0; i + 1 < 2 * static_cast<size_t>(h) + l; ++i) {
      budget *= g.size();
    }
    if (budget > 1e9) {
      throw std::invalid_argument("enumeration cap exceeded for " + sig.str() +
                                  " onto " + g.name());
    }
  }

  // Elements of each exact order appearing among the periods.
  std::map<long long, std::vector<int>> of_order;
  for (long long m : periods) of_order[m];
  for (int x = 0; x < g.size(); ++x) {
    auto it = of_order.find(g.order(x));
    if (it != of_order.end()) it->second.push_back(x);
  }

  std::vector<SurfaceKernelEpimorphism> out;
  SurfaceKernelEpimorphism theta{sig, &g, {}, {}};
  theta.hyperbolic_images.assign(2 * h, 0);
  theta.period_images.assign(l, 0);

  auto emit_if_valid = [&]() {
    // Orders of all images except the forced one were fixed by construction;
    // the remaining checks are the long relation (guaranteed by the forced
    // image when l >= 1) and generation.
    if (subgroup_generated(g, theta.tuple()).size() !=
        static_cast<size_t>(g.size())) {
      return;
    }
    out.push_back(theta);
  };

  // Chooses period images 0..l-2, forces the last by the long relation.
  auto fill_periods = [&](auto&& self, size_t k) -> void {
    if (l == 0) {
      if (long_relation_image(theta) == g.identity()) emit_if_valid();
      return;
    }
    if (k + 1 == l) {
      int prefix = g.identity();
      for (size_t i = 0; i + 1 < theta.hyperbolic_images.size(); i += 2) {
        prefix = g.mul(prefix, g.commutator(theta.hyperbolic_images[i],
                                            theta.hyperbolic_images[i + 1]));
      }
      for (size_t i = 0; i + 1 < l; ++i) {
        prefix = g.mul(prefix, theta.period_images[i]);
      }
      int forced = g.inv(prefix);
      if (g.order(forced) != periods[l - 1]) return;
      theta.period_images[l - 1] = forced;
      emit_if_valid();
      return;
    }
    for (int x : of_order[periods[k]]) {
      theta.period_images[k] = x;
      self(self, k + 1);
    }
  };

  auto fill_hyperbolic = [&](auto&& self, size_t i) -> void {
    if (i == theta.hyperbolic_images.size()) {
      fill_periods(fill_periods, 0);
      return;
    }
    for (int x = 0; x < g.size(); ++x) {
      theta.hyperbolic_images[i] = x;
      self(self, i + 1);
    }
  };
  fill_hyperbolic(fill_hyperbolic, 0);
  return out;
}

// --- moves -------------------------------------------------------------------

namespace {

// Raw transforms. These preserve the surface-kernel conditions whenever the
// shape preconditions hold (the generated subgroup and the long relation are
// invariant), so the classification loop below applies them unchecked.

SurfaceKernelEpimorphism braid_raw(const SurfaceKernelEpimorphism& t, int i) {
  const FiniteGroup& g = *t.group;
  SurfaceKernelEpimorphism out = t;
  int a = t.period_images[i - 1];
  int b = t.period_images[i];
  out.period_images[i - 1] = g.conj(a, b);
  out.period_images[i] = a;
  return out;
}

SurfaceKernelEpimorphism conjugate_raw(const SurfaceKernelEpimorphism& t, int c) {
  const FiniteGroup& g = *t.group;
  SurfaceKernelEpimorphism out = t;
  for (int& x : out.hyperbolic_images) x = g.conj(c, x);
  for (int& x : out.period_images) x = g.conj(c, x);
  return out;
}

SurfaceKernelEpimorphism automorphism_raw(const SurfaceKernelEpimorphism& t,
                                          const GroupMap& omega) {
  SurfaceKernelEpimorphism out = t;
  for (int& x : out.hyperbolic_images) x = omega.apply(x);
  for (int& x : out.period_images) x = omega.apply(x);
  return out;
}

SurfaceKernelEpimorphism a1_raw(const SurfaceKernelEpimorphism& t, long long n) {
  const FiniteGroup& g = *t.group;
  SurfaceKernelEpimorphism out = t;
  out.hyperbolic_images[1] =
      g.mul(t.hyperbolic_images[1], g.pow(t.hyperbolic_images[0], n));
  return out;
}

SurfaceKernelEpimorphism a2_raw(const SurfaceKernelEpimorphism& t, long long n) {
  const FiniteGroup& g = *t.group;
  SurfaceKernelEpimorphism out = t;
  out.hyperbolic_images[0] =
      g.mul(t.hyperbolic_images[0], g.pow(t.hyperbolic_images[1], n));
  return out;
}

}  // namespace

SurfaceKernelEpimorphism apply_move(const SurfaceKernelEpimorphism& theta,
                                    const Move& move) {
  const auto& periods = theta.signature.periods();
  const int l = static_cast<int>(periods.size());
  SurfaceKernelEpimorphism out = theta;
  if (const auto* braid = std::get_if<BraidMove>(&move)) {
    if (braid->i < 1 || braid->i >= l) {
      throw std::invalid_argument("braid index out of range for " +
                                  theta.signature.str());
    }
    if (periods[braid->i - 1] != periods[braid->i]) {
      throw std::invalid_argument("braid move undefined for unequal periods");
    }
    out = braid_raw(theta, braid->i);
  } else if (const auto* conj = std::get_if<ConjugateMove>(&move)) {
    if (conj->g < 0 || conj->g >= theta.group->size()) {
      throw std::invalid_argument("conjugating element outside the group");
    }
    out = conjugate_raw(theta, conj->g);
  } else if (const auto* aut = std::get_if<AutomorphismMove>(&move)) {
    if (!aut->omega || aut->omega->source != theta.group ||
        aut->omega->target != theta.group || !aut->omega->is_bijective()) {
      throw std::invalid_argument("automorphism move needs an automorphism of the group");
    }
    out = automorphism_raw(theta, *aut->omega);
  } else if (const auto* a1 = std::get_if<A1Move>(&move)) {
    if (theta.signature.genus() != 1) {
      throw std::invalid_argument("A1 move requires orbit genus 1");
    }
    out = a1_raw(theta, a1->n);
  } else if (const auto* a2 = std::get_if<A2Move>(&move)) {
    if (theta.signature.genus() != 1) {
      throw std::invalid_argument("A2 move requires orbit genus 1");
    }
    out = a2_raw(theta, a2->n);
  }
  SkeCheck check = is_surface_kernel(out);
  if (!check.ok) {
    throw std::logic_error("move produced a non-epimorphism: " + check.violation);
  }
  return out;
}

// --- classification ----------------------------------------------------------

namespace {

// Key for tuple lookup: packed into 64 bits when it fits, otherwise the
// vector itself through an ordered map.
class TupleIndex {
 public:
  TupleIndex(int group_size, size_t tuple_len) {
    bits_ = 1;
    while ((1 << bits_) < group_size) ++bits_;
    packable_ = bits_ * tuple_len <= 64;
  }

  void insert(const std::vector<int>& t, int id) {
    if (packable_) {
      packed_[pack(t)] = id;
    } else {
      exact_[t] = id;
    }
  }

  int lookup(const std::vector<int>& t) const {
    if (packable_) {
      auto it = packed_.find(pack(t));
      return it == packed_.end() ? -1 : it->second;
    }
    auto it = exact_.find(t);
    return it == exact_.end() ? -1 : it->second;
  }

 private:
  uint64_t pack(const std::vector<int>& t) const {
    uint64_t key = 0;
    for (int x : t) key = (key << bits_) | static_cast<uint64_t>(x);
    return key;
  }

  int bits_;
  bool packable_;
  std::unordered_map<uint64_t, int> packed_;
  std::map<std::vector<int>, int> exact_;
};

}  // namespace

ClassifiedActions classify_with_members(const Signature& sig,
                                        const FiniteGroup& g) {
  EquivalenceClassReport report{.signature = sig, .group_name = g.name()};

  auto all = enumerate_actions(sig, g);
  report.total = static_cast<long long>(all.size());

  const auto& periods = sig.periods();
  std::vector<int> braid_slots;
  for (size_t i = 1; i < periods.size(); ++i) {
    if (periods[i - 1] == periods[i]) braid_slots.push_back(static_cast<int>(i));
  }
  const bool torus_moves = sig.genus() == 1;
  {
    std::ostringstream os;
    os << "Aut(G) incl. conjugation";
    if (!braid_slots.empty()) os << " + braid(equal adjacent periods)";
    if (torus_moves) os << " + A1,A2(n=+-1) iterated";
    report.move_set = os.str();
  }
  if (all.empty()) return ClassifiedActions{std::move(report), {}, {}};

  auto auts = automorphisms(g);

  std::vector<std::vector<int>> tuples(all.size());
  TupleIndex index(g.size(), all[0].tuple().size());
  for (size_t i = 0; i < all.size(); ++i) {
    tuples[i] = all[i].tuple();
    index.insert(tuples[i], static_cast<int>(i));
  }
  auto must_find = [&](const SurfaceKernelEpimorphism& t) {
    int id = index.lookup(t.tuple());
    if (id < 0) throw std::logic_error("classification left the enumerated set");
    return id;
  };

  std::vector<int> orbit_of(all.size(), -1);
  std::vector<char> visited(all.size(), 0);
  for (size_t start = 0; start < all.size(); ++start) {
    if (visited[start]) continue;
    int orbit_id = static_cast<int>(report.orbits.size());
    std::vector<int> orbit;
    std::queue<int> work;
    work.push(static_cast<int>(start));
    visited[start] = 1;
    while (!work.empty()) {
      int cur = work.front();
      work.pop();
      orbit.push_back(cur);
      orbit_of[cur] = orbit_id;
      const auto& theta = all[cur];
      auto push = [&](const SurfaceKernelEpimorphism& next) {
        int id = must_find(next);
        if (!visited[id]) {
          visited[id] = 1;
          work.push(id);
        }
      };
      for (const auto& omega : auts) push(automorphism_raw(theta, omega));
      for (int i : braid_slots) push(braid_raw(theta, i));
      if (torus_moves) {
        push(a1_raw(theta, 1));
        push(a1_raw(theta, -1));
        push(a2_raw(theta, 1));
        push(a2_raw(theta, -1));
      }
    }
    OrbitInfo info;
    info.size = static_cast<long long>(orbit.size());
    info.representative = tuples[orbit.front()];
    for (int id : orbit) {
      if (tuples[id] < info.representative) info.representative = tuples[id];
    }
    for (int x : info.representative) {
      info.representative_words.push_back(g.label(x));
    }
    report.orbits.push_back(std::move(info));
  }
  // Sort orbits by representative and remap the membership ids.
  std::vector<int> perm(report.orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return report.orbits[a].representative < report.orbits[b].representative;
  });
  std::vector<OrbitInfo> sorted;
  std::vector<int> new_id(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    sorted.push_back(std::move(report.orbits[perm[i]]));
    new_id[perm[i]] = static_cast<int>(i);
  }
  report.orbits = std::move(sorted);
  for (int& id : orbit_of) id = new_id[id];
  return ClassifiedActions{std::move(report), std::move(all), std::move(orbit_of)};
}

EquivalenceClassReport classify(const Signature& sig, const FiniteGroup& g) {
  return classify_with_members(sig, g).report;
}

bool central_element_claim(const Signature& sig, const FiniteGroup& g) {
  auto z_candidates = center(g);
  if (z_candidates.size() != 2) {
    throw std::invalid_argument("central_element_claim needs |Z(G)| = 2");
  }
  int z = z_candidates[0] == g.identity() ? z_candidates[1] : z_candidates[0];
  auto all = enumerate_actions(sig, g);
  for (const auto& theta : all) {
    size_t upto = std::min<size_t>(3, theta.period_images.size());
    for (size_t k = 0; k < upto; ++k) {
      if (theta.period_images[k] == z) return false;
    }
  }
  return true;
}

BranchData quotient_branch_data(const SurfaceKernelEpimorphism& theta,
                                const std::vector<int>& subgroup) {
  const FiniteGroup& g = *theta.group;
  std::vector<int> h = subgroup;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (h.empty() || subgroup_generated(g, h) != h) {
    throw std::invalid_argument("quotient_branch_data: not a subgroup");
  }
  std::vector<char> in_h(g.size(), 0);
  for (int x : h) in_h[x] = 1;
  const long long hsize = static_cast<long long>(h.size());

  long long genus_c =
      rational_to_int64(riemann_hurwitz_genus(theta.signature, g.size()));

  BranchData out;
  long long ramification = 0;  // sum over points of C of (e_P - 1)
  for (int gamma : theta.period_images) {
    // Points of C above this branch value correspond to cosets x<gamma>; the
    // H-orbits are double cosets, each with stabilizer order
    // e = |H meet x<gamma>x^{-1}|.
    std::vector<int> s;
    int y = g.identity();
    do {
      s.push_back(y);
      y = g.mul(y, gamma);
    } while (y != g.identity());
    std::vector<char> visited(g.size(), 0);
    for (int x = 0; x < g.size(); ++x) {
      if (visited[x]) continue;
      for (int u : h) {
        int ux = g.mul(u, x);
        for (int v : s) visited[g.mul(ux, v)] = 1;
      }
      long long e = 0;
      for (int v : s) {
        if (in_h[g.conj(x, v)]) ++e;
      }
      ramification += (hsize / e) * (e - 1);
      if (e > 1) out.branch_orders.push_back(e);
    }
  }
  long long lhs = 2 * genus_c - 2 - ramification;
  if (lhs % hsize != 0 || ((lhs / hsize) + 2) % 2 != 0) {
    throw std::logic_error("quotient_branch_data: Riemann-Hurwitz mismatch");
  }
  out.genus = (lhs / hsize + 2) / 2;
  if (out.genus < 0) throw std::logic_error("quotient_branch_data: negative genus");
  std::sort(out.branch_orders.begin(), out.branch_orders.end());
  return out;
}

bool extension_witness(int p, int n) {
  FiniteGroup gp = build_Gp(p, n);
  if (2LL * gp.size() > FiniteGroup::kDefaultCap) {
    throw std::invalid_argument("extension_witness: size cap exceeded");
  }
  auto auts = automorphisms(gp);
  FiniteGroup c2 = cyclic_group(2, "t");
  Signature ext_sig(0, {2, 2, 2, 2LL * p});
  GroupMap ident = identity_map(gp);
  int counter = 0;
  for (const auto& sigma : auts) {
    if (!(sigma.compose(sigma).images == ident.images)) continue;
    FiniteGroup gprime = semidirect_product(
        gp, c2, {ident, sigma}, gp.name() + ":C2ext#" + std::to_string(counter++));
    if (!enumerate_actions(ext_sig, gprime).empty()) return false;
  }
  return true;
}

MaximalityInfo maximality_lookup(const Signature& sig) {
  MaximalityInfo info;
  if (sig == Signature(0, {2, 2, 2, 4})) {
    info.status = MaximalityInfo::Status::maximal;
    return info;
  }
  if (sig.genus() == 1 && sig.periods().size() == 1) {
    info.status = MaximalityInfo::Status::extends_to;
    info.extensions.push_back(Signature(0, {2, 2, 2, 2 * sig.periods()[0]}));
    return info;
  }
  return info;  // unknown
}

}  // namespace strata
