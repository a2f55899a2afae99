#include "strata/naive_orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace strata {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> naive_orbit_partition(
    const FiniteGroup& g, const std::vector<GroupMap>& automorphism_list,
    const std::vector<SurfaceKernelEpimorphism>& all) {
  if (all.empty()) return {};
  const Signature& sig = all.front().signature;
  const int h2 = 2 * sig.genus();
  const int l = static_cast<int>(sig.periods().size());

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i].tuple()] = static_cast<int>(i);
  auto lookup = [&](const std::vector<int>& t) {
    auto it = index.find(t);
    if (it == index.end()) {
      throw std::logic_error("naive closure produced a tuple outside the set");
    }
    return it->second;
  };

  UnionFind uf(all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    std::vector<int> t = all[i].tuple();
    for (const auto& omega : automorphism_list) {
      std::vector<int> u(t.size());
      for (size_t k = 0; k < t.size(); ++k) u[k] = omega.images[t[k]];
      uf.unite(static_cast<int>(i), lookup(u));
    }
    for (int c = 0; c < g.size(); ++c) {
      std::vector<int> u(t.size());
      for (size_t k = 0; k < t.size(); ++k) {
        u[k] = g.mul(g.mul(c, t[k]), g.inv(c));
      }
      uf.unite(static_cast<int>(i), lookup(u));
    }
    for (int b = 1; b < l; ++b) {
      if (sig.periods()[b - 1] != sig.periods()[b]) continue;
      std::vector<int> u = t;
      int x = t[h2 + b - 1], y = t[h2 + b];
      u[h2 + b - 1] = g.mul(g.mul(x, y), g.inv(x));
      u[h2 + b] = x;
      uf.unite(static_cast<int>(i), lookup(u));
    }
    if (sig.genus() == 1) {
      for (int n : {1, -1}) {
        std::vector<int> u = t;
        u[1] = g.mul(t[1], g.pow(t[0], n));
        uf.unite(static_cast<int>(i), lookup(u));
        std::vector<int> v = t;
        v[0] = g.mul(t[0], g.pow(t[1], n));
        uf.unite(static_cast<int>(i), lookup(v));
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < all.size(); ++i) {
    groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return out;
}

}  // namespace strata
