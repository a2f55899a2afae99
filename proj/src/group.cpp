#include "strata/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "strata/signature.hpp"  // is_prime

namespace strata {

namespace {

std::string join_word(const std::vector<std::string>& parts) {
  if (parts.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

std::string power_word(const std::string& gen, long long e) {
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int size, std::vector<int> table,
                         std::vector<std::pair<std::string, Elt>> generators,
                         std::vector<std::string> labels)
    : name_(std::move(name)),
      size_(size),
      table_(std::move(table)),
      generators_(std::move(generators)),
      labels_(std::move(labels)) {
  if (size_ <= 0 || table_.size() != static_cast<size_t>(size_) * size_) {
    throw std::invalid_argument("group table has wrong shape");
  }
  if (labels_.empty()) {
    labels_.resize(size_);
    for (int i = 0; i < size_; ++i) labels_[i] = "x" + std::to_string(i);
  }
  inverse_.assign(size_, -1);
  validate();
}

void FiniteGroup::validate() {
  for (int x = 0; x < size_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      throw std::invalid_argument("group: index 0 is not a two-sided identity");
    }
  }
  for (int x = 0; x < size_; ++x) {
    int found = -1;
    for (int y = 0; y < size_; ++y) {
      if (mul(x, y) == 0) {
        if (mul(y, x) != 0) {
          throw std::invalid_argument("group: one-sided inverse");
        }
        found = y;
        break;
      }
    }
    if (found < 0) throw std::invalid_argument("group: missing inverse");
    inverse_[x] = found;
  }
  if (size_ <= kFullCheckLimit) {
    for (int x = 0; x < size_; ++x) {
      for (int y = 0; y < size_; ++y) {
        int xy = mul(x, y);
        for (int z = 0; z < size_; ++z) {
          if (mul(xy, z) != mul(x, mul(y, z))) {
            throw std::invalid_argument("group: associativity fails");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5717a7ab1e5ULL);
    std::uniform_int_distribution<int> pick(0, size_ - 1);
    for (int t = 0; t < 100000; ++t) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
        throw std::invalid_argument("group: associativity fails (sampled)");
      }
    }
  }
  std::vector<int> gens;
  for (const auto& [n, g] : generators_) {
    if (g < 0 || g >= size_) throw std::invalid_argument("generator out of range");
    gens.push_back(g);
  }
  if (subgroup_generated(*this, gens).size() != static_cast<size_t>(size_)) {
    throw std::invalid_argument("group: named generators do not generate");
  }
}

FiniteGroup::Elt FiniteGroup::pow(Elt x, long long e) const {
  if (e < 0) return pow(inv(x), -e);
  Elt acc = 0;
  Elt base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long long FiniteGroup::order(Elt x) const {
  long long k = 1;
  Elt y = x;
  while (y != 0) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

FiniteGroup::Elt FiniteGroup::generator(const std::string& name) const {
  for (const auto& [n, g] : generators_) {
    if (n == name) return g;
  }
  throw std::invalid_argument("unknown generator '" + name + "' in " + name_);
}

bool GroupMap::is_bijective() const {
  std::vector<char> seen(images.size(), 0);
  for (int y : images) {
    if (y < 0 || y >= static_cast<int>(images.size()) || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

void GroupMap::validate() const {
  if (!source || !target) throw std::invalid_argument("group map unset");
  if (images.size() != static_cast<size_t>(source->size())) {
    throw std::invalid_argument("group map has wrong length");
  }
  if (images[0] != target->identity()) {
    throw std::invalid_argument("group map does not fix the identity");
  }
  auto check = [&](int x, int y) {
    if (images[source->mul(x, y)] != target->mul(images[x], images[y])) {
      throw std::invalid_argument("group map is not multiplicative");
    }
  };
  int n = source->size();
  if (static_cast<long long>(n) * n <= 1 << 16) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) check(x, y);
    }
  } else {
    for (const auto& [nm, g] : source->generators()) {
      for (int x = 0; x < n; ++x) check(x, g);
    }
    std::mt19937_64 rng(0xc0ffeeULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) check(pick(rng), pick(rng));
  }
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  if (inner.target != source) {
    throw std::invalid_argument("group map composition mismatch");
  }
  GroupMap out{inner.source, target, std::vector<int>(inner.images.size())};
  for (size_t x = 0; x < inner.images.size(); ++x) {
    out.images[x] = images[inner.images[x]];
  }
  return out;
}

GroupMap GroupMap::inverse_map() const {
  if (!is_bijective() || source->size() != target->size()) {
    throw std::invalid_argument("group map is not invertible");
  }
  GroupMap out{target, source, std::vector<int>(images.size())};
  for (size_t x = 0; x < images.size(); ++x) out.images[images[x]] = static_cast<int>(x);
  return out;
}

GroupMap identity_map(const FiniteGroup& g) {
  GroupMap out{&g, &g, std::vector<int>(g.size())};
  std::iota(out.images.begin(), out.images.end(), 0);
  return out;
}

// --- family constructors ----------------------------------------------------

FiniteGroup build_G2(int n) {
  if (n < 5) {
    throw std::invalid_argument(
        "build_G2: exceptional small case (needs n >= 5)");
  }
  if (n > 12) throw std::invalid_argument("build_G2: size cap exceeded");
  const long long q = 1LL << (n - 3);   // order of r
  const long long half = q / 2;         // exponent of z = r^{2^{n-4}}
  const int size = 1 << n;

  // Element (i,j,k,l) <-> r^i s^j b^k a^l, index lexicographic in (i,j,k,l).
  auto index = [&](long long i, int j, int k, int l) {
    i = ((i % q) + q) % q;
    return static_cast<int>(((i * 2 + j) * 2 + k) * 2 + l);
  };
  struct NF {
    long long i;
    int j, k, l;
  };
  auto decode = [&](int x) {
    NF e;
    e.l = x & 1;
    e.k = (x >> 1) & 1;
    e.j = (x >> 2) & 1;
    e.i = x >> 3;
    return e;
  };
  // Conjugation by a on the index-2 subgroup <r,s,b>.
  auto twist = [&](NF e) {
    NF f = e;
    if (e.j == 0) {
      f.i = -e.i + e.k * half;
    } else {
      f.i = -e.i - 1 - e.k * half;
    }
    f.i = ((f.i % q) + q) % q;
    return f;
  };
  std::vector<int> table(static_cast<size_t>(size) * size);
  for (int x = 0; x < size; ++x) {
    NF u = decode(x);
    for (int y = 0; y < size; ++y) {
      NF v = decode(y);
      if (u.l) v = twist(v);
      long long i = u.j == 0 ? u.i + v.i : u.i - v.i;
      table[static_cast<size_t>(x) * size + y] =
          index(i, u.j ^ v.j, u.k ^ v.k, u.l ^ v.l);
    }
  }
  std::vector<std::string> labels(size);
  for (int x = 0; x < size; ++x) {
    NF e = decode(x);
    std::vector<std::string> parts;
    if (e.i) parts.push_back(power_word("r", e.i));
    if (e.j) parts.push_back("s");
    if (e.k) parts.push_back("b");
    if (e.l) parts.push_back("a");
    labels[x] = join_word(parts);
  }
  const int r = index(1, 0, 0, 0);
  const int s = index(0, 1, 0, 0);
  const int b = index(0, 0, 1, 0);
  const int a = index(0, 0, 0, 1);
  FiniteGroup g("G2:n=" + std::to_string(n), size, std::move(table),
                {{"r", r}, {"s", s}, {"b", b}, {"a", a}}, std::move(labels));

  // Defining relations, asserted on the finished table.
  auto expect = [&](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("build_G2: relation failed: ") + what);
  };
  expect(g.pow(r, q) == 0, "r^{2^{n-3}}=1");
  expect(g.order(r) == q, "order(r)=2^{n-3}");
  expect(g.mul(s, s) == 0, "s^2=1");
  expect(g.pow(g.mul(s, r), 2) == 0, "(sr)^2=1");
  expect(g.mul(a, a) == 0, "a^2=1");
  expect(g.mul(b, b) == 0, "b^2=1");
  expect(g.commutator(s, b) == 0, "[s,b]=1");
  expect(g.commutator(r, b) == 0, "[r,b]=1");
  expect(g.mul(g.mul(a, r), a) == g.inv(r), "ara=r^{-1}");
  expect(g.mul(g.mul(a, s), a) == g.mul(s, r), "asa=sr");
  expect(g.mul(g.mul(a, b), a) == g.mul(b, g.pow(r, half)), "aba=br^{2^{n-4}}");
  return g;
}

FiniteGroup build_Gp(int p, int n) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("build_Gp: p must be an odd prime");
  }
  if (n < 3) throw std::invalid_argument("build_Gp: needs n >= 3");
  long long size = 1;
  for (int t = 0; t < n; ++t) {
    size *= p;
    if (size > FiniteGroup::kDefaultCap) {
      throw std::invalid_argument("build_Gp: size cap exceeded");
    }
  }
  const long long q = size / p;  // p^{n-1}, order of a
  const long long r = q / p + 1; // p^{n-2} + 1

  std::vector<long long> rpow(p);
  rpow[0] = 1;
  for (int j = 1; j < p; ++j) rpow[j] = rpow[j - 1] * r % q;
  {
    long long rp = rpow[p - 1] * r % q;
    if (rp != 1) throw std::logic_error("build_Gp: r^p != 1 mod p^{n-1}");
    for (int k = 1; k < p; ++k) {
      if (rpow[k] == 1) throw std::logic_error("build_Gp: r^k = 1 too early");
    }
  }
  const int sz = static_cast<int>(size);
  auto index = [&](long long i, long long j) {
    return static_cast<int>((((i % q) + q) % q) * p + (((j % p) + p) % p));
  };
  std::vector<int> table(static_cast<size_t>(sz) * sz);
  for (long long i1 = 0; i1 < q; ++i1) {
    for (int j1 = 0; j1 < p; ++j1) {
      int x = index(i1, j1);
      for (long long i2 = 0; i2 < q; ++i2) {
        for (int j2 = 0; j2 < p; ++j2) {
          table[static_cast<size_t>(x) * sz + index(i2, j2)] =
              index(i1 + i2 * rpow[j1], j1 + j2);
        }
      }
    }
  }
  std::vector<std::string> labels(sz);
  for (long long i = 0; i < q; ++i) {
    for (int j = 0; j < p; ++j) {
      std::vector<std::string> parts;
      if (i) parts.push_back(power_word("a", i));
      if (j) parts.push_back(power_word("b", j));
      labels[index(i, j)] = join_word(parts);
    }
  }
  const int a = index(1, 0);
  const int b = index(0, 1);
  FiniteGroup g("Gp:p=" + std::to_string(p) + ",n=" + std::to_string(n), sz,
                std::move(table), {{"a", a}, {"b", b}}, std::move(labels));
  if (g.order(a) != q || g.order(b) != p) {
    throw std::logic_error("build_Gp: generator orders wrong");
  }
  if (g.conj(b, a) != g.pow(a, r)) {
    throw std::logic_error("build_Gp: bab^{-1} != a^r");
  }
  return g;
}

// --- permutation groups -----------------------------------------------------

namespace {

std::string cycle_label(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n + 1, 0);
  std::ostringstream os;
  bool any = false;
  for (int start = 1; start <= n; ++start) {
    if (seen[start] || perm[start - 1] == start) continue;
    os << "(";
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) os << " ";
      os << x;
      first = false;
      x = perm[x - 1];
    }
    os << ")";
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace

FiniteGroup from_permutations(const std::vector<std::vector<int>>& perms,
                              int cap) {
  size_t degree = 1;
  for (const auto& p : perms) degree = std::max(degree, p.size());
  std::vector<std::vector<int>> gens;
  for (const auto& p : perms) {
    std::vector<int> q(degree);
    std::iota(q.begin(), q.end(), 1);
    std::vector<char> seen(degree + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) {
      int img = p[i];
      if (img < 1 || img > static_cast<int>(degree) || seen[img]) {
        throw std::invalid_argument("from_permutations: not a bijection");
      }
      seen[img] = 1;
      q[i] = img;
    }
    // Entries beyond p.size() stay fixed; re-check bijectivity overall.
    std::vector<char> seen2(degree + 1, 0);
    for (int img : q) {
      if (seen2[img]) throw std::invalid_argument("from_permutations: not a bijection");
      seen2[img] = 1;
    }
    gens.push_back(std::move(q));
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 1);

  auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(degree);
    for (size_t i = 0; i < degree; ++i) h[i] = f[g[i] - 1];
    return h;
  };

  std::set<std::vector<int>> closure{id};
  std::queue<std::vector<int>> work;
  work.push(id);
  while (!work.empty()) {
    auto x = work.front();
    work.pop();
    for (const auto& g : gens) {
      auto y = compose(x, g);
      if (closure.insert(y).second) {
        if (closure.size() > static_cast<size_t>(cap)) {
          throw std::invalid_argument("from_permutations: closure exceeds cap " +
                                      std::to_string(cap));
        }
        work.push(y);
      }
    }
  }
  std::vector<std::vector<int>> elems(closure.begin(), closure.end());
  // std::set iteration is already lexicographic, identity first.
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  int sz = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<size_t>(sz) * sz);
  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      table[static_cast<size_t>(x) * sz + y] = idx.at(compose(elems[x], elems[y]));
    }
  }
  std::vector<std::string> labels(sz);
  for (int x = 0; x < sz; ++x) labels[x] = cycle_label(elems[x]);
  std::vector<std::pair<std::string, int>> named;
  std::ostringstream name;
  name << "perm:[";
  for (size_t i = 0; i < gens.size(); ++i) {
    named.emplace_back("g" + std::to_string(i + 1), idx.at(gens[i]));
    if (i) name << ";";
    name << cycle_label(gens[i]);
  }
  name << "]";
  if (named.empty()) named.emplace_back("e", 0);
  return FiniteGroup(name.str(), sz, std::move(table), std::move(named),
                     std::move(labels));
}

FiniteGroup cyclic_group(int m, const std::string& gen_name) {
  if (m < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) table[static_cast<size_t>(x) * m + y] = (x + y) % m;
  }
  std::vector<std::string> labels(m);
  labels[0] = "e";
  for (int x = 1; x < m; ++x) labels[x] = power_word(gen_name, x);
  std::vector<std::pair<std::string, int>> gens;
  gens.emplace_back(gen_name, m > 1 ? 1 : 0);
  return FiniteGroup("C" + std::to_string(m), m, std::move(table),
                     std::move(gens), std::move(labels));
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMap>& action,
                               const std::string& name) {
  if (action.size() != static_cast<size_t>(h.size())) {
    throw std::invalid_argument("semidirect: action must have one map per H element");
  }
  for (const auto& m : action) {
    if (m.source != &n || m.target != &n || !m.is_bijective()) {
      throw std::invalid_argument("semidirect: action values must be automorphisms of N");
    }
    m.validate();
  }
  if (action[h.identity()].images != identity_map(n).images) {
    throw std::invalid_argument("semidirect: action at identity must be trivial");
  }
  for (int h1 = 0; h1 < h.size(); ++h1) {
    for (int h2 = 0; h2 < h.size(); ++h2) {
      if (action[h.mul(h1, h2)].images != action[h1].compose(action[h2]).images) {
        throw std::invalid_argument("semidirect: action is not a homomorphism");
      }
    }
  }
  long long size = static_cast<long long>(n.size()) * h.size();
  if (size > FiniteGroup::kDefaultCap) {
    throw std::invalid_argument("semidirect: size cap exceeded");
  }
  int sz = static_cast<int>(size);
  auto index = [&](int x, int y) { return x * h.size() + y; };
  std::vector<int> table(static_cast<size_t>(sz) * sz);
  for (int x1 = 0; x1 < n.size(); ++x1) {
    for (int y1 = 0; y1 < h.size(); ++y1) {
      int u = index(x1, y1);
      for (int x2 = 0; x2 < n.size(); ++x2) {
        for (int y2 = 0; y2 < h.size(); ++y2) {
          table[static_cast<size_t>(u) * sz + index(x2, y2)] =
              index(n.mul(x1, action[y1].apply(x2)), h.mul(y1, y2));
        }
      }
    }
  }
  std::vector<std::string> labels(sz);
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < h.size(); ++y) {
      std::string lx = n.label(x), ly = h.label(y);
      if (x == 0 && y == 0) {
        labels[index(x, y)] = "e";
      } else if (x == 0) {
        labels[index(x, y)] = ly;
      } else if (y == 0) {
        labels[index(x, y)] = lx;
      } else {
        labels[index(x, y)] = lx + "*" + ly;
      }
    }
  }
  std::vector<std::pair<std::string, int>> gens;
  std::set<std::string> used;
  for (const auto& [nm, g] : n.generators()) {
    gens.emplace_back(nm, index(g, 0));
    used.insert(nm);
  }
  for (const auto& [nm, g] : h.generators()) {
    std::string out = nm;
    while (used.count(out)) out += "'";
    gens.emplace_back(out, index(0, g));
    used.insert(out);
  }
  std::string nm = name.empty() ? n.name() + "x|" + h.name() : name;
  return FiniteGroup(std::move(nm), sz, std::move(table), std::move(gens),
                     std::move(labels));
}

// --- queries ----------------------------------------------------------------

std::vector<int> subgroup_generated(const FiniteGroup& g,
                                    const std::vector<int>& xs) {
  std::vector<char> in(g.size(), 0);
  std::vector<int> work{g.identity()};
  in[g.identity()] = 1;
  for (size_t head = 0; head < work.size(); ++head) {
    int x = work[head];
    for (int s : xs) {
      int y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int h = 0; h < g.size(); ++h) cls.insert(g.conj(h, x));
    classes.emplace_back(cls.begin(), cls.end());
    for (int y : classes.back()) seen[y] = 1;
  }
  return classes;  // ascending minimal elements by construction
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int x = 0; x < g.size(); ++x) {
    bool central = true;
    for (int y = 0; y < g.size() && central; ++y) {
      central = g.mul(x, y) == g.mul(y, x);
    }
    if (central) z.push_back(x);
  }
  return z;
}

long long p_group_prime(const FiniteGroup& g) {
  long long n = g.size();
  if (n == 1) return 0;
  long long p = 2;
  while (n % p != 0) {
    ++p;
    if (p * p > n) {
      p = n;
      break;
    }
  }
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

bool is_p_group(const FiniteGroup& g, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("is_p_group: p must be prime");
  long long n = g.size();
  if (n == 1) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_nilpotent(const FiniteGroup& g) {
  // Ascending central series: Z_{i+1} = { x : [x,y] in Z_i for all y }.
  std::vector<char> in(g.size(), 0);
  in[g.identity()] = 1;
  size_t count = 1;
  for (;;) {
    std::vector<char> next(g.size(), 0);
    size_t next_count = 0;
    for (int x = 0; x < g.size(); ++x) {
      bool ok = true;
      for (int y = 0; y < g.size() && ok; ++y) ok = in[g.commutator(x, y)];
      if (ok) {
        next[x] = 1;
        ++next_count;
      }
    }
    if (next_count == static_cast<size_t>(g.size())) return true;
    if (next_count == count) return false;
    in = std::move(next);
    count = next_count;
  }
}

long long exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.size(); ++x) e = std::lcm(e, g.order(x));
  return e;
}

// --- homomorphism backtracking ---------------------------------------------

namespace {

struct HomSearch {
  const FiniteGroup& src;
  const FiniteGroup& dst;
  std::vector<int> gens;
  std::vector<long long> gen_orders;
  std::vector<int> images;
  std::vector<GroupMap> results;
  bool stop_at_first = false;

  // Tries to define f on <gens[0..depth)> by closure; conflict or a
  // non-injective assignment prunes the branch. On success f[x] = -1 marks
  // elements outside the partial subgroup.
  bool consistent(int depth, std::vector<int>& f) const {
    f.assign(src.size(), -1);
    std::vector<char> used(dst.size(), 0);
    f[src.identity()] = dst.identity();
    used[dst.identity()] = 1;
    std::vector<int> work{src.identity()};
    for (size_t head = 0; head < work.size(); ++head) {
      int x = work[head];
      for (int i = 0; i < depth; ++i) {
        int y = src.mul(x, gens[i]);
        int fy = dst.mul(f[x], images[i]);
        if (f[y] == -1) {
          if (used[fy]) return false;
          f[y] = fy;
          used[fy] = 1;
          work.push_back(y);
        } else if (f[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  void search(int depth) {
    if (stop_at_first && !results.empty()) return;
    if (depth == static_cast<int>(gens.size())) {
      std::vector<int> f;
      if (!consistent(depth, f)) return;
      for (int v : f) {
        if (v == -1) return;  // generators of src must generate
      }
      results.push_back(GroupMap{&src, &dst, std::move(f)});
      return;
    }
    for (int cand = 0; cand < dst.size(); ++cand) {
      if (dst.order(cand) != gen_orders[depth]) continue;
      images[depth] = cand;
      std::vector<int> f;
      if (!consistent(depth + 1, f)) continue;
      search(depth + 1);
      if (stop_at_first && !results.empty()) return;
    }
  }
};

void check_search_cap(const FiniteGroup& g, size_t num_gens) {
  double budget = 1.0;
  for (size_t i = 0; i < num_gens; ++i) budget *= g.size();
  if (budget > 1e9) {
    throw std::invalid_argument(
        "automorphism search infeasible for this group; use a smaller group");
  }
}

}  // namespace

std::vector<GroupMap> automorphisms(const FiniteGroup& g) {
  HomSearch hs{g, g};
  for (const auto& [nm, x] : g.generators()) {
    hs.gens.push_back(x);
    hs.gen_orders.push_back(g.order(x));
  }
  check_search_cap(g, hs.gens.size());
  hs.images.assign(hs.gens.size(), -1);
  hs.search(0);
  std::sort(hs.results.begin(), hs.results.end());
  return hs.results;
}

bool find_isomorphism(const FiniteGroup& a, const FiniteGroup& b, GroupMap* out) {
  if (a.size() != b.size()) return false;
  std::vector<long long> oa(a.size()), ob(b.size());
  for (int x = 0; x < a.size(); ++x) oa[x] = a.order(x);
  for (int x = 0; x < b.size(); ++x) ob[x] = b.order(x);
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return false;
  HomSearch hs{a, b};
  for (const auto& [nm, x] : a.generators()) {
    hs.gens.push_back(x);
    hs.gen_orders.push_back(a.order(x));
  }
  check_search_cap(b, hs.gens.size());
  hs.images.assign(hs.gens.size(), -1);
  hs.stop_at_first = true;
  hs.search(0);
  if (hs.results.empty()) return false;
  if (out) *out = hs.results.front();
  return true;
}

std::vector<SubgroupClass> subgroup_classes_of_order(const FiniteGroup& g,
                                                     long long m) {
  if (m < 1 || g.size() % m != 0) {
    throw std::invalid_argument("subgroup_classes_of_order: m must divide |G|");
  }
  if (m > 15) {
    throw std::invalid_argument(
        "subgroup_classes_of_order: intended for small m (< 16)");
  }
  std::set<std::vector<int>> subgroups;
  if (m == 1) {
    subgroups.insert({g.identity()});
  } else {
    std::vector<int> carriers;  // elements of order dividing m, excluding e
    for (int x = 1; x < g.size(); ++x) {
      if (m % g.order(x) == 0) carriers.push_back(x);
    }
    auto closure_bounded = [&](const std::vector<int>& xs) {
      std::vector<int> s = subgroup_generated(g, xs);
      return s.size() == static_cast<size_t>(m) ? s : std::vector<int>{};
    };
    for (int x : carriers) {
      if (g.order(x) != m) continue;
      auto s = closure_bounded({x});
      if (!s.empty()) subgroups.insert(s);
    }
    int need = 1;
    while ((1LL << need) < m) ++need;  // groups of order m need <= log2(m) gens
    if (need >= 2) {
      for (size_t i = 0; i < carriers.size(); ++i) {
        for (size_t j = i + 1; j < carriers.size(); ++j) {
          auto s = closure_bounded({carriers[i], carriers[j]});
          if (!s.empty()) subgroups.insert(s);
        }
      }
    }
    if (need >= 3) {
      for (size_t i = 0; i < carriers.size(); ++i) {
        for (size_t j = i + 1; j < carriers.size(); ++j) {
          for (size_t k = j + 1; k < carriers.size(); ++k) {
            auto s = closure_bounded({carriers[i], carriers[j], carriers[k]});
            if (!s.empty()) subgroups.insert(s);
          }
        }
      }
    }
  }
  // Group by conjugacy; a singleton orbit is a normal subgroup.
  std::vector<SubgroupClass> classes;
  std::set<std::vector<int>> seen;
  for (const auto& s : subgroups) {
    if (seen.count(s)) continue;
    std::set<std::vector<int>> orbit;
    for (int h = 0; h < g.size(); ++h) {
      std::vector<int> conj;
      conj.reserve(s.size());
      for (int x : s) conj.push_back(g.conj(h, x));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    SubgroupClass cls;
    cls.members.assign(orbit.begin(), orbit.end());
    cls.normal = cls.members.size() == 1;
    for (const auto& mem : cls.members) seen.insert(mem);
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace strata
