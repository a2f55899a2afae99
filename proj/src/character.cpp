#include "strata/character.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "strata/signature.hpp"  // is_prime

namespace strata {

namespace {

// --- arithmetic mod a small prime --------------------------------------------

long long mod_pow(long long b, long long e, long long m) {
  long long acc = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return acc;
}

long long mod_inv(long long a, long long m) {
  return mod_pow(((a % m) + m) % m, m - 2, m);
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Smallest prime l = 1 mod e with l > bound.
long long dixon_prime(long long e, long long bound) {
  for (long long l = e + 1;; l += e) {
    if (l <= bound) continue;
    if (is_prime(l)) return l;
  }
}

long long primitive_root(long long ell) {
  auto factors = prime_factors(ell - 1);
  for (long long g = 2; g < ell; ++g) {
    bool ok = true;
    for (long long q : factors) {
      if (mod_pow(g, (ell - 1) / q, ell) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// --- polynomials over F_ell ---------------------------------------------------

using FPoly = std::vector<long long>;  // index = degree

int fdeg(const FPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i]) return i;
  }
  return -1;
}

FPoly ftrim(FPoly f) {
  f.resize(fdeg(f) + 1);
  if (f.empty()) f.push_back(0);
  return f;
}

FPoly fmul(const FPoly& a, const FPoly& b, long long ell) {
  FPoly c(std::max<size_t>(1, a.size() + b.size() - 1), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % ell;
  }
  return ftrim(c);
}

FPoly fmod(FPoly a, const FPoly& m, long long ell) {
  int dm = fdeg(m);
  long long lead = mod_inv(m[dm], ell);
  for (int i = fdeg(a); i >= dm; --i) {
    if (!a[i]) continue;
    long long c = a[i] * lead % ell;
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % ell + ell) % ell;
    }
  }
  a.resize(std::max(dm, 1));
  return a;
}

FPoly fgcd(FPoly a, FPoly b, long long ell) {
  a = ftrim(a);
  b = ftrim(b);
  while (fdeg(b) >= 0 && !(fdeg(b) == 0 && b[0] == 0)) {
    FPoly r = fmod(a, b, ell);
    a = b;
    b = ftrim(r);
    if (fdeg(b) < 0 || (fdeg(b) == 0 && b[0] == 0)) break;
  }
  // normalize monic
  int d = fdeg(a);
  if (d >= 0 && a[d] != 1) {
    long long inv = mod_inv(a[d], ell);
    for (auto& c : a) c = c * inv % ell;
  }
  return a;
}

FPoly fpowmod(FPoly base, long long e, const FPoly& m, long long ell) {
  FPoly acc{1};
  base = fmod(std::move(base), m, ell);
  while (e > 0) {
    if (e & 1) acc = fmod(fmul(acc, base, ell), m, ell);
    base = fmod(fmul(base, base, ell), m, ell);
    e >>= 1;
  }
  return acc;
}

// Distinct roots in F_ell of a polynomial that splits into distinct linear
// factors (Cantor-Zassenhaus splitting).
void froots(const FPoly& f, long long ell, std::mt19937_64& rng,
            std::vector<long long>& out) {
  int d = fdeg(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back((ell - f[0] % ell) % ell * mod_inv(f[1], ell) % ell);
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    long long delta = rng() % ell;
    // h = gcd(f, (x+delta)^((ell-1)/2) - 1)
    FPoly shifted{delta, 1};
    FPoly h = fpowmod(shifted, (ell - 1) / 2, f, ell);
    h[0] = ((h[0] - 1) % ell + ell) % ell;
    h = fgcd(f, h, ell);
    int dh = fdeg(h);
    if (dh > 0 && dh < d) {
      // f = h * (f/h)
      FPoly q(d - dh + 1, 0);
      FPoly rem = f;
      long long lead = mod_inv(h[dh], ell);
      for (int i = fdeg(rem); i >= dh; --i) {
        if (!rem[i]) continue;
        long long c = rem[i] * lead % ell;
        q[i - dh] = c;
        for (int j = 0; j <= dh; ++j) {
          rem[i - dh + j] = ((rem[i - dh + j] - c * h[j]) % ell + ell) % ell;
        }
      }
      froots(h, ell, rng, out);
      froots(q, ell, rng, out);
      return;
    }
  }
  throw std::logic_error("root splitting failed");
}

// Characteristic polynomial over F_ell via Hessenberg reduction.
FPoly char_poly(std::vector<std::vector<long long>> m, long long ell) {
  int n = static_cast<int>(m.size());
  // Reduce to upper Hessenberg by similarity transformations.
  for (int col = 0; col < n - 2; ++col) {
    int pivot = -1;
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col]) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != col + 1) {
      std::swap(m[pivot], m[col + 1]);
      for (int row = 0; row < n; ++row) std::swap(m[row][pivot], m[row][col + 1]);
    }
    long long inv = mod_inv(m[col + 1][col], ell);
    for (int row = col + 2; row < n; ++row) {
      long long factor = m[row][col] * inv % ell;
      if (!factor) continue;
      for (int k = 0; k < n; ++k) {
        m[row][k] = ((m[row][k] - factor * m[col + 1][k]) % ell + ell) % ell;
      }
      for (int k = 0; k < n; ++k) {
        m[k][col + 1] = (m[k][col + 1] + factor * m[k][row]) % ell;
      }
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{i,k} (prod subdiagonals) p_{i-1}.
  std::vector<FPoly> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    FPoly term(p[k - 1].size() + 1, 0);
    for (size_t i = 0; i < p[k - 1].size(); ++i) {
      term[i + 1] = (term[i + 1] + p[k - 1][i]) % ell;
      term[i] = ((term[i] - m[k - 1][k - 1] * p[k - 1][i]) % ell + ell) % ell;
    }
    long long prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = prod * m[i][i - 1] % ell;
      long long coef = m[i - 1][k - 1] * prod % ell;
      if (!coef) continue;
      for (size_t j = 0; j < p[i - 1].size(); ++j) {
        term[j] = ((term[j] - coef * p[i - 1][j]) % ell + ell) % ell;
      }
    }
    p[k] = ftrim(term);
  }
  return p[n];
}

// Reduced-row-echelon basis of a subspace of F_ell^n.
struct Subspace {
  std::vector<std::vector<long long>> rows;
  std::vector<int> pivots;
  long long ell = 0;

  int dim() const { return static_cast<int>(rows.size()); }

  void insert(std::vector<long long> v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      long long c = v[pivots[i]];
      if (!c) continue;
      for (size_t k = 0; k < v.size(); ++k) {
        v[k] = ((v[k] - c * rows[i][k]) % ell + ell) % ell;
      }
    }
    int pivot = -1;
    for (size_t k = 0; k < v.size(); ++k) {
      if (v[k]) {
        pivot = static_cast<int>(k);
        break;
      }
    }
    if (pivot < 0) return;
    long long inv = mod_inv(v[pivot], ell);
    for (auto& c : v) c = c * inv % ell;
    // Back-eliminate the new pivot from existing rows.
    for (size_t i = 0; i < rows.size(); ++i) {
      long long c = rows[i][pivot];
      if (!c) continue;
      for (size_t k = 0; k < v.size(); ++k) {
        rows[i][k] = ((rows[i][k] - c * v[k]) % ell + ell) % ell;
      }
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < pivot) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, pivot);
  }

  // Coordinates of a vector that must lie in the span.
  std::vector<long long> coords(const std::vector<long long>& v) const {
    std::vector<long long> c(rows.size());
    std::vector<long long> residue = v;
    for (size_t i = 0; i < rows.size(); ++i) {
      c[i] = residue[pivots[i]];
      if (!c[i]) continue;
      for (size_t k = 0; k < residue.size(); ++k) {
        residue[k] = ((residue[k] - c[i] * rows[i][k]) % ell + ell) % ell;
      }
    }
    for (long long x : residue) {
      if (x) throw std::logic_error("class-sum subspace is not invariant");
    }
    return c;
  }
};

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  if (g.size() > 512) {
    throw std::invalid_argument("character_table: group size cap (512) exceeded");
  }
  CharacterTable t;
  t.group = &g;
  t.classes = conjugacy_classes(g);
  const int r = t.num_classes();
  t.class_of.assign(g.size(), -1);
  for (int c = 0; c < r; ++c) {
    for (int x : t.classes[c]) t.class_of[x] = c;
    t.class_rep.push_back(t.classes[c].front());
  }
  t.inverse_class.resize(r);
  for (int c = 0; c < r; ++c) {
    t.inverse_class[c] = t.class_of[g.inv(t.class_rep[c])];
  }
  t.group_exponent = exponent(g);

  const long long e = t.group_exponent;
  const long long bound = static_cast<long long>(2 * std::sqrt((double)g.size())) + 1;
  const long long ell = dixon_prime(e, bound);
  const long long z = mod_pow(primitive_root(ell), (ell - 1) / e, ell);

  // Application of the class matrix for "class weights" c: given the class
  // of u and k, M[j][k] = sum over u in G of c[class(u)] with
  // j = class(u^{-1} x_k). Columns indexed by k, rows by j.
  auto weighted_class_matrix = [&](const std::vector<long long>& weights) {
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (int k = 0; k < r; ++k) {
      int xk = t.class_rep[k];
      for (int u = 0; u < g.size(); ++u) {
        long long w = weights[t.class_of[u]];
        if (!w) continue;
        int j = t.class_of[g.mul(g.inv(u), xk)];
        m[j][k] = (m[j][k] + w) % ell;
      }
    }
    return m;
  };

  // Split the ambient space into the r common eigenlines of the class
  // matrices. Random weight combinations almost always split in one pass;
  // the per-class sweep is a guaranteed fallback.
  std::vector<Subspace> done;
  std::vector<Subspace> work;
  {
    Subspace full;
    full.ell = ell;
    for (int i = 0; i < r; ++i) {
      std::vector<long long> unit(r, 0);
      unit[i] = 1;
      full.insert(std::move(unit));
    }
    work.push_back(std::move(full));
  }
  std::mt19937_64 rng(0xd1c50ULL);
  while (!work.empty()) {
    Subspace s = std::move(work.back());
    work.pop_back();
    if (s.dim() == 1) {
      done.push_back(std::move(s));
      continue;
    }
    bool split_done = false;
    for (int attempt = 0; attempt < 6 + r && !split_done; ++attempt) {
      std::vector<long long> weights(r, 0);
      if (attempt < 6) {
        for (auto& w : weights) w = rng() % ell;
      } else {
        weights[attempt - 6] = 1;  // plain class matrix sweep
      }
      auto m = weighted_class_matrix(weights);
      // Restriction of m to the subspace.
      int dim = s.dim();
      std::vector<std::vector<long long>> images(dim);
      for (int j = 0; j < dim; ++j) {
        std::vector<long long> w(r, 0);
        for (int k = 0; k < r; ++k) {
          if (!s.rows[j][k]) continue;
          for (int i = 0; i < r; ++i) {
            w[i] = (w[i] + m[i][k] * s.rows[j][k]) % ell;
          }
        }
        images[j] = s.coords(w);
      }
      std::vector<std::vector<long long>> restr(dim, std::vector<long long>(dim));
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) restr[i][j] = images[j][i];
      }
      FPoly cp = char_poly(restr, ell);
      // Discard repeated factors: gcd with x^ell - x picks distinct roots.
      FPoly xq = fpowmod({0, 1}, ell, cp, ell);
      if (fdeg(xq) >= 0) {
        FPoly diff = xq;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % ell + ell) % ell;
        cp = fgcd(cp, diff, ell);
      }
      std::vector<long long> roots;
      froots(cp, ell, rng, roots);
      if (roots.size() < 2) continue;
      for (long long lambda : roots) {
        // Kernel of restr - lambda I.
        std::vector<std::vector<long long>> a = restr;
        for (int i = 0; i < dim; ++i) a[i][i] = ((a[i][i] - lambda) % ell + ell) % ell;
        // Gaussian elimination for the null space.
        std::vector<int> pivot_col(dim, -1);
        int rank = 0;
        for (int col = 0; col < dim && rank < dim; ++col) {
          int sel = -1;
          for (int row = rank; row < dim; ++row) {
            if (a[row][col]) {
              sel = row;
              break;
            }
          }
          if (sel < 0) continue;
          std::swap(a[sel], a[rank]);
          long long inv = mod_inv(a[rank][col], ell);
          for (auto& x : a[rank]) x = x * inv % ell;
          for (int row = 0; row < dim; ++row) {
            if (row == rank || !a[row][col]) continue;
            long long f = a[row][col];
            for (int k = 0; k < dim; ++k) {
              a[row][k] = ((a[row][k] - f * a[rank][k]) % ell + ell) % ell;
            }
          }
          pivot_col[rank] = col;
          ++rank;
        }
        std::vector<char> is_pivot(dim, 0);
        for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = 1;
        Subspace part;
        part.ell = ell;
        for (int free = 0; free < dim; ++free) {
          if (is_pivot[free]) continue;
          std::vector<long long> sol(dim, 0);
          sol[free] = 1;
          for (int i = 0; i < rank; ++i) {
            sol[pivot_col[i]] = (ell - a[i][free] % ell) % ell;
          }
          // Map back to ambient coordinates.
          std::vector<long long> ambient(r, 0);
          for (int j = 0; j < dim; ++j) {
            if (!sol[j]) continue;
            for (int k = 0; k < r; ++k) {
              ambient[k] = (ambient[k] + sol[j] * s.rows[j][k]) % ell;
            }
          }
          part.insert(std::move(ambient));
        }
        if (part.dim() == 0) throw std::logic_error("empty eigenspace");
        work.push_back(std::move(part));
      }
      split_done = true;
    }
    if (!split_done) throw std::logic_error("class matrix splitting stalled");
  }
  if (static_cast<int>(done.size()) != r) {
    throw std::logic_error("wrong number of common eigenvectors");
  }

  // Normalize eigenvectors to central-character vectors (value 1 on the
  // identity class), recover degrees, lift values.
  std::vector<long long> class_size_inv(r);
  for (int c = 0; c < r; ++c) {
    class_size_inv[c] = mod_inv(static_cast<long long>(t.classes[c].size()), ell);
  }
  std::vector<std::vector<CycNumber>> rows;
  std::vector<long long> degrees;
  for (const auto& s : done) {
    std::vector<long long> v = s.rows[0];
    if (!v[0]) throw std::logic_error("eigenvector vanishes on the identity class");
    long long scale = mod_inv(v[0], ell);
    for (auto& x : v) x = x * scale % ell;
    // d^2 = |G| / sum_k v_k v_{k'} / |C_k|.
    long long sum = 0;
    for (int k = 0; k < r; ++k) {
      sum = (sum + v[k] * v[t.inverse_class[k]] % ell * class_size_inv[k]) % ell;
    }
    long long d2 = g.size() % ell * mod_inv(sum, ell) % ell;
    long long d = 0;
    for (long long c = 1; c * c <= g.size(); ++c) {
      if (c * c % ell == d2) {
        d = c;
        break;
      }
    }
    if (!d) throw std::logic_error("degree recovery failed");
    degrees.push_back(d);
    // theta(chi(c_k)) = d * v_k / |C_k|.
    std::vector<long long> chi_mod(r);
    for (int k = 0; k < r; ++k) {
      chi_mod[k] = d % ell * v[k] % ell * class_size_inv[k] % ell;
    }
    // Exact lift: chi(x) = sum_j m_j zeta_o^j with m_j the multiplicity of
    // the eigenvalue zeta_o^j of the representing matrix of x.
    std::vector<CycNumber> row(r);
    for (int k = 0; k < r; ++k) {
      int x = t.class_rep[k];
      long long o = g.order(x);
      long long zo = mod_pow(z, e / o, ell);
      long long o_inv = mod_inv(o, ell);
      std::vector<long long> chi_pow(o);
      {
        int xs = g.identity();
        for (long long s2 = 0; s2 < o; ++s2) {
          chi_pow[s2] = chi_mod[t.class_of[xs]];
          xs = g.mul(xs, x);
        }
      }
      CycNumber val;
      long long total = 0;
      long long check = 0;
      for (long long j = 0; j < o; ++j) {
        long long m = 0;
        for (long long s2 = 0; s2 < o; ++s2) {
          m = (m + chi_pow[s2] * mod_pow(zo, ((o - j) * s2) % o, ell)) % ell;
        }
        m = m * o_inv % ell;
        if (m > d) throw std::logic_error("eigenvalue multiplicity out of range");
        total += m;
        check = (check + m * mod_pow(zo, j, ell)) % ell;
        if (m) val += cyc_root(o, j) * CycNumber::from_rational(Rational(m));
      }
      if (total != d) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      if (check != chi_mod[k]) throw std::logic_error("character lift mismatch");
      row[k] = std::move(val);
    }
    rows.push_back(std::move(row));
  }

  // Canonical row order: trivial first, then by degree and value strings.
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  auto row_key = [&](int i) {
    std::ostringstream os;
    for (const auto& v : rows[i]) os << v.str() << "|";
    return os.str();
  };
  auto is_trivial = [&](int i) {
    for (const auto& v : rows[i]) {
      if (!(v == CycNumber::from_rational(1))) return false;
    }
    return true;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return row_key(a) < row_key(b);
  });
  for (int i : order) {
    t.chars.push_back(std::move(rows[i]));
    t.degrees.push_back(degrees[i]);
  }

  // Exact verification of the finished table.
  {
    long long sum_sq = 0;
    for (long long d : t.degrees) sum_sq += d * d;
    if (sum_sq != g.size()) throw std::logic_error("sum of squared degrees is wrong");
    for (const auto& v : t.chars[0]) {
      if (!(v == CycNumber::from_rational(1))) {
        throw std::logic_error("first row is not the trivial character");
      }
    }
    for (int i = 0; i < r; ++i) {
      // Conjugate symmetry: chi(x^{-1}) = conj(chi(x)).
      for (int k = 0; k < r; ++k) {
        if (!(t.chars[i][t.inverse_class[k]] == t.chars[i][k].conjugate())) {
          throw std::logic_error("conjugate symmetry fails");
        }
      }
      for (int j = i; j < r; ++j) {
        CycNumber sum;
        for (int k = 0; k < r; ++k) {
          CycNumber term = t.chars[i][k] * t.chars[j][t.inverse_class[k]];
          sum += term * CycNumber::from_rational(
                            Rational(static_cast<long long>(t.classes[k].size())));
        }
        Rational expected = (i == j) ? Rational(g.size()) : Rational(0);
        if (!(sum == CycNumber::from_rational(expected))) {
          throw std::logic_error("row orthogonality fails");
        }
      }
    }
  }
  return t;
}

// --- explicit family representations -----------------------------------------

namespace {

using CycMatrix = std::vector<std::vector<CycNumber>>;

CycMatrix cyc_identity(int n) {
  CycMatrix m(n, std::vector<CycNumber>(n));
  for (int i = 0; i < n; ++i) m[i][i] = CycNumber::from_rational(1);
  return m;
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
  int n = static_cast<int>(a.size());
  CycMatrix c(n, std::vector<CycNumber>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

CycMatrix cyc_pow(const CycMatrix& a, long long e) {
  CycMatrix acc = cyc_identity(static_cast<int>(a.size()));
  CycMatrix base = a;
  while (e > 0) {
    if (e & 1) acc = cyc_mul(acc, base);
    base = cyc_mul(base, base);
    e >>= 1;
  }
  return acc;
}

CycNumber cyc_trace(const CycMatrix& a) {
  CycNumber tr;
  for (size_t i = 0; i < a.size(); ++i) tr += a[i][i];
  return tr;
}

bool cyc_eq(const CycMatrix& a, const CycMatrix& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      if (!(a[i][j] == b[i][j])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<CycNumber> g2_family_character(const CharacterTable& table, int n) {
  const FiniteGroup& g = *table.group;
  if (g.size() != (1 << n)) {
    throw std::invalid_argument("g2_family_character: wrong group");
  }
  const long long q = 1LL << (n - 3);
  CycNumber w = CycNumber::root_of_unity(q, 1);
  CycNumber wb = w.conjugate();
  CycNumber one = CycNumber::from_rational(1);
  auto zero_mat = [&](int sz) { return CycMatrix(sz, std::vector<CycNumber>(sz)); };
  CycMatrix R = zero_mat(4), S = zero_mat(4), B = zero_mat(4), A = zero_mat(4);
  R[0][0] = w;  R[1][1] = wb; R[2][2] = wb; R[3][3] = w;
  // The lower block of s carries the conjugate pair the other way around
  // than the upper one; this is what makes asa = sr hold on the matrices.
  S[0][1] = one; S[1][0] = one; S[2][3] = wb; S[3][2] = w;
  B[0][0] = one; B[1][1] = one; B[2][2] = -one; B[3][3] = -one;
  A[0][2] = one; A[1][3] = one; A[2][0] = one; A[3][1] = one;
  // Defining relations, verified on the matrices.
  auto expect = [&](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("g2 matrices: ") + what);
  };
  CycMatrix I = cyc_identity(4);
  expect(cyc_eq(cyc_pow(R, q), I), "r order");
  expect(cyc_eq(cyc_mul(S, S), I), "s^2");
  expect(cyc_eq(cyc_pow(cyc_mul(S, R), 2), I), "(sr)^2");
  expect(cyc_eq(cyc_mul(A, A), I), "a^2");
  expect(cyc_eq(cyc_mul(B, B), I), "b^2");
  expect(cyc_eq(cyc_mul(S, B), cyc_mul(B, S)), "[s,b]");
  expect(cyc_eq(cyc_mul(R, B), cyc_mul(B, R)), "[r,b]");
  expect(cyc_eq(cyc_mul(cyc_mul(A, R), A), cyc_pow(R, q - 1)), "ara");
  expect(cyc_eq(cyc_mul(cyc_mul(A, S), A), cyc_mul(S, R)), "asa");
  expect(cyc_eq(cyc_mul(cyc_mul(A, B), A), cyc_mul(B, cyc_pow(R, q / 2))), "aba");

  std::vector<CycNumber> values;
  for (int c = 0; c < table.num_classes(); ++c) {
    int x = table.class_rep[c];
    int l = x & 1, k = (x >> 1) & 1, j = (x >> 2) & 1;
    long long i = x >> 3;
    CycMatrix m = cyc_pow(R, i);
    if (j) m = cyc_mul(m, S);
    if (k) m = cyc_mul(m, B);
    if (l) m = cyc_mul(m, A);
    values.push_back(cyc_trace(m));
  }
  return values;
}

std::vector<CycNumber> gp_family_character(const CharacterTable& table, int p,
                                           int n) {
  const FiniteGroup& g = *table.group;
  long long q = 1;
  for (int i = 0; i + 1 < n; ++i) q *= p;
  if (g.size() != q * p) {
    throw std::invalid_argument("gp_family_character: wrong group");
  }
  const long long r = q / p + 1;
  CycMatrix D(p, std::vector<CycNumber>(p));
  long long rj = 1;
  for (int i = 0; i < p; ++i) {
    D[i][i] = CycNumber::root_of_unity(q, rj);
    rj = rj * r % q;
  }
  CycMatrix P(p, std::vector<CycNumber>(p));
  for (int i = 0; i < p; ++i) P[i][(i + 1) % p] = CycNumber::from_rational(1);
  CycMatrix I = cyc_identity(p);
  if (!cyc_eq(cyc_pow(D, q), I) || !cyc_eq(cyc_pow(P, p), I)) {
    throw std::logic_error("gp matrices: orders wrong");
  }
  // b a b^{-1} = a^r on the matrices.
  if (!cyc_eq(cyc_mul(P, D), cyc_mul(cyc_pow(D, r), P))) {
    throw std::logic_error("gp matrices: twist relation fails");
  }
  std::vector<CycNumber> values;
  for (int c = 0; c < table.num_classes(); ++c) {
    int x = table.class_rep[c];
    long long i = x / p, j = x % p;
    values.push_back(cyc_trace(cyc_mul(cyc_pow(D, i), cyc_pow(P, j))));
  }
  return values;
}

bool table_contains(const CharacterTable& table,
                    const std::vector<CycNumber>& values) {
  for (const auto& row : table.chars) {
    bool same = true;
    for (size_t k = 0; k < row.size() && same; ++k) same = row[k] == values[k];
    if (same) return true;
  }
  return false;
}

std::vector<RationalIrrep> rational_irreps(const CharacterTable& table) {
  const FiniteGroup& g = *table.group;
  if (!is_nilpotent(g)) {
    throw std::invalid_argument(
        "rational_irreps: Schur index 1 is only assumed for nilpotent groups");
  }
  const int r = table.num_chars();
  const long long e = table.group_exponent;
  // Row index of chi^(t): values chi(x^t).
  auto row_of_twist = [&](int i, long long tpow) {
    std::vector<CycNumber> twisted(r);
    for (int k = 0; k < r; ++k) {
      int x = table.class_rep[k];
      twisted[k] = table.chars[i][table.class_of[g.pow(x, tpow)]];
    }
    for (int j = 0; j < r; ++j) {
      bool same = true;
      for (int k = 0; k < r && same; ++k) same = table.chars[j][k] == twisted[k];
      if (same) return j;
    }
    throw std::logic_error("Galois twist left the character table");
  };
  std::vector<int> orbit_id(r, -1);
  std::vector<RationalIrrep> out;
  for (int i = 0; i < r; ++i) {
    if (orbit_id[i] >= 0) continue;
    RationalIrrep w;
    for (long long tpow = 1; tpow < e; ++tpow) {
      if (std::gcd(tpow, e) != 1) continue;
      int j = row_of_twist(i, tpow);
      if (orbit_id[j] < 0) {
        orbit_id[j] = static_cast<int>(out.size());
        w.members.push_back(j);
      }
    }
    if (e == 1) {  // trivial group
      orbit_id[i] = static_cast<int>(out.size());
      w.members.push_back(i);
    }
    std::sort(w.members.begin(), w.members.end());
    w.degree = table.degrees[w.members.front()];
    w.field_degree = static_cast<long long>(w.members.size());
    w.schur_index = 1;
    w.multiplicity = w.degree;
    w.trivial = w.members.front() == 0;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const RationalIrrep& a, const RationalIrrep& b) {
              return a.members.front() < b.members.front();
            });
  return out;
}

}  // namespace strata
