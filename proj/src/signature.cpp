#include "strata/signature.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strata {

Signature::Signature(int genus, std::vector<long long> periods)
    : genus_(genus), periods_(std::move(periods)) {
  if (genus_ < 0) throw std::invalid_argument("signature genus must be >= 0");
  for (long long m : periods_) {
    if (m < 2) throw std::invalid_argument("signature period must be >= 2");
  }
}

std::vector<long long> Signature::sorted_periods() const {
  std::vector<long long> ms = periods_;
  std::sort(ms.begin(), ms.end());
  return ms;
}

bool Signature::operator==(const Signature& other) const {
  return genus_ == other.genus_ && sorted_periods() == other.sorted_periods();
}

bool Signature::operator<(const Signature& other) const {
  if (genus_ != other.genus_) return genus_ < other.genus_;
  return sorted_periods() < other.sorted_periods();
}

std::string Signature::str() const {
  std::ostringstream os;
  os << "(" << genus_ << "; ";
  if (periods_.empty()) {
    os << "-";
  } else {
    for (size_t i = 0; i < periods_.size(); ++i) {
      if (i) os << ",";
      os << periods_[i];
    }
  }
  os << ")";
  return os.str();
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational normalized_area(const Signature& sig) {
  Rational area = 2 * (sig.genus() - 1);
  for (long long m : sig.periods()) area += Rational(m - 1, m);
  return area;
}

Rational euler_characteristic(const Signature& sig) {
  return -normalized_area(sig);
}

bool is_hyperbolic(const Signature& sig) { return normalized_area(sig) > 0; }

int teichmuller_dim(const Signature& sig) {
  if (!is_hyperbolic(sig)) throw std::domain_error("not Fuchsian");
  return 3 * sig.genus() - 3 + static_cast<int>(sig.periods().size());
}

bool is_degenerate(const Signature& sig) {
  if (sig.genus() != 0) return false;
  const auto& ms = sig.periods();
  if (ms.size() == 1) return true;
  return ms.size() == 2 && ms[0] != ms[1];
}

Signature p_localization(const Signature& sig, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p-localization needs a prime");
  std::vector<long long> parts;
  for (long long m : sig.periods()) {
    long long q = 1;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    if (q > 1) parts.push_back(q);
  }
  return Signature(sig.genus(), std::move(parts));
}

bool is_nilpotent_admissible(const Signature& sig) {
  std::set<long long> primes;
  for (long long m : sig.periods()) {
    for (long long d = 2; d * d <= m; ++d) {
      while (m % d == 0) {
        primes.insert(d);
        m /= d;
      }
    }
    if (m > 1) primes.insert(m);
  }
  for (long long p : primes) {
    if (is_degenerate(p_localization(sig, p))) return false;
  }
  return true;
}

Rational riemann_hurwitz_genus(const Signature& sig, const Integer& order) {
  if (order <= 0) throw std::invalid_argument("cover degree must be positive");
  if (!is_hyperbolic(sig)) throw std::domain_error("not Fuchsian");
  return 1 + Rational(order) * normalized_area(sig) / 2;
}

}  // namespace strata
