#include "strata/rational.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace strata {

long long to_int64(const Integer& n) {
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
  }
  return static_cast<long long>(n);
}

long long rational_to_int64(const Rational& q) {
  if (!is_integer(q)) {
    throw std::domain_error("expected an integer, got " + rational_str(q));
  }
  return to_int64(numerator(q));
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

}  // namespace strata
