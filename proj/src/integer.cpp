#include "invcensus/integer.hpp"

#include <limits>

namespace invcensus {

ResourceLimits& resource_limits() {
  static ResourceLimits limits;
  return limits;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer exact_divide(const Integer& num, const Integer& den, const char* what) {
  if (den == 0) throw consistency_error(std::string(what) + ": division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw consistency_error(std::string(what) + ": inexact division " + num.str() + " / " +
                            den.str());
  }
  return q;
}

std::string to_string(const Integer& value) { return value.str(); }

std::optional<std::int64_t> to_int64(const Integer& value) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace invcensus
