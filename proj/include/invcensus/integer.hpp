#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace invcensus {

/// Arbitrary-precision signed integer used for every combinatorial count.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an exact computation produces a value that the mathematics
/// says cannot occur (a non-integral class sum, an inexact Newton division).
class consistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when a request exceeds a configured resource limit.
class resource_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caps applied to degree-indexed work (symmetric group order, series degree).
struct ResourceLimits {
  int max_degree = 16;
};

ResourceLimits& resource_limits();

Integer factorial(int n);

/// Divides and throws consistency_error unless the quotient is exact.
Integer exact_divide(const Integer& num, const Integer& den, const char* what);

std::string to_string(const Integer& value);

/// The value as int64 when it fits, otherwise nullopt.
std::optional<std::int64_t> to_int64(const Integer& value);

}  // namespace invcensus
