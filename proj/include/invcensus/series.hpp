#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invcensus/integer.hpp"

namespace invcensus {

/// Power series with exact integer coefficients, truncated after a fixed
/// degree D (D + 1 stored coefficients). Binary operations truncate to the
/// smaller of the two degrees.
class Series {
public:
  /// The zero series truncated at degree D.
  explicit Series(int truncation_degree);
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit Series(std::vector<Integer> coefficients);

  static Series one(int truncation_degree);
  /// 1 + c x^degree, or the bare polynomial when it fits; truncated at D.
  static Series binomial(int truncation_degree, int degree, int c);

  [[nodiscard]] int truncation_degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] const Integer& operator[](int degree) const {
    return coeffs_.at(static_cast<std::size_t>(degree));
  }
  [[nodiscard]] Integer& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }
  [[nodiscard]] const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  [[nodiscard]] Series truncated(int degree) const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);

  /// In-place multiply by (1 + sign x^degree), keeping the truncation.
  void multiply_binomial(int degree, int sign);
  /// In-place divide by (1 + sign x^degree).
  void divide_binomial(int degree, int sign);

  /// Series division; the divisor's constant term must be +1 or -1.
  [[nodiscard]] Series divided_by(const Series& divisor) const;

  friend bool operator==(const Series&, const Series&) = default;

private:
  std::vector<Integer> coeffs_;
};

/// Paper-style rendering "1 + q + 4 q^2 + ... + O(q^(D+1))".
std::string format_series(const Series& s, std::string_view variable = "q");

}  // namespace invcensus
