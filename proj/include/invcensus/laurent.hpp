#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "invcensus/integer.hpp"

namespace invcensus {

/// Sparse multivariate Laurent polynomial with exact integer coefficients.
/// Terms with zero coefficient are never stored.
class LaurentPoly {
public:
  using Exponents = std::vector<int>;

  explicit LaurentPoly(std::size_t variables) : variables_(variables) {}

  static LaurentPoly constant(std::size_t variables, const Integer& c);
  static LaurentPoly monomial(Exponents exponents, const Integer& c = 1);

  [[nodiscard]] std::size_t variables() const noexcept { return variables_; }
  [[nodiscard]] const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  [[nodiscard]] Integer coefficient(const Exponents& e) const;
  [[nodiscard]] Integer constant_term() const;
  /// Largest |exponent| over all stored terms and variables.
  [[nodiscard]] int max_abs_exponent() const;

  /// Substitutes every variable by its inverse.
  [[nodiscard]] LaurentPoly inverted() const;

  void add_term(const Exponents& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Divides every coefficient by d; throws consistency_error unless exact.
  [[nodiscard]] LaurentPoly exact_divided(const Integer& d, const char* what) const;

  /// Constant term of (*this) * other without forming the product.
  [[nodiscard]] Integer constant_term_of_product(const LaurentPoly& other) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void check_arity(const LaurentPoly& other) const;

  std::size_t variables_;
  std::map<Exponents, Integer> terms_;
};

/// Human-readable form, variables named by \p names (x0, x1, ... by default).
std::string format_laurent(const LaurentPoly& p, const std::vector<std::string>& names = {});

}  // namespace invcensus
