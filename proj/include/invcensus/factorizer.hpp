#pragma once

#include <optional>
#include <vector>

#include "invcensus/integer.hpp"
#include "invcensus/series.hpp"

namespace invcensus {

/// prod (1 + x^a_i) / prod (1 - x^b_j). Degrees are kept sorted ascending.
struct RationalForm {
  std::vector<int> numerator_degrees;
  std::vector<int> denominator_degrees;

  RationalForm() = default;
  /// Throws std::invalid_argument on a nonpositive degree.
  RationalForm(std::vector<int> numerator, std::vector<int> denominator);

  [[nodiscard]] std::size_t free_generator_count() const noexcept {
    return denominator_degrees.size();
  }
  [[nodiscard]] std::size_t total_invariant_count() const noexcept {
    return numerator_degrees.size() + denominator_degrees.size();
  }
  friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

struct Mismatch {
  int degree = 0;
  Integer left;
  Integer right;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Truncated expansion of a rational form.
Series expand(const RationalForm& form, int max_degree);

/// target * prod (1 - x^b) through max_degree: the numerator a denominator
/// choice forces. Throws std::invalid_argument unless target starts with 1
/// and max_degree is within its truncation.
Series numerator_for_denominator(const Series& target, const std::vector<int>& denominator_degrees,
                                 int max_degree);

/// First degree within the common truncation where the series differ.
std::optional<Mismatch> compare(const Series& left, const Series& right);

struct FitReport {
  RationalForm candidate;
  /// Highest degree through which expand(candidate) equals the target.
  int match_degree = 0;
  /// (degree, candidate value, target value).
  std::optional<Mismatch> first_mismatch;
  int numerator_nonnegative_through = 0;
  /// Raw numerator series implied by the denominator.
  Series numerator{0};
  /// True when candidate's (1 + x^a) factors reproduce the whole numerator.
  bool numerator_factored = false;
  /// Whether the one-degree-1-factor rule (trace as free generator) was applied.
  bool degree_one_anchored = false;
  /// Numerator has no terms at degrees 1 and 2: all low-degree invariants are free.
  bool low_degrees_free = false;
};

struct SearchConstraints {
  std::optional<int> free_generators;
  int max_factor_degree = 9;
  int max_total_factors = 9;
};

/// Denominator-first search for integrity-basis candidates, ranked by
/// match degree (desc), total invariant count (asc), then degree lists.
std::vector<FitReport> search_candidates(const Series& target, const SearchConstraints& constraints);

/// Builds the report for one denominator; the numerator is factored greedily
/// into (1 + x^a) terms up to the first negative residual coefficient.
FitReport fit_denominator(const Series& target, const std::vector<int>& denominator_degrees);

}  // namespace invcensus
