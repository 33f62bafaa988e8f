#include "invcensus/factorizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace invcensus {

RationalForm::RationalForm(std::vector<int> numerator, std::vector<int> denominator)
    : numerator_degrees(std::move(numerator)), denominator_degrees(std::move(denominator)) {
  for (int d : numerator_degrees) {
    if (d <= 0) throw std::invalid_argument("numerator degrees must be positive");
  }
  for (int d : denominator_degrees) {
    if (d <= 0) throw std::invalid_argument("denominator degrees must be positive");
  }
  std::sort(numerator_degrees.begin(), numerator_degrees.end());
  std::sort(denominator_degrees.begin(), denominator_degrees.end());
}

Series expand(const RationalForm& form, int max_degree) {
  Series s = Series::one(max_degree);
  for (int a : form.numerator_degrees) s.multiply_binomial(a, +1);
  for (int b : form.denominator_degrees) s.divide_binomial(b, -1);
  return s;
}

Series numerator_for_denominator(const Series& target, const std::vector<int>& denominator_degrees,
                                 int max_degree) {
  if (target[0] != 1) throw std::invalid_argument("target series must have constant term 1");
  if (max_degree < 0 || max_degree > target.truncation_degree()) {
    throw std::invalid_argument("numerator degree " + std::to_string(max_degree) +
                                " is outside the target truncation " +
                                std::to_string(target.truncation_degree()));
  }
  Series s = target.truncated(max_degree);
  for (int b : denominator_degrees) {
    if (b <= 0) throw std::invalid_argument("denominator degrees must be positive");
    s.multiply_binomial(b, -1);
  }
  return s;
}

std::optional<Mismatch> compare(const Series& left, const Series& right) {
  const int d = std::min(left.truncation_degree(), right.truncation_degree());
  for (int i = 0; i <= d; ++i) {
    if (left[i] != right[i]) return Mismatch{i, left[i], right[i]};
  }
  return std::nullopt;
}

namespace {

int nonnegative_through(const Series& s) {
  for (int i = 0; i <= s.truncation_degree(); ++i) {
    if (s[i] < 0) return i - 1;
  }
  return s.truncation_degree();
}

FitReport build_report(const Series& target, const std::vector<int>& den, Series numerator) {
  const int d = target.truncation_degree();
  FitReport report;
  report.numerator_nonnegative_through = nonnegative_through(numerator);
  report.low_degrees_free = (d < 1 || numerator[1] == 0) && (d < 2 || numerator[2] == 0);

  std::vector<int> factors;
  Series residual = numerator;
  bool factored = true;
  for (int a = 1; a <= d; ++a) {
    if (residual[a] < 0) {
      factored = false;
      break;
    }
    for (Integer c = residual[a]; c > 0; --c) {
      residual.divide_binomial(a, +1);
      factors.push_back(a);
    }
  }
  report.numerator_factored = factored;
  report.candidate = RationalForm(std::move(factors), den);
  report.numerator = std::move(numerator);

  report.first_mismatch = compare(expand(report.candidate, d), target);
  report.match_degree = report.first_mismatch ? report.first_mismatch->degree - 1 : d;
  return report;
}

bool anchor_applies(const Series& target) {
  return target.truncation_degree() >= 1 && target[1] == 1;
}

}  // namespace

FitReport fit_denominator(const Series& target, const std::vector<int>& denominator_degrees) {
  std::vector<int> den = denominator_degrees;
  std::sort(den.begin(), den.end());
  auto report = build_report(target, den,
                             numerator_for_denominator(target, den, target.truncation_degree()));
  report.degree_one_anchored = anchor_applies(target);
  return report;
}

std::vector<FitReport> search_candidates(const Series& target, const SearchConstraints& constraints) {
  if (target[0] != 1) throw std::invalid_argument("target series must have constant term 1");
  const int d = target.truncation_degree();
  const int max_deg = constraints.max_factor_degree;
  std::vector<FitReport> out;
  if (max_deg < 1) return out;

  int min_size = 1;
  int max_size = constraints.max_total_factors;
  if (constraints.free_generators) min_size = max_size = *constraints.free_generators;
  if (min_size < 1 || max_size < min_size) return out;

  const bool anchored = anchor_applies(target);

  // Nondecreasing degree lists; `partial` is target * prod (1 - x^b) so far.
  std::vector<int> den;
  auto visit = [&](auto&& self, int smallest, const Series& partial) -> void {
    const int size = static_cast<int>(den.size());
    if (size >= min_size) {
      const long ones = std::count(den.begin(), den.end(), 1);
      if ((!anchored || ones == 1) && nonnegative_through(partial) == d) {
        FitReport r = build_report(target, den, partial);
        r.degree_one_anchored = anchored;
        out.push_back(std::move(r));
      }
    }
    if (size == max_size) return;
    for (int b = smallest; b <= max_deg; ++b) {
      if (anchored && b == 1 && !den.empty()) continue;
      Series next = partial;
      next.multiply_binomial(b, -1);
      den.push_back(b);
      self(self, b, next);
      den.pop_back();
    }
  };
  visit(visit, 1, target);

  std::sort(out.begin(), out.end(), [](const FitReport& a, const FitReport& b) {
    const auto key = [](const FitReport& r) {
      return std::make_tuple(-r.match_degree, r.candidate.total_invariant_count(),
                             std::cref(r.candidate.denominator_degrees),
                             std::cref(r.candidate.numerator_degrees));
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace invcensus
