#include "doctest.h"

#include <algorithm>
#include <random>

#include "invcensus/factorizer.hpp"

using namespace invcensus;

namespace {

Series make(std::initializer_list<long long> c) {
  std::vector<Integer> v;
  for (long long x : c) v.emplace_back(x);
  return Series(std::move(v));
}

const std::vector<int> kPaperNumerator{4, 5, 6, 6, 6, 6, 7, 7, 8, 8, 9, 9};
const std::vector<int> kPaperDenominator{1, 2, 2, 2, 3, 3, 4, 4, 4};

Series two_qubit_series() {
  return make({1, 1, 4, 6, 16, 23, 52, 77, 150, 224, 396, 583});
}

// Plain convolution of prod (1 + x^a), independent of Series.
std::vector<long long> product_of_binomials(const std::vector<int>& degrees, int top) {
  std::vector<long long> poly(static_cast<std::size_t>(top) + 1, 0);
  poly[0] = 1;
  for (int a : degrees) {
    std::vector<long long> next = poly;
    for (int i = 0; i + a <= top; ++i) next[static_cast<std::size_t>(i + a)] += poly[static_cast<std::size_t>(i)];
    poly = next;
  }
  return poly;
}

}  // namespace

TEST_CASE("rational form bookkeeping") {
  const RationalForm g(kPaperNumerator, kPaperDenominator);
  CHECK(g.free_generator_count() == 9);
  CHECK(g.total_invariant_count() == 21);
  CHECK(RationalForm({3, 1}, {2}).numerator_degrees == std::vector<int>{1, 3});
  CHECK_THROWS_AS(RationalForm({0}, {1}), std::invalid_argument);
}

TEST_CASE("expand") {
  CHECK(expand(RationalForm({}, {1}), 4) == make({1, 1, 1, 1, 1}));
  CHECK(expand(RationalForm({1}, {1}), 4) == make({1, 2, 2, 2, 2}));
  CHECK(expand(RationalForm(kPaperNumerator, kPaperDenominator), 12) ==
        make({1, 1, 4, 6, 16, 23, 52, 77, 150, 224, 398, 589, 982}));
  CHECK(expand(RationalForm{}, 2) == make({1, 0, 0}));
}

TEST_CASE("numerator_for_denominator") {
  CHECK(numerator_for_denominator(make({1, 1, 1, 1, 1, 1, 1}), {1}, 6) == make({1, 0, 0, 0, 0, 0, 0}));
  CHECK(numerator_for_denominator(make({1, 2, 2, 2, 2, 2}), {1}, 4) == make({1, 1, 0, 0, 0}));

  const Series numerator = numerator_for_denominator(two_qubit_series(), kPaperDenominator, 9);
  const auto expected = product_of_binomials(kPaperNumerator, 9);
  for (int i = 0; i <= 9; ++i) CHECK(numerator[i] == expected[static_cast<std::size_t>(i)]);
  CHECK(numerator[4] == 1);
  CHECK(numerator[6] == 4);
  CHECK(numerator[7] == 2);

  CHECK_THROWS_AS((void)numerator_for_denominator(make({2, 1}), {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)numerator_for_denominator(make({1, 1}), {1}, 2), std::invalid_argument);
}

TEST_CASE("compare") {
  const auto diff = compare(two_qubit_series(), expand(RationalForm(kPaperNumerator, kPaperDenominator), 11));
  REQUIRE(diff.has_value());
  CHECK(diff->degree == 10);
  CHECK(diff->left == 396);
  CHECK(diff->right == 398);
  CHECK_FALSE(compare(two_qubit_series(), two_qubit_series()).has_value());
  CHECK(compare(make({1, 1}), make({1, 2})) == Mismatch{1, 1, 2});
  CHECK_FALSE(compare(make({1, 1, 5}), make({1, 1})).has_value());
}

TEST_CASE("round trip between forms and numerators") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> degree(1, 6), count(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> num, den;
    for (int i = count(rng); i > 0; --i) num.push_back(degree(rng));
    for (int i = count(rng); i > 0; --i) den.push_back(degree(rng));
    const RationalForm f(num, den);
    const int d = 14;
    const Series numerator = numerator_for_denominator(expand(f, d), f.denominator_degrees, d);
    CHECK(numerator == expand(RationalForm(num, {}), d));
    // Re-expanding the numerator over the denominator restores the series.
    Series back = numerator;
    for (int b : f.denominator_degrees) back.divide_binomial(b, -1);
    CHECK(back == expand(f, d));
  }
}

TEST_CASE("search examples") {
  const auto one_free = search_candidates(make({1, 2, 2, 2, 2}), {.free_generators = 1});
  REQUIRE_FALSE(one_free.empty());
  CHECK(one_free[0].candidate == RationalForm({1}, {1}));
  CHECK(one_free[0].match_degree == 4);
  CHECK(one_free[0].numerator_factored);
  CHECK_FALSE(one_free[0].degree_one_anchored);

  const auto ones = search_candidates(make({1, 1, 1, 1, 1, 1}), {.free_generators = 1});
  REQUIRE_FALSE(ones.empty());
  CHECK(ones[0].candidate == RationalForm({}, {1}));
  CHECK(ones[0].degree_one_anchored);

  const auto qubit = search_candidates(make({1, 1, 2, 2, 3, 3, 4, 4, 5}), {.free_generators = 2});
  REQUIRE_FALSE(qubit.empty());
  CHECK(qubit[0].candidate == RationalForm({}, {1, 2}));
  CHECK(qubit[0].low_degrees_free);
}

TEST_CASE("search over the two-qubit series finds the paper-style denominator") {
  const auto reports = search_candidates(two_qubit_series(),
                                         {.free_generators = 9, .max_factor_degree = 9});
  const auto it = std::find_if(reports.begin(), reports.end(), [](const FitReport& r) {
    return r.candidate.denominator_degrees == kPaperDenominator;
  });
  REQUIRE(it != reports.end());
  CHECK(it->candidate.numerator_degrees == kPaperNumerator);
  CHECK(it->match_degree == 9);
  REQUIRE(it->first_mismatch.has_value());
  CHECK(*it->first_mismatch == Mismatch{10, 398, 396});
  CHECK_FALSE(it->numerator_factored);
  CHECK(it->candidate.total_invariant_count() == 21);

  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    CHECK(r.candidate.free_generator_count() == 9);
    CHECK(std::count(r.candidate.denominator_degrees.begin(), r.candidate.denominator_degrees.end(), 1) == 1);
    CHECK(r.numerator_nonnegative_through == 11);
    // Each report's match degree is what a fresh comparison says.
    const auto diff = compare(expand(r.candidate, 11), two_qubit_series());
    CHECK(r.first_mismatch == diff);
    CHECK(r.match_degree == (diff ? diff->degree - 1 : 11));
    if (i) {
      const auto& p = reports[i - 1];
      CHECK(p.match_degree >= r.match_degree);
      if (p.match_degree == r.match_degree) {
        CHECK(p.candidate.total_invariant_count() <= r.candidate.total_invariant_count());
      }
    }
  }
  CHECK(search_candidates(two_qubit_series(), {.free_generators = 9, .max_factor_degree = 9}).size() ==
        reports.size());
}

TEST_CASE("empty constraint boxes give empty results") {
  CHECK(search_candidates(make({1, 1, 1}), {.free_generators = 0}).empty());
  CHECK(search_candidates(make({1, 1, 1}), {.max_factor_degree = 0}).empty());
  CHECK(search_candidates(make({1, 5, 1}), {.free_generators = 1}).empty() == false);
  CHECK_THROWS_AS((void)search_candidates(make({2, 1}), {}), std::invalid_argument);
}

TEST_CASE("fit_denominator reports the raw numerator") {
  const FitReport r = fit_denominator(make({1, 2, 2, 2, 2}), {3});
  CHECK(r.numerator == make({1, 2, 2, 1, 0}));
  CHECK_FALSE(r.numerator_factored);
  CHECK(r.match_degree < 4);
}
