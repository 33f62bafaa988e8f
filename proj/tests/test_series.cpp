#include "doctest.h"

#include "invcensus/series.hpp"

using namespace invcensus;

namespace {
Series make(std::initializer_list<int> c) {
  std::vector<Integer> v;
  for (int x : c) v.emplace_back(x);
  return Series(std::move(v));
}
}  // namespace

TEST_CASE("series arithmetic truncates to the shorter operand") {
  const Series a = make({1, 2, 3, 4});
  const Series b = make({1, -1, 0});
  CHECK((a + b) == make({2, 1, 3}));
  CHECK((a - b) == make({0, 3, 3}));
  CHECK((a * b) == make({1, 1, 1}));
  CHECK_THROWS_AS(Series(std::vector<Integer>{}), std::invalid_argument);
  CHECK_THROWS_AS(Series(-1), std::invalid_argument);
}

TEST_CASE("binomial multiply and divide are inverse") {
  Series s = make({1, 3, 0, -2, 5, 7, 1});
  const Series original = s;
  s.multiply_binomial(2, -1);
  s.divide_binomial(2, -1);
  CHECK(s == original);
  s.multiply_binomial(3, +1);
  CHECK(s == make({1, 3, 0, -1, 8, 7, -1}));
  s.divide_binomial(3, +1);
  CHECK(s == original);
}

TEST_CASE("division by a unit constant term") {
  const Series one_minus_x = make({1, -1, 0, 0, 0});
  CHECK(Series::one(4).divided_by(one_minus_x) == make({1, 1, 1, 1, 1}));
  CHECK(make({-1, 1, 0}).divided_by(make({-1, 0, 0})) == make({1, -1, 0}));
  CHECK_THROWS_AS((void)Series::one(3).divided_by(make({2, 1, 0, 0})), std::invalid_argument);

  const Series f = make({1, 1, 4, 6, 16, 23});
  const Series g = make({1, -2, 5, 0, 1, 9});
  CHECK((f * g).divided_by(g) == f);
}

TEST_CASE("rendering") {
  CHECK(format_series(make({1, 1, 4, 6})) == "1 + q + 4 q^2 + 6 q^3 + O(q^4)");
  CHECK(format_series(make({1, 0, -2, 1}), "x") == "1 - 2 x^2 + x^3 + O(x^4)");
  CHECK(format_series(make({0, 0}), "z") == "0 + O(z^2)");
}
