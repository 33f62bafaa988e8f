#include "invcensus/molien.hpp"

#include <algorithm>
#include <stdexcept>

namespace invcensus {

namespace {

std::size_t arity(const CensusProblem& p) { return static_cast<std::size_t>(p.n1() + p.n2()); }

// sum_{i,j} (x_i/x_j)^m over the block [offset, offset + size).
LaurentPoly block_power_sum(std::size_t variables, int offset, int size, int m) {
  LaurentPoly out(variables);
  LaurentPoly::Exponents e(variables, 0);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      std::fill(e.begin(), e.end(), 0);
      e[static_cast<std::size_t>(offset + i)] += m;
      e[static_cast<std::size_t>(offset + j)] -= m;
      out.add_term(e, 1);
    }
  }
  return out;
}

LaurentPoly block_weyl(std::size_t variables, int offset, int size) {
  LaurentPoly out = LaurentPoly::constant(variables, 1);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i == j) continue;
      LaurentPoly::Exponents e(variables, 0);
      e[static_cast<std::size_t>(offset + i)] = 1;
      e[static_cast<std::size_t>(offset + j)] = -1;
      LaurentPoly factor = LaurentPoly::constant(variables, 1);
      factor.add_term(e, -1);
      out = out * factor;
    }
  }
  return out;
}

void check_degree(int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (n > resource_limits().max_degree) {
    throw resource_limit_error("degree " + std::to_string(n) + " exceeds the configured limit " +
                               std::to_string(resource_limits().max_degree));
  }
}

// Fills h[0..n] by the Newton identity.
std::vector<LaurentPoly> newton(const CensusProblem& problem, int n) {
  const std::size_t vars = arity(problem);
  std::vector<LaurentPoly> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.emplace_back(vars);  // unused p_0
  for (int m = 1; m <= n; ++m) p.push_back(power_sum(problem, m));

  const int bound = std::max(problem.n1(), problem.n2());
  std::vector<LaurentPoly> h;
  h.reserve(static_cast<std::size_t>(n) + 1);
  h.push_back(LaurentPoly::constant(vars, 1));
  for (int k = 1; k <= n; ++k) {
    LaurentPoly acc(vars);
    for (int m = 1; m <= k; ++m) acc += p[static_cast<std::size_t>(m)] * h[static_cast<std::size_t>(k - m)];
    h.push_back(acc.exact_divided(k, "Newton recursion for h_n"));
    if (h.back().max_abs_exponent() > k * bound) {
      throw consistency_error("h_" + std::to_string(k) + " exceeds the exponent bound " +
                              std::to_string(k * bound));
    }
  }
  return h;
}

}  // namespace

LaurentPoly power_sum(const CensusProblem& problem, int m) {
  if (m < 1) throw std::invalid_argument("power_sum: m must be positive");
  const std::size_t vars = arity(problem);
  return block_power_sum(vars, 0, problem.n1(), m) *
         block_power_sum(vars, problem.n1(), problem.n2(), m);
}

LaurentPoly complete_homogeneous(const CensusProblem& problem, int n) {
  check_degree(n);
  return std::move(newton(problem, n).back());
}

LaurentPoly weyl_density(const CensusProblem& problem) {
  const std::size_t vars = arity(problem);
  return block_weyl(vars, 0, problem.n1()) * block_weyl(vars, problem.n1(), problem.n2());
}

Integer haar_constant_term(const LaurentPoly& f, const CensusProblem& problem) {
  if (f.variables() != arity(problem)) {
    throw std::invalid_argument("haar_constant_term: polynomial has " +
                                std::to_string(f.variables()) + " variables, problem needs " +
                                std::to_string(arity(problem)));
  }
  const Integer ct = f.constant_term_of_product(weyl_density(problem));
  return exact_divide(ct, factorial(problem.n1()) * factorial(problem.n2()), "Weyl integration");
}

Integer molien_coefficient(const CensusProblem& problem, int n) {
  return haar_constant_term(complete_homogeneous(problem, n), problem);
}

Series molien_series(const CensusProblem& problem, int max_degree) {
  check_degree(max_degree);
  const auto h = newton(problem, max_degree);
  const LaurentPoly density = weyl_density(problem);
  const Integer norm = factorial(problem.n1()) * factorial(problem.n2());
  Series out(max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    out[n] = exact_divide(h[static_cast<std::size_t>(n)].constant_term_of_product(density), norm,
                          "Weyl integration");
  }
  return out;
}

}  // namespace invcensus
