#include "invcensus/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "invcensus/kronecker.hpp"
#include "invcensus/parallel.hpp"
#include "invcensus/partition.hpp"

namespace invcensus {

CensusProblem::CensusProblem(int n1, int n2) : n1_(n1), n2_(n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("subsystem dimensions must be at least 1");
}

int CensusProblem::sigma_bound() const noexcept { return std::min(n1_ * n1_, n2_ * n2_); }

namespace {

void check_degree(int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (n > resource_limits().max_degree) {
    throw resource_limit_error("degree " + std::to_string(n) + " exceeds the configured limit " +
                               std::to_string(resource_limits().max_degree));
  }
}

}  // namespace

// n_{kappa,lambda} = <m_kappa, m_lambda> with m_p[sigma] = g(p, p, sigma) restricted
// to the admissible sigma, so each self-product is expanded once per shape.
Integer invariant_count(const CensusProblem& problem, int n) {
  check_degree(n);
  const auto sigmas = partitions_of(n, problem.sigma_bound());
  const auto kappas = partitions_of(n, problem.n1());
  const auto lambdas = partitions_of(n, problem.n2());

  std::vector<Partition> shapes = kappas;
  for (const auto& l : lambdas) {
    if (std::find(shapes.begin(), shapes.end(), l) == shapes.end()) shapes.push_back(l);
  }
  std::vector<std::vector<Integer>> mult(shapes.size());
  parallel_for(shapes.size(), [&](std::size_t i) {
    const SchurExpansion e = inner_product_expansion(shapes[i], shapes[i]);
    auto& row = mult[i];
    row.reserve(sigmas.size());
    for (const auto& s : sigmas) row.push_back(e.multiplicity(s));
  });
  auto row_of = [&](const Partition& p) -> const std::vector<Integer>& {
    return mult[static_cast<std::size_t>(std::find(shapes.begin(), shapes.end(), p) - shapes.begin())];
  };

  Integer total = 0;
  for (const auto& k : kappas) {
    const auto& mk = row_of(k);
    for (const auto& l : lambdas) {
      const auto& ml = row_of(l);
      for (std::size_t s = 0; s < sigmas.size(); ++s) total += mk[s] * ml[s];
    }
  }
  return total;
}

Series generating_series(const CensusProblem& problem, int max_degree) {
  check_degree(max_degree);
  Series out(max_degree);
  for (int n = 0; n <= max_degree; ++n) out[n] = invariant_count(problem, n);
  return out;
}

}  // namespace invcensus
