#pragma once

#include <functional>
#include <map>

#include "invcensus/integer.hpp"
#include "invcensus/partition.hpp"

namespace invcensus {

/// Decomposition of an inner product into irreducibles: partition -> positive
/// multiplicity, iterated in canonical (reverse-lexicographic) order.
struct SchurExpansion {
  int weight = 0;
  std::map<Partition, Integer, std::greater<>> terms;

  [[nodiscard]] Integer multiplicity(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Integer(0) : it->second;
  }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

/// Multiplicity g(lambda, mu, nu) of nu in lambda o mu, by the class sum
/// sum_rho chi^lambda chi^mu chi^nu / z_rho. Throws std::invalid_argument on
/// weight mismatch and consistency_error if the class sum is not integral.
Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// lambda o mu = sum_nu g(lambda, mu, nu) {nu}.
SchurExpansion inner_product_expansion(const Partition& lambda, const Partition& mu);

/// n_{kappa,lambda} = sum over sigma with at most part_bound parts of
/// g(kappa, kappa, sigma) * g(lambda, lambda, sigma).
Integer pair_weight(const Partition& kappa, const Partition& lambda, int part_bound);

/// Renders "{6,2}" style labels and "2{5,2,1}" style terms.
std::string format_expansion(const SchurExpansion& e);

}  // namespace invcensus
