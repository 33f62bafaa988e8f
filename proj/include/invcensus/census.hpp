#pragma once

#include "invcensus/integer.hpp"
#include "invcensus/series.hpp"

namespace invcensus {

/// Local unitary invariants of an N1 x N2 bipartite density matrix.
class CensusProblem {
public:
  /// Throws std::invalid_argument unless both dimensions are >= 1.
  CensusProblem(int n1, int n2);

  [[nodiscard]] int n1() const noexcept { return n1_; }
  [[nodiscard]] int n2() const noexcept { return n2_; }
  /// Maximum number of parts of the intermediate partition sigma: min(N1^2, N2^2).
  [[nodiscard]] int sigma_bound() const noexcept;

  friend bool operator==(const CensusProblem&, const CensusProblem&) = default;

private:
  int n1_;
  int n2_;
};

/// F_n: the number of linearly independent degree-n invariants, summing
/// pair_weight(kappa, lambda, sigma_bound) over kappa with <= N1 parts and
/// lambda with <= N2 parts.
Integer invariant_count(const CensusProblem& problem, int n);

/// [F_0, ..., F_D].
Series generating_series(const CensusProblem& problem, int max_degree);

}  // namespace invcensus
