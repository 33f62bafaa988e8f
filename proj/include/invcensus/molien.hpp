#pragma once

#include "invcensus/census.hpp"
#include "invcensus/laurent.hpp"
#include "invcensus/series.hpp"

namespace invcensus {

// Torus variables are ordered a_1..a_N1, b_1..b_N2. The adjoint action on rho
// has eigenvalues (a_i/a_j)(b_k/b_l); everything below is a polynomial in them.

/// Trace of g^m on the rho-space: (sum_ij (a_i/a_j)^m)(sum_kl (b_k/b_l)^m).
LaurentPoly power_sum(const CensusProblem& problem, int m);

/// h_n of the eigenvalue multiset, i.e. the character of the n-th symmetric
/// power, from the Newton identity n h_n = sum_{m=1..n} p_m h_{n-m}.
LaurentPoly complete_homogeneous(const CensusProblem& problem, int n);

/// Weyl measure prod_{i != j}(1 - a_i/a_j) * prod_{k != l}(1 - b_k/b_l).
LaurentPoly weyl_density(const CensusProblem& problem);

/// Haar average of a class function: CT[f * weyl_density] / (N1! N2!).
/// Throws consistency_error if the division is inexact. Negative results
/// are returned as computed.
Integer haar_constant_term(const LaurentPoly& f, const CensusProblem& problem);

/// Multiplicity of the trivial representation in the n-th symmetric power.
Integer molien_coefficient(const CensusProblem& problem, int n);

/// [P_0, ..., P_D], sharing the Newton recursion across degrees.
Series molien_series(const CensusProblem& problem, int max_degree);

}  // namespace invcensus
