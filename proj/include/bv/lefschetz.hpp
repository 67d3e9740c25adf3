#pragma once

#include <vector>

#include "bv/invariants.hpp"

namespace bv {

// chi(Fix(alpha_S^power)) for 1 <= power < order.
struct ChiConstraint {
  int power = 1;
  int chi = 0;
  friend bool operator==(const ChiConstraint&, const ChiConstraint&) = default;
};

// Sum of lambda^power over each eigenvalue class (r, m[, d2[, d3]]) of the order.
std::vector<int> trace_coeffs(Order order, int power);

// Every EigenspaceDims with r >= 1, m >= 1 satisfying 2 + trace(alpha^j) = chi for each
// constraint and the dimension identity. Sorted lexicographically by (r, m, d2, d3).
std::vector<EigenspaceDims> solve(Order order, const std::vector<ChiConstraint>& constraints);

// chi(Fix(alpha^power)) implied by the dimensions, i.e. 2 + trace.
int lefschetz_chi(const EigenspaceDims& dims, int power);

}  // namespace bv
