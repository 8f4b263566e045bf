#pragma once

#include <functional>
#include <vector>

#include "pfq/qmatrix.hpp"

namespace pfq {

/// Visit every strictly increasing m-subset of {0,...,n-1} in lexicographic
/// order.
void for_each_subset(int n, int m, const std::function<void(const std::vector<int>&)>& fn);

struct CauchyBinetSides {
    cplx lhs;  // Det_M(C* C)       resp. Det_M(C* Lambda C)
    cplx rhs;  // sum of subset Det_M((C^I)* C^I), weighted in the Lambda case
};

/// Both sides of Det_M(C*C) = sum_I Det_M((C^I)* C^I) for an n x m matrix C,
/// n >= m. Both Gram matrices are self-dual, so both sides go through the
/// Pfaffian route. Subset terms accumulate in lexicographic order.
CauchyBinetSides cauchy_binet_sides(const QuaternionMatrix& c);

/// Weighted corollary: lhs = Det_M(C* Lambda C) with Lambda = diag(lambda),
/// rhs = sum_I lambda_{i1}...lambda_{im} Det_M((C^I)* C^I).
CauchyBinetSides cauchy_binet_weighted_sides(const QuaternionMatrix& c, const std::vector<cplx>& lambda);

}  // namespace pfq
