#pragma once

#include <vector>

#include "toricsplit/exact_linear.hpp"

namespace toricsplit {

// Entry coeff * z^exponent of a monomial transition matrix.
struct Monomial {
  Rational coeff;
  long exponent = 0;
};
using MonomialMatrix = std::vector<std::vector<Monomial>>;

// Splitting degrees of the bundle on P^1 glued by T (rows chart2), found
// independently of bootstrap() from dimensions of twisted section spaces.
// Sections are f in C[1/z]^r with T z^k f in C[z]^r; a line bundle z^d has
// degree d. The degree window starts at r * max|exponent| and doubles up to
// 4 times before Error("oracle") is thrown.
std::vector<Int> h0_oracle(const MonomialMatrix& t);

// dim of the twisted section space above, truncating poles at order
// max_pole. Exposed for testing.
long twisted_sections(const MonomialMatrix& t, long k, long max_pole);

// T_ij = A_ij z^{chart1_j - chart2_i}.
MonomialMatrix block_transition(const std::vector<Int>& chart1, const std::vector<Int>& chart2,
                                const RatMatrix& pasting);

}  // namespace toricsplit
