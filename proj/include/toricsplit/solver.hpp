#pragma once

#include <string>
#include <vector>

#include "toricsplit/intersection.hpp"
#include "toricsplit/splitting.hpp"

namespace toricsplit {

// Default: every column of R' is all >= 0 or all < 0. Strict: all > 0,
// all == 0 or all < 0.
enum class Strictness { Default, Strict };

struct SplittingType {
  std::size_t permutation_id = 0;       // index of R' in search order
  IntMatrix r_prime;                    // I x r, Q x == r_prime
  IntMatrix x;                          // J x r, particular solution
  std::vector<IntVector> canonical;     // reduced columns, sorted
  std::vector<SignClass> sign_classes;  // aligned with x's columns

  friend bool operator<(const SplittingType& a, const SplittingType& b) {
    return a.canonical < b.canonical;
  }
};

// All splitting types of a bundle with splitting system xi. An empty result
// means the bundle admits none. Throws Error("solver") if the kernel of Q is
// not the principal-divisor lattice.
std::vector<SplittingType> find_splitting_types(const Fan& fan, const IntMatrix& q,
                                                const SplittingSystem& xi,
                                                Strictness strictness = Strictness::Default);

// Whether a column with Q-image `image` passes the sign rule.
bool column_sign_ok(const IntVector& image, Strictness strictness);

// x minus the principal divisor that zeroes a fixed unimodular ray subset:
// the last n rays if they span a smooth cone, otherwise the first such
// subset in lexicographic order.
IntVector canonical_class_rep(const IntVector& x, const Fan& fan);

// Rays whose coordinates canonical_class_rep() zeroes.
std::vector<std::size_t> reduction_rays(const Fan& fan);

}  // namespace toricsplit
