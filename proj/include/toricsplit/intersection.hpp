#pragma once

#include <string>
#include <vector>

#include "toricsplit/fan.hpp"

namespace toricsplit {

// Q[i][j] = V(tau_i) . D(v_j): row i is the coefficient vector of wall i's
// relation (1 at both extra rays, relation[k] at tau[k], 0 elsewhere).
struct AugmentedIntersectionMatrix {
  IntMatrix q;
  std::vector<Wall> walls;  // row order
  std::size_t num_rays = 0;  // column order is the fan's ray order
};

AugmentedIntersectionMatrix augmented_matrix(const Fan& fan);

enum class SignClass { Positive, Nef, Zero, Negative, Mixed };

const char* to_string(SignClass c);

// Classifies Q * x. Throws Error("dimension") if x has the wrong length.
SignClass sign_of_class(const IntMatrix& q, const IntVector& x);
// Same, for an already computed image Q * x.
SignClass sign_of_image(const IntVector& image);

// Columns (<m, v_1>, ..., <m, v_J>) for m running over the standard basis of M.
std::vector<IntVector> principal_columns(const Fan& fan);

}  // namespace toricsplit
