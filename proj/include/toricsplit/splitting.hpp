#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricsplit/bundle_data.hpp"
#include "toricsplit/intersection.hpp"

namespace toricsplit {

// One Stab(x_tau)-weight block of E restricted to V(tau). The pasting has
// rows indexed by chart2 weights and columns by chart1 weights; within the
// block chart1 weights are non-increasing and chart2 weights non-decreasing.
struct WallBlock {
  IntVector key;  // pairings of the weight with the rays of tau
  std::vector<Int> chart1_weights;
  std::vector<Int> chart2_weights;
  RatMatrix pasting;
};

struct WallRestriction {
  Wall wall;
  IntVector tau_perp;  // generator of sigma1^dual cut with tau^perp
  IntVector v_sigma1;  // <tau_perp, v_sigma1> == 1
  std::vector<WallBlock> blocks;
};

// Restriction to the wall with the given index in fan.walls(). v_sigma1
// defaults to the extra ray of sigma1; any N-vector with pairing 1 against
// tau_perp is accepted and only shifts all T^1 weights by a constant.
WallRestriction restrict(const KaneyamaBundleData& data, std::size_t wall_index,
                         const std::optional<IntVector>& v_sigma1 = std::nullopt);

// Splitting degrees of one block (non-increasing). Throws Error("bundle")
// for a singular or mis-shaped pasting.
std::vector<Int> bootstrap(const std::vector<Int>& chart1, const std::vector<Int>& chart2,
                           const RatMatrix& pasting);

// Sum of chart1 weights minus sum of chart2 weights over all blocks; equals
// the total splitting degree on the wall.
Int weight_difference_total(const WallRestriction& restriction);

// One non-increasing degree tuple per wall, in fan wall order.
struct SplittingSystem {
  std::vector<std::vector<Int>> degrees;

  std::size_t size() const noexcept { return degrees.size(); }
  friend bool operator==(const SplittingSystem&, const SplittingSystem&) = default;
};

SplittingSystem splitting_system(const KaneyamaBundleData& data);

// Xi of E tensor L where L has ray-coefficient class x: every degree on
// wall i moves by (Q x)_i.
SplittingSystem twist(const SplittingSystem& xi, const IntMatrix& q, const IntVector& x);

// Xi for a bundle given by an Euler-type sequence. Throws
// Error("bundle", "eta restriction not in scope ...") when on some wall no
// section restricts to a nonzero constant and the sections are not pure
// powers of two distinct coordinates.
SplittingSystem euler_splitting_system(const EulerBundleSpec& spec, const IntMatrix& q);

// "tau(i): d1 d2 ..." per line, i 1-based.
std::string to_string(const SplittingSystem& xi);
SplittingSystem parse_splitting_system(const std::string& text);

}  // namespace toricsplit
