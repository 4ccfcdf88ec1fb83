#pragma once

#include <cstddef>
#include <vector>

#include "toricsplit/exact_linear.hpp"

namespace toricsplit {

using Cone = std::vector<std::size_t>;  // ray indices, 0-based, input order kept

// A codimension-one cone shared by two maximal cones, with the unique
// relation v[extra1] + v[extra2] + sum_k relation[k] * v[tau[k]] == 0.
struct Wall {
  std::vector<std::size_t> tau;  // sorted ray indices, size n - 1
  std::size_t sigma1 = 0;        // lower maximal-cone index
  std::size_t sigma2 = 0;
  std::size_t extra1 = 0;        // ray of sigma1 not in tau
  std::size_t extra2 = 0;        // ray of sigma2 not in tau
  IntVector relation;            // aligned with tau
};

// Complete nonsingular fan. Immutable once built by make_fan().
class Fan {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& max_cones() const noexcept { return cones_; }
  const IntVector& ray(std::size_t j) const { return rays_.at(j); }
  const Cone& cone(std::size_t c) const { return cones_.at(c); }
  std::size_t num_rays() const noexcept { return rays_.size(); }
  std::size_t num_cones() const noexcept { return cones_.size(); }

  // Walls in lexicographic order of their ray sets (computed once).
  const std::vector<Wall>& walls() const noexcept { return walls_; }

  // Dual basis of a maximal cone, aligned with the cone's ray order.
  const std::vector<IntVector>& dual_basis(std::size_t cone) const {
    return dual_.at(cone);
  }

  // Index of the maximal cone containing every ray in `rays`, or npos.
  std::size_t find_cone_with(const std::vector<std::size_t>& rays) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  friend Fan make_fan(std::size_t, std::vector<IntVector>, std::vector<Cone>);

  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::vector<std::vector<IntVector>> dual_;
  std::vector<Wall> walls_;
};

// Validates raw data and builds a Fan. Throws Error("fan", ...) for a
// non-primitive or repeated ray, a non-unimodular cone, a facet not shared by
// exactly two maximal cones, or overlapping cones (tested at the barycenter of
// every maximal cone).
Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones);

// Convenience: same as fan.walls().
const std::vector<Wall>& walls(const Fan& fan);

// Vectors e^1..e^n of M with <e^i, v_j> = delta_ij for the rays of `cone`.
std::vector<IntVector> dual_basis(const Fan& fan, std::size_t cone);

// The fan of CP^n: rays e_1..e_n, -(e_1+...+e_n); every n-subset is a cone.
Fan projective_space_fan(std::size_t n);

}  // namespace toricsplit
