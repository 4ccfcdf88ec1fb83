#include "toricsplit/fan.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "toricsplit/error.hpp"

namespace toricsplit {

namespace {

std::string cone_name(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i] + 1);
  }
  return s + "}";
}

IntMatrix ray_matrix(const std::vector<IntVector>& rays, const Cone& cone) {
  std::vector<IntVector> rows;
  rows.reserve(cone.size());
  for (auto j : cone) rows.push_back(rays[j]);
  return IntMatrix::from_rows(rows, rays.front().size());
}

// Rows of (V^T)^{-1}; requires |det V| == 1.
std::vector<IntVector> compute_dual_basis(const std::vector<IntVector>& rays,
                                          const Cone& cone) {
  IntMatrix v = ray_matrix(rays, cone);
  auto inv = inverse(to_rational(v.transpose()));
  auto e = inv ? to_integer(*inv) : std::nullopt;
  if (!e) throw Error("fan", "cone " + cone_name(cone) + " is not unimodular");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < e->rows(); ++i) out.push_back(e->row(i));
  return out;
}

}  // namespace

std::size_t Fan::find_cone_with(const std::vector<std::size_t>& rays) const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const Cone& cone = cones_[c];
    bool all = std::all_of(rays.begin(), rays.end(), [&](std::size_t j) {
      return std::find(cone.begin(), cone.end(), j) != cone.end();
    });
    if (all) return c;
  }
  return npos;
}

Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones) {
  if (dim == 0) throw Error("fan", "dimension must be at least 1");
  if (rays.empty()) throw Error("fan", "no rays");
  if (max_cones.empty()) throw Error("fan", "no maximal cones");

  for (std::size_t j = 0; j < rays.size(); ++j) {
    if (rays[j].size() != dim) {
      throw Error("fan", "ray " + std::to_string(j + 1) + " has " +
                             std::to_string(rays[j].size()) + " coordinates, expected " +
                             std::to_string(dim));
    }
    if (!is_primitive(rays[j])) {
      throw Error("fan", "ray " + std::to_string(j + 1) + " (" + to_string(rays[j]) +
                             ") is not primitive");
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (rays[k] == rays[j]) {
        throw Error("fan", "rays " + std::to_string(k + 1) + " and " +
                               std::to_string(j + 1) + " coincide");
      }
    }
  }

  std::vector<bool> used(rays.size(), false);
  for (const Cone& cone : max_cones) {
    if (cone.size() != dim) {
      throw Error("fan", "cone " + cone_name(cone) + " has " + std::to_string(cone.size()) +
                             " rays, expected " + std::to_string(dim));
    }
    for (auto j : cone) {
      if (j >= rays.size()) throw Error("fan", "cone " + cone_name(cone) + " references a missing ray");
      used[j] = true;
    }
    Cone sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("fan", "cone " + cone_name(cone) + " repeats a ray");
    }
    Int det = determinant(ray_matrix(rays, cone));
    if (abs(det) != 1) {
      throw Error("fan", "cone " + cone_name(cone) + " is not unimodular (det " + det.get_str() +
                             "); the fan is not smooth");
    }
  }
  for (std::size_t j = 0; j < rays.size(); ++j) {
    if (!used[j]) throw Error("fan", "ray " + std::to_string(j + 1) + " lies in no maximal cone");
  }
  for (std::size_t a = 0; a < max_cones.size(); ++a) {
    Cone sa = max_cones[a];
    std::sort(sa.begin(), sa.end());
    for (std::size_t b = a + 1; b < max_cones.size(); ++b) {
      Cone sb = max_cones[b];
      std::sort(sb.begin(), sb.end());
      if (sa == sb) throw Error("fan", "cone " + cone_name(max_cones[a]) + " is listed twice");
    }
  }

  // Every facet must be shared by exactly two maximal cones.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;
  for (std::size_t c = 0; c < max_cones.size(); ++c) {
    for (std::size_t drop = 0; drop < dim; ++drop) {
      std::vector<std::size_t> f;
      for (std::size_t k = 0; k < dim; ++k)
        if (k != drop) f.push_back(max_cones[c][k]);
      std::sort(f.begin(), f.end());
      facets[f].push_back(c);
    }
  }
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) {
      throw Error("fan", "facet " + cone_name(facet) + " lies in " + std::to_string(owners.size()) +
                             " maximal cone(s), expected 2; the fan is not complete");
    }
  }

  Fan fan;
  fan.dim_ = dim;
  fan.rays_ = std::move(rays);
  fan.cones_ = std::move(max_cones);
  for (const Cone& cone : fan.cones_) fan.dual_.push_back(compute_dual_basis(fan.rays_, cone));

  // The barycenter of each maximal cone must avoid every other maximal cone.
  for (std::size_t c = 0; c < fan.cones_.size(); ++c) {
    IntVector p(dim);
    for (auto j : fan.cones_[c])
      for (std::size_t k = 0; k < dim; ++k) p[k] += fan.rays_[j][k];
    for (std::size_t o = 0; o < fan.cones_.size(); ++o) {
      if (o == c) continue;
      bool inside = std::all_of(fan.dual_[o].begin(), fan.dual_[o].end(),
                                [&](const IntVector& e) { return sgn(dot(e, p)) >= 0; });
      if (inside) {
        throw Error("fan", "cones " + cone_name(fan.cones_[c]) + " and " +
                               cone_name(fan.cones_[o]) + " overlap");
      }
    }
  }

  for (const auto& [facet, owners] : facets) {
    Wall w;
    w.tau = facet;
    w.sigma1 = std::min(owners[0], owners[1]);
    w.sigma2 = std::max(owners[0], owners[1]);
    auto extra_of = [&](std::size_t c) {
      for (auto j : fan.cones_[c])
        if (!std::binary_search(facet.begin(), facet.end(), j)) return j;
      return Fan::npos;
    };
    w.extra1 = extra_of(w.sigma1);
    w.extra2 = extra_of(w.sigma2);

    // Coordinates of -(v_extra1 + v_extra2) in the ray basis of sigma1.
    IntVector target(dim);
    for (std::size_t k = 0; k < dim; ++k)
      target[k] = -(fan.rays_[w.extra1][k] + fan.rays_[w.extra2][k]);
    const Cone& s1 = fan.cones_[w.sigma1];
    const auto& e = fan.dual_[w.sigma1];
    for (std::size_t pos = 0; pos < dim; ++pos) {
      if (s1[pos] == w.extra1 && sgn(dot(e[pos], target)) != 0) {
        throw Error("fan", "cones " + cone_name(s1) + " and " +
                               cone_name(fan.cones_[w.sigma2]) + " lie on the same side of " +
                               cone_name(facet));
      }
    }
    for (auto j : w.tau) {
      auto pos = std::find(s1.begin(), s1.end(), j) - s1.begin();
      w.relation.push_back(dot(e[pos], target));
    }
    fan.walls_.push_back(std::move(w));
  }
  // std::map iteration already yields lexicographic order of tau.
  return fan;
}

const std::vector<Wall>& walls(const Fan& fan) { return fan.walls(); }

std::vector<IntVector> dual_basis(const Fan& fan, std::size_t cone) {
  return fan.dual_basis(cone);
}

Fan projective_space_fan(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n);
    v[i] = 1;
    rays.push_back(v);
  }
  rays.push_back(IntVector(n, Int(-1)));
  std::vector<Cone> cones;
  // Every n-subset of the n+1 rays, in lexicographic order.
  for (std::size_t skip = n + 1; skip-- > 0;) {
    Cone c;
    for (std::size_t j = 0; j <= n; ++j)
      if (j != skip) c.push_back(j);
    cones.push_back(c);
  }
  return make_fan(n, std::move(rays), std::move(cones));
}

}  // namespace toricsplit
