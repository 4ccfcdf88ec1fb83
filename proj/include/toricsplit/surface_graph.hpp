#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "toricsplit/fan.hpp"

namespace toricsplit {

// Circular weight sequence (a_1, ..., a_s) of a smooth complete toric
// surface. Weights follow v_{i-1} + v_{i+1} + a_i v_i = 0, so a_i is the
// self-intersection of D(v_i): CP^2 is (1,1,1) and an exceptional curve
// has weight -1.
struct WeightedCircularGraph {
  std::vector<std::int64_t> weights;

  std::size_t size() const noexcept { return weights.size(); }
  std::int64_t weight_sum() const;

  friend auto operator<=>(const WeightedCircularGraph&,
                          const WeightedCircularGraph&) = default;
};

WeightedCircularGraph cp2();
WeightedCircularGraph hirzebruch(std::int64_t a);

// Blow up the torus-fixed point between positions i and i+1 (1-based,
// circular): a weight -1 is inserted there and both neighbours drop by one.
WeightedCircularGraph blowup(const WeightedCircularGraph& g, std::size_t i);

// Lexicographically smallest sequence among the 2s rotations/reflections.
WeightedCircularGraph canonical_form(const WeightedCircularGraph& g);

// All 2s dihedral images, rotations first, then rotations of the reversal.
// Image t maps position p of g to position perm[t][p] of images[t].
struct DihedralImages {
  std::vector<WeightedCircularGraph> images;
  std::vector<std::vector<std::size_t>> perm;
};
DihedralImages dihedral_images(const WeightedCircularGraph& g);

// Canonical graphs reachable from cp2() by exactly k blowups.
std::set<WeightedCircularGraph> enumerate_blowups(std::size_t k);

// Same, returning every level 0..k. Each level is deduplicated by
// canonical form; `threads` > 1 splits each frontier across workers.
std::vector<std::set<WeightedCircularGraph>> enumerate_blowup_levels(
    std::size_t k, unsigned threads = 1);

// Rays v_1 = (1,0), v_2 = (0,1), v_{i+1} = -v_{i-1} - a_i v_i, cones
// {v_i, v_{i+1}}. Throws Error("graph", "inconsistent weight sequence ...")
// if the rays do not close up into a complete smooth fan.
Fan graph_to_fan(const WeightedCircularGraph& g);

std::string to_string(const WeightedCircularGraph& g);
// Parses "a1,a2,...". Accepts optional spaces and parentheses.
WeightedCircularGraph parse_graph(const std::string& text);

}  // namespace toricsplit
