#include <doctest.h>
#include <algorithm>

#include "toricsplit/error.hpp"
#include "toricsplit/surface_graph.hpp"

using namespace toricsplit;

namespace {

WeightedCircularGraph g(std::vector<std::int64_t> w) { return {std::move(w)}; }

IntVector iv(long x, long y) { return {Int(x), Int(y)}; }

}  // namespace

TEST_CASE("basic surfaces") {
  CHECK(cp2() == g({1, 1, 1}));
  CHECK(hirzebruch(0) == g({0, 0, 0, 0}));
  CHECK(hirzebruch(2) == g({0, 2, 0, -2}));
  CHECK(cp2().weight_sum() == 12 - 3 * 3);
  CHECK(hirzebruch(5).weight_sum() == 0);
}

TEST_CASE("graph_to_fan recurrence") {
  Fan f = graph_to_fan(cp2());
  CHECK(f.rays() == std::vector<IntVector>{iv(1, 0), iv(0, 1), iv(-1, -1)});
  for (long a = 0; a <= 3; ++a) {
    Fan h = graph_to_fan(hirzebruch(a));
    CHECK(h.rays() == std::vector<IntVector>{iv(1, 0), iv(0, 1), iv(-1, -a), iv(0, -1)});
  }
  try {
    graph_to_fan(g({1, 1, 1, 1}));
    FAIL("expected closure failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("inconsistent weight sequence") != std::string::npos);
  }
}

TEST_CASE("blowups") {
  CHECK(canonical_form(blowup(cp2(), 1)) == canonical_form(hirzebruch(1)));
  CHECK(canonical_form(blowup(hirzebruch(0), 1)) == canonical_form(g({-1, -1, -1, 0, 0})));
  // Blow up the three corners of CP^2 one after another.
  auto x = blowup(cp2(), 1);  // (0,-1,0,1) style, corners now at 2..3, 3..1
  x = blowup(x, 3);
  x = blowup(x, 5);
  CHECK(canonical_form(x) == g({-1, -1, -1, -1, -1, -1}));
  CHECK(x.weight_sum() == 12 - 3 * 6);
}

TEST_CASE("blowup is a star subdivision") {
  auto base = g({0, 2, 0, -2});
  Fan f = graph_to_fan(base);
  // Position 1 would move v_2, which graph_to_fan pins to (0,1).
  for (std::size_t i = 2; i <= base.size(); ++i) {
    Fan b = graph_to_fan(blowup(base, i));
    // Ray i+1 of the blowup is v_i + v_{i+1}; the others keep their order.
    const auto& vi = f.ray(i - 1);
    const auto& vj = f.ray(i % base.size());
    CHECK(b.ray(i) == IntVector{vi[0] + vj[0], vi[1] + vj[1]});
  }
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(g({0, 1, 0, -1})) == canonical_form(g({0, -1, 0, 1})));
  CHECK(canonical_form(cp2()) == cp2());
  auto w = g({-1, -2, -1, -2, -1, -2, -1, -2});
  auto rotated = g({-1, -2, -1, -2, -1, -2, -1, -2});
  std::rotate(rotated.weights.begin(), rotated.weights.begin() + 2, rotated.weights.end());
  CHECK(rotated == w);
  CHECK(canonical_form(canonical_form(w)) == canonical_form(w));
  for (const auto& img : dihedral_images(g({3, -1, 0, 2, -4})).images)
    CHECK(canonical_form(img) == canonical_form(g({3, -1, 0, 2, -4})));
}

TEST_CASE("dihedral image permutations") {
  auto base = g({5, 1, 2, 3});
  auto d = dihedral_images(base);
  REQUIRE(d.images.size() == 8);
  for (std::size_t t = 0; t < 8; ++t)
    for (std::size_t p = 0; p < 4; ++p) CHECK(d.images[t].weights[d.perm[t][p]] == base.weights[p]);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_blowups(0) == std::set<WeightedCircularGraph>{cp2()});
  CHECK(enumerate_blowups(1).size() == 1);
  CHECK(enumerate_blowups(3).count(g({-1, -1, -1, -1, -1, -1})) == 1);
  auto levels = enumerate_blowup_levels(7);
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (const auto& x : levels[k]) {
      CHECK(x.weight_sum() == 12 - 3 * static_cast<std::int64_t>(x.size()));
      CHECK(canonical_form(x) == x);
    }
  CHECK(enumerate_blowup_levels(6, 3) == enumerate_blowup_levels(6, 1));
}

TEST_CASE("enumeration is independent of blowup order") {
  // Build level 3 by blowing up positions in reverse order.
  std::set<WeightedCircularGraph> level{cp2()};
  for (int k = 0; k < 3; ++k) {
    std::set<WeightedCircularGraph> next;
    for (const auto& x : level)
      for (std::size_t i = x.size(); i >= 1; --i) next.insert(canonical_form(blowup(x, i)));
    level = next;
  }
  CHECK(level == enumerate_blowups(3));
}

TEST_CASE("parse_graph") {
  CHECK(parse_graph("0,2,0,-2") == hirzebruch(2));
  CHECK(parse_graph("(1, 1, 1)") == cp2());
  CHECK_THROWS_AS(parse_graph("1,,1"), Error);
  CHECK_THROWS_AS(parse_graph("1,x,1"), Error);
  CHECK(to_string(hirzebruch(2)) == "0,2,0,-2");
}
