#include <doctest.h>

#include "toricsplit/bundle_data.hpp"
#include "toricsplit/error.hpp"
#include "toricsplit/surface_graph.hpp"

using namespace toricsplit;

namespace {

IntVector iv(long x, long y) { return {Int(x), Int(y)}; }

bool has_problem(const std::vector<std::string>& problems, const std::string& prefix) {
  for (const auto& p : problems)
    if (p.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("tangent bundles validate") {
  CHECK(validate(tangent_bundle(graph_to_fan(cp2()))).empty());
  for (long a = 0; a <= 4; ++a) CHECK(validate(tangent_bundle(graph_to_fan(hirzebruch(a)))).empty());
  for (std::size_t n = 1; n <= 4; ++n) CHECK(validate(tangent_bundle(projective_space_fan(n))).empty());
}

TEST_CASE("tangent bundles of blowups validate") {
  for (std::size_t k = 0; k <= 5; ++k)
    for (const auto& g : enumerate_blowups(k)) CHECK(validate(tangent_bundle(graph_to_fan(g))).empty());
}

TEST_CASE("tangent weights are the dual bases") {
  Fan f = graph_to_fan(cp2());
  auto t = tangent_bundle(f);
  CHECK(t.weights(0) == std::vector<IntVector>{iv(0, 1), iv(1, 0)});
  CHECK(t.weights(1) == std::vector<IntVector>{iv(-1, 0), iv(-1, 1)});
}

TEST_CASE("cp2_rank2 weight systems") {
  auto e = cp2_rank2(1, 1, 1);
  CHECK(e.weights(0) == std::vector<IntVector>{iv(0, 1), iv(1, 0)});
  CHECK(e.weights(1) == std::vector<IntVector>{iv(-1, 0), iv(-1, 1)});
  CHECK(e.weights(2) == std::vector<IntVector>{iv(0, -1), iv(1, -1)});
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c) CHECK(validate(cp2_rank2(a, b, c)).empty());
  CHECK_THROWS_AS(cp2_rank2(0, 1, 1), Error);
}

TEST_CASE("perturbed weights break the net condition") {
  Fan f = graph_to_fan(cp2());
  std::vector<std::vector<IntVector>> w{{iv(1, 0), iv(0, 1)}, {iv(-1, 1), iv(-1, 0)},
                                        {iv(1, -1), iv(0, -1)}};
  std::map<std::pair<std::size_t, std::size_t>, RatMatrix> p;
  auto t = tangent_bundle(f);
  // Rebuild the tangent bundle by hand, then perturb one weight.
  w[1][0] = iv(-1, 2);
  for (std::size_t s2 = 0; s2 < 3; ++s2)
    for (std::size_t s1 = 0; s1 < 3; ++s1) {
      RatMatrix m(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          m(i, j) = Rational(dot(f.dual_basis(s2)[i], f.ray(f.cone(s1)[j])));
      p.emplace(std::make_pair(s2, s1), m);
    }
  auto problems = validate(make_bundle_data(f, 2, w, p));
  CHECK(has_problem(problems, "net: wall {2}"));
}

TEST_CASE("identity pastings with mismatched weights violate support") {
  Fan f = graph_to_fan(cp2());
  std::vector<std::vector<IntVector>> w{{iv(1, 0), iv(0, 1)}, {iv(-1, 1), iv(-1, 0)},
                                        {iv(1, -1), iv(0, -1)}};
  auto problems = validate(make_bundle_data(f, 2, w, {}));
  CHECK(has_problem(problems, "support:"));
}

TEST_CASE("cocycle violations are named") {
  Fan f = graph_to_fan(cp2());
  std::vector<std::vector<IntVector>> w(3, {iv(0, 0)});
  std::map<std::pair<std::size_t, std::size_t>, RatMatrix> p{
      {{1, 0}, RatMatrix{{2}}}, {{2, 1}, RatMatrix{{1}}}, {{2, 0}, RatMatrix{{1}}}};
  auto problems = validate(make_bundle_data(f, 1, w, p));
  CHECK(has_problem(problems, "cocycle:"));
  CHECK_FALSE(has_problem(problems, "net:"));
}

TEST_CASE("shape errors throw") {
  Fan f = graph_to_fan(cp2());
  CHECK_THROWS_AS(make_bundle_data(f, 2, {{iv(0, 0)}, {iv(0, 0)}, {iv(0, 0)}}, {}), Error);
  CHECK_THROWS_AS(make_bundle_data(f, 1, {{iv(0, 0)}, {iv(0, 0)}}, {}), Error);
}

TEST_CASE("euler specs") {
  auto spec = euler_cpn(2, {1, 2, 3});
  CHECK(spec.divisors.size() == 3);
  CHECK_NOTHROW(check_euler_spec(spec));
  auto bad = spec;
  bad.sections[0] = IntVector{0, 1, 0};  // z_2 is in the class of D_2, not 1*D_1.
  CHECK_NOTHROW(check_euler_spec(bad));  // all D(v) are linearly equivalent on CP^2
  bad.sections[0] = IntVector{0, 2, 0};
  CHECK_THROWS_AS(check_euler_spec(bad), Error);
  CHECK_NOTHROW(check_euler_spec(euler_hirzebruch(2, {1, 2, 3, 4})));
}
