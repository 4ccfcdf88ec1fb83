#include <algorithm>

#include "toricsplit/error.hpp"
#include "toricsplit/splitting.hpp"

namespace toricsplit {

namespace {

enum class Restriction { Vanishes, Constant, PowerOfExtra1, PowerOfExtra2, Mixed };

// How the Cox monomial z^alpha restricts to V(tau).
Restriction classify(const IntVector& alpha, const Wall& w) {
  for (auto j : w.tau)
    if (sgn(alpha[j]) > 0) return Restriction::Vanishes;
  bool e1 = sgn(alpha[w.extra1]) > 0;
  bool e2 = sgn(alpha[w.extra2]) > 0;
  if (e1 && e2) return Restriction::Mixed;
  if (e1) return Restriction::PowerOfExtra1;
  if (e2) return Restriction::PowerOfExtra2;
  return Restriction::Constant;
}

}  // namespace

SplittingSystem euler_splitting_system(const EulerBundleSpec& spec, const IntMatrix& q) {
  check_euler_spec(spec);
  const auto& walls = spec.fan.walls();
  if (q.rows() != walls.size() || q.cols() != spec.fan.num_rays()) {
    throw Error("dimension", "Q does not match the fan");
  }
  SplittingSystem xi;
  const std::size_t count = spec.divisors.size();
  for (std::size_t t = 0; t < walls.size(); ++t) {
    std::vector<Int> m(count);
    std::vector<Restriction> kind(count);
    for (std::size_t i = 0; i < count; ++i) {
      m[i] = dot(q.row_span(t), spec.divisors[i]);
      kind[i] = classify(spec.sections[i], walls[t]);
    }
    auto constant = std::find(kind.begin(), kind.end(), Restriction::Constant);
    std::vector<Int> d;
    if (constant != kind.end()) {
      // A nowhere-zero component splits off the trivial summand.
      std::size_t drop = static_cast<std::size_t>(constant - kind.begin());
      for (std::size_t i = 0; i < count; ++i)
        if (i != drop) d.push_back(m[i]);
    } else {
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < count; ++i)
        if (kind[i] != Restriction::Vanishes) live.push_back(i);
      bool two_powers = live.size() == 2 && kind[live[0]] != Restriction::Mixed &&
                        kind[live[1]] != Restriction::Mixed && kind[live[0]] != kind[live[1]];
      if (!two_powers) {
        throw Error("bundle", "eta restriction not in scope on wall " + std::to_string(t + 1));
      }
      d.push_back(m[live[0]] + m[live[1]]);
      for (std::size_t i = 0; i < count; ++i)
        if (i != live[0] && i != live[1]) d.push_back(m[i]);
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    xi.degrees.push_back(std::move(d));
  }
  return xi;
}

}  // namespace toricsplit
