#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricsplit/fan.hpp"

namespace toricsplit {

// Equivariant vector bundle given by one weight system per maximal cone and
// a pasting matrix for every ordered pair of maximal cones. pasting(s2, s1)
// has rows indexed by the weights of s2 and columns by the weights of s1.
class KaneyamaBundleData {
 public:
  const Fan& fan() const noexcept { return fan_; }
  std::size_t rank() const noexcept { return rank_; }
  // Sorted lexicographically.
  const std::vector<IntVector>& weights(std::size_t cone) const { return weights_.at(cone); }
  const RatMatrix& pasting(std::size_t s2, std::size_t s1) const {
    return pastings_.at(s2).at(s1);
  }

 private:
  friend KaneyamaBundleData make_bundle_data(
      Fan, std::size_t, std::vector<std::vector<IntVector>>,
      const std::map<std::pair<std::size_t, std::size_t>, RatMatrix>&);

  Fan fan_;
  std::size_t rank_ = 0;
  std::vector<std::vector<IntVector>> weights_;
  std::vector<std::vector<RatMatrix>> pastings_;
};

// Builds bundle data from weights in any order and pastings given against
// that order. Missing pairs are filled in: (s, s) is the identity, (s1, s2)
// is the inverse of a given (s2, s1), and the rest are composed along a
// spanning forest of the given pairs (identity between components). Weights are then sorted and every pasting
// permuted to match. Only shape errors throw (Error("bundle")); the
// geometric conditions are left to validate().
KaneyamaBundleData make_bundle_data(
    Fan fan, std::size_t rank, std::vector<std::vector<IntVector>> weights,
    const std::map<std::pair<std::size_t, std::size_t>, RatMatrix>& pastings);

// Empty when the data satisfies the net, cocycle and support conditions.
std::vector<std::string> validate(const KaneyamaBundleData& data);

KaneyamaBundleData tangent_bundle(const Fan& fan);

// Rank 2 bundle E(a, b, c) on the CP^2 fan of graph_to_fan(cp2()), with
// W1 = {(a,0),(0,b)}, W2 = {(-b,b),(-c,0)}, W3 = {(a,-a),(0,-c)}.
KaneyamaBundleData cp2_rank2(long a, long b, long c);

// Bundle E in 0 -> O -> sum_i O(D_i) -> E -> 0 where the map sends 1 to
// the Cox monomials z^{section_i}. Both D_i and section_i are ray-coefficient
// vectors; each section must be a monomial of its summand's class.
struct EulerBundleSpec {
  Fan fan;
  std::vector<IntVector> divisors;
  std::vector<IntVector> sections;
};

// eta = (z_0^{m_0}, ..., z_n^{m_n}) on CP^n (ray i carries m_i).
EulerBundleSpec euler_cpn(std::size_t n, const std::vector<long>& m);
// eta = (z_1^{m_1}, ..., z_4^{m_4}) on F_a with summands O(m_k D(v_k)).
EulerBundleSpec euler_hirzebruch(long a, const std::vector<long>& m);

// Rank of E, i.e. number of summands minus one.
inline std::size_t euler_rank(const EulerBundleSpec& spec) {
  return spec.divisors.empty() ? 0 : spec.divisors.size() - 1;
}

// Checks shapes and that each section lies in its summand's class.
void check_euler_spec(const EulerBundleSpec& spec);

}  // namespace toricsplit
