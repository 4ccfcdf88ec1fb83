#include "toricsplit/h0_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toricsplit/error.hpp"

namespace toricsplit {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

long max_abs_exponent(const MonomialMatrix& t) {
  long e = 0;
  for (const auto& row : t)
    for (const auto& m : row)
      if (sgn(m.coeff) != 0) e = std::max(e, std::abs(m.exponent));
  return e;
}

}  // namespace

long twisted_sections(const MonomialMatrix& t, long k, long max_pole) {
  const std::size_t r = t.size();
  const std::size_t per = static_cast<std::size_t>(max_pole) + 1;
  const std::size_t unknowns = r * per;

  // Equation (i, p) collects the coefficient of z^p (p < 0) in row i.
  std::map<std::pair<std::size_t, long>, std::vector<std::pair<std::size_t, Rational>>> eqs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Monomial& m = t[i][j];
      if (sgn(m.coeff) == 0) continue;
      for (long pole = 0; pole <= max_pole; ++pole) {
        long p = m.exponent + k - pole;
        if (p < 0) eqs[{i, p}].emplace_back(j * per + static_cast<std::size_t>(pole), m.coeff);
      }
    }

  UnionFind uf(unknowns);
  for (const auto& [key, terms] : eqs)
    for (std::size_t a = 1; a < terms.size(); ++a) uf.unite(terms[0].first, terms[a].first);

  // Solve each connected component separately.
  std::map<std::size_t, std::vector<const std::vector<std::pair<std::size_t, Rational>>*>> comp_eqs;
  for (const auto& [key, terms] : eqs) comp_eqs[uf.find(terms[0].first)].push_back(&terms);
  long constrained_rank = 0;
  for (const auto& [root, list] : comp_eqs) {
    std::map<std::size_t, std::size_t> local;
    for (const auto* terms : list)
      for (const auto& [u, c] : *terms) local.emplace(u, local.size());
    RatMatrix m(list.size(), local.size());
    for (std::size_t row = 0; row < list.size(); ++row)
      for (const auto& [u, c] : *list[row]) m(row, local[u]) += c;
    constrained_rank += static_cast<long>(rank(m));
  }
  return static_cast<long>(unknowns) - constrained_rank;
}

std::vector<Int> h0_oracle(const MonomialMatrix& t) {
  const std::size_t r = t.size();
  for (const auto& row : t)
    if (row.size() != r) throw Error("oracle", "transition matrix must be square");
  if (r == 0) return {};
  const long e = max_abs_exponent(t);
  const long sr = static_cast<long>(r);
  long window = std::max<long>(1, sr * e);

  for (int attempt = 0; attempt <= 4; ++attempt, window *= 2) {
    auto h = [&](long k) { return twisted_sections(t, k, (2 * sr - 1) * e + std::abs(k) + 1); };
    // at_least[t] = #{d >= t} = h(-t) - h(-t-1).
    std::map<long, long> hk;
    for (long k = -window - 2; k <= window + 1; ++k) hk[k] = h(k);
    auto at_least = [&](long tt) { return hk[-tt] - hk[-tt - 1]; };
    if (at_least(-window) != sr || at_least(window + 1) != 0) continue;
    std::vector<Int> degrees;
    for (long tt = window; tt >= -window; --tt) {
      long count = at_least(tt) - at_least(tt + 1);
      if (count < 0) break;
      for (long c = 0; c < count; ++c) degrees.push_back(Int(tt));
    }
    if (degrees.size() == r) return degrees;
  }
  throw Error("oracle", "degree window exceeded its cap");
}

MonomialMatrix block_transition(const std::vector<Int>& chart1, const std::vector<Int>& chart2,
                                const RatMatrix& pasting) {
  const std::size_t r = chart1.size();
  MonomialMatrix t(r, std::vector<Monomial>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      t[i][j].coeff = pasting(i, j);
      t[i][j].exponent = Int(chart1[j] - chart2[i]).get_si();
    }
  return t;
}

}  // namespace toricsplit
