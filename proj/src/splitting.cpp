#include "toricsplit/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "toricsplit/error.hpp"

namespace toricsplit {

namespace {

void sort_desc(std::vector<Int>& d) { std::sort(d.begin(), d.end(), std::greater<>()); }

}  // namespace

WallRestriction restrict(const KaneyamaBundleData& data, std::size_t wall_index,
                         const std::optional<IntVector>& v_sigma1) {
  const Fan& fan = data.fan();
  const auto& walls = fan.walls();
  if (wall_index >= walls.size()) throw Error("bundle", "wall index out of range");
  WallRestriction out;
  out.wall = walls[wall_index];
  const Wall& w = out.wall;
  const Cone& s1 = fan.cone(w.sigma1);
  auto pos = std::find(s1.begin(), s1.end(), w.extra1) - s1.begin();
  out.tau_perp = fan.dual_basis(w.sigma1)[pos];
  out.v_sigma1 = v_sigma1 ? *v_sigma1 : fan.ray(w.extra1);
  if (out.v_sigma1.size() != fan.dim() || dot(out.tau_perp, out.v_sigma1) != 1) {
    throw Error("bundle", "v_sigma1 (" + to_string(out.v_sigma1) + ") must pair to 1 with (" +
                              to_string(out.tau_perp) + ")");
  }

  IntVector v_tau(fan.dim());
  for (auto j : w.tau)
    for (std::size_t k = 0; k < fan.dim(); ++k) v_tau[k] += fan.ray(j)[k];

  auto key_of = [&](const IntVector& chi) {
    IntVector key;
    for (auto j : w.tau) key.push_back(dot(chi, fan.ray(j)));
    return key;
  };
  const auto& w1 = data.weights(w.sigma1);
  const auto& w2 = data.weights(w.sigma2);
  const std::size_t r = data.rank();
  std::vector<IntVector> key1(r), key2(r);
  std::vector<Int> t1(r), t2(r);
  std::map<IntVector, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (std::size_t j = 0; j < r; ++j) {
    key1[j] = key_of(w1[j]);
    t1[j] = dot(w1[j], out.v_sigma1);
    groups[key1[j]].first.push_back(j);
  }
  for (std::size_t i = 0; i < r; ++i) {
    key2[i] = key_of(w2[i]);
    t2[i] = dot(w2[i], out.v_sigma1);
    groups[key2[i]].second.push_back(i);
  }

  const RatMatrix& p = data.pasting(w.sigma2, w.sigma1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (key1[j] == key2[i] || sgn(p(i, j)) == 0) continue;
      IntVector diff(fan.dim());
      for (std::size_t k = 0; k < fan.dim(); ++k) diff[k] = w2[i][k] - w1[j][k];
      if (sgn(dot(diff, v_tau)) < 0) {
        throw Error("bundle", "pasting entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") does not extend over the wall");
      }
    }

  for (auto& [key, idx] : groups) {
    auto& [c1, c2] = idx;
    if (c1.size() != c2.size()) {
      throw Error("bundle", "net condition fails on wall " + std::to_string(wall_index + 1));
    }
    std::stable_sort(c1.begin(), c1.end(), [&](auto a, auto b) { return t1[a] > t1[b]; });
    std::stable_sort(c2.begin(), c2.end(), [&](auto a, auto b) { return t2[a] < t2[b]; });
    WallBlock block;
    block.key = key;
    block.pasting = RatMatrix(c2.size(), c1.size());
    for (auto j : c1) block.chart1_weights.push_back(t1[j]);
    for (auto i : c2) block.chart2_weights.push_back(t2[i]);
    for (std::size_t a = 0; a < c2.size(); ++a)
      for (std::size_t b = 0; b < c1.size(); ++b) block.pasting(a, b) = p(c2[a], c1[b]);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<Int> bootstrap(const std::vector<Int>& chart1_in, const std::vector<Int>& chart2_in,
                           const RatMatrix& pasting) {
  const std::size_t r = chart1_in.size();
  if (chart2_in.size() != r || pasting.rows() != r || pasting.cols() != r) {
    throw Error("bundle", "bootstrap block shape mismatch");
  }
  if (r == 0) return {};
  if (sgn(determinant(pasting)) == 0) throw Error("bundle", "singular pasting block");

  std::vector<Int> chart1 = chart1_in, chart2 = chart2_in;
  RatMatrix a = pasting;
  std::vector<Int> degrees;
  while (!chart1.empty()) {
    const std::size_t n = chart1.size();
    if (n == 1) {
      degrees.push_back(chart1[0] - chart2[0]);
      break;
    }
    std::vector<Int> alphas = chart1, betas = chart2;
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    std::sort(betas.begin(), betas.end());
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
    std::vector<std::pair<Int, Int>> pairs;
    for (const auto& al : alphas)
      for (const auto& be : betas) pairs.emplace_back(al, be);
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
      Int dx = x.first - x.second, dy = y.first - y.second;
      if (dx != dy) return dx > dy;
      return x.first > y.first;
    });

    bool found = false;
    for (const auto& [alpha, beta] : pairs) {
      std::vector<std::size_t> cols, rows;
      for (std::size_t j = 0; j < n; ++j)
        if (chart1[j] >= alpha) cols.push_back(j);
      for (std::size_t i = 0; i < n; ++i)
        if (chart2[i] > beta) rows.push_back(i);
      RatMatrix sub(rows.size(), cols.size());
      for (std::size_t x = 0; x < rows.size(); ++x)
        for (std::size_t y = 0; y < cols.size(); ++y) sub(x, y) = a(rows[x], cols[y]);
      std::vector<RatVector> ker;
      if (rows.empty()) {
        RatVector e(cols.size());
        e[0] = 1;
        for (std::size_t y = 0; y < cols.size(); ++y)
          if (chart1[cols[y]] == alpha) {
            e.assign(cols.size(), Rational(0));
            e[y] = 1;
            break;
          }
        ker.push_back(e);
      } else {
        ker = kernel_basis(sub);
      }
      if (ker.empty()) continue;

      RatVector v(n);
      for (std::size_t y = 0; y < cols.size(); ++y) v[cols[y]] = ker.front()[y];
      IntVector vi = clear_denominators(v);
      for (std::size_t j = 0; j < n; ++j) v[j] = Rational(vi[j]);
      RatVector av = a.apply(v);

      std::size_t ci = n, rj = n;
      for (std::size_t j = 0; j < n && ci == n; ++j)
        if (chart1[j] == alpha && sgn(v[j]) != 0) ci = j;
      for (std::size_t i = 0; i < n && rj == n; ++i)
        if (chart2[i] == beta && sgn(av[i]) != 0) rj = i;
      if (ci == n || rj == n) {
        throw Error("bundle", "bootstrap found a degenerate stratum witness");
      }

      degrees.push_back(alpha - beta);
      // Quotient by the line spanned by v (chart1) and a v (chart2).
      RatMatrix next(n - 1, n - 1);
      for (std::size_t i = 0, x = 0; i < n; ++i) {
        if (i == rj) continue;
        Rational factor = av[i] / av[rj];
        for (std::size_t j = 0, y = 0; j < n; ++j) {
          if (j == ci) continue;
          next(x, y) = a(i, j) - factor * a(rj, j);
          ++y;
        }
        ++x;
      }
      a = std::move(next);
      chart1.erase(chart1.begin() + static_cast<std::ptrdiff_t>(ci));
      chart2.erase(chart2.begin() + static_cast<std::ptrdiff_t>(rj));
      found = true;
      break;
    }
    if (!found) throw Error("bundle", "bootstrap found no non-empty stratum");
  }
  sort_desc(degrees);
  return degrees;
}

Int weight_difference_total(const WallRestriction& restriction) {
  Int total = 0;
  for (const auto& b : restriction.blocks) {
    for (const auto& x : b.chart1_weights) total += x;
    for (const auto& x : b.chart2_weights) total -= x;
  }
  return total;
}

SplittingSystem splitting_system(const KaneyamaBundleData& data) {
  SplittingSystem xi;
  const std::size_t nw = data.fan().walls().size();
  for (std::size_t i = 0; i < nw; ++i) {
    WallRestriction res = restrict(data, i);
    std::vector<Int> d;
    for (const auto& b : res.blocks) {
      if (b.chart1_weights.size() == 1) {
        d.push_back(b.chart1_weights[0] - b.chart2_weights[0]);
      } else {
        auto part = bootstrap(b.chart1_weights, b.chart2_weights, b.pasting);
        d.insert(d.end(), part.begin(), part.end());
      }
    }
    sort_desc(d);
    xi.degrees.push_back(std::move(d));
  }
  return xi;
}

SplittingSystem twist(const SplittingSystem& xi, const IntMatrix& q, const IntVector& x) {
  if (q.rows() != xi.size()) throw Error("dimension", "Q rows do not match the system");
  IntVector shift = q.apply(x);
  SplittingSystem out = xi;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto& d : out.degrees[i]) d += shift[i];
  return out;
}

std::string to_string(const SplittingSystem& xi) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    os << "tau(" << i + 1 << "):";
    for (const auto& d : xi.degrees[i]) os << ' ' << d;
    os << '\n';
  }
  return os.str();
}

SplittingSystem parse_splitting_system(const std::string& text) {
  SplittingSystem xi;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    const std::string expect = "tau(" + std::to_string(xi.size() + 1) + "):";
    if (head != expect) {
      throw Error("parse", "line " + std::to_string(lineno) + ": expected '" + expect + "'");
    }
    std::vector<Int> d;
    std::string tok;
    while (ls >> tok) {
      Int v;
      if (v.set_str(tok, 10) != 0) {
        throw Error("parse", "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
      }
      d.push_back(v);
    }
    sort_desc(d);
    xi.degrees.push_back(std::move(d));
  }
  return xi;
}

}  // namespace toricsplit
