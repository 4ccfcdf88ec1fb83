#include "toricsplit/bundle_data.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "toricsplit/error.hpp"
#include "toricsplit/surface_graph.hpp"

namespace toricsplit {

namespace {

std::string cone_label(std::size_t c) { return "cone " + std::to_string(c + 1); }

std::string weight_list(const std::vector<IntVector>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ";";
    s += "(" + to_string(ws[i]) + ")";
  }
  return s;
}

// Rays shared by two maximal cones.
std::vector<std::size_t> common_rays(const Fan& fan, std::size_t a, std::size_t b) {
  std::vector<std::size_t> out;
  for (auto j : fan.cone(a)) {
    const Cone& cb = fan.cone(b);
    if (std::find(cb.begin(), cb.end(), j) != cb.end()) out.push_back(j);
  }
  return out;
}

// Pairings of chi with the given rays: the image of chi in M / M(tau).
IntVector stab_key(const Fan& fan, const std::vector<std::size_t>& rays, const IntVector& chi) {
  IntVector key;
  for (auto j : rays) key.push_back(dot(chi, fan.ray(j)));
  return key;
}

}  // namespace

KaneyamaBundleData make_bundle_data(
    Fan fan, std::size_t rank, std::vector<std::vector<IntVector>> weights,
    const std::map<std::pair<std::size_t, std::size_t>, RatMatrix>& given) {
  const std::size_t nc = fan.num_cones();
  if (rank == 0) throw Error("bundle", "rank must be positive");
  if (weights.size() != nc) {
    throw Error("bundle", "expected weights for " + std::to_string(nc) + " cones, got " +
                              std::to_string(weights.size()));
  }
  for (std::size_t c = 0; c < nc; ++c) {
    if (weights[c].size() != rank) {
      throw Error("bundle", cone_label(c) + " has " + std::to_string(weights[c].size()) +
                                " weights, expected " + std::to_string(rank));
    }
    for (const auto& w : weights[c]) {
      if (w.size() != fan.dim()) {
        throw Error("bundle", cone_label(c) + " has weight (" + to_string(w) +
                                  ") of the wrong dimension");
      }
    }
  }

  std::vector<std::vector<std::optional<RatMatrix>>> p(nc, std::vector<std::optional<RatMatrix>>(nc));
  std::vector<std::vector<std::size_t>> adj(nc);
  for (const auto& [key, m] : given) {
    auto [s2, s1] = key;
    if (s1 >= nc || s2 >= nc) throw Error("bundle", "pasting references a missing cone");
    if (m.rows() != rank || m.cols() != rank) {
      throw Error("bundle", "pasting " + std::to_string(s2 + 1) + " " + std::to_string(s1 + 1) +
                                " is not " + std::to_string(rank) + "x" + std::to_string(rank));
    }
    p[s2][s1] = m;
    adj[s1].push_back(s2);
    adj[s2].push_back(s1);
  }
  for (std::size_t c = 0; c < nc; ++c)
    if (!p[c][c]) p[c][c] = RatMatrix::identity(rank);

  // Spanning forest: root[c] = P(c, r) for the root r of c's component.
  // Cones in different components are glued by the identity.
  std::vector<std::optional<RatMatrix>> root(nc);
  for (std::size_t start = 0; start < nc; ++start) {
    if (root[start]) continue;
    root[start] = RatMatrix::identity(rank);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      for (auto d : adj[c]) {
        if (root[d]) continue;
        RatMatrix step;
        if (p[d][c]) {
          step = *p[d][c];
        } else if (auto inv = inverse(*p[c][d])) {
          step = *inv;
        } else {
          throw Error("bundle", "pasting " + std::to_string(c + 1) + " " + std::to_string(d + 1) +
                                    " is singular");
        }
        root[d] = step * *root[c];
        queue.push_back(d);
      }
    }
  }
  for (std::size_t s2 = 0; s2 < nc; ++s2) {
    for (std::size_t s1 = 0; s1 < nc; ++s1) {
      if (p[s2][s1]) continue;
      if (p[s1][s2]) {
        auto inv = inverse(*p[s1][s2]);
        if (!inv) {
          throw Error("bundle", "pasting " + std::to_string(s1 + 1) + " " +
                                    std::to_string(s2 + 1) + " is singular");
        }
        p[s2][s1] = *inv;
        continue;
      }
      auto inv = inverse(*root[s1]);
      if (!inv) throw Error("bundle", "composed pasting is singular");
      p[s2][s1] = *root[s2] * *inv;
    }
  }

  // Sort weights and permute pastings: new index i reads old index perm[i].
  std::vector<std::vector<std::size_t>> perm(nc);
  KaneyamaBundleData out;
  out.weights_.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    perm[c].resize(rank);
    std::iota(perm[c].begin(), perm[c].end(), 0);
    std::stable_sort(perm[c].begin(), perm[c].end(),
                     [&](std::size_t a, std::size_t b) { return weights[c][a] < weights[c][b]; });
    for (auto i : perm[c]) out.weights_[c].push_back(weights[c][i]);
  }
  out.pastings_.assign(nc, std::vector<RatMatrix>(nc));
  for (std::size_t s2 = 0; s2 < nc; ++s2) {
    for (std::size_t s1 = 0; s1 < nc; ++s1) {
      RatMatrix m(rank, rank);
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) m(i, j) = (*p[s2][s1])(perm[s2][i], perm[s1][j]);
      out.pastings_[s2][s1] = std::move(m);
    }
  }
  out.fan_ = std::move(fan);
  out.rank_ = rank;
  return out;
}

std::vector<std::string> validate(const KaneyamaBundleData& data) {
  std::vector<std::string> problems;
  const Fan& fan = data.fan();
  const std::size_t nc = fan.num_cones();
  const std::size_t r = data.rank();

  for (const Wall& w : fan.walls()) {
    std::vector<IntVector> k1, k2;
    for (const auto& chi : data.weights(w.sigma1)) k1.push_back(stab_key(fan, w.tau, chi));
    for (const auto& chi : data.weights(w.sigma2)) k2.push_back(stab_key(fan, w.tau, chi));
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    if (k1 != k2) {
      std::string tau;
      for (auto j : w.tau) tau += (tau.empty() ? "" : ",") + std::to_string(j + 1);
      problems.push_back("net: wall {" + tau + "} between " + cone_label(w.sigma1) + " and " +
                         cone_label(w.sigma2) + ": projected weights " + weight_list(k1) +
                         " vs " + weight_list(k2));
    }
  }

  for (std::size_t s = 0; s < nc; ++s) {
    if (!(data.pasting(s, s) == RatMatrix::identity(r))) {
      problems.push_back("cocycle: pasting " + std::to_string(s + 1) + " " +
                         std::to_string(s + 1) + " is not the identity");
    }
  }
  for (std::size_t s3 = 0; s3 < nc; ++s3)
    for (std::size_t s2 = 0; s2 < nc; ++s2)
      for (std::size_t s1 = 0; s1 < nc; ++s1) {
        if (s1 == s2 || s2 == s3) continue;
        if (!(data.pasting(s3, s2) * data.pasting(s2, s1) == data.pasting(s3, s1))) {
          problems.push_back("cocycle: P(" + std::to_string(s3 + 1) + "," + std::to_string(s2 + 1) +
                             ") P(" + std::to_string(s2 + 1) + "," + std::to_string(s1 + 1) +
                             ") != P(" + std::to_string(s3 + 1) + "," + std::to_string(s1 + 1) +
                             ")");
        }
      }

  for (std::size_t s2 = 0; s2 < nc; ++s2)
    for (std::size_t s1 = 0; s1 < nc; ++s1) {
      if (s1 == s2) continue;
      auto shared = common_rays(fan, s1, s2);
      const RatMatrix& m = data.pasting(s2, s1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          if (sgn(m(i, j)) == 0) continue;
          IntVector diff(fan.dim());
          for (std::size_t k = 0; k < fan.dim(); ++k)
            diff[k] = data.weights(s2)[i][k] - data.weights(s1)[j][k];
          for (auto ray : shared) {
            if (sgn(dot(diff, fan.ray(ray))) < 0) {
              problems.push_back("support: P(" + std::to_string(s2 + 1) + "," +
                                 std::to_string(s1 + 1) + ") entry (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ") is nonzero but the weight "
                                 "difference (" + to_string(diff) + ") is negative on ray " +
                                 std::to_string(ray + 1));
              break;
            }
          }
        }
    }
  return problems;
}

KaneyamaBundleData tangent_bundle(const Fan& fan) {
  const std::size_t nc = fan.num_cones();
  const std::size_t n = fan.dim();
  std::vector<std::vector<IntVector>> weights(nc);
  for (std::size_t c = 0; c < nc; ++c) weights[c] = fan.dual_basis(c);
  std::map<std::pair<std::size_t, std::size_t>, RatMatrix> pastings;
  for (std::size_t s2 = 0; s2 < nc; ++s2)
    for (std::size_t s1 = 0; s1 < nc; ++s1) {
      RatMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m(i, j) = Rational(dot(fan.dual_basis(s2)[i], fan.ray(fan.cone(s1)[j])));
      pastings.emplace(std::make_pair(s2, s1), std::move(m));
    }
  return make_bundle_data(fan, n, std::move(weights), pastings);
}

KaneyamaBundleData cp2_rank2(long a, long b, long c) {
  if (a <= 0 || b <= 0 || c <= 0) {
    throw Error("bundle", "cp2_rank2 needs positive a, b, c");
  }
  Fan fan = graph_to_fan(cp2());
  auto v = [](long x, long y) { return IntVector{Int(x), Int(y)}; };
  std::vector<std::vector<IntVector>> weights{
      {v(a, 0), v(0, b)}, {v(-b, b), v(-c, 0)}, {v(a, -a), v(0, -c)}};
  RatMatrix p21{{-1, 1}, {1, 0}};
  RatMatrix p32{{1, 0}, {1, 1}};
  std::map<std::pair<std::size_t, std::size_t>, RatMatrix> pastings{
      {{1, 0}, p21}, {{2, 1}, p32}, {{2, 0}, p32 * p21}};
  return make_bundle_data(std::move(fan), 2, std::move(weights), pastings);
}

EulerBundleSpec euler_cpn(std::size_t n, const std::vector<long>& m) {
  if (m.size() != n + 1) throw Error("bundle", "euler_cpn needs n+1 exponents");
  EulerBundleSpec spec{projective_space_fan(n), {}, {}};
  for (std::size_t i = 0; i <= n; ++i) {
    if (m[i] <= 0) throw Error("bundle", "exponents must be positive");
    IntVector d(n + 1);
    d[i] = m[i];
    spec.divisors.push_back(d);
    spec.sections.push_back(d);
  }
  return spec;
}

EulerBundleSpec euler_hirzebruch(long a, const std::vector<long>& m) {
  if (m.size() != 4) throw Error("bundle", "euler_hirzebruch needs 4 exponents");
  EulerBundleSpec spec{graph_to_fan(hirzebruch(a)), {}, {}};
  for (std::size_t k = 0; k < 4; ++k) {
    if (m[k] <= 0) throw Error("bundle", "exponents must be positive");
    IntVector d(4);
    d[k] = m[k];
    spec.divisors.push_back(d);
    spec.sections.push_back(d);
  }
  return spec;
}

void check_euler_spec(const EulerBundleSpec& spec) {
  const std::size_t J = spec.fan.num_rays();
  if (spec.divisors.size() < 2) throw Error("bundle", "need at least two summands");
  if (spec.sections.size() != spec.divisors.size()) {
    throw Error("bundle", "one section per summand required");
  }
  for (std::size_t i = 0; i < spec.divisors.size(); ++i) {
    const auto& d = spec.divisors[i];
    const auto& s = spec.sections[i];
    if (d.size() != J || s.size() != J) {
      throw Error("bundle", "summand " + std::to_string(i + 1) + " needs " + std::to_string(J) +
                                " coefficients");
    }
    for (const Int& e : s)
      if (sgn(e) < 0) throw Error("bundle", "section " + std::to_string(i + 1) + " has a negative exponent");
    // s - d must be principal: <m, v_j> = s_j - d_j for some m in M.
    IntVector diff(J);
    for (std::size_t j = 0; j < J; ++j) diff[j] = s[j] - d[j];
    std::vector<IntVector> rows;
    for (std::size_t j = 0; j < J; ++j) rows.push_back(spec.fan.ray(j));
    IntMatrix v = IntMatrix::from_rows(rows, spec.fan.dim());
    IntMatrix rhs(J, 1);
    for (std::size_t j = 0; j < J; ++j) rhs(j, 0) = diff[j];
    if (!solve_integral(v, rhs)) {
      throw Error("bundle", "section " + std::to_string(i + 1) +
                                " is not a monomial of its summand's class");
    }
  }
}

}  // namespace toricsplit
