#include "toricsplit/surface_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <thread>

#include "toricsplit/error.hpp"

namespace toricsplit {

std::int64_t WeightedCircularGraph::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

WeightedCircularGraph cp2() { return {{1, 1, 1}}; }

WeightedCircularGraph hirzebruch(std::int64_t a) {
  if (a < 0) throw Error("graph", "hirzebruch parameter must be non-negative");
  return {{0, a, 0, -a}};
}

WeightedCircularGraph blowup(const WeightedCircularGraph& g, std::size_t i) {
  const std::size_t s = g.size();
  if (i < 1 || i > s) {
    throw Error("graph", "blowup position " + std::to_string(i) + " outside 1.." + std::to_string(s));
  }
  WeightedCircularGraph out = g;
  out.weights[i - 1] -= 1;
  out.weights[i % s] -= 1;
  out.weights.insert(out.weights.begin() + static_cast<std::ptrdiff_t>(i), -1);
  return out;
}

DihedralImages dihedral_images(const WeightedCircularGraph& g) {
  const std::size_t s = g.size();
  DihedralImages out;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < s; ++r) {
      WeightedCircularGraph img;
      img.weights.resize(s);
      std::vector<std::size_t> perm(s);
      for (std::size_t q = 0; q < s; ++q) {
        // position q of the image reads position src of g
        std::size_t src = reflect ? (r + s - q) % s : (r + q) % s;
        img.weights[q] = g.weights[src];
        perm[src] = q;
      }
      out.images.push_back(std::move(img));
      out.perm.push_back(std::move(perm));
    }
  }
  return out;
}

WeightedCircularGraph canonical_form(const WeightedCircularGraph& g) {
  const std::size_t s = g.size();
  const auto& w = g.weights;
  std::size_t best_r = 0;
  bool best_reflect = false;
  auto at = [&](bool reflect, std::size_t r, std::size_t q) {
    return reflect ? w[(r + s - q) % s] : w[(r + q) % s];
  };
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t q = 0; q < s; ++q) {
        auto a = at(reflect, r, q);
        auto b = at(best_reflect, best_r, q);
        if (a != b) {
          if (a < b) {
            best_r = r;
            best_reflect = reflect;
          }
          break;
        }
      }
    }
  }
  WeightedCircularGraph out;
  out.weights.resize(s);
  for (std::size_t q = 0; q < s; ++q) out.weights[q] = at(best_reflect, best_r, q);
  return out;
}

std::vector<std::set<WeightedCircularGraph>> enumerate_blowup_levels(std::size_t k,
                                                                    unsigned threads) {
  std::vector<std::set<WeightedCircularGraph>> levels;
  levels.push_back({canonical_form(cp2())});
  threads = std::max(1u, threads);
  for (std::size_t level = 1; level <= k; ++level) {
    std::vector<WeightedCircularGraph> frontier(levels.back().begin(), levels.back().end());
    std::vector<std::set<WeightedCircularGraph>> partial(threads);
    auto work = [&](unsigned t) {
      for (std::size_t idx = t; idx < frontier.size(); idx += threads) {
        const auto& g = frontier[idx];
        for (std::size_t i = 1; i <= g.size(); ++i) partial[t].insert(canonical_form(blowup(g, i)));
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    std::set<WeightedCircularGraph> merged;
    for (auto& p : partial) merged.merge(p);
    levels.push_back(std::move(merged));
  }
  return levels;
}

std::set<WeightedCircularGraph> enumerate_blowups(std::size_t k) {
  return std::move(enumerate_blowup_levels(k).back());
}

Fan graph_to_fan(const WeightedCircularGraph& g) {
  const std::size_t s = g.size();
  const std::string what = "inconsistent weight sequence " + to_string(g);
  if (s < 3) throw Error("graph", what + ": need at least 3 weights");

  std::vector<IntVector> v{{1, 0}, {0, 1}};
  for (std::size_t i = 1; i <= s; ++i) {
    // v_{i+1} = -v_{i-1} - a_i v_i, with 0-based indices and a_{s} = a_0.
    const Int a = Int(static_cast<long>(g.weights[i % s]));
    const IntVector& prev = v[i - 1];
    const IntVector& cur = v[i];
    v.push_back({-prev[0] - a * cur[0], -prev[1] - a * cur[1]});
  }
  if (v[s] != v[0] || v[s + 1] != v[1]) throw Error("graph", what + ": rays do not close up");
  v.resize(s);

  std::vector<Cone> cones;
  for (std::size_t i = 0; i < s; ++i) cones.push_back({i, (i + 1) % s});
  try {
    return make_fan(2, std::move(v), std::move(cones));
  } catch (const Error& e) {
    throw Error("graph", what + ": " + e.what());
  }
}

std::string to_string(const WeightedCircularGraph& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.weights[i]);
  }
  return s;
}

WeightedCircularGraph parse_graph(const std::string& text) {
  WeightedCircularGraph g;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw Error("parse", "empty weight in graph '" + text + "'");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error("parse", "bad weight '" + token + "' in graph '" + text + "'");
    }
    g.weights.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '(' || c == ')' || c == '\t') continue;
    if (c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return g;
}

}  // namespace toricsplit
