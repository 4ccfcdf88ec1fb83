#include "toricsplit/report.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "toricsplit/error.hpp"
#include "toricsplit/intersection.hpp"
#include "toricsplit/splitting.hpp"

namespace toricsplit {

namespace {

std::string paren(const IntVector& v) { return "(" + to_string(v) + ")"; }

std::string join_ints(const std::vector<Int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

std::string tau_label(const Wall& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.tau.size(); ++i) s += (i ? "," : "") + std::to_string(w.tau[i] + 1);
  return s + "}";
}

Table41Row table_row(std::size_t k, const WeightedCircularGraph& g, Strictness strictness) {
  Table41Row row{k, g, {}};
  Fan fan = graph_to_fan(g);
  auto q = augmented_matrix(fan);
  auto xi = splitting_system(tangent_bundle(fan));
  const std::size_t keep = fan.num_rays() - 2;
  for (const auto& t : find_splitting_types(fan, q.q, xi, strictness)) {
    std::vector<IntVector> cols;
    for (const auto& c : t.canonical) cols.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(keep));
    std::sort(cols.begin(), cols.end(), std::greater<>());
    row.types.push_back(std::move(cols));
  }
  return row;
}

std::string type_string(const std::vector<IntVector>& cols) {
  std::string s = "(";
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + paren(cols[i]);
  return s + ")";
}

}  // namespace

std::vector<Table41Row> compute_table41(std::size_t max_k, Strictness strictness,
                                        unsigned threads) {
  if (max_k > kHardBlowupCap) throw Error("cap", "k exceeds the hard cap of 12");
  auto levels = enumerate_blowup_levels(max_k, threads);
  std::vector<Table41Row> rows;
  threads = std::max(1u, threads);
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<WeightedCircularGraph> graphs(levels[k].begin(), levels[k].end());
    std::vector<Table41Row> results(graphs.size());
    auto work = [&](unsigned t) {
      for (std::size_t i = t; i < graphs.size(); i += threads) results[i] = table_row(k, graphs[i], strictness);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (auto& r : results)
      if (!r.types.empty()) rows.push_back(std::move(r));
  }
  return rows;
}

std::string cmd_surfaces(std::size_t k, OutputFormat format, unsigned threads) {
  if (k > kHardBlowupCap) throw Error("cap", "k exceeds the hard cap of 12");
  auto graphs = enumerate_blowup_levels(k, threads).back();
  std::ostringstream os;
  if (format == OutputFormat::Text) os << "count " << graphs.size() << '\n';
  for (const auto& g : graphs) {
    if (format == OutputFormat::Tsv) os << k << '\t';
    os << to_string(g) << '\n';
  }
  return os.str();
}

std::string cmd_q_matrix(const Fan& fan, OutputFormat format) {
  auto q = augmented_matrix(fan);
  std::ostringstream os;
  const char* sep = format == OutputFormat::Tsv ? "\t" : " ";
  os << "wall";
  for (std::size_t j = 0; j < q.num_rays; ++j) os << sep << "D" << j + 1;
  os << '\n';
  for (std::size_t i = 0; i < q.walls.size(); ++i) {
    os << tau_label(q.walls[i]);
    for (std::size_t j = 0; j < q.num_rays; ++j) os << sep << q.q(i, j);
    os << '\n';
  }
  return os.str();
}

std::string format_split_report(const Fan& fan, const SplittingSystem& xi,
                                 const std::vector<SplittingType>& types, OutputFormat format) {
  std::ostringstream os;
  const auto& walls = fan.walls();
  if (format == OutputFormat::Tsv) {
    for (std::size_t i = 0; i < xi.size(); ++i)
      os << "xi\t" << i + 1 << '\t' << tau_label(walls[i]) << '\t' << join_ints(xi.degrees[i], ",") << '\n';
    for (std::size_t t = 0; t < types.size(); ++t) {
      const auto& st = types[t];
      for (std::size_t l = 0; l < st.x.cols(); ++l) {
        os << "type\t" << t + 1 << '\t' << st.permutation_id << '\t' << l + 1 << '\t'
           << to_string(st.x.col(l)) << '\t' << to_string(canonical_class_rep(st.x.col(l), fan))
           << '\t' << to_string(st.sign_classes[l]) << '\n';
      }
    }
    if (types.empty()) os << "none\n";
    return os.str();
  }
  os << "splitting numbers\n";
  for (std::size_t i = 0; i < xi.size(); ++i)
    os << "  tau(" << i + 1 << ") " << tau_label(walls[i]) << ": " << join_ints(xi.degrees[i], " ") << '\n';
  os << "augmented intersection matrix\n";
  std::istringstream q(cmd_q_matrix(fan, OutputFormat::Text));
  for (std::string line; std::getline(q, line);) os << "  " << line << '\n';
  if (types.empty()) {
    os << "no splitting type\n";
    return os.str();
  }
  os << "splitting types " << types.size() << '\n';
  for (std::size_t t = 0; t < types.size(); ++t) {
    const auto& st = types[t];
    os << "type " << t + 1 << " (permutation " << st.permutation_id << ")\n";
    for (std::size_t l = 0; l < st.x.cols(); ++l) {
      os << "  L" << l + 1 << ": R'=" << paren(st.r_prime.col(l)) << " X=" << paren(st.x.col(l))
         << " class=" << paren(canonical_class_rep(st.x.col(l), fan))
         << " sign=" << to_string(st.sign_classes[l]) << '\n';
    }
  }
  return os.str();
}

std::string cmd_tangent_split(const Fan& fan, Strictness strictness, OutputFormat format) {
  return cmd_bundle_split(tangent_bundle(fan), strictness, format);
}

std::string cmd_bundle_split(const KaneyamaBundleData& data, Strictness strictness,
                             OutputFormat format) {
  auto problems = validate(data);
  if (!problems.empty()) throw Error("bundle", problems.front());
  auto xi = splitting_system(data);
  auto q = augmented_matrix(data.fan());
  return format_split_report(data.fan(), xi, find_splitting_types(data.fan(), q.q, xi, strictness),
                             format);
}

std::string cmd_euler_split(const EulerBundleSpec& spec, Strictness strictness,
                            OutputFormat format) {
  auto q = augmented_matrix(spec.fan);
  auto xi = euler_splitting_system(spec, q.q);
  return format_split_report(spec.fan, xi, find_splitting_types(spec.fan, q.q, xi, strictness),
                             format);
}

std::string cmd_table41(std::size_t max_k, Strictness strictness, OutputFormat format,
                        unsigned threads) {
  auto rows = compute_table41(max_k, strictness, threads);
  std::ostringstream os;
  if (format == OutputFormat::Text) os << "surfaces " << rows.size() << '\n';
  for (const auto& r : rows) {
    std::string types;
    for (std::size_t t = 0; t < r.types.size(); ++t) types += (t ? " " : "") + type_string(r.types[t]);
    if (format == OutputFormat::Tsv) {
      os << r.k << '\t' << to_string(r.graph) << '\t' << types << '\n';
    } else {
      os << "k=" << r.k << " w=(" << to_string(r.graph) << ") type=" << types << '\n';
    }
  }
  return os.str();
}

}  // namespace toricsplit
