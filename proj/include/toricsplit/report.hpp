#pragma once

#include <string>
#include <vector>

#include "toricsplit/bundle_data.hpp"
#include "toricsplit/solver.hpp"
#include "toricsplit/surface_graph.hpp"

namespace toricsplit {

enum class OutputFormat { Text, Tsv };

// Largest k accepted by surfaces/table41 unless the caller raises the cap.
inline constexpr std::size_t kDefaultBlowupCap = 9;
inline constexpr std::size_t kHardBlowupCap = 12;

struct Table41Row {
  std::size_t k = 0;
  WeightedCircularGraph graph;  // canonical form
  // One entry per splitting type; each is its columns restricted to the
  // first s-2 rays (the last two are reduced to zero), sorted descending.
  std::vector<std::vector<IntVector>> types;
};

// Surfaces from k = 1..max_k blowups of CP^2 whose tangent bundle admits a
// splitting type, ordered by k and then by graph.
std::vector<Table41Row> compute_table41(std::size_t max_k, Strictness strictness,
                                        unsigned threads = 1);

std::string cmd_surfaces(std::size_t k, OutputFormat format, unsigned threads = 1);
std::string cmd_q_matrix(const Fan& fan, OutputFormat format);
std::string cmd_tangent_split(const Fan& fan, Strictness strictness, OutputFormat format);
std::string cmd_bundle_split(const KaneyamaBundleData& data, Strictness strictness,
                             OutputFormat format);
std::string cmd_euler_split(const EulerBundleSpec& spec, Strictness strictness,
                            OutputFormat format);
std::string cmd_table41(std::size_t max_k, Strictness strictness, OutputFormat format,
                        unsigned threads = 1);

// Shared tail of the split commands: Xi, Q and the splitting types.
std::string format_split_report(const Fan& fan, const SplittingSystem& xi,
                                 const std::vector<SplittingType>& types, OutputFormat format);

}  // namespace toricsplit
