#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "toricsplit/error.hpp"
#include "toricsplit/report.hpp"
#include "toricsplit/text_io.hpp"

using namespace toricsplit;

namespace {

struct Options {
  bool strict = false;
  std::size_t k = 3;
  bool allow_large_k = false;
  std::string format = "text";
  std::string fan_path;
  std::string bundle_path;
  std::string graph;
  unsigned threads = 1;
};

Fan load_fan(const Options& o) {
  if (!o.fan_path.empty() && !o.graph.empty()) throw Error("usage", "give either --fan or --graph, not both");
  if (!o.graph.empty()) return graph_to_fan(parse_graph(o.graph));
  if (!o.fan_path.empty()) return parse_fan(read_file(o.fan_path));
  throw Error("usage", "a fan is required (--fan or --graph)");
}

std::size_t checked_k(const Options& o) {
  if (o.k > kHardBlowupCap) throw Error("cap", "--k is capped at 12");
  if (o.k > kDefaultBlowupCap && !o.allow_large_k) {
    throw Error("cap", "--k above 9 needs --allow-large-k");
  }
  return o.k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting numbers and splitting types of equivariant bundles on toric manifolds"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;

  app.add_flag("--strict-signs", o.strict, "Require each column to be all positive, all zero or all negative");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--threads", o.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 64u));

  auto* surfaces = app.add_subcommand("surfaces", "List toric surfaces obtained from CP^2 by k blowups");
  surfaces->add_option("--k", o.k, "Number of blowups")->required();
  surfaces->add_flag("--allow-large-k", o.allow_large_k, "Permit 9 < k <= 12");

  auto* qmatrix = app.add_subcommand("q-matrix", "Print the augmented intersection matrix");
  auto* tangent = app.add_subcommand("tangent-split", "Splitting data of the tangent bundle");
  auto* bundle = app.add_subcommand("bundle-split", "Splitting data of a bundle file");
  bundle->add_option("--bundle", o.bundle_path, "Bundle file (Kaneyama data or euler spec)")->required();
  for (auto* sub : {qmatrix, tangent, bundle}) {
    sub->add_option("--fan", o.fan_path, "Fan file");
    sub->add_option("--graph", o.graph, "Comma-separated surface weights, e.g. 0,2,0,-2");
  }

  auto* table = app.add_subcommand("table41", "Tangent bundles of CP^2 blowups that admit a splitting type");
  table->add_option("--k", o.k, "Largest number of blowups")->default_val(9);
  table->add_flag("--allow-large-k", o.allow_large_k, "Permit 9 < k <= 12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  const Strictness strictness = o.strict ? Strictness::Strict : Strictness::Default;
  const OutputFormat format = o.format == "tsv" ? OutputFormat::Tsv : OutputFormat::Text;
  try {
    std::string out;
    if (*surfaces) {
      out = cmd_surfaces(checked_k(o), format, o.threads);
    } else if (*qmatrix) {
      out = cmd_q_matrix(load_fan(o), format);
    } else if (*tangent) {
      out = cmd_tangent_split(load_fan(o), strictness, format);
    } else if (*bundle) {
      Fan fan = load_fan(o);
      std::string text = read_file(o.bundle_path);
      if (text.find("euler") != std::string::npos && text.find("rank") == std::string::npos) {
        out = cmd_euler_split(parse_euler(text, fan), strictness, format);
      } else {
        out = cmd_bundle_split(parse_bundle(text, fan), strictness, format);
      }
    } else if (*table) {
      out = cmd_table41(checked_k(o), strictness, format, o.threads);
    }
    std::cout << out;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
