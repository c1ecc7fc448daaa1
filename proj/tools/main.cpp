#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using qint::cli::Command;
using qint::cli::Format;
using qint::cli::RunConfig;

void add_format(CLI::App* cmd, Format& format, std::string& text) {
  cmd->add_option("--out,--report", text, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag_callback("--json", [&format] { format = Format::json; }, "JSON output");
  cmd->add_flag_callback("--csv", [&format] { format = Format::csv; }, "CSV output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact limit coefficients of curve operators"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format_text;
  std::optional<std::string> cap_text;
  std::string shift_text;
  int shift_edge = -1;

  app.add_option("--output", config.output_path, "Write the result to a file");
  app.add_option("--state-cap", cap_text, "Maximal number of states per coefficient (env QINT_STATE_CAP)");

  auto* colorings = app.add_subcommand("colorings", "Count admissible colorings");
  colorings->add_option("--genus", config.genus, "Genus of the catalog surfaces");
  colorings->add_option("--name", config.surface_name, "Catalog surface name");
  colorings->add_option("--graph", config.graph_path, "Graph file, or catalog:<name>");
  colorings->add_option("--r", config.r, "Level r")->required();
  colorings->add_flag("--list", config.list, "Emit the colorings as JSON");

  auto* coeffs = app.add_subcommand("coeffs", "Normalized limit coefficients of a curve");
  coeffs->add_option("--curve", config.curve_path, "Arc system file")->required();
  coeffs->add_option("--shift", shift_text, "Restrict to shifts with these entries, e.g. 0=2,1=0");
  add_format(coeffs, config.format, format_text);

  auto* bounds = app.add_subcommand("bounds", "Quantum count and its bounds");
  bounds->add_option("--curve", config.curve_path, "Arc system file")->required();
  bounds->add_flag("--verify-family", config.verify_family, "Check the dominant-edge shifts");
  add_format(bounds, config.format, format_text);

  auto* curve = app.add_subcommand("curve", "Arc system utilities");
  curve->require_subcommand(1);
  auto* validate = curve->add_subcommand("validate", "Validate an arc system");
  validate->add_option("--curve", config.curve_path, "Arc system file")->required();
  auto* profile = curve->add_subcommand("profile", "Intersection profile");
  profile->add_option("--curve", config.curve_path, "Arc system file")->required();
  add_format(profile, config.format, format_text);
  auto* generate = curve->add_subcommand("generate", "Deterministic sample of arc systems");
  generate->add_option("--seed", config.seed, "Random seed");
  generate->add_option("--count", config.count, "Number of systems")->check(CLI::PositiveNumber);

  auto* metric = app.add_subcommand("metric", "Compare the metrified quantum count with the path metric");
  metric->add_option("--graph", config.graph_path, "Pants graph fragment")->required();
  metric->add_option("--nu", config.nu_path, "Pair values")->required();
  add_format(metric, config.format, format_text);

  auto* verlinde = app.add_subcommand("verlinde-check", "Coloring counts across the catalog graphs of a genus");
  verlinde->add_option("--genus", config.genus, "Genus")->required();
  verlinde->add_option("--r", config.r, "Level r")->required();

  auto* graph = app.add_subcommand("graph", "Print catalog dual graphs");
  graph->add_option("--genus", config.genus, "Genus");
  graph->add_option("--name", config.surface_name, "Catalog surface name");
  graph->add_option("--shift-edge", shift_edge, "Apply an elementary shift on this edge");

  CLI11_PARSE(app, argc, argv);

  if (colorings->parsed()) config.command = Command::colorings;
  if (coeffs->parsed()) config.command = Command::coeffs;
  if (bounds->parsed()) config.command = Command::bounds;
  if (validate->parsed()) config.command = Command::curve_validate;
  if (profile->parsed()) config.command = Command::curve_profile;
  if (generate->parsed()) config.command = Command::curve_generate;
  if (metric->parsed()) config.command = Command::metric;
  if (verlinde->parsed()) config.command = Command::verlinde_check;
  if (graph->parsed()) config.command = Command::graph;

  if (format_text == "csv") config.format = Format::csv;
  if (format_text == "json") config.format = Format::json;
  if (shift_edge >= 0) config.shift_edge = shift_edge;

  try {
    config.state_cap = qint::cli::resolve_state_cap(cap_text, std::getenv("QINT_STATE_CAP"));
    if (!shift_text.empty()) config.shift_filter = qint::cli::parse_shift_filter(shift_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return qint::cli::run(config, std::cout, std::cerr);
}
