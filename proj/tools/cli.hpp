#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace qint::cli {

enum class Command {
  colorings,
  coeffs,
  bounds,
  curve_validate,
  curve_profile,
  curve_generate,
  metric,
  verlinde_check,
  graph,
};

enum class Format { json, csv };

struct RunConfig {
  Command command = Command::colorings;

  std::string curve_path;
  std::string graph_path;
  std::string nu_path;
  std::string output_path;  // empty: write to the output stream
  Format format = Format::json;

  int genus = 2;
  std::string surface_name;  // empty: every catalog surface of the genus
  int r = 3;
  bool list = false;

  std::map<int, int> shift_filter;
  bool verify_family = false;

  std::uint64_t seed = 20240611;
  int count = 60;

  std::optional<int> shift_edge;  // graph: apply an elementary shift

  std::uint64_t state_cap = std::uint64_t{1} << 24;
};

/// Flag beats environment beats the built-in default. Throws
/// std::invalid_argument on a malformed or zero value.
std::uint64_t resolve_state_cap(std::optional<std::string> flag, const char* env_value);

/// Parses "e=v,e=v". Throws std::invalid_argument.
std::map<int, int> parse_shift_filter(const std::string& text);

/// 0 on success, 1 on validation/domain/input errors, 2 when the state cap
/// is exceeded. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qint::cli
