#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qint/coloring.hpp"
#include "qint/dehn_thurston.hpp"
#include "qint/errors.hpp"
#include "qint/io.hpp"
#include "qint/metric.hpp"
#include "qint/quantum.hpp"

namespace qint::cli {

namespace {

using io::Json;

std::uint64_t parse_cap(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used);
  if (used != text.size() || v == 0 || text.front() == '-') throw std::invalid_argument("state cap must be a positive integer");
  return v;
}

std::string shift_text(const ColorShift& s) {
  std::string out;
  for (const auto& [e, v] : s.values) {
    if (!out.empty()) out += ';';
    out += std::to_string(e) + "=" + std::to_string(v);
  }
  return out;
}

std::vector<SurfaceModel> surfaces_for(const RunConfig& c) {
  std::vector<SurfaceModel> out;
  const std::string prefix = "catalog:";
  if (c.graph_path.rfind(prefix, 0) == 0) {
    const std::string name = c.graph_path.substr(prefix.size());
    int genus = c.genus;
    if (name == "theta" || name == "dumbbell") genus = 2;
    if (name == "k4" || name == "star") genus = 3;
    out.push_back(standard_surface(genus, name));
    return out;
  }
  if (!c.graph_path.empty()) {
    out.push_back(make_surface(io::graph_from_json(io::read_json_file(c.graph_path)), c.graph_path));
    return out;
  }
  if (!c.surface_name.empty()) {
    out.push_back(standard_surface(c.genus, c.surface_name));
    return out;
  }
  for (const auto& name : catalog_names(c.genus)) out.push_back(standard_surface(c.genus, name));
  return out;
}

ArcSystem load_curve(const RunConfig& c) {
  if (c.curve_path.empty()) throw ValidationError("--curve is required");
  return io::arc_system_from_json(io::read_json_file(c.curve_path));
}

void cmd_colorings(const RunConfig& c, std::ostream& out) {
  const auto surfaces = surfaces_for(c);
  auto listing = [&](const SurfaceModel& s) {
    Json list = Json::array();
    for (const auto& col : enumerate_colorings(s.graph, c.r)) list.push_back(io::to_json(col));
    return list;
  };
  if (surfaces.size() == 1) {
    if (c.list) {
      out << io::dump(listing(surfaces.front()));
    } else {
      out << dim_count(surfaces.front().graph, c.r) << '\n';
    }
    return;
  }
  if (c.list) {
    Json result = Json::object();
    for (const auto& s : surfaces) result[s.name] = listing(s);
    out << io::dump(result);
    return;
  }
  for (const auto& s : surfaces) out << s.name << '=' << dim_count(s.graph, c.r) << '\n';
}

void check_filter(const ArcSystem& a, const std::map<int, int>& filter) {
  const auto profile = intersection_profile(a);
  for (const auto& [e, v] : filter) {
    auto it = profile.per_edge.find(e);
    if (it == profile.per_edge.end()) throw DomainError("--shift names unknown edge " + std::to_string(e));
    if (std::abs(v) > it->second || (it->second - v) % 2 != 0) {
      throw DomainError("--shift " + std::to_string(e) + "=" + std::to_string(v) + " is incompatible with intersection " +
                        std::to_string(it->second));
    }
  }
}

void cmd_coeffs(const RunConfig& c, std::ostream& out) {
  const ArcSystem a = split_parallel(load_curve(c)).first;
  check_filter(a, c.shift_filter);
  const StateSumOptions options{c.state_cap};
  Json result = Json::array();
  std::ostringstream csv;
  csv << "shift,n_pp,n_pm,poly,state_count,nonzero\n";
  for (const auto& s : enumerate_shifts(a)) {
    bool keep = true;
    for (const auto& [e, v] : c.shift_filter) keep = keep && s.at(e) == v;
    if (!keep) continue;
    const auto coef = coefficient(a, s, options);
    result.push_back(io::to_json(coef));
    csv << shift_text(s) << ',' << coef.n_pp << ',' << coef.n_pm << ",\"" << coef.poly.to_string() << "\","
        << coef.state_count << ',' << (coef.poly.is_zero() ? "false" : "true") << '\n';
  }
  out << (c.format == Format::json ? io::dump(result) : csv.str());
}

void cmd_bounds(const RunConfig& c, std::ostream& out) {
  const ArcSystem a = load_curve(c);
  const StateSumOptions options{c.state_cap};
  const auto report = bounds_report(a, options);
  if (c.format == Format::csv) {
    out << "n_lim,genus,total,lower,upper,max_bound,two_pow,lower_ok,upper_ok,max_ok,passed";
    if (c.verify_family) out << ",family_witnesses,family_falsified";
    out << '\n';
    out << report.n_lim << ',' << report.genus << ',' << report.total << ',' << to_string(report.lower) << ','
        << to_string(report.upper) << ',' << report.max_bound << ',' << to_string(report.two_pow) << ','
        << report.lower_ok << ',' << report.upper_ok << ',' << report.max_ok << ',' << report.passed();
    if (c.verify_family) {
      const auto family = verify_dominant_family(a, options);
      out << ',' << family.witnesses.size() << ',' << family.falsified.size();
    }
    out << '\n';
    return;
  }
  Json result = {{"bounds", io::to_json(report)}};
  if (c.verify_family) result["family"] = io::to_json(verify_dominant_family(a, options));
  out << io::dump(result);
}

void cmd_curve_validate(const RunConfig& c, std::ostream& out) {
  if (c.curve_path.empty()) throw ValidationError("--curve is required");
  const Json doc = io::read_json_file(c.curve_path);
  // Structural problems surface as ValidationError from the reader.
  const ArcSystem a = io::arc_system_from_json(doc);
  out << io::dump(io::to_json(validate_arc_system(a)));
}

void cmd_curve_profile(const RunConfig& c, std::ostream& out) {
  const ArcSystem a = load_curve(c);
  const auto profile = intersection_profile(a);
  if (c.format == Format::csv) {
    out << "edge,intersection\n";
    for (const auto& [e, n] : profile.per_edge) out << e << ',' << n << '\n';
    return;
  }
  Json result = io::to_json(profile);
  result["cycles"] = count_cycles(a);
  result["parallel"] = Json::array();
  for (const auto& [e, k] : a.parallel_components) result["parallel"].push_back({e, k});
  out << io::dump(result);
}

void cmd_curve_generate(const RunConfig& c, std::ostream& out) {
  CorpusOptions options;
  options.seed = c.seed;
  options.count = c.count;
  Json result = Json::array();
  for (const auto& a : generate_corpus(options)) result.push_back(io::to_json(a));
  out << io::dump(result);
}

void cmd_metric(const RunConfig& c, std::ostream& out) {
  if (c.graph_path.empty() || c.nu_path.empty()) throw ValidationError("--graph and --nu are required");
  const auto graph = io::simple_graph_from_json(io::read_json_file(c.graph_path));
  const auto nu = io::pair_function_from_json(io::read_json_file(c.nu_path));
  const auto cmp = compare_quantum_path(graph, nu);
  if (c.format == Format::json) {
    out << io::dump(io::to_json(cmp));
    return;
  }
  out << "x,y,d_qt,d_pi\n";
  for (std::size_t i = 0; i < cmp.d_qt.size(); ++i) {
    for (std::size_t j = 0; j < cmp.d_qt.size(); ++j) {
      out << cmp.d_qt.points[i] << ',' << cmp.d_qt.points[j] << ',' << cmp.d_qt.at(i, j).to_string() << ','
          << cmp.d_pi.at(i, j).to_string() << '\n';
    }
  }
}

bool cmd_verlinde_check(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> names = catalog_names(c.genus);
  if (c.genus == 2) names = {"theta", "dumbbell"};
  std::string line;
  std::optional<long long> first;
  bool match = true;
  for (const auto& name : names) {
    const long long dim = dim_count(standard_surface(c.genus, name).graph, c.r);
    if (!first) first = dim;
    match = match && dim == *first;
    line += name + "=" + std::to_string(dim) + " ";
  }
  out << line << (match ? "MATCH" : "MISMATCH") << '\n';
  return match;
}

void cmd_graph(const RunConfig& c, std::ostream& out) {
  auto surfaces = surfaces_for(c);
  Json result = Json::array();
  for (auto& s : surfaces) {
    DualGraph g = s.graph;
    if (c.shift_edge) g = elementary_shift(g, *c.shift_edge);
    Json item = {{"name", s.name}, {"graph", io::to_json(g)}};
    if (c.shift_edge) item["isomorphic_to_input"] = are_isomorphic(g, s.graph);
    result.push_back(item);
  }
  out << io::dump(result);
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::colorings:
      cmd_colorings(c, out);
      return 0;
    case Command::coeffs:
      cmd_coeffs(c, out);
      return 0;
    case Command::bounds:
      cmd_bounds(c, out);
      return 0;
    case Command::curve_validate:
      cmd_curve_validate(c, out);
      return 0;
    case Command::curve_profile:
      cmd_curve_profile(c, out);
      return 0;
    case Command::curve_generate:
      cmd_curve_generate(c, out);
      return 0;
    case Command::metric:
      cmd_metric(c, out);
      return 0;
    case Command::verlinde_check:
      return cmd_verlinde_check(c, out) ? 0 : 1;
    case Command::graph:
      cmd_graph(c, out);
      return 0;
  }
  return 1;
}

}  // namespace

std::uint64_t resolve_state_cap(std::optional<std::string> flag, const char* env_value) {
  if (flag) return parse_cap(*flag);
  if (env_value != nullptr && *env_value != '\0') return parse_cap(env_value);
  return std::uint64_t{1} << 24;
}

std::map<int, int> parse_shift_filter(const std::string& text) {
  std::map<int, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("shift entry '" + item + "' is not edge=value");
    std::size_t used_e = 0, used_v = 0;
    const std::string es = item.substr(0, eq), vs = item.substr(eq + 1);
    const int e = std::stoi(es, &used_e);
    const int v = std::stoi(vs, &used_v);
    if (used_e != es.size() || used_v != vs.size()) throw std::invalid_argument("shift entry '" + item + "' is not edge=value");
    if (!out.emplace(e, v).second) throw std::invalid_argument("edge " + es + " appears twice in --shift");
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.state_cap < 1) throw DomainError("state cap must be at least 1");
    if (config.output_path.empty()) return dispatch(config, out);
    std::ostringstream buffer;
    const int code = dispatch(config, buffer);
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw ValidationError("cannot write " + config.output_path);
    file << buffer.str();
    return code;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qint::cli
