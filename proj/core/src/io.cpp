#include "qint/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>

#include "qint/errors.hpp"

namespace qint::io {

namespace {

/// Runs a reader and turns JSON access errors into ValidationError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

bool same_graph(const DualGraph& a, const DualGraph& b) {
  if (a.genus != b.genus || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (int i = 0; i < a.num_vertices(); ++i) {
    if (a.vertices[i].id != b.vertices[i].id || a.vertices[i].half_edges != b.vertices[i].half_edges) return false;
  }
  for (int i = 0; i < a.num_edges(); ++i) {
    if (a.edges[i].id != b.edges[i].id || a.edges[i].ends != b.edges[i].ends) return false;
  }
  return true;
}

Json pairs_json(const std::map<int, int>& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back({k, v});
  return out;
}

std::map<int, int> pairs_from(const Json& j) {
  std::map<int, int> out;
  for (const auto& item : j) {
    const int key = item.at(0).get<int>();
    if (!out.emplace(key, item.at(1).get<int>()).second) throw ValidationError("duplicate key " + std::to_string(key));
  }
  return out;
}

}  // namespace

Json to_json(const DualGraph& g) {
  Json vertices = Json::array(), edges = Json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"id", v.id}, {"half_edges", v.half_edges}});
  for (const auto& e : g.edges) edges.push_back({{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}});
  return {{"genus", g.genus}, {"vertices", vertices}, {"edges", edges}};
}

DualGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    DualGraph g;
    g.genus = j.at("genus").get<int>();
    for (const auto& v : j.at("vertices")) g.vertices.push_back({v.at("id").get<int>(), v.at("half_edges").get<std::vector<int>>()});
    for (const auto& e : j.at("edges")) {
      const auto& ends = e.at("ends");
      if (ends.size() != 2) throw ValidationError("edge needs exactly two ends");
      g.edges.push_back({e.at("id").get<int>(), {ends.at(0).get<int>(), ends.at(1).get<int>()}});
    }
    g.sort_by_id();
    return g;
  });
}

Json to_json(const SurfaceModel& s) {
  const int genus = s.graph.genus;
  if (genus >= 2) {
    const auto names = catalog_names(genus);
    if (std::find(names.begin(), names.end(), s.name) != names.end() && same_graph(standard_surface(genus, s.name).graph, s.graph)) {
      return {{"catalog", {{"genus", genus}, {"name", s.name}}}};
    }
  }
  return {{"name", s.name}, {"graph", to_json(s.graph)}};
}

SurfaceModel surface_from_json(const Json& j) {
  return guarded("surface", [&] {
    if (j.contains("catalog")) {
      const auto& c = j.at("catalog");
      return standard_surface(c.at("genus").get<int>(), c.at("name").get<std::string>());
    }
    return make_surface(graph_from_json(j.at("graph")), j.value("name", std::string("custom")));
  });
}

Json to_json(const ArcSystem& a) {
  Json points = Json::array(), crossings = Json::array(), pants = Json::array(), annuli = Json::array();
  for (const auto& l : a.on_curve_points) points.push_back({{"edge", l.edge}, {"side", l.side}, {"points", l.points}});
  for (const auto& c : a.crossing_pairs) crossings.push_back({{"over", c.over}, {"under", c.under}, {"pants", c.pants}});
  for (const auto& p : a.pants_arcs) pants.push_back({{"pants", p.pants}, {"ends", {p.end1, p.end2}}});
  for (const auto& y : a.annulus_arcs) {
    annuli.push_back({{"edge", y.edge}, {"ends", {y.end_alpha, y.end_alpha_prime}}, {"swift", y.swift}});
  }
  Json out = {{"surface", to_json(*a.surface)},
              {"points", points},
              {"crossings", crossings},
              {"pants_arcs", pants},
              {"annulus_arcs", annuli}};
  if (!a.parallel_components.empty()) out["parallel"] = pairs_json(a.parallel_components);
  return out;
}

ArcSystem arc_system_from_json(const Json& j) {
  ArcSystem a = guarded("arc system", [&] {
    ArcSystem a;
    a.surface = std::make_shared<const SurfaceModel>(surface_from_json(j.at("surface")));
    for (const auto& l : j.at("points")) {
      a.on_curve_points.push_back({l.at("edge").get<int>(), l.at("side").get<int>(), l.at("points").get<std::vector<int>>()});
    }
    for (const auto& c : j.value("crossings", Json::array())) {
      a.crossing_pairs.push_back({c.at("over").get<int>(), c.at("under").get<int>(), c.at("pants").get<int>()});
    }
    for (const auto& p : j.at("pants_arcs")) {
      a.pants_arcs.push_back({p.at("pants").get<int>(), p.at("ends").at(0).get<int>(), p.at("ends").at(1).get<int>()});
    }
    for (const auto& y : j.at("annulus_arcs")) {
      a.annulus_arcs.push_back({y.at("edge").get<int>(), y.at("ends").at(0).get<int>(), y.at("ends").at(1).get<int>(),
                                y.value("swift", 0)});
    }
    if (j.contains("parallel")) a.parallel_components = pairs_from(j.at("parallel"));
    return a;
  });
  const auto report = validate_arc_system(a);
  if (!report.ok()) throw ValidationError("invalid arc system:\n" + report.to_string());
  return a;
}

Json to_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues) issues.push_back({{"kind", i.kind}, {"message", i.message}});
  return {{"ok", r.ok()}, {"issues", issues}};
}

Json to_json(const IntersectionProfile& p) {
  return {{"per_edge", pairs_json(p.per_edge)}, {"total", p.total}, {"max", p.max}, {"max_edge", p.max_edge},
          {"m_gamma", p.m_gamma}};
}

Json to_json(const ColorShift& s) { return pairs_json(s.values); }

ColorShift shift_from_json(const Json& j) {
  return guarded("shift", [&] { return ColorShift{pairs_from(j)}; });
}

Json to_json(const LaurentPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.to_pairs()) out.push_back({e, c});
  return out;
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<std::pair<int, std::string>> pairs;
    for (const auto& item : j) pairs.emplace_back(item.at(0).get<int>(), item.at(1).get<std::string>());
    return LaurentPolynomial::from_pairs(pairs);
  });
}

Json to_json(const NormalizedCoefficient& c) {
  return {{"shift", to_json(c.shift)},         {"n_pp", c.n_pp},
          {"n_pm", c.n_pm},                    {"poly", to_json(c.poly)},
          {"poly_text", c.poly.to_string()},   {"state_count", c.state_count},
          {"reference", pairs_json(c.reference.signs)}, {"up_to_sign", c.up_to_sign}};
}

NormalizedCoefficient coefficient_from_json(const Json& j) {
  return guarded("coefficient", [&] {
    NormalizedCoefficient c;
    c.shift = shift_from_json(j.at("shift"));
    c.n_pp = j.at("n_pp").get<int>();
    c.n_pm = j.at("n_pm").get<int>();
    c.poly = polynomial_from_json(j.at("poly"));
    c.state_count = j.value("state_count", std::uint64_t{0});
    if (j.contains("reference")) c.reference.signs = pairs_from(j.at("reference"));
    c.up_to_sign = j.value("up_to_sign", true);
    return c;
  });
}

Json to_json(const BoundsReport& r) {
  return {{"n_lim", r.n_lim},
          {"genus", r.genus},
          {"total", r.total},
          {"lower", to_string(r.lower)},
          {"upper", to_string(r.upper)},
          {"max_bound", r.max_bound},
          {"two_pow", to_string(r.two_pow)},
          {"verdicts",
           {{"lower", r.lower_ok}, {"upper", r.upper_ok}, {"max", r.max_ok}, {"two_pow_informational", r.two_pow_ok}}},
          {"passed", r.passed()},
          {"note", "n_lim counts nonvanishing limit coefficients; it bounds the finite-r count from below"}};
}

Json to_json(const FamilyReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json item = {{"delta", w.delta}, {"shift", to_json(w.shift)}, {"nonzero", w.nonzero}};
    if (w.leading) item["leading"] = {{"degree", w.leading->degree}, {"coefficient", to_string(w.leading->coefficient)}};
    witnesses.push_back(item);
  }
  return {{"dominant_edge", r.dominant_edge}, {"max", r.max},           {"witnesses", witnesses},
          {"falsified", r.falsified},         {"vacuous", r.vacuous()}, {"passed", r.passed()}};
}

Json to_json(const AdmissibleColoring& c) { return {{"r", c.r}, {"colors", pairs_json(c.values)}}; }

Json to_json(const PairFunction& f) {
  Json values = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i != j && f.at(i, j).is_finite()) values.push_back({f.points()[i], f.points()[j], f.at(i, j).to_string()});
    }
  }
  return {{"points", f.points()}, {"values", values}};
}

PairFunction pair_function_from_json(const Json& j) {
  return guarded("pair function", [&] {
    PairFunction f(j.at("points").get<std::vector<std::string>>());
    for (const auto& v : j.at("values")) {
      f.set(v.at(0).get<std::string>(), v.at(1).get<std::string>(), ExtRational::parse(v.at(2).get<std::string>()));
    }
    return f;
  });
}

Json to_json(const FiniteMetric& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return {{"points", m.points}, {"d", rows}};
}

Json to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({g.vertices[u], g.vertices[v]});
  return {{"vertices", g.vertices}, {"edges", edges}};
}

SimpleGraph simple_graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    SimpleGraph g;
    g.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
      const auto u = g.index_of(e.at(0).get<std::string>());
      const auto v = g.index_of(e.at(1).get<std::string>());
      if (!u || !v) throw ValidationError("edge names an unknown vertex");
      if (*u == *v) throw ValidationError("self-loop in a simple graph");
      g.edges.emplace_back(*u, *v);
    }
    return g;
  });
}

Json to_json(const MetrificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"property", c.name}, {"checked", c.checked}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"checks", checks}, {"passed", r.passed()}};
}

Json to_json(const PathComparison& c) {
  Json out = {{"d_qt", to_json(c.d_qt)},
              {"d_pi", to_json(c.d_pi)},
              {"below_nu", c.below_nu},
              {"all_edges_two", c.all_edges_two},
              {"passed", c.passed()},
              {"note", "d_qt is computed on the declared vertices only and bounds the true distance from above"}};
  out["below_twice_path"] = c.below_twice_path ? Json(*c.below_twice_path) : Json(nullptr);
  out["tree_equality"] = c.tree_equality ? Json(*c.tree_equality) : Json(nullptr);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qint::io
