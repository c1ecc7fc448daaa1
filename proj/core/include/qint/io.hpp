#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qint/coloring.hpp"
#include "qint/curve.hpp"
#include "qint/metric.hpp"
#include "qint/quantum.hpp"
#include "qint/statesum.hpp"
#include "qint/surface.hpp"

namespace qint::io {

using Json = nlohmann::json;

// Readers throw ValidationError on malformed documents. Rationals are
// always strings ("p" or "p/q"), never JSON numbers.

Json to_json(const DualGraph& g);
DualGraph graph_from_json(const Json& j);

/// Catalog surfaces are written as {"catalog": {"genus", "name"}}, anything
/// else as {"graph": ...}.
Json to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const Json& j);

Json to_json(const ArcSystem& a);
/// The arc system is validated after parsing.
ArcSystem arc_system_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const IntersectionProfile& p);
Json to_json(const ColorShift& s);
ColorShift shift_from_json(const Json& j);
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);
Json to_json(const NormalizedCoefficient& c);
NormalizedCoefficient coefficient_from_json(const Json& j);
Json to_json(const BoundsReport& r);
Json to_json(const FamilyReport& r);
Json to_json(const AdmissibleColoring& c);

Json to_json(const PairFunction& f);
PairFunction pair_function_from_json(const Json& j);
Json to_json(const FiniteMetric& m);
Json to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const Json& j);
Json to_json(const MetrificationReport& r);
Json to_json(const PathComparison& c);

Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace qint::io
