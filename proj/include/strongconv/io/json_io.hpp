#pragma once

#include "json.hpp"
#include "strongconv/bodies/convex_body.hpp"
#include "strongconv/bodies/operations.hpp"
#include "strongconv/counterexample/counterexample.hpp"
#include "strongconv/separation/separation.hpp"
#include "strongconv/topology/complex.hpp"
#include "strongconv/topology/region.hpp"

#include <string>

namespace strongconv::io {

using Json = nlohmann::ordered_json;
using bodies::ConvexBody;
using numeric::Rational;
using numeric::Vector;

/// Parses a document; syntax errors become InputError with the byte offset.
Json parse_document(const std::string& text, const std::string& source);
Json read_document(const std::string& path);
std::string read_file(const std::string& path);

// Rationals are "p/q" strings ("p" when q = 1); integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& where);
Json to_json(const numeric::Halfspace& h);

/// {"dim", "halfspaces": [{"a", "b"}]} or {"vertices"} or {"ball": {"center",
/// "radius", "sides"}}; `default_sides` applies when a ball omits "sides".
ConvexBody body_from_json(const Json& j, int default_sides = 64);
Json to_json(const ConvexBody& k);

/// A bare list of points or {"points": [...]}.
std::vector<Vector> points_from_json(const Json& j);

separation::ColoredPointSet colored_from_json(const Json& j);
Json to_json(const separation::ColoredPointSet& x);
Json to_json(const separation::SeparationWitness& w);
Json to_json(const separation::ColorfulReport& r, const separation::ColoredPointSet& x);

/// {"vertices": [labels], "facets": [[labels]], "partition": [[labels]]};
/// labels may be strings or numbers.
topology::SimplicialComplex complex_from_json(const Json& j);
Json to_json(const topology::SimplicialComplex& c);
Json simplex_to_json(const topology::SimplicialComplex& c, topology::Simplex s);
/// {"betti": {"i": b}} with the nonzero entries; the void complex also
/// carries "is_empty_complex": true.
Json to_json(const topology::HomologyProfile& h);
Json to_json(const topology::MeshulamReport& r, const topology::SimplicialComplex& c);
Json to_json(const topology::LinkCheckReport& r);
Json to_json(const topology::RegionProbe& p);
Json to_json(const topology::SummandProbeReport& r);

Json to_json(const bodies::SummandReport& r);
Json to_json(const bodies::GeneratingReport& r);

counterexample::BuildParams build_params_from_json(const Json& j);
Json to_json(const counterexample::CounterexampleInstance& inst);
Json to_json(const counterexample::CounterexampleReport& r);

}  // namespace strongconv::io
