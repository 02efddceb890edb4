#include "strongconv/io/json_io.hpp"

#include "strongconv/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace strongconv::io {

using topology::Simplex;
using topology::SimplicialComplex;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_document(const std::string& path) { return parse_document(read_file(path), path); }

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(where + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::string label_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InputError(where + ": vertex labels must be strings or integers");
}

Json opt(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& r) { return numeric::to_string(r); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return numeric::parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(numeric::Integer(j.get<long long>()));
  throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, const std::string& where) {
  array_at(j, where);
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json to_json(const numeric::Halfspace& h) { return Json{{"a", to_json(h.normal)}, {"b", to_json(h.offset)}}; }

ConvexBody body_from_json(const Json& j, int default_sides) {
  if (!j.is_object()) throw InputError("body: expected an object");
  if (j.contains("ball")) {
    const Json& b = j["ball"];
    const Vector center = vector_from_json(field(b, "center", "body.ball"), "body.ball.center");
    const Rational radius = rational_from_json(field(b, "radius", "body.ball"), "body.ball.radius");
    int sides = default_sides;
    if (b.contains("sides")) sides = static_cast<int>(count_from_json(b["sides"], "body.ball.sides"));
    return ConvexBody::ball_approximation(center, radius, sides);
  }
  if (j.contains("halfspaces")) {
    const std::size_t dim = count_from_json(field(j, "dim", "body"), "body.dim");
    const Json& hs = array_at(j["halfspaces"], "body.halfspaces");
    std::vector<numeric::Halfspace> list;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const std::string w = "body.halfspaces[" + std::to_string(i) + "]";
      list.push_back(numeric::Halfspace{vector_from_json(field(hs[i], "a", w), w + ".a"), rational_from_json(field(hs[i], "b", w), w + ".b")});
    }
    return ConvexBody::from_halfspaces(dim, std::move(list));
  }
  if (j.contains("vertices")) {
    const Json& vs = array_at(j["vertices"], "body.vertices");
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) pts.push_back(vector_from_json(vs[i], "body.vertices[" + std::to_string(i) + "]"));
    if (pts.empty()) throw InputError("body.vertices: at least one vertex is required");
    std::size_t dim = pts[0].size();
    if (j.contains("dim")) dim = count_from_json(j["dim"], "body.dim");
    return ConvexBody::from_vertices(dim, std::move(pts));
  }
  throw InputError("body: expected \"halfspaces\", \"vertices\" or \"ball\"");
}

Json to_json(const ConvexBody& k) {
  Json out{{"dim", k.dim()}};
  if (k.has_vertices()) {
    Json vs = Json::array();
    for (const auto& v : k.vertices()) vs.push_back(to_json(v));
    out["vertices"] = std::move(vs);
  }
  if (k.has_halfspaces()) {
    Json hs = Json::array();
    for (const auto& h : k.halfspaces()) hs.push_back(to_json(h));
    out["halfspaces"] = std::move(hs);
  }
  return out;
}

std::vector<Vector> points_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "points", "points") : j;
  array_at(list, "points");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(vector_from_json(list[i], "points[" + std::to_string(i) + "]"));
  return out;
}

separation::ColoredPointSet colored_from_json(const Json& j) {
  const std::size_t dim = count_from_json(field(j, "dim", "colored set"), "dim");
  const std::size_t colors = count_from_json(field(j, "colors", "colored set"), "colors");
  const Json& list = array_at(field(j, "points", "colored set"), "points");
  std::vector<separation::ColoredPoint> pts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = "points[" + std::to_string(i) + "]";
    pts.push_back(separation::ColoredPoint{vector_from_json(field(list[i], "x", w), w + ".x"),
                                           count_from_json(field(list[i], "color", w), w + ".color")});
  }
  return separation::ColoredPointSet(dim, colors, std::move(pts));
}

Json to_json(const separation::ColoredPointSet& x) {
  Json pts = Json::array();
  for (const auto& p : x.points()) pts.push_back(Json{{"x", to_json(p.x)}, {"color", p.color}});
  return Json{{"dim", x.dim()}, {"colors", x.colors()}, {"points", std::move(pts)}};
}

Json to_json(const separation::SeparationWitness& w) {
  return Json{{"translate", to_json(w.translate)}, {"violated_facet", to_json(w.violated_facet)}};
}

Json to_json(const separation::ColorfulReport& r, const separation::ColoredPointSet& x) {
  Json out{{"hypothesis_holds", r.hypothesis_holds}, {"nonstandard", r.nonstandard}, {"transversals_checked", r.transversals_checked}};
  out["violating_transversal"] = r.violating_transversal ? Json(*r.violating_transversal) : Json(nullptr);
  out["separated_color"] = r.separated_color ? Json(*r.separated_color) : Json(nullptr);
  out["separated_pair"] = r.separated_pair ? Json::array({r.separated_pair->first, r.separated_pair->second}) : Json(nullptr);
  if (r.separated_color) {
    Json pts = Json::array();
    for (const auto& p : x.class_points(*r.separated_color)) pts.push_back(to_json(p));
    out["separated_points"] = std::move(pts);
  }
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out["theorem_violated"] = r.theorem_violated();
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& vs = array_at(field(j, "vertices", "complex"), "vertices");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string l = label_of(vs[i], "vertices[" + std::to_string(i) + "]");
    if (!index.emplace(l, i).second) throw InputError("vertices: duplicate label " + l);
    labels.push_back(std::move(l));
  }
  auto sets = [&](const Json& list, const std::string& name) {
    array_at(list, name);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string w = name + "[" + std::to_string(i) + "]";
      array_at(list[i], w);
      std::vector<std::size_t> s;
      for (std::size_t k = 0; k < list[i].size(); ++k) {
        const std::string l = label_of(list[i][k], w + "[" + std::to_string(k) + "]");
        auto it = index.find(l);
        if (it == index.end()) throw InputError(w + ": unknown vertex " + l);
        s.push_back(it->second);
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  if (j.value("void", false)) return SimplicialComplex::void_complex(std::move(labels));
  const auto facets = j.contains("facets") ? sets(j["facets"], "facets") : std::vector<std::vector<std::size_t>>{};
  std::optional<std::vector<std::vector<std::size_t>>> partition;
  if (j.contains("partition")) partition = sets(j["partition"], "partition");
  return SimplicialComplex::from_facets(std::move(labels), facets, std::move(partition));
}

Json simplex_to_json(const SimplicialComplex& c, Simplex s) {
  Json out = Json::array();
  for (std::size_t v : topology::simplex_vertices(s)) out.push_back(c.labels()[v]);
  return out;
}

Json to_json(const SimplicialComplex& c) {
  Json out{{"vertices", c.labels()}};
  if (c.is_void()) {
    out["void"] = true;
    out["facets"] = Json::array();
  } else {
    Json fs = Json::array();
    for (Simplex f : c.facets()) fs.push_back(simplex_to_json(c, f));
    out["facets"] = std::move(fs);
  }
  if (c.partition()) {
    Json ps = Json::array();
    for (Simplex p : *c.partition()) ps.push_back(simplex_to_json(c, p));
    out["partition"] = std::move(ps);
  }
  return out;
}

Json to_json(const topology::HomologyProfile& h) {
  Json betti = Json::object();
  for (const auto& [i, b] : h.betti)
    if (b != 0) betti[std::to_string(i)] = b;
  Json out{{"betti", std::move(betti)}};
  if (h.is_empty_complex) out["is_empty_complex"] = true;
  return out;
}

Json to_json(const topology::MeshulamReport& r, const SimplicialComplex& c) {
  Json out{{"hypothesis_holds", r.hypothesis_holds}};
  out["violating_I"] = r.violating_I ? Json(*r.violating_I) : Json(nullptr);
  if (r.violating_I) {
    out["violating_dimension"] = r.violating_dimension;
    out["violating_betti"] = r.violating_betti;
  }
  out["colorful_simplex"] = r.colorful_simplex ? simplex_to_json(c, *r.colorful_simplex) : Json(nullptr);
  out["theorem_violated"] = r.theorem_violated();
  return out;
}

Json to_json(const topology::LinkCheckReport& r) {
  auto cond = [](const topology::LinkCondition& c) { return Json{{"holds", c.holds}, {"detail", c.detail}}; };
  Json out;
  out["conditions"] = Json{{"partition", cond(r.partition)},
                           {"transversals", cond(r.transversals)},
                           {"homology", cond(r.homology)},
                           {"links", cond(r.links)}};
  out["all_hold"] = r.all_hold();
  out["pair"] = r.pair ? Json::array({r.pair->first, r.pair->second}) : Json(nullptr);
  out["theorem_violated"] = r.theorem_violated();
  return out;
}

Json to_json(const topology::RegionProbe& p) {
  return Json{{"classification", topology::to_string(p.classification)}, {"resolution", p.resolution}, {"approximate", true},
              {"homology", to_json(p.betti)}};
}

Json to_json(const bodies::SummandReport& r) {
  return Json{{"is_summand", r.is_summand},
              {"complement", r.complement ? to_json(*r.complement) : Json(nullptr)},
              {"witness_point", r.witness_point ? to_json(*r.witness_point) : Json(nullptr)}};
}

Json to_json(const topology::SummandProbeReport& r) {
  std::map<std::string, std::size_t> counts{{"empty", 0}, {"acyclic", 0}, {"other", 0}};
  Json slices = Json::array();
  for (const auto& s : r.slices) {
    ++counts[topology::to_string(s.final_class())];
    Json e{{"t", to_json(s.t)}, {"class", topology::to_string(s.probe.classification)}};
    if (s.refined) e["refined"] = to_json(*s.refined);
    if (s.probe.classification == topology::SliceClass::other) e["homology"] = to_json(s.probe.betti);
    slices.push_back(std::move(e));
  }
  Json c = Json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  return Json{{"summand", to_json(r.summand)},
              {"all_acyclic_on_grid", r.all_acyclic_on_grid},
              {"consistent", r.consistent},
              {"converse_is_evidence_only", true},
              {"resolution", r.resolution},
              {"slice_counts", std::move(c)},
              {"slices", std::move(slices)}};
}

Json to_json(const bodies::GeneratingReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back(Json{{"pair_index", f.pair_index}, {"witness_point", to_json(f.witness_point)}});
  return Json{{"all_passed", r.all_passed}, {"pairs_checked", r.pairs_checked}, {"sampling_evidence_only", true}, {"failures", std::move(fails)}};
}

counterexample::BuildParams build_params_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("counterexample parameters: expected an object");
  counterexample::BuildParams p;
  if (j.contains("n")) p.n = static_cast<int>(count_from_json(j["n"], "n"));
  if (j.contains("delta")) p.delta = rational_from_json(j["delta"], "delta");
  if (j.contains("clip")) p.clip_height = rational_from_json(j["clip"], "clip");
  if (j.contains("window")) p.x_window = rational_from_json(j["window"], "window");
  if (j.contains("y_step")) p.y_step = rational_from_json(j["y_step"], "y_step");
  if (j.contains("x_step")) p.x_step = rational_from_json(j["x_step"], "x_step");
  return p;
}

Json to_json(const counterexample::CounterexampleInstance& inst) {
  const auto& f = inst.family;
  Json pts = Json::array();
  for (std::size_t i = 0; i < inst.points.size(); ++i) pts.push_back(Json{{"label", inst.labels[i]}, {"point", to_json(inst.points[i])}});
  Json secs = Json::array();
  for (const auto& [y, k] : inst.sections) {
    Json vs = Json::array();
    for (const auto& v : k.vertices()) vs.push_back(to_json(v));
    secs.push_back(Json{{"y", to_json(y)}, {"vertices", std::move(vs)}});
  }
  return Json{{"n", f.n},
              {"delta", to_json(f.delta)},
              {"clip", to_json(f.clip_height)},
              {"window", to_json(f.x_window)},
              {"x_step", to_json(f.x_step)},
              {"y_step", to_json(f.y_step)},
              {"points", std::move(pts)},
              {"sections", std::move(secs)}};
}

Json to_json(const counterexample::CounterexampleReport& r) {
  Json subsets = Json::array();
  for (const auto& s : r.maximal_subsets) {
    Json e{{"dropped", s.label}, {"y", opt(s.y)}};
    if (s.witness) e["witness"] = to_json(*s.witness);
    subsets.push_back(std::move(e));
  }
  Json secs = Json::array();
  std::size_t blocked = 0;
  for (const auto& s : r.sections) {
    secs.push_back(Json{{"y", to_json(s.y)}, {"blocked", s.blocked}});
    blocked += s.blocked;
  }
  Json out{{"passed", r.passed},
           {"maximal_subsets_separable", r.maximal_subsets_separable},
           {"full_set_blocked", r.full_set_blocked},
           {"sections_blocked", blocked},
           {"sections_checked", r.sections.size()},
           {"maximal_subsets", std::move(subsets)},
           {"sections", std::move(secs)}};
  out["caratheodory_number"] = r.caratheodory ? Json(*r.caratheodory) : Json(nullptr);
  out["caratheodory_subset"] = r.caratheodory_subset ? Json(*r.caratheodory_subset) : Json(nullptr);
  out["failures"] = r.failures;
  return out;
}

}  // namespace strongconv::io
