#include "strongconv/cli/cli.hpp"

#include "CLI11.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/io/json_io.hpp"
#include "strongconv/io/svg.hpp"
#include "strongconv/numeric/lp.hpp"
#include "strongconv/separation/generators.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace strongconv::cli {

namespace {

using bodies::ConvexBody;
using io::Json;
using numeric::Rational;
using numeric::Vector;
using topology::SimplicialComplex;

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(what + ": expected a non-negative integer, got \"" + text + "\"");
  }
  try {
    return std::stoull(t);
  } catch (const std::out_of_range&) {
    throw InputError(what + ": value out of range");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

Vector parse_point(const std::string& text, const std::string& what) {
  Vector v;
  for (const auto& part : split(text, ',')) v.push_back(numeric::parse_rational(part));
  if (v.empty()) throw InputError(what + ": empty point");
  return v;
}

/// Loads inputs once each and folds their bytes into the report digest.
class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg(cfg) {}

  const RunConfig& cfg;
  int exit_code = 0;

  Json doc(const std::string& path) {
    const std::string text = io::read_file(path);
    absorb(text);
    return io::parse_document(text, path);
  }

  /// A JSON body file, or "named:<triangle|square|hexagon|disk>".
  ConvexBody body(const std::string& spec) {
    if (spec.rfind("named:", 0) == 0) {
      absorb(spec);
      return separation::named_body(spec.substr(6), cfg.ball_sides);
    }
    return io::body_from_json(doc(spec), cfg.ball_sides);
  }

  std::vector<Vector> points(const std::string& path) { return io::points_from_json(doc(path)); }
  SimplicialComplex complex(const std::string& path) { return io::complex_from_json(doc(path)); }

  std::string digest() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  void absorb(const std::string& bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= kFnvPrime;
    }
    // separator so that ("ab", "c") and ("a", "bc") differ
    hash_ ^= 0xff;
    hash_ *= kFnvPrime;
  }

  std::uint64_t hash_ = kFnvOffset;
};

struct Args {
  std::string body, points, by, a, b, compactum, point, query, in, simplex, pairs, scene, bodies, params;
  std::string section;
  std::size_t samples = 32;
  std::size_t n = 0;
  std::size_t steps = 8;
  std::size_t random = 0;
  bool allow_nonstandard = false;
  // counterexample overrides
  std::optional<int> cx_n;
  std::string delta, clip, window, y_step, x_step;
};

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Json with_homology(const SimplicialComplex& c) {
  return Json{{"complex", io::to_json(c)}, {"homology", io::to_json(topology::reduced_betti(c))}};
}

separation::VerifyOptions verify_options(const Session& s, const Args& a) {
  separation::VerifyOptions o;
  o.transversal_cap = s.cfg.transversal_cap;
  o.allow_nonstandard = a.allow_nonstandard;
  o.jobs = s.cfg.jobs;
  return o;
}

/// `c` is the set avoided by the separated class, used to re-check the witness.
Json colorful_result(Session& s, const ConvexBody& k, const separation::ColorfulReport& r,
                     const separation::ColoredPointSet& x, const std::optional<ConvexBody>& c) {
  if (r.theorem_violated()) s.exit_code = 2;
  Json out = io::to_json(r, x);
  if (c && r.separated_color && r.witness) {
    out["verified"] = separation::verify_witness(k, x.class_points(*r.separated_color), *c, *r.witness);
  }
  return out;
}

// ---- geometry commands

Json cmd_erode(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  std::optional<ConvexBody> r;
  if (!a.by.empty()) {
    r = bodies::erode(k, s.body(a.by));
  } else if (!a.points.empty()) {
    r = bodies::erode(k, s.points(a.points));
  } else {
    throw InputError("erode needs --points or --by");
  }
  return Json{{"empty", !r}, {"body", r ? io::to_json(*r) : Json(nullptr)}};
}

Json cmd_sum(Session& s, const Args& a) {
  return Json{{"body", io::to_json(bodies::minkowski_sum(s.body(a.a), s.body(a.b)))}};
}

Json cmd_hull(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  return Json{{"body", io::to_json(bodies::strongly_convex_hull(k, s.points(a.points)))}};
}

Json cmd_summand(Session& s, const Args& a) {
  const ConvexBody m = s.body(a.a);
  return io::to_json(bodies::is_summand(m, s.body(a.b)));
}

Json cmd_generating(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  std::vector<std::pair<Vector, Vector>> pairs;
  Json source;
  if (!a.pairs.empty()) {
    const Json j = s.doc(a.pairs);
    if (!j.is_array()) throw InputError(a.pairs + ": expected a list of point pairs");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string w = "pairs[" + std::to_string(i) + "]";
      if (!j[i].is_array() || j[i].size() != 2) throw InputError(w + ": expected [p, q]");
      pairs.emplace_back(io::vector_from_json(j[i][0], w + "[0]"), io::vector_from_json(j[i][1], w + "[1]"));
    }
    source = Json{{"pairs_file", true}};
  } else {
    // grid points in [-1/2, 1/2]^d, keeping pairs that fit in a translate of K
    Rng rng(s.cfg.seed);
    std::size_t draws = 0;
    while (pairs.size() < a.samples) {
      if (++draws > 100 * a.samples + 100) throw PreconditionError("could not sample pairs that fit inside the body");
      Vector p = separation::random_grid_point(rng, k.dim(), Rational(1, 2), 16);
      Vector q = separation::random_grid_point(rng, k.dim(), Rational(1, 2), 16);
      if (bodies::erode(k, std::vector<Vector>{p, q})) pairs.emplace_back(std::move(p), std::move(q));
    }
    source = Json{{"sampled", a.samples}, {"draws", draws}};
  }
  Json out = io::to_json(bodies::generating_probe(k, pairs));
  out["pairs"] = std::move(source);
  return out;
}

Json cmd_separate(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  const std::vector<Vector> pts = s.points(a.points);
  const ConvexBody c = !a.compactum.empty() ? s.body(a.compactum)
                       : !a.point.empty()   ? ConvexBody::point(parse_point(a.point, "--point"))
                                            : ConvexBody::point(numeric::zero_vector(k.dim()));
  const auto w = separation::separate(k, pts, c);
  Json out{{"separable", w.has_value()}, {"witness", w ? io::to_json(*w) : Json(nullptr)}};
  out["verified"] = w ? separation::verify_witness(k, pts, c, *w) : false;
  return out;
}

Json cmd_colorful(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  const auto x = io::colored_from_json(s.doc(a.points));
  return colorful_result(s, k, separation::verify_colorful(k, x, verify_options(s, a)), x,
                         ConvexBody::point(numeric::zero_vector(k.dim())));
}

Json cmd_colorful_compactum(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  const auto x = io::colored_from_json(s.doc(a.points));
  const ConvexBody c = s.body(a.compactum);
  return colorful_result(s, k, separation::verify_colorful_compactum(k, x, c, verify_options(s, a)), x, c);
}

Json cmd_very_colorful(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  const auto x = io::colored_from_json(s.doc(a.points));
  return colorful_result(s, k, separation::verify_very_colorful(k, x, verify_options(s, a)), x, std::nullopt);
}

Json cmd_cara(Session& s, const Args& a) {
  const ConvexBody k = s.body(a.body);
  const std::vector<Vector> x = s.points(a.points);
  const Vector p = a.query.empty() ? numeric::zero_vector(k.dim()) : parse_point(a.query, "--query");
  const auto r = separation::caratheodory_number(k, x, p, s.cfg.subset_cap);
  Json out{{"query", io::to_json(p)}, {"in_hull", r.subset.has_value()}};
  out["size"] = r.subset ? Json(r.subset->size()) : Json(nullptr);
  out["subset"] = r.subset ? Json(*r.subset) : Json(nullptr);
  out["subsets_checked"] = r.subsets_checked;
  return out;
}

// ---- complexes

Json cmd_nerve(Session& s, const Args& a) {
  if (!a.bodies.empty()) {
    const Json j = s.doc(a.bodies);
    const Json& list = j.is_object() && j.contains("bodies") ? j["bodies"] : j;
    if (!list.is_array() || list.empty()) throw InputError(a.bodies + ": expected a nonempty list of bodies");
    std::vector<ConvexBody> family;
    for (const auto& b : list) family.push_back(io::body_from_json(b, s.cfg.ball_sides));
    const std::size_t dim = family[0].dim();
    for (const auto& b : family) {
      if (b.dim() != dim) throw InputError(a.bodies + ": bodies of different dimensions");
    }
    auto intersects = [&](topology::Simplex mask) {
      std::vector<numeric::Halfspace> hs;
      for (std::size_t i : topology::simplex_vertices(mask)) {
        const auto& h = family[i].halfspaces();
        hs.insert(hs.end(), h.begin(), h.end());
      }
      return numeric::lp_feasible(dim, hs);
    };
    return with_homology(topology::nerve(SimplicialComplex::numbered(family.size(), "b"), intersects, s.cfg.transversal_cap));
  }
  if (a.body.empty() || a.points.empty()) throw InputError("nerve needs --bodies, or --body with --points");
  const ConvexBody k = s.body(a.body);
  return with_homology(topology::translate_nerve(k, s.points(a.points), s.cfg.transversal_cap));
}

Json cmd_homology(Session& s, const Args& a) { return io::to_json(topology::reduced_betti(s.complex(a.in))); }

Json cmd_link(Session& s, const Args& a) {
  const SimplicialComplex c = s.complex(a.in);
  topology::Simplex sigma = 0;
  for (const auto& l : split(a.simplex, ',')) {
    if (l.empty()) continue;
    const auto& labels = c.labels();
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw InputError("--simplex: unknown vertex " + l);
    sigma |= topology::Simplex{1} << (it - labels.begin());
  }
  return with_homology(topology::link(c, sigma));
}

Json cmd_dual(Session& s, const Args& a) { return with_homology(topology::alexander_dual(s.complex(a.in))); }

Json cmd_join(Session& s, const Args& a) {
  const SimplicialComplex x = s.complex(a.a);
  return with_homology(topology::join(x, s.complex(a.b)));
}

Json cmd_meshulam(Session& s, const Args& a) {
  const SimplicialComplex c = s.complex(a.in);
  const auto r = topology::meshulam_check(c);
  if (r.theorem_violated()) s.exit_code = 2;
  return io::to_json(r, c);
}

Json cmd_prop34(Session& s, const Args& a) {
  const auto r = topology::very_colorful_link_check(s.complex(a.in), a.n, s.cfg.transversal_cap);
  if (r.theorem_violated()) s.exit_code = 2;
  return io::to_json(r);
}

// ---- region probes

Json probe_json(const topology::RegionProbe& p) {
  Json out = io::to_json(p);
  out["theorem_violated"] = p.classification == topology::SliceClass::other;
  return out;
}

Json cmd_acyclic_probe(Session& s, const Args& a) {
  const std::size_t res = s.cfg.raster_resolution;
  if (a.random == 0) {
    const ConvexBody k = s.body(a.body);
    const ConvexBody t = s.body(a.by);
    const auto p = topology::probe_difference(k, bodies::minkowski_sum(k, t), res);
    if (p.classification == topology::SliceClass::other) s.exit_code = 2;
    return Json{{"set", "K \\ (K + T)"}, {"probe", probe_json(p)}};
  }
  Rng rng(s.cfg.seed);
  std::vector<std::pair<ConvexBody, ConvexBody>> pairs;
  for (std::size_t i = 0; i < a.random; ++i) pairs.push_back(topology::random_difference_pair(rng));
  std::vector<topology::RegionProbe> probes(pairs.size());
  parallel_for(pairs.size(), s.cfg.jobs, [&](std::size_t i) {
    probes[i] = topology::probe_difference(pairs[i].first, bodies::minkowski_sum(pairs[i].first, pairs[i].second), res);
  });
  std::map<std::string, std::size_t> counts{{"empty", 0}, {"acyclic", 0}, {"other", 0}};
  Json list = Json::array();
  for (std::size_t i = 0; i < probes.size(); ++i) {
    ++counts[topology::to_string(probes[i].classification)];
    list.push_back(Json{{"k", io::to_json(pairs[i].first)}, {"t", io::to_json(pairs[i].second)}, {"probe", io::to_json(probes[i])}});
  }
  if (counts["other"] > 0) s.exit_code = 2;
  return Json{{"set", "K \\ (K + T)"},
              {"pairs", a.random},
              {"counts", {{"empty", counts["empty"]}, {"acyclic", counts["acyclic"]}, {"other", counts["other"]}}},
              {"theorem_violated", counts["other"] > 0},
              {"profiles", std::move(list)}};
}

Json cmd_summand_probe(Session& s, const Args& a) {
  const std::size_t res = s.cfg.raster_resolution;
  if (a.random == 0) {
    const ConvexBody x = s.body(a.a);
    const ConvexBody y = s.body(a.b);
    const auto r = topology::summand_acyclicity_probe(x, y, topology::default_translate_grid(x, y, a.steps), res);
    if (!r.consistent) s.exit_code = 2;
    return io::to_json(r);
  }
  Rng rng(s.cfg.seed);
  std::vector<std::pair<ConvexBody, ConvexBody>> pairs;
  for (std::size_t i = 0; i < a.random; ++i) pairs.push_back(topology::random_summand_pair(rng));
  std::vector<Json> rows(pairs.size());
  parallel_for(pairs.size(), s.cfg.jobs, [&](std::size_t i) {
    const auto& [x, y] = pairs[i];
    const auto r = topology::summand_acyclicity_probe(x, y, topology::default_translate_grid(x, y, a.steps), res);
    const Json full = io::to_json(r);
    rows[i] = Json{{"a", io::to_json(x)},
                   {"b", io::to_json(y)},
                   {"is_summand", r.summand.is_summand},
                   {"all_acyclic_on_grid", r.all_acyclic_on_grid},
                   {"consistent", r.consistent},
                   {"slice_counts", full["slice_counts"]}};
  });
  std::size_t inconsistent = 0;
  Json list = Json::array();
  for (auto& row : rows) {
    inconsistent += !row["consistent"].get<bool>();
    list.push_back(std::move(row));
  }
  if (inconsistent > 0) s.exit_code = 2;
  return Json{{"pairs", a.random}, {"steps", a.steps}, {"inconsistent", inconsistent}, {"results", std::move(list)}};
}

// ---- counterexample

counterexample::BuildParams counterexample_params(Session& s, const Args& a) {
  counterexample::BuildParams p;
  if (!a.params.empty()) p = io::build_params_from_json(s.doc(a.params));
  if (a.cx_n) p.n = *a.cx_n;
  if (!a.delta.empty()) p.delta = numeric::parse_rational(a.delta);
  if (!a.clip.empty()) p.clip_height = numeric::parse_rational(a.clip);
  if (!a.window.empty()) p.x_window = numeric::parse_rational(a.window);
  if (!a.y_step.empty()) p.y_step = numeric::parse_rational(a.y_step);
  if (!a.x_step.empty()) p.x_step = numeric::parse_rational(a.x_step);
  return p;
}

Json section_figure(const Session& s, const counterexample::CounterexampleInstance& inst, const Args& a) {
  const Rational y = numeric::parse_rational(a.section.empty() ? "1/2" : a.section);
  const ConvexBody sec = counterexample::planar_section_body(inst, y);
  io::SvgScene scene;
  scene.shapes.push_back({sec.polygon(), "body"});
  for (const auto& p : inst.planar_points()) scene.marks.push_back({p, "point"});
  scene.marks.push_back({Vector{Rational(0), Rational(0)}, "origin"});
  io::write_svg(scene, s.cfg.svg);
  return Json{{"path", s.cfg.svg}, {"section", io::to_json(y)}};
}

Json cmd_cx_build(Session& s, const Args& a) {
  const auto inst = counterexample::build_family(counterexample_params(s, a));
  Json out{{"instance", io::to_json(inst)}};
  if (!s.cfg.svg.empty()) out["svg"] = section_figure(s, inst, a);
  return out;
}

Json cmd_cx_verify(Session& s, const Args& a) {
  const auto inst = counterexample::build_family(counterexample_params(s, a));
  Json params = io::to_json(inst);
  params.erase("sections");
  params["sections_built"] = inst.sections.size();
  Json out{{"instance", std::move(params)}, {"report", io::to_json(counterexample::verify_counterexample(inst, s.cfg.jobs))}};
  if (!s.cfg.svg.empty()) out["svg"] = section_figure(s, inst, a);
  return out;
}

// ---- plot

/// The slice {y = s} of a 3D body, as a polygon in the (x, z) plane.
std::optional<bodies::planar::Polygon> section_polygon(const ConvexBody& k, const Rational& y) {
  std::vector<numeric::Halfspace> hs;
  for (const auto& h : k.halfspaces()) hs.push_back({Vector{h.normal[0], h.normal[2]}, h.offset - h.normal[1] * y});
  return bodies::planar::intersect_halfplanes(hs);
}

Json cmd_plot(Session& s, const Args& a) {
  if (s.cfg.svg.empty()) throw InputError("plot needs --svg");
  const Json j = s.doc(a.scene);
  if (!j.is_object()) throw InputError(a.scene + ": expected a scene object");
  std::optional<Rational> section;
  if (!a.section.empty()) section = numeric::parse_rational(a.section);
  io::SvgScene scene;
  auto flat = [&](const ConvexBody& k) -> std::optional<bodies::planar::Polygon> {
    if (k.dim() == 2) return k.polygon();
    if (k.dim() != 3) throw InputError("plot draws planar scenes or sections of 3D ones");
    if (!section) throw InputError("3D scene needs --section y; select a section for 3D data");
    return section_polygon(k, *section);
  };
  std::vector<ConvexBody> bodies_in;
  for (const char* role : {"bodies", "regions"}) {
    if (!j.contains(role)) continue;
    for (const auto& b : j[role]) {
      ConvexBody k = io::body_from_json(b, s.cfg.ball_sides);
      if (auto poly = flat(k)) scene.shapes.push_back({*poly, std::string(role) == "bodies" ? "body" : "region"});
      if (std::string(role) == "bodies") bodies_in.push_back(std::move(k));
    }
  }
  std::vector<Vector> pts;
  if (j.contains("points")) pts = io::points_from_json(j["points"]);
  if (j.value("hull", false)) {
    if (bodies_in.empty() || pts.empty()) throw InputError(a.scene + ": a hull needs a body and points");
    const ConvexBody h = bodies::strongly_convex_hull(bodies_in.front(), pts);
    if (auto poly = flat(h)) scene.shapes.push_back({*poly, "hull"});
  }
  for (const auto& p : pts) {
    if (p.size() == 3) {
      if (!section) throw InputError("3D scene needs --section y; select a section for 3D data");
      scene.marks.push_back({Vector{p[0], p[2]}, "point"});
    } else {
      scene.marks.push_back({p, "point"});
    }
  }
  if (j.value("origin", false)) scene.marks.push_back({Vector{Rational(0), Rational(0)}, "origin"});
  io::write_svg(scene, s.cfg.svg);
  return Json{{"svg", s.cfg.svg}, {"shapes", scene.shapes.size()}, {"marks", scene.marks.size()}};
}

using Handler = Json (*)(Session&, const Args&);

}  // namespace

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw InputError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "seed") {
      cfg.seed = parse_count(value, where);
    } else if (key == "transversal_cap") {
      cfg.transversal_cap = parse_count(value, where);
    } else if (key == "subset_cap") {
      cfg.subset_cap = parse_count(value, where);
    } else if (key == "raster_resolution") {
      cfg.raster_resolution = parse_count(value, where);
    } else if (key == "ball_sides") {
      cfg.ball_sides = static_cast<int>(parse_count(value, where));
    } else if (key == "jobs") {
      cfg.jobs = static_cast<unsigned>(parse_count(value, where));
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "svg") {
      cfg.svg = value;
    } else {
      throw InputError(where + ": unknown key \"" + key + "\"");
    }
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.transversal_cap == 0 || cfg.subset_cap == 0) throw InputError("caps must be positive");
  if (cfg.raster_resolution < 8) throw InputError("raster resolution must be at least 8");
  if (cfg.ball_sides < 3) throw InputError("ball_sides must be at least 3");
  if (cfg.jobs == 0) throw InputError("jobs must be positive");
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, std::cout, std::cerr);
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with strongly convex hulls, colorful separation and complexes", "strongconv"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::uint64_t seed = 0, transversal_cap = 0, subset_cap = 0;
  std::size_t resolution = 0;
  int ball_sides = 0;
  unsigned jobs = 0;
  std::string out_path, svg_path;
  bool timing = false;
  auto* o_config = app.add_option("--config", config_path, "key = value configuration file");
  auto* o_seed = app.add_option("--seed", seed, "random seed (overrides STRONGCONV_SEED)");
  auto* o_tcap = app.add_option("--transversal-cap", transversal_cap, "maximum transversals or simplices enumerated");
  auto* o_scap = app.add_option("--subset-cap", subset_cap, "maximum subsets tried by cara-number");
  auto* o_res = app.add_option("--resolution", resolution, "raster cells per axis for region probes");
  auto* o_sides = app.add_option("--ball-sides", ball_sides, "polygon sides for ball approximations");
  auto* o_jobs = app.add_option("--jobs", jobs, "worker threads");
  auto* o_out = app.add_option("--out", out_path, "write the report here instead of standard output");
  auto* o_svg = app.add_option("--svg", svg_path, "figure output path");
  app.add_flag("--timing", timing, "add wall-clock timing to the report");

  Args a;
  std::vector<std::pair<CLI::App*, std::pair<std::string, Handler>>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h, CLI::App* parent = nullptr) {
    CLI::App* sub = (parent ? parent : &app)->add_subcommand(name, help);
    commands.push_back({sub, {parent ? parent->get_name() + " " + name : name, h}});
    return sub;
  };
  const std::string body_help = "body JSON file, or named:<triangle|square|hexagon|disk>";

  auto* c = add("erode", "K eroded by a finite set or a body", cmd_erode);
  c->add_option("--body", a.body, body_help)->required();
  c->add_option("--points", a.points, "points JSON");
  c->add_option("--by", a.by, "body to erode by");
  c = add("sum", "Minkowski sum", cmd_sum);
  c->add_option("--a", a.a, body_help)->required();
  c->add_option("--b", a.b, body_help)->required();
  c = add("hull", "strongly convex hull of points", cmd_hull);
  c->add_option("--body", a.body, body_help)->required();
  c->add_option("--points", a.points, "points JSON")->required();
  c = add("summand", "is A a Minkowski summand of B", cmd_summand);
  c->add_option("--a", a.a, body_help)->required();
  c->add_option("--b", a.b, body_help)->required();
  c = add("generating", "sampled generating-set test", cmd_generating);
  c->add_option("--body", a.body, body_help)->required();
  c->add_option("--pairs", a.pairs, "JSON list of [p, q] pairs");
  c->add_option("--samples", a.samples, "random pairs when no file is given");
  c = add("separate", "separate points from a compactum or point by a translate", cmd_separate);
  c->add_option("--body", a.body, body_help)->required();
  c->add_option("--points", a.points, "points JSON")->required();
  c->add_option("--compactum", a.compactum, "compactum body");
  c->add_option("--point", a.point, "point to avoid, as x,y (default origin)");
  for (auto [name, h] : {std::pair<const char*, Handler>{"colorful", cmd_colorful},
                         {"colorful-compactum", cmd_colorful_compactum},
                         {"very-colorful", cmd_very_colorful}}) {
    c = add(name, "colorful separation check", h);
    c->add_option("--body", a.body, body_help)->required();
    c->add_option("--points", a.points, "colored points JSON")->required();
    c->add_flag("--allow-nonstandard", a.allow_nonstandard, "accept a color count other than d + 1");
    if (std::string(name) == "colorful-compactum") c->add_option("--compactum", a.compactum, "compactum body")->required();
  }
  c = add("cara-number", "smallest subset whose strong hull contains the query", cmd_cara);
  c->add_option("--body", a.body, body_help)->required();
  c->add_option("--points", a.points, "points JSON")->required();
  c->add_option("--query", a.query, "query point x,y (default origin)");
  c = add("nerve", "nerve of a family of bodies, or of translates K - x", cmd_nerve);
  c->add_option("--bodies", a.bodies, "JSON list of bodies");
  c->add_option("--body", a.body, body_help);
  c->add_option("--points", a.points, "points x giving translates K - x");
  c = add("homology", "reduced Betti numbers", cmd_homology);
  c->add_option("--in", a.in, "complex JSON")->required();
  c = add("link", "link of a simplex", cmd_link);
  c->add_option("--in", a.in, "complex JSON")->required();
  c->add_option("--simplex", a.simplex, "vertex labels, comma separated")->required();
  c = add("dual", "Alexander dual", cmd_dual);
  c->add_option("--in", a.in, "complex JSON")->required();
  c = add("join", "join of two complexes", cmd_join);
  c->add_option("--a", a.a, "complex JSON")->required();
  c->add_option("--b", a.b, "complex JSON")->required();
  c = add("meshulam", "colorful simplex criterion on a partitioned complex", cmd_meshulam);
  c->add_option("--in", a.in, "complex JSON with partition")->required();
  c = add("prop34", "link criterion for a colorful pair", cmd_prop34);
  c->add_option("--in", a.in, "complex JSON with n + 1 parts")->required();
  c->add_option("--n", a.n, "dimension n")->required();
  c = add("acyclic-probe", "raster homology of K \\ (K + T)", cmd_acyclic_probe);
  c->add_option("--body", a.body, body_help);
  c->add_option("--by", a.by, "body T");
  c->add_option("--random", a.random, "probe this many seeded random pairs instead");
  c = add("summand-probe", "raster homology of (A + t) \\ B over a grid of t", cmd_summand_probe);
  c->add_option("--a", a.a, body_help);
  c->add_option("--b", a.b, body_help);
  c->add_option("--steps", a.steps, "grid intervals per axis");
  c->add_option("--random", a.random, "probe this many seeded random pairs with B = A + C instead");
  CLI::App* cx = app.add_subcommand("counterexample", "3D body with unbounded Caratheodory number");
  cx->require_subcommand(1);
  for (auto [name, h] : {std::pair<const char*, Handler>{"build", cmd_cx_build}, {"verify", cmd_cx_verify}}) {
    c = add(name, std::string(name) + " the instance", h, cx);
    c->add_option("--params", a.params, "parameter JSON");
    c->add_option("--n", a.cx_n, "number of point pairs");
    c->add_option("--delta", a.delta, "perturbation size");
    c->add_option("--clip", a.clip, "clip height");
    c->add_option("--window", a.window, "x half-width");
    c->add_option("--y-step", a.y_step, "section spacing");
    c->add_option("--x-step", a.x_step, "x sampling step");
    c->add_option("--section", a.section, "section y drawn with --svg (default 1/2)");
  }
  c = add("plot", "render a scene JSON as SVG", cmd_plot);
  c->add_option("--scene", a.scene, "scene JSON")->required();
  c->add_option("--section", a.section, "section y for 3D scenes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg;
    if (o_config->count()) apply_config_text(cfg, io::read_file(config_path), config_path);
    if (const char* env = std::getenv("STRONGCONV_SEED")) cfg.seed = parse_count(env, "STRONGCONV_SEED");
    if (o_seed->count()) cfg.seed = seed;
    if (o_tcap->count()) cfg.transversal_cap = transversal_cap;
    if (o_scap->count()) cfg.subset_cap = subset_cap;
    if (o_res->count()) cfg.raster_resolution = resolution;
    if (o_sides->count()) cfg.ball_sides = ball_sides;
    if (o_jobs->count()) cfg.jobs = jobs;
    if (o_out->count()) cfg.out = out_path;
    if (o_svg->count()) cfg.svg = svg_path;
    validate(cfg);

    const std::pair<std::string, Handler>* chosen = nullptr;
    for (const auto& [sub, entry] : commands) {
      if (sub->parsed()) chosen = &entry;
    }
    if (!chosen) throw InputError("no command given");

    Session session(cfg);
    const auto start = std::chrono::steady_clock::now();
    Json result = chosen->second(session, a);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Json report{{"command", chosen->first},
                {"seed", cfg.seed},
                {"config",
                 {{"transversal_cap", cfg.transversal_cap},
                  {"subset_cap", cfg.subset_cap},
                  {"raster_resolution", cfg.raster_resolution},
                  {"ball_sides", cfg.ball_sides}}},
                {"input_digest", session.digest()},
                {"result", std::move(result)}};
    if (timing) report["timing"] = Json{{"seconds", seconds}, {"jobs", cfg.jobs}};
    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f || !(f << text)) throw InputError("cannot write " + cfg.out);
    }
    return session.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace strongconv::cli
