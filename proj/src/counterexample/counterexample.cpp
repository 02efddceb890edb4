#include "strongconv/counterexample/counterexample.hpp"

#include "strongconv/bodies/planar.hpp"
#include "strongconv/errors.hpp"

#include <algorithm>
#include <thread>

namespace strongconv::counterexample {

namespace planar = bodies::planar;

namespace {

Rational abs_value(const Rational& v) { return v < 0 ? Rational(-v) : v; }

bool is_integer(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

}  // namespace

Rational EpigraphFamily::coefficient(int k, const Rational& y) const {
  const Rational u = abs_value(y);
  if (k == n) {
    const Rational gap = Rational(n - 1) - u;
    return gap > 0 ? Rational(delta * gap * gap) : Rational(0);
  }
  const Rational v = std::min(u, Rational(n));
  Rational d = 0;
  if (v < k - 1) d = Rational(k - 1) - v;
  if (v > k) d = v - Rational(k);
  return delta * d * d;
}

Rational EpigraphFamily::phi(int k, int n, const Rational& x) {
  const Rational x2 = x * x;
  Rational p = x2;
  for (int m = 1; m <= n; ++m) {
    if (m == k) continue;
    const Rational t = x2 - Rational(m * m);
    p *= t * t;
  }
  return p;
}

Rational EpigraphFamily::f(const Rational& x, const Rational& y) const {
  Rational v = x * x;
  for (int k = 1; k <= n; ++k) {
    const Rational c = coefficient(k, y);
    if (c != 0) v -= c * phi(k, n, x) / norms[static_cast<std::size_t>(k - 1)];
  }
  return v;
}

std::vector<Vector> CounterexampleInstance::planar_points() const {
  std::vector<Vector> out;
  for (const auto& p : points) out.push_back(Vector{p[0], p[2]});
  return out;
}

namespace {

ConvexBody make_section(const EpigraphFamily& fam, const Rational& y) {
  std::vector<Vector> chain;
  for (const auto& x : fam.x_grid) chain.push_back(Vector{x, fam.f(x, y)});
  for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
    const Rational s0 = (chain[i + 1][1] - chain[i][1]) / (chain[i + 1][0] - chain[i][0]);
    const Rational s1 = (chain[i + 2][1] - chain[i + 1][1]) / (chain[i + 2][0] - chain[i + 1][0]);
    if (s1 < s0) {
      throw PreconditionError("section y = " + numeric::to_string(y) + " is not convex at x = " +
                              numeric::to_string(chain[i + 1][0]) + "; decrease delta");
    }
  }
  for (const auto& v : chain) {
    if (v[1] > fam.clip_height) {
      throw InputError("clip height " + numeric::to_string(fam.clip_height) + " is below the section at x = " +
                       numeric::to_string(v[0]));
    }
  }
  chain.push_back(Vector{fam.x_window, fam.clip_height});
  chain.push_back(Vector{-fam.x_window, fam.clip_height});
  return ConvexBody::from_polygon(planar::convex_hull(std::move(chain)));
}

}  // namespace

CounterexampleInstance build_family(const BuildParams& params) {
  if (params.n < 2) throw InputError("the construction needs n >= 2");
  if (params.n > 12) throw SizeLimitError("n is capped at 12");
  if (params.delta < 0) throw InputError("delta must be nonnegative");
  if (params.y_step <= 0 || params.x_step <= 0) throw InputError("grid steps must be positive");
  EpigraphFamily fam;
  fam.n = params.n;
  fam.delta = params.delta;
  fam.x_step = params.x_step;
  fam.y_step = params.y_step;
  fam.x_window = params.x_window.value_or(Rational(params.n + 2));
  fam.clip_height = params.clip_height.value_or(Rational((params.n + 2) * (params.n + 2)));
  if (fam.x_window <= params.n) throw InputError("x window must exceed n");
  if (!is_integer(Rational(1) / fam.x_step) || !is_integer(fam.x_window / fam.x_step)) {
    throw InputError("x step must divide 1 and the window");
  }
  if (!is_integer(Rational(params.n) / fam.y_step)) throw InputError("y step must divide n");

  for (Rational x = -fam.x_window; x <= fam.x_window; x += fam.x_step) fam.x_grid.push_back(x);
  for (Rational y = 0; y <= params.n; y += fam.y_step) fam.y_grid.push_back(y);

  const Rational h2 = fam.x_step * fam.x_step;
  for (int k = 1; k <= params.n; ++k) {
    Rational best = 0;
    for (std::size_t i = 1; i + 1 < fam.x_grid.size(); ++i) {
      const Rational d = (EpigraphFamily::phi(k, params.n, fam.x_grid[i - 1]) - 2 * EpigraphFamily::phi(k, params.n, fam.x_grid[i]) +
                          EpigraphFamily::phi(k, params.n, fam.x_grid[i + 1])) /
                         h2;
      best = std::max(best, abs_value(d));
    }
    fam.norms.push_back(best);
  }

  CounterexampleInstance inst;
  for (int k = 1; k <= params.n; ++k) {
    for (int s : {1, -1}) {
      inst.points.push_back(Vector{Rational(s * k), Rational(0), Rational(k * k)});
      inst.labels.push_back(std::string("xi") + (s > 0 ? "+" : "-") + std::to_string(k));
    }
  }
  for (const auto& y : fam.y_grid) inst.sections.emplace(y, make_section(fam, y));
  inst.family = std::move(fam);
  return inst;
}

ConvexBody planar_section_body(const CounterexampleInstance& inst, const Rational& y) {
  const Rational u = abs_value(y);
  if (u >= inst.family.n) return inst.sections.at(Rational(inst.family.n));
  auto it = inst.sections.find(u);
  if (it == inst.sections.end()) throw InputError("y = " + numeric::to_string(y) + " is not on the section grid");
  return it->second;
}

CounterexampleReport verify_counterexample(const CounterexampleInstance& inst, std::size_t jobs) {
  CounterexampleReport report;
  const std::vector<Vector> pts = inst.planar_points();
  const Vector origin = numeric::zero_vector(2);
  const auto& grid = inst.family.y_grid;

  std::vector<separation::Separator> seps;
  for (const auto& y : grid) seps.emplace_back(inst.sections.at(y), origin);

  // (b) the full set, section by section
  report.sections.resize(grid.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, grid.size()));
  {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < grid.size(); i += workers) {
          report.sections[i] = SectionCertificate{grid[i], !seps[i](pts).has_value()};
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  report.full_set_blocked = true;
  for (const auto& s : report.sections) {
    if (!s.blocked) {
      report.full_set_blocked = false;
      report.failures.push_back("full set separable at y = " + numeric::to_string(s.y));
    }
  }

  // (a) each maximal proper subset; for ξ_{±k} try y = k - 1/2 first
  report.maximal_subsets_separable = true;
  for (std::size_t drop = 0; drop < pts.size(); ++drop) {
    SubsetWitness sw;
    sw.dropped = drop;
    sw.label = inst.labels[drop];
    std::vector<Vector> rest;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (i != drop) rest.push_back(pts[i]);
    const int k = static_cast<int>(drop / 2) + 1;
    std::vector<std::size_t> order;
    const Rational preferred = Rational(2 * k - 1, 2);
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid[i] == preferred) order.push_back(i);
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid[i] != preferred) order.push_back(i);
    for (std::size_t i : order) {
      if (auto w = seps[i](rest)) {
        sw.y = grid[i];
        sw.witness = std::move(w);
        break;
      }
    }
    if (!sw.y) {
      report.maximal_subsets_separable = false;
      report.failures.push_back("no grid section separates the set without " + sw.label);
    }
    report.maximal_subsets.push_back(std::move(sw));
  }
  report.passed = report.maximal_subsets_separable && report.full_set_blocked;

  // smallest subset whose hull keeps the origin in every section
  const auto search = separation::minimal_subset(pts.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> s;
    for (std::size_t i : idx) s.push_back(pts[i]);
    for (const auto& sep : seps)
      if (sep(s)) return false;
    return true;
  }, 1'000'000);
  if (search.subset) {
    report.caratheodory = search.subset->size();
    report.caratheodory_subset = search.subset;
  }
  return report;
}

}  // namespace strongconv::counterexample
