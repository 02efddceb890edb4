#include "strongconv/topology/region.hpp"

#include "strongconv/errors.hpp"
#include "strongconv/separation/generators.hpp"
#include "strongconv/separation/separation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace strongconv::topology {

namespace planar = bodies::planar;
using numeric::Halfspace;

namespace {

// Connected components of the marked cells of a box grid under the given
// neighbour offsets (breadth-first flood fill).
std::size_t count_components(const std::vector<char>& marked, const std::array<std::size_t, 3>& shape,
                             const std::vector<std::array<int, 3>>& offsets, std::size_t* touching_border = nullptr,
                             std::vector<std::vector<std::size_t>>* enclosed = nullptr) {
  const std::size_t nx = shape[0], ny = shape[1], nz = shape[2];
  std::vector<char> seen(marked.size(), 0);
  std::vector<std::size_t> queue;
  std::size_t comps = 0, border = 0;
  for (std::size_t start = 0; start < marked.size(); ++start) {
    if (!marked[start] || seen[start]) continue;
    ++comps;
    bool on_border = false;
    queue.assign(1, start);
    seen[start] = 1;
    std::vector<std::size_t> members;
    while (!queue.empty()) {
      const std::size_t cur = queue.back();
      queue.pop_back();
      if (enclosed) members.push_back(cur);
      const std::size_t x = cur % nx, y = cur / nx % ny, z = cur / (nx * ny);
      if (x == 0 || y == 0 || x + 1 == nx || y + 1 == ny || (nz > 1 && (z == 0 || z + 1 == nz))) on_border = true;
      for (const auto& o : offsets) {
        const long xx = static_cast<long>(x) + o[0], yy = static_cast<long>(y) + o[1], zz = static_cast<long>(z) + o[2];
        if (xx < 0 || yy < 0 || zz < 0 || xx >= static_cast<long>(nx) || yy >= static_cast<long>(ny) || zz >= static_cast<long>(nz))
          continue;
        const std::size_t nb = static_cast<std::size_t>(xx) + nx * (static_cast<std::size_t>(yy) + ny * static_cast<std::size_t>(zz));
        if (marked[nb] && !seen[nb]) {
          seen[nb] = 1;
          queue.push_back(nb);
        }
      }
    }
    if (on_border) {
      ++border;
    } else if (enclosed) {
      enclosed->push_back(std::move(members));
    }
  }
  if (touching_border) *touching_border = border;
  return comps;
}

std::vector<std::array<int, 3>> neighbourhood(std::size_t dim, bool full) {
  std::vector<std::array<int, 3>> out;
  const int zr = dim == 3 ? 1 : 0;
  for (int dz = -zr; dz <= zr; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        const int nonzero = (dx != 0) + (dy != 0) + (dz != 0);
        if (nonzero == 0 || (!full && nonzero > 1)) continue;
        out.push_back({dx, dy, dz});
      }
  return out;
}

}  // namespace

HomologyProfile region_betti(const RegionOracle& region, std::size_t resolution, std::size_t dimension) {
  if (dimension != 2 && dimension != 3) throw InputError("region_betti supports dimension 2 or 3");
  if (region.lo.size() != dimension || region.hi.size() != dimension) throw InputError("bounding box dimension mismatch");
  if (resolution == 0) throw InputError("resolution must be positive");
  if (dimension == 3 && resolution > 400) throw SizeLimitError("3D resolution is capped at 400");
  for (std::size_t i = 0; i < dimension; ++i)
    if (region.hi[i] <= region.lo[i]) throw InputError("bounding box must have positive extent");

  const std::size_t n = resolution;
  const std::size_t nz = dimension == 3 ? n : 1;
  std::vector<Rational> step(dimension);
  for (std::size_t i = 0; i < dimension; ++i) step[i] = (region.hi[i] - region.lo[i]) / Rational(static_cast<long>(n));

  // Padded grid: one layer of outside cells around the box.
  const std::size_t px = n + 2, py = n + 2, pz = dimension == 3 ? n + 2 : 1;
  std::vector<char> inside(px * py * pz, 0);
  std::size_t members = 0;
  Vector center(dimension);
  for (std::size_t z = 0; z < nz; ++z) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::array<std::size_t, 3> idx{x, y, z};
        for (std::size_t i = 0; i < dimension; ++i)
          center[i] = region.lo[i] + (Rational(static_cast<long>(idx[i])) + Rational(1, 2)) * step[i];
        if (!region.membership(center)) continue;
        const std::size_t zz = dimension == 3 ? z + 1 : 0;
        inside[(x + 1) + px * ((y + 1) + py * zz)] = 1;
        ++members;
      }
    }
  }

  HomologyProfile h;
  if (members == 0) {
    h.is_empty_complex = true;
    return h;
  }
  const std::array<std::size_t, 3> shape{px, py, pz};
  const std::size_t comps = count_components(inside, shape, neighbourhood(dimension, true));
  std::vector<char> outside(inside.size());
  for (std::size_t i = 0; i < inside.size(); ++i) outside[i] = !inside[i];
  std::size_t border = 0;
  std::vector<std::vector<std::size_t>> enclosed;
  const std::size_t out_comps = count_components(outside, shape, neighbourhood(dimension, false), &border, &enclosed);
  const std::size_t bounded = out_comps - border;

  h.betti[-1] = 0;
  h.betti[0] = comps - 1;
  if (dimension == 2) {
    std::size_t holes = bounded;
    if (region.far_outside) {
      holes = 0;
      for (const auto& comp : enclosed) {
        for (std::size_t cell : comp) {
          const std::size_t x = cell % px - 1, y = cell / px - 1;
          const Vector c{region.lo[0] + (Rational(static_cast<long>(x)) + Rational(1, 2)) * step[0],
                         region.lo[1] + (Rational(static_cast<long>(y)) + Rational(1, 2)) * step[1]};
          if (region.far_outside(c)) {
            ++holes;
            break;
          }
        }
      }
    }
    h.betti[1] = holes;
    h.betti[2] = 0;
    return h;
  }
  // Euler characteristic of the closed cubical set, over doubled coordinates.
  const std::size_t m = 2 * n + 1;
  std::vector<char> cell(m * m * m, 0);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        if (!inside[(x + 1) + px * ((y + 1) + py * (z + 1))]) continue;
        for (std::size_t c = 0; c < 3; ++c)
          for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t a = 0; a < 3; ++a) cell[(2 * x + a) + m * ((2 * y + b) + m * (2 * z + c))] = 1;
      }
  long long chi = 0;
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t x = 0; x < m; ++x) {
        if (!cell[x + m * (y + m * z)]) continue;
        const int d = static_cast<int>(x % 2 + y % 2 + z % 2);
        chi += d % 2 ? -1 : 1;
      }
  const long long b1 = static_cast<long long>(comps) + static_cast<long long>(bounded) - chi;
  h.betti[1] = static_cast<std::uint64_t>(b1);
  h.betti[2] = bounded;
  h.betti[3] = 0;
  return h;
}

namespace {

// Clip a convex vertex cycle (possibly a segment or point) to n·x >= c.
planar::Polygon clip(const planar::Polygon& poly, const Vector& n, const Rational& c) {
  std::vector<Vector> out;
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vector& p = poly[i];
    const Vector& q = poly[(i + 1) % k];
    const Rational fp = numeric::dot(n, p) - c, fq = numeric::dot(n, q) - c;
    if (fp >= 0) out.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      const Rational s = fp / (fp - fq);
      out.push_back(Vector{p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])});
    }
  }
  return planar::convex_hull(std::move(out));
}

Rational segment_distance2(const Vector& a, const Vector& b, const Vector& p) {
  const Rational ux = b[0] - a[0], uy = b[1] - a[1];
  const Rational vx = p[0] - a[0], vy = p[1] - a[1];
  const Rational uu = ux * ux + uy * uy;
  Rational t = uu == 0 ? Rational(0) : (vx * ux + vy * uy) / uu;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Rational dx = vx - t * ux, dy = vy - t * uy;
  return dx * dx + dy * dy;
}

bool exact_within(const planar::Polygon& poly, const Vector& p, const Rational& eps2) {
  if (poly.size() >= 3 && planar::contains(poly, p)) return true;
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (segment_distance2(poly[i], poly[(i + 1) % k], p) <= eps2) return true;
  }
  return false;
}

// Double-precision copy of a piece for the filtered distance predicate.
struct FastPiece {
  std::vector<std::array<double, 2>> v;
  double lo[2], hi[2];
};

enum class Filter { inside, outside, unsure };

Filter fast_within(const FastPiece& f, double x, double y, double eps, double eps2) {
  const double margin = eps * 1e-6;
  if (x < f.lo[0] - eps - margin || x > f.hi[0] + eps + margin || y < f.lo[1] - eps - margin || y > f.hi[1] + eps + margin)
    return Filter::outside;
  const std::size_t k = f.v.size();
  if (k >= 3) {
    bool all_in = true;
    for (std::size_t i = 0; i < k && all_in; ++i) {
      const auto& a = f.v[i];
      const auto& b = f.v[(i + 1) % k];
      const double cr = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
      const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
      if (cr <= margin * len) all_in = false;
    }
    if (all_in) return Filter::inside;
  }
  double best = INFINITY;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = f.v[i];
    const auto& b = f.v[(i + 1) % k];
    const double ux = b[0] - a[0], uy = b[1] - a[1], vx = x - a[0], vy = y - a[1];
    const double uu = ux * ux + uy * uy;
    double t = uu == 0 ? 0 : (vx * ux + vy * uy) / uu;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = vx - t * ux, dy = vy - t * uy;
    best = std::min(best, dx * dx + dy * dy);
  }
  if (best < eps2 * (1 - 1e-6)) return Filter::inside;
  if (best > eps2 * (1 + 1e-6)) return Filter::outside;
  return Filter::unsure;
}

void require_planar(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != 2 || b.dim() != 2) throw InputError("region probes are planar");
}

}  // namespace

DifferenceRegion difference_region(const ConvexBody& a, const ConvexBody& b, std::size_t resolution) {
  require_planar(a, b);
  if (resolution < 8) throw InputError("resolution must be at least 8");
  DifferenceRegion out;
  const planar::Polygon& pa = a.polygon();
  for (const Halfspace& h : b.halfspaces()) {
    if (bodies::support_value(a, h.normal) <= h.offset) continue;
    planar::Polygon piece = clip(pa, h.normal, h.offset);
    if (!piece.empty()) out.pieces.push_back(std::move(piece));
  }
  out.empty = out.pieces.empty();
  out.oracle.tag = "closed neighbourhood of cl(A\\B)";
  if (out.empty) return out;

  Vector lo = out.pieces[0][0], hi = out.pieces[0][0];
  for (const auto& piece : out.pieces)
    for (const auto& v : piece)
      for (std::size_t i = 0; i < 2; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
  Rational side = std::max(hi[0] - lo[0], hi[1] - lo[1]);
  if (side == 0) side = 1;
  const Rational w = side / Rational(static_cast<long>(resolution - 6));
  out.cell = w;
  const Rational span = w * Rational(static_cast<long>(resolution));
  Vector box_lo(2), box_hi(2);
  for (std::size_t i = 0; i < 2; ++i) {
    box_lo[i] = (lo[i] + hi[i]) / 2 - span / 2;
    box_hi[i] = box_lo[i] + span;
  }
  out.oracle.lo = box_lo;
  out.oracle.hi = box_hi;

  auto fast = std::make_shared<std::vector<FastPiece>>();
  for (const auto& piece : out.pieces) {
    FastPiece f;
    f.lo[0] = f.lo[1] = INFINITY;
    f.hi[0] = f.hi[1] = -INFINITY;
    for (const auto& v : piece) {
      const double x = numeric::to_double(v[0]), y = numeric::to_double(v[1]);
      f.v.push_back({x, y});
      f.lo[0] = std::min(f.lo[0], x);
      f.lo[1] = std::min(f.lo[1], y);
      f.hi[0] = std::max(f.hi[0], x);
      f.hi[1] = std::max(f.hi[1], y);
    }
    fast->push_back(std::move(f));
  }
  auto pieces = std::make_shared<std::vector<planar::Polygon>>(out.pieces);
  // within distance r of some piece
  auto near = [fast, pieces](const Rational& r) {
    const Rational r2 = r * r;
    const double eps = numeric::to_double(r);
    return [fast, pieces, r2, eps](const Vector& p) {
      const double x = numeric::to_double(p[0]), y = numeric::to_double(p[1]);
      for (std::size_t i = 0; i < fast->size(); ++i) {
        const Filter f = fast_within((*fast)[i], x, y, eps, eps * eps);
        if (f == Filter::inside) return true;
        if (f == Filter::unsure && exact_within((*pieces)[i], p, r2)) return true;
      }
      return false;
    };
  };
  out.oracle.membership = near(w);
  out.oracle.far_outside = [deep = near(2 * w)](const Vector& p) { return !deep(p); };
  return out;
}

std::string to_string(SliceClass c) {
  switch (c) {
    case SliceClass::empty: return "empty";
    case SliceClass::acyclic: return "acyclic";
    case SliceClass::other: return "other";
  }
  return "other";
}

RegionProbe probe_difference(const ConvexBody& a, const ConvexBody& b, std::size_t resolution) {
  const DifferenceRegion region = difference_region(a, b, resolution);
  RegionProbe probe;
  probe.resolution = resolution;
  if (region.empty) {
    probe.betti.is_empty_complex = true;
    return probe;
  }
  probe.betti = region_betti(region.oracle, resolution, 2);
  probe.classification = !probe.betti.is_empty_complex && probe.betti.all_zero() ? SliceClass::acyclic : SliceClass::other;
  return probe;
}

TranslateGrid default_translate_grid(const ConvexBody& a, const ConvexBody& b, std::size_t steps) {
  require_planar(a, b);
  auto box = [](const ConvexBody& k) {
    Vector lo = k.vertices()[0], hi = lo;
    for (const auto& v : k.vertices())
      for (std::size_t i = 0; i < 2; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    return std::make_pair(lo, hi);
  };
  const auto [alo, ahi] = box(a);
  const auto [blo, bhi] = box(b);
  return TranslateGrid{numeric::subtract(blo, ahi), numeric::subtract(bhi, alo), steps};
}

SummandProbeReport summand_acyclicity_probe(const ConvexBody& a, const ConvexBody& b, const TranslateGrid& grid,
                                            std::size_t resolution) {
  require_planar(a, b);
  if (grid.lo.size() != 2 || grid.hi.size() != 2) throw InputError("translate grid must be planar");
  if (grid.steps == 0) throw InputError("translate grid needs at least one step");
  SummandProbeReport report;
  report.resolution = resolution;
  report.summand = bodies::is_summand(a, b);
  const Rational steps(static_cast<long>(grid.steps));
  for (std::size_t i = 0; i <= grid.steps; ++i) {
    for (std::size_t j = 0; j <= grid.steps; ++j) {
      Vector t{grid.lo[0] + (grid.hi[0] - grid.lo[0]) * Rational(static_cast<long>(i)) / steps,
               grid.lo[1] + (grid.hi[1] - grid.lo[1]) * Rational(static_cast<long>(j)) / steps};
      SliceResult slice;
      const ConvexBody at = a.translated(t);
      slice.t = std::move(t);
      slice.probe = probe_difference(at, b, resolution);
      if (slice.probe.classification == SliceClass::other) slice.refined = probe_difference(at, b, 2 * resolution);
      if (slice.final_class() == SliceClass::other) report.all_acyclic_on_grid = false;
      report.slices.push_back(std::move(slice));
    }
  }
  report.consistent = !report.summand.is_summand || report.all_acyclic_on_grid;
  return report;
}

RegionProbe sum_difference_profile(const ConvexBody& a, const ConvexBody& b, std::size_t resolution) {
  return probe_difference(bodies::minkowski_sum(a, b), a, resolution);
}

SimplicialComplex translate_nerve(const ConvexBody& k, const std::vector<Vector>& points, std::uint64_t cap) {
  const separation::Separator sep(k, numeric::zero_vector(k.dim()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) labels.push_back("x" + std::to_string(i));
  return nerve(std::move(labels), [&](Simplex s) {
    std::vector<Vector> subset;
    for (std::size_t v : simplex_vertices(s)) subset.push_back(points[v]);
    return sep(subset).has_value();
  }, cap);
}

std::pair<ConvexBody, ConvexBody> random_difference_pair(Rng& rng) {
  ConvexBody k = separation::random_polygon(rng, 6, 6);
  const ConvexBody t = separation::random_polygon(rng, 4, 2);
  const Vector shift{Rational(rng.between(-2, 2)), Rational(rng.between(-2, 2))};
  return {std::move(k), t.translated(shift)};
}

std::pair<ConvexBody, ConvexBody> random_summand_pair(Rng& rng) {
  ConvexBody a = separation::random_polygon(rng, 6, 3);
  const ConvexBody c = separation::random_polygon(rng, 4, 2);
  ConvexBody b = bodies::minkowski_sum(a, c);
  return {std::move(a), std::move(b)};
}

}  // namespace strongconv::topology
