#include "strongconv/bodies/planar.hpp"

#include "strongconv/errors.hpp"

#include <algorithm>
#include <deque>

namespace strongconv::bodies::planar {

using numeric::compare_lex;
using numeric::dot;

Rational cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational cross(const Vector& u, const Vector& v) { return u[0] * v[1] - u[1] * v[0]; }

namespace {

int half_of(const Vector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; }

bool same_direction(const Vector& u, const Vector& v) {
  return cross(u, v) == 0 && dot(u, v) > 0;
}

std::optional<Vector> line_intersection(const Halfspace& h1, const Halfspace& h2) {
  const Rational det = h1.normal[0] * h2.normal[1] - h1.normal[1] * h2.normal[0];
  if (det == 0) return std::nullopt;
  return Vector{(h1.offset * h2.normal[1] - h2.offset * h1.normal[1]) / det,
                (h1.normal[0] * h2.offset - h2.normal[0] * h1.offset) / det};
}

bool outside(const Halfspace& h, const Vector& p) { return dot(h.normal, p) > h.offset; }

Polygon dedupe_cycle(Polygon pts) {
  Polygon out;
  for (auto& p : pts) {
    if (out.empty() || compare_lex(out.back(), p) != 0) out.push_back(std::move(p));
  }
  while (out.size() > 1 && compare_lex(out.front(), out.back()) == 0) out.pop_back();
  return out;
}

// O(m^3) reference used only when the sweep meets a degenerate configuration.
std::optional<Polygon> brute_force_intersection(std::span<const Halfspace> hs) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      auto p = line_intersection(hs[i], hs[j]);
      if (!p) continue;
      bool ok = true;
      for (const auto& h : hs) {
        if (outside(h, *p)) {
          ok = false;
          break;
        }
      }
      if (ok) pts.push_back(std::move(*p));
    }
  }
  if (pts.empty()) return std::nullopt;
  return convex_hull(std::move(pts));
}

}  // namespace

bool angle_less(const Vector& u, const Vector& v) {
  const int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

Polygon convex_hull(std::vector<Vector> points) {
  for (const auto& p : points) {
    if (p.size() != 2) throw InputError("planar hull expects 2D points");
  }
  std::sort(points.begin(), points.end(), numeric::LexLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vector& a, const Vector& b) { return compare_lex(a, b) == 0; }),
               points.end());
  if (points.size() <= 2) return points;
  Polygon hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

Polygon canonical_rotation(Polygon ccw) {
  if (ccw.size() <= 1) return ccw;
  auto it = std::min_element(ccw.begin(), ccw.end(), numeric::LexLess{});
  std::rotate(ccw.begin(), it, ccw.end());
  return ccw;
}

std::optional<Polygon> intersect_halfplanes(std::span<const Halfspace> halfplanes) {
  if (halfplanes.empty()) throw InputError("halfplane intersection of an empty list is unbounded");
  std::vector<Halfspace> hs;
  hs.reserve(halfplanes.size());
  for (const auto& h : halfplanes) {
    if (h.normal.size() != 2) throw InputError("planar halfplane expects a 2D normal");
    if (numeric::is_zero(h.normal)) {
      if (h.offset < 0) return std::nullopt;
      continue;
    }
    hs.push_back(numeric::normalized(h));
  }
  std::sort(hs.begin(), hs.end(), [](const Halfspace& a, const Halfspace& b) {
    if (angle_less(a.normal, b.normal)) return true;
    if (angle_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
  });
  std::vector<Halfspace> unique;
  for (auto& h : hs) {
    if (!unique.empty() && same_direction(unique.back().normal, h.normal)) continue;
    unique.push_back(std::move(h));
  }
  bool bounded = unique.size() >= 3;
  for (std::size_t i = 0; bounded && i < unique.size(); ++i) {
    if (cross(unique[i].normal, unique[(i + 1) % unique.size()].normal) <= 0) bounded = false;
  }
  if (!bounded) throw InputError("halfplane system is unbounded");
  return intersect_sorted_halfplanes(unique);
}

std::optional<Polygon> intersect_sorted_halfplanes(std::span<const Halfspace> hs) {
  const std::size_t n = hs.size();
  if (n < 3) throw InputError("a bounded planar region needs at least three halfplanes");
  std::deque<std::size_t> dq;
  auto corner = [&](std::size_t i, std::size_t j) { return line_intersection(hs[i], hs[j]); };

  for (std::size_t i = 0; i < n; ++i) {
    while (dq.size() >= 2) {
      auto p = corner(dq[dq.size() - 2], dq.back());
      if (!p) return brute_force_intersection(hs);
      if (!outside(hs[i], *p)) break;
      dq.pop_back();
    }
    while (dq.size() >= 2) {
      auto p = corner(dq[0], dq[1]);
      if (!p) return brute_force_intersection(hs);
      if (!outside(hs[i], *p)) break;
      dq.pop_front();
    }
    if (!dq.empty()) {
      const Rational c = cross(hs[dq.back()].normal, hs[i].normal);
      if (c <= 0) {
        if (c == 0 && hs[dq.back()].offset + hs[i].offset < 0) return std::nullopt;
        return brute_force_intersection(hs);
      }
    }
    dq.push_back(i);
  }
  while (dq.size() >= 3) {
    auto p = corner(dq[dq.size() - 2], dq.back());
    if (!p) return brute_force_intersection(hs);
    if (!outside(hs[dq.front()], *p)) break;
    dq.pop_back();
  }
  while (dq.size() >= 3) {
    auto p = corner(dq[0], dq[1]);
    if (!p) return brute_force_intersection(hs);
    if (!outside(hs[dq.back()], *p)) break;
    dq.pop_front();
  }
  if (dq.size() < 3) return std::nullopt;

  Polygon verts;
  verts.reserve(dq.size());
  for (std::size_t k = 0; k < dq.size(); ++k) {
    auto p = corner(dq[k], dq[(k + 1) % dq.size()]);
    if (!p || cross(hs[dq[k]].normal, hs[dq[(k + 1) % dq.size()]].normal) <= 0) {
      return brute_force_intersection(hs);
    }
    verts.push_back(std::move(*p));
  }
  return canonical_rotation(dedupe_cycle(std::move(verts)));
}

std::vector<Halfspace> edge_halfplanes(const Polygon& ccw) {
  if (ccw.size() < 3) throw InputError("edge halfplanes need a full-dimensional polygon");
  std::vector<Halfspace> out;
  out.reserve(ccw.size());
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Vector& p = ccw[i];
    const Vector& q = ccw[(i + 1) % ccw.size()];
    Halfspace h{Vector{q[1] - p[1], p[0] - q[0]}, Rational(0)};
    h.offset = dot(h.normal, p);
    out.push_back(numeric::normalized(h));
  }
  return out;
}

Polygon minkowski_sum(const Polygon& a, const Polygon& b) {
  if (a.empty() || b.empty()) throw InputError("Minkowski sum of an empty polygon");
  if (a.size() == 1) return translate(b, a[0]);
  if (b.size() == 1) return translate(a, b[0]);
  auto bottom_first = [](const Polygon& p) {
    auto it = std::min_element(p.begin(), p.end(), [](const Vector& u, const Vector& v) {
      return u[1] < v[1] || (u[1] == v[1] && u[0] < v[0]);
    });
    Polygon r(p);
    std::rotate(r.begin(), r.begin() + (it - p.begin()), r.end());
    return r;
  };
  const Polygon pa = bottom_first(a), pb = bottom_first(b);
  auto edges = [](const Polygon& p) {
    std::vector<Vector> e;
    for (std::size_t i = 0; i < p.size(); ++i) e.push_back(numeric::subtract(p[(i + 1) % p.size()], p[i]));
    return e;
  };
  const auto ea = edges(pa), eb = edges(pb);
  Polygon out;
  Vector cur = numeric::add(pa[0], pb[0]);
  out.push_back(cur);
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    Vector step;
    if (j == eb.size() || (i < ea.size() && angle_less(ea[i], eb[j]))) {
      step = ea[i++];
    } else if (i == ea.size() || angle_less(eb[j], ea[i])) {
      step = eb[j++];
    } else {
      step = numeric::add(ea[i++], eb[j++]);
    }
    cur = numeric::add(cur, step);
    out.push_back(cur);
  }
  out = dedupe_cycle(std::move(out));
  // Consecutive parallel edges from different summands leave collinear points.
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    for (std::size_t k = 0; k < out.size() && out.size() >= 3; ++k) {
      const std::size_t prev = (k + out.size() - 1) % out.size();
      const std::size_t next = (k + 1) % out.size();
      if (cross(out[prev], out[k], out[next]) == 0) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
    }
  }
  return canonical_rotation(std::move(out));
}

Rational support(const Polygon& poly, const Vector& direction) {
  if (poly.empty()) throw InputError("support of an empty polygon");
  Rational best = dot(direction, poly[0]);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    Rational v = dot(direction, poly[i]);
    if (v > best) best = std::move(v);
  }
  return best;
}

SupportSweep support_sweep(const Polygon& poly, std::span<const Halfspace> facets) {
  SupportSweep out;
  out.values.reserve(facets.size());
  out.argmax.reserve(facets.size());
  const std::size_t n = poly.size();
  auto lex_pick = [&](std::size_t a, std::size_t b) {
    return compare_lex(poly[a], poly[b]) <= 0 ? a : b;
  };
  if (n <= 2 || facets.empty()) {
    for (const auto& f : facets) {
      std::size_t best = 0;
      Rational val = dot(f.normal, poly[0]);
      for (std::size_t k = 1; k < n; ++k) {
        Rational v = dot(f.normal, poly[k]);
        if (v > val || (v == val && compare_lex(poly[k], poly[best]) < 0)) {
          val = std::move(v);
          best = k;
        }
      }
      out.values.push_back(std::move(val));
      out.argmax.push_back(best);
    }
    return out;
  }
  std::size_t cur = 0;
  {
    Rational val = dot(facets[0].normal, poly[0]);
    for (std::size_t k = 1; k < n; ++k) {
      Rational v = dot(facets[0].normal, poly[k]);
      if (v > val) {
        val = std::move(v);
        cur = k;
      }
    }
  }
  for (const auto& f : facets) {
    Rational here = dot(f.normal, poly[cur]);
    for (std::size_t guard = 0; guard < 2 * n; ++guard) {
      Rational next = dot(f.normal, poly[(cur + 1) % n]);
      if (next <= here) break;
      cur = (cur + 1) % n;
      here = std::move(next);
    }
    std::size_t pick = cur;
    if (dot(f.normal, poly[(cur + 1) % n]) == here) pick = lex_pick(pick, (cur + 1) % n);
    if (dot(f.normal, poly[(cur + n - 1) % n]) == here) pick = lex_pick(pick, (cur + n - 1) % n);
    out.values.push_back(std::move(here));
    out.argmax.push_back(pick);
  }
  return out;
}

bool contains(const Polygon& poly, const Vector& p) {
  const std::size_t n = poly.size();
  if (n == 1) return compare_lex(poly[0], p) == 0;
  if (n == 2) {
    if (cross(poly[0], poly[1], p) != 0) return false;
    const Vector d = numeric::subtract(poly[1], poly[0]);
    const Rational s = dot(d, numeric::subtract(p, poly[0]));
    return s >= 0 && s <= dot(d, d);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly[i], poly[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

bool contains_strictly(const Polygon& poly, const Vector& p) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly[i], poly[(i + 1) % n], p) <= 0) return false;
  }
  return true;
}

Polygon translate(const Polygon& poly, const Vector& t) {
  Polygon r;
  r.reserve(poly.size());
  for (const auto& p : poly) r.push_back(numeric::add(p, t));
  return r;
}

Polygon reflect(const Polygon& poly) {
  Polygon r;
  r.reserve(poly.size());
  for (const auto& p : poly) r.push_back(numeric::negate(p));
  return canonical_rotation(std::move(r));
}

}  // namespace strongconv::bodies::planar
