#pragma once

// Exact planar polygon kernel. Polygons are vertex lists in counter-clockwise
// order starting at the lexicographically smallest vertex; a point is one
// vertex and a segment is two.

#include "strongconv/numeric/lp.hpp"
#include "strongconv/numeric/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace strongconv::bodies::planar {

using numeric::Halfspace;
using numeric::Rational;
using numeric::Vector;

using Polygon = std::vector<Vector>;

Rational cross(const Vector& o, const Vector& a, const Vector& b);
Rational cross(const Vector& u, const Vector& v);

/// Strict angular order of nonzero directions on [0, 2*pi) from the +x axis.
bool angle_less(const Vector& u, const Vector& v);

/// Convex hull; collinear boundary points are dropped.
Polygon convex_hull(std::vector<Vector> points);

/// Rotates a counter-clockwise cycle so it starts at its lexicographically
/// smallest vertex.
Polygon canonical_rotation(Polygon ccw);

/// Intersection of halfplanes. Empty input or an unbounded region throws
/// InputError; an empty region yields nullopt.
std::optional<Polygon> intersect_halfplanes(std::span<const Halfspace> halfplanes);

/// Same, for halfplanes whose normals are already primitive, pairwise distinct
/// in direction and sorted by angle (as produced by `edge_halfplanes`).
std::optional<Polygon> intersect_sorted_halfplanes(std::span<const Halfspace> halfplanes);

/// One normalized halfplane per edge, in the polygon's edge order so the
/// normals are angularly sorted after a rotation. Requires >= 3 vertices.
std::vector<Halfspace> edge_halfplanes(const Polygon& ccw);

/// Minkowski sum by merging edge sequences.
Polygon minkowski_sum(const Polygon& a, const Polygon& b);

Rational support(const Polygon& poly, const Vector& direction);

/// Support values for directions given in angular order (cyclically), in
/// O(|poly| + |directions|) time. `argmax[i]` is the lexicographically
/// smallest maximizing vertex index.
struct SupportSweep {
  std::vector<Rational> values;
  std::vector<std::size_t> argmax;
};
SupportSweep support_sweep(const Polygon& poly, std::span<const Halfspace> angular_facets);

bool contains(const Polygon& poly, const Vector& point);
bool contains_strictly(const Polygon& poly, const Vector& point);

Polygon translate(const Polygon& poly, const Vector& t);
Polygon reflect(const Polygon& poly);

}  // namespace strongconv::bodies::planar
