#pragma once

#include "strongconv/random.hpp"
#include "strongconv/separation/separation.hpp"

namespace strongconv::separation {

struct InstanceParams {
  std::size_t colors = 3;
  std::size_t max_per_color = 4;
  /// Coordinates are drawn from the grid (1/denominator) Z in [-extent, extent].
  Rational extent = 2;
  std::int64_t denominator = 16;
  /// Only accept points strictly inside the body (for the very colorful theorem).
  bool interior_only = false;
  std::uint64_t max_attempts = 100'000;
};

struct GeneratedInstance {
  ColoredPointSet points;
  std::uint64_t attempts = 0;
};

/// Uniform grid point in the cube [-extent, extent]^dim.
Vector random_grid_point(Rng& rng, std::size_t dim, const Rational& extent, std::int64_t denominator);

/// Class sizes uniform in 1..max_per_color, points uniform in the cube, or
/// inside the body when `interior_only`.
ColoredPointSet random_colored_set(Rng& rng, const ConvexBody& k, const InstanceParams& params);

/// Rejection-samples colored sets until every transversal is separable by the
/// given separator. Throws PreconditionError after `max_attempts` misses.
GeneratedInstance hypothesis_instance(Rng& rng, const Separator& sep, const InstanceParams& params);

/// Convex hull of `points` uniform integer points in [-range, range]^2 with
/// at least three vertices.
ConvexBody random_polygon(Rng& rng, int points, int range);

/// Random polygon with rational vertices strictly inside `k`, scaled towards
/// the point `center` by `shrink`.
ConvexBody random_inner_polygon(Rng& rng, const ConvexBody& k, const Vector& center, const Rational& shrink, int points);

}  // namespace strongconv::separation

namespace strongconv::separation {

/// Test bodies around the origin: "triangle" (-1,-1), (2,-1), (-1,2);
/// "square" [-1,1]^2; "hexagon" and "disk" are unit-circle approximations
/// with 6 and `sides` vertices.
ConvexBody named_body(const std::string& name, int sides = 64);

}  // namespace strongconv::separation
