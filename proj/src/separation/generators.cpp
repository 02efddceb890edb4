#include "strongconv/separation/generators.hpp"

#include "strongconv/errors.hpp"

namespace strongconv::separation {

Vector random_grid_point(Rng& rng, std::size_t dim, const Rational& extent, std::int64_t denominator) {
  Vector v(dim);
  for (auto& x : v) x = rng.grid(-extent, extent, denominator);
  return v;
}

ColoredPointSet random_colored_set(Rng& rng, const ConvexBody& k, const InstanceParams& params) {
  std::vector<ColoredPoint> pts;
  for (std::size_t c = 0; c < params.colors; ++c) {
    const std::size_t count = 1 + rng.below(params.max_per_color);
    for (std::size_t i = 0; i < count; ++i) {
      Vector x = random_grid_point(rng, k.dim(), params.extent, params.denominator);
      if (params.interior_only) {
        while (!k.contains_strictly(x)) x = random_grid_point(rng, k.dim(), params.extent, params.denominator);
      }
      pts.push_back(ColoredPoint{std::move(x), c});
    }
  }
  return ColoredPointSet(k.dim(), params.colors, std::move(pts));
}

GeneratedInstance hypothesis_instance(Rng& rng, const Separator& sep, const InstanceParams& params) {
  for (std::uint64_t attempt = 1; attempt <= params.max_attempts; ++attempt) {
    ColoredPointSet x = random_colored_set(rng, sep.body(), params);
    bool ok = true;
    std::vector<std::size_t> pick(x.colors(), 0);
    // Enumerate transversals with an early exit on the first inseparable one.
    for (;;) {
      std::vector<Vector> s;
      for (std::size_t c = 0; c < x.colors(); ++c) s.push_back(x.points()[x.class_indices(c)[pick[c]]].x);
      if (!sep(s)) {
        ok = false;
        break;
      }
      std::size_t c = x.colors();
      while (c > 0 && ++pick[c - 1] == x.class_indices(c - 1).size()) pick[--c] = 0;
      if (c == 0) break;
    }
    if (ok) return GeneratedInstance{std::move(x), attempt};
  }
  throw PreconditionError("no hypothesis-satisfying instance within " + std::to_string(params.max_attempts) + " attempts");
}

ConvexBody random_polygon(Rng& rng, int points, int range) {
  for (;;) {
    std::vector<Vector> pts;
    for (int i = 0; i < points; ++i) pts.push_back(Vector{Rational(rng.between(-range, range)), Rational(rng.between(-range, range))});
    auto poly = bodies::planar::convex_hull(std::move(pts));
    if (poly.size() >= 3) return ConvexBody::from_polygon(std::move(poly));
  }
}

ConvexBody random_inner_polygon(Rng& rng, const ConvexBody& k, const Vector& center, const Rational& shrink, int points) {
  std::vector<Vector> pts;
  const auto& verts = k.vertices();
  for (int i = 0; i < points; ++i) {
    // A random convex combination of two vertices and the centre, pulled in.
    const auto& a = verts[rng.below(verts.size())];
    const auto& b = verts[rng.below(verts.size())];
    const Rational s(static_cast<long>(rng.below(17)), 16);
    Vector p(k.dim());
    for (std::size_t j = 0; j < k.dim(); ++j) p[j] = center[j] + shrink * (s * a[j] + (1 - s) * b[j] - center[j]);
    pts.push_back(std::move(p));
  }
  return ConvexBody::from_vertices(k.dim(), std::move(pts));
}

}  // namespace strongconv::separation

namespace strongconv::separation {

ConvexBody named_body(const std::string& name, int sides) {
  auto pt = [](long x, long y) { return Vector{Rational(x), Rational(y)}; };
  if (name == "triangle") return ConvexBody::from_vertices(2, {pt(-1, -1), pt(2, -1), pt(-1, 2)});
  if (name == "square") return ConvexBody::from_vertices(2, {pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)});
  if (name == "hexagon") return ConvexBody::ball_approximation(pt(0, 0), 1, 6);
  if (name == "disk") return ConvexBody::ball_approximation(pt(0, 0), 1, sides);
  throw InputError("unknown body name \"" + name + "\"");
}

}  // namespace strongconv::separation
