#pragma once

#include "strongconv/bodies/planar.hpp"

#include <string>
#include <vector>

namespace strongconv::io {

/// A planar scene. Shape roles: "body", "hull", "region"; mark roles:
/// "point", "origin", "highlight". Unknown roles fall back to grey.
struct SvgScene {
  struct Shape {
    bodies::planar::Polygon polygon;
    std::string role = "body";
  };
  struct Mark {
    numeric::Vector point;
    std::string role = "point";
  };
  std::vector<Shape> shapes;
  std::vector<Mark> marks;
};

/// Deterministic SVG: the scene bounds plus a 5% margin are mapped onto a
/// canvas whose longer side is 600 units (y up), shapes become closed paths
/// and marks circles of radius 3.
std::string render_svg(const SvgScene& scene);
void write_svg(const SvgScene& scene, const std::string& path);

}  // namespace strongconv::io
