#pragma once

#include "strongconv/bodies/planar.hpp"
#include "strongconv/numeric/lp.hpp"
#include "strongconv/numeric/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace strongconv::bodies {

using numeric::Halfspace;
using numeric::Rational;
using numeric::Vector;

enum class Representation { halfspaces, vertices, ball };
std::string to_string(Representation r);

struct BallSpec {
  Vector center;
  Rational radius;
  int sides = 64;
};

/// Nonempty compact convex polytope with exact coordinates.
///
/// For d <= 3 both forms are materialized at construction: `vertices()` is
/// counter-clockwise from the lexicographically smallest vertex in the plane
/// and lexicographically sorted otherwise, and `halfspaces()` is irredundant,
/// with primitive integer normals, sorted by (normal, offset). A body of lower
/// dimension carries each equation of its affine hull as a pair of opposite
/// halfspaces. For d >= 4 only the given form is kept and every predicate goes
/// through linear programming.
class ConvexBody {
 public:
  static ConvexBody from_halfspaces(std::size_t dim, std::vector<Halfspace> halfspaces);
  static ConvexBody from_vertices(std::size_t dim, std::vector<Vector> vertices);
  /// Polygon on `sides` rational points of the circle; the points are within
  /// about 2^-9 * radius in angle of the regular m-gon's vertices.
  static ConvexBody ball_approximation(Vector center, Rational radius, int sides = 64);
  /// Trusted planar constructor for a polygon already in kernel form.
  static ConvexBody from_polygon(planar::Polygon polygon);
  static ConvexBody point(Vector p);

  std::size_t dim() const { return data_->dim; }
  Representation source() const { return data_->source; }
  const std::optional<BallSpec>& ball() const { return data_->ball; }
  /// Dimension of the affine hull (-1 never occurs: bodies are nonempty).
  std::size_t affine_dim() const { return data_->affine_dim; }

  bool has_halfspaces() const { return data_->has_halfspaces; }
  bool has_vertices() const { return data_->has_vertices; }
  const std::vector<Halfspace>& halfspaces() const;
  const std::vector<Vector>& vertices() const;
  /// Kernel polygon, for d = 2.
  const planar::Polygon& polygon() const;
  /// Edge halfplanes in the polygon's edge order (angularly sorted up to a
  /// rotation); empty unless d = 2 and the body is full-dimensional.
  const std::vector<Halfspace>& angular_edges() const { return data_->angular_edges; }

  bool contains(const Vector& x) const;
  /// Interior point; false for every point of a lower-dimensional body.
  bool contains_strictly(const Vector& x) const;

  ConvexBody translated(const Vector& t) const;
  /// The body -K.
  ConvexBody reflected() const;

  /// Exact set equality.
  bool operator==(const ConvexBody& other) const;

 private:
  struct Data {
    std::size_t dim = 0;
    Representation source = Representation::vertices;
    std::optional<BallSpec> ball;
    std::size_t affine_dim = 0;
    bool has_halfspaces = false;
    bool has_vertices = false;
    std::vector<Halfspace> halfspaces;
    std::vector<Vector> vertices;
    std::vector<Halfspace> angular_edges;
  };
  explicit ConvexBody(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static ConvexBody from_vertex_data(std::size_t dim, std::vector<Vector> points, Representation source);

  std::shared_ptr<const Data> data_;
};

/// Canonical H-form of the convex hull of `points` (d <= 3). Exposed for tests.
std::vector<Halfspace> hull_halfspaces(std::size_t dim, const std::vector<Vector>& points);
/// Vertices of a bounded polyhedron (d <= 3), lexicographically sorted;
/// empty when the system is infeasible.
std::vector<Vector> enumerate_vertices(std::size_t dim, const std::vector<Halfspace>& halfspaces);

}  // namespace strongconv::bodies
