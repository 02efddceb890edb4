#include "strongconv/bodies/convex_body.hpp"

#include "strongconv/errors.hpp"
#include "strongconv/numeric/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace strongconv::bodies {

using numeric::compare_halfspaces;
using numeric::compare_lex;
using numeric::dot;
using numeric::RationalMatrix;

std::string to_string(Representation r) {
  switch (r) {
    case Representation::halfspaces: return "halfspaces";
    case Representation::vertices: return "vertices";
    case Representation::ball: return "ball";
  }
  return "unknown";
}

namespace {

bool halfspace_less(const Halfspace& a, const Halfspace& b) { return compare_halfspaces(a, b) < 0; }

void sort_unique(std::vector<Halfspace>& hs) {
  std::sort(hs.begin(), hs.end(), halfspace_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

void sort_unique(std::vector<Vector>& pts) {
  std::sort(pts.begin(), pts.end(), numeric::LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return compare_lex(a, b) == 0; }),
            pts.end());
}

void check_dims(std::size_t dim, const std::vector<Vector>& pts) {
  for (const auto& p : pts) {
    if (p.size() != dim) throw InputError("point of dimension " + std::to_string(p.size()) + " in a body of dimension " + std::to_string(dim));
  }
}

std::vector<Vector> differences(const std::vector<Vector>& pts) {
  std::vector<Vector> out;
  for (std::size_t i = 1; i < pts.size(); ++i) out.push_back(numeric::subtract(pts[i], pts[0]));
  return out;
}

std::size_t affine_rank(std::size_t dim, const std::vector<Vector>& pts) {
  if (pts.size() <= 1) return 0;
  return numeric::matrix_rank(RationalMatrix::from_rows(differences(pts), dim));
}

// Calls f on each increasing k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Halfspace oriented(const Vector& normal, const std::vector<Vector>& pts, const Vector& anchor, bool& ok) {
  const Rational ref = dot(normal, anchor);
  bool any_above = false, any_below = false;
  for (const auto& p : pts) {
    const Rational v = dot(normal, p);
    if (v > ref) any_above = true;
    if (v < ref) any_below = true;
  }
  ok = !(any_above && any_below);
  if (any_above) return numeric::normalized(Halfspace{numeric::negate(normal), -ref});
  return numeric::normalized(Halfspace{normal, ref});
}

std::vector<Vector> extreme_points(std::size_t dim, const std::vector<Vector>& pts, const std::vector<Halfspace>& hs) {
  std::vector<Vector> out;
  for (const auto& p : pts) {
    std::vector<Vector> tight;
    for (const auto& h : hs) {
      if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
    }
    if (tight.size() >= dim && numeric::matrix_rank(RationalMatrix::from_rows(tight, dim)) == dim) out.push_back(p);
  }
  return out;
}

// LP check that a halfspace system describes a nonempty bounded set.
void require_bounded_nonempty(std::size_t dim, const std::vector<Halfspace>& hs) {
  for (std::size_t j = 0; j < dim; ++j) {
    for (int sign : {1, -1}) {
      Vector c = numeric::zero_vector(dim);
      c[j] = sign;
      const auto r = numeric::lp_maximize(c, hs);
      if (r.status == numeric::LPStatus::infeasible) throw InputError("halfspace system is empty");
      if (r.status == numeric::LPStatus::unbounded) throw InputError("halfspace system is unbounded");
    }
  }
}

bool lp_hull_contains(std::size_t dim, const std::vector<Vector>& pts, const Vector& x) {
  const std::size_t m = pts.size();
  std::vector<Halfspace> cons;
  for (std::size_t i = 0; i < m; ++i) {
    Vector a = numeric::zero_vector(m);
    a[i] = -1;
    cons.push_back(Halfspace{a, Rational(0)});
  }
  Vector ones(m, Rational(1));
  cons.push_back(Halfspace{ones, Rational(1)});
  cons.push_back(Halfspace{numeric::negate(ones), Rational(-1)});
  for (std::size_t j = 0; j < dim; ++j) {
    Vector a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = pts[i][j];
    cons.push_back(Halfspace{a, x[j]});
    cons.push_back(Halfspace{numeric::negate(a), -x[j]});
  }
  return numeric::lp_feasible(m, cons);
}

// A rational point on the unit circle near angle theta: the angle is reduced
// to the nearest quadrant and the half-angle tangent rounded to 1/256.
Vector circle_point(double theta) {
  const double quarter = std::numbers::pi / 2;
  long q = std::lround(theta / quarter);
  const double phi = theta - static_cast<double>(q) * quarter;
  const Rational s = numeric::round_to_denominator(std::tan(phi / 2), 256);
  const Rational den = 1 + s * s;
  Rational x = (1 - s * s) / den, y = 2 * s / den;
  q = ((q % 4) + 4) % 4;
  for (long i = 0; i < q; ++i) {
    Rational nx = -y;
    y = x;
    x = nx;
  }
  return Vector{x, y};
}

}  // namespace

std::vector<Halfspace> hull_halfspaces(std::size_t dim, const std::vector<Vector>& input) {
  if (input.empty()) throw InputError("hull of an empty point set");
  std::vector<Vector> pts = input;
  check_dims(dim, pts);
  sort_unique(pts);
  if (dim == 2 && pts.size() >= 3) {
    planar::Polygon poly = planar::convex_hull(pts);
    if (poly.size() >= 3) {
      auto hs = planar::edge_halfplanes(poly);
      sort_unique(hs);
      return hs;
    }
  }
  const auto diffs = differences(pts);
  const std::size_t k = affine_rank(dim, pts);
  std::vector<Vector> equations;
  if (k < dim) {
    if (diffs.empty()) {
      for (std::size_t j = 0; j < dim; ++j) equations.push_back(RationalMatrix::identity(dim).row(j));
    } else {
      equations = numeric::nullspace_basis(RationalMatrix::from_rows(diffs, dim));
    }
  }
  std::vector<Halfspace> out;
  for (const auto& e : equations) {
    const Rational c = dot(e, pts[0]);
    out.push_back(numeric::normalized(Halfspace{e, c}));
    out.push_back(numeric::normalized(Halfspace{numeric::negate(e), -c}));
  }
  if (k > 0) {
    for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vector> rows;
      for (std::size_t j = 1; j < idx.size(); ++j) rows.push_back(numeric::subtract(pts[idx[j]], pts[idx[0]]));
      for (const auto& e : equations) rows.push_back(e);
      std::vector<Vector> ns = rows.empty() ? std::vector<Vector>{RationalMatrix::identity(dim).row(0)}
                                            : numeric::nullspace_basis(RationalMatrix::from_rows(rows, dim));
      if (ns.size() != 1) return;
      bool ok = false;
      Halfspace h = oriented(ns[0], pts, pts[idx[0]], ok);
      if (ok) out.push_back(std::move(h));
    });
  }
  sort_unique(out);
  return out;
}

std::vector<Vector> enumerate_vertices(std::size_t dim, const std::vector<Halfspace>& input) {
  std::vector<Halfspace> hs;
  for (const auto& h : input) {
    if (numeric::is_zero(h.normal)) continue;
    hs.push_back(numeric::normalized(h));
  }
  sort_unique(hs);
  std::vector<Vector> out;
  for_each_subset(hs.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i : idx) {
      rows.push_back(hs[i].normal);
      rhs.push_back(hs[i].offset);
    }
    auto x = numeric::solve_square(RationalMatrix::from_rows(rows, dim), rhs);
    if (!x) return;
    for (const auto& h : hs) {
      if (!numeric::satisfies(h, *x)) return;
    }
    out.push_back(std::move(*x));
  });
  sort_unique(out);
  return out;
}

ConvexBody ConvexBody::from_halfspaces(std::size_t dim, std::vector<Halfspace> input) {
  if (dim == 0) throw InputError("body dimension must be positive");
  std::vector<Halfspace> hs;
  for (auto& h : input) {
    if (h.normal.size() != dim) throw InputError("halfspace normal of dimension " + std::to_string(h.normal.size()) + " in a body of dimension " + std::to_string(dim));
    if (numeric::is_zero(h.normal)) {
      if (h.offset < 0) throw InputError("halfspace system is empty");
      continue;
    }
    hs.push_back(numeric::normalized(h));
  }
  if (hs.empty()) throw InputError("halfspace system is unbounded");
  if (dim == 2) {
    auto poly = planar::intersect_halfplanes(hs);
    if (!poly) throw InputError("halfspace system is empty");
    return from_vertex_data(2, std::move(*poly), Representation::halfspaces);
  }
  require_bounded_nonempty(dim, hs);
  if (dim <= 3) return from_vertex_data(dim, enumerate_vertices(dim, hs), Representation::halfspaces);

  // Keep the tightest offset per normal, then drop constraints that the
  // others already imply.
  sort_unique(hs);
  std::vector<Halfspace> tight;
  for (auto& h : hs) {
    if (!tight.empty() && tight.back().normal == h.normal) continue;
    tight.push_back(std::move(h));
  }
  std::vector<bool> keep(tight.size(), true);
  for (std::size_t i = 0; i < tight.size(); ++i) {
    std::vector<Halfspace> others;
    for (std::size_t j = 0; j < tight.size(); ++j) {
      if (j != i && keep[j]) others.push_back(tight[j]);
    }
    others.push_back(Halfspace{tight[i].normal, tight[i].offset + 1});
    const auto r = numeric::lp_maximize(tight[i].normal, others);
    if (r.status == numeric::LPStatus::optimal && r.optimum <= tight[i].offset) keep[i] = false;
  }
  auto data = std::make_shared<Data>();
  data->dim = dim;
  data->source = Representation::halfspaces;
  data->has_halfspaces = true;
  for (std::size_t i = 0; i < tight.size(); ++i) {
    if (keep[i]) data->halfspaces.push_back(tight[i]);
  }
  // The affine dimension is d minus the number of implied equations.
  std::size_t equalities = 0;
  std::vector<Vector> eq_normals;
  for (const auto& h : data->halfspaces) {
    const auto r = numeric::lp_maximize(numeric::negate(h.normal), data->halfspaces);
    if (r.status == numeric::LPStatus::optimal && -r.optimum == h.offset) eq_normals.push_back(h.normal);
  }
  if (!eq_normals.empty()) equalities = numeric::matrix_rank(RationalMatrix::from_rows(eq_normals, dim));
  data->affine_dim = dim - equalities;
  return ConvexBody(std::move(data));
}

ConvexBody ConvexBody::from_vertices(std::size_t dim, std::vector<Vector> vertices) {
  if (dim == 0) throw InputError("body dimension must be positive");
  if (vertices.empty()) throw InputError("vertex list is empty");
  check_dims(dim, vertices);
  if (dim <= 3) return from_vertex_data(dim, std::move(vertices), Representation::vertices);
  sort_unique(vertices);
  std::vector<Vector> extreme;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j != i) others.push_back(vertices[j]);
    }
    if (others.empty() || !lp_hull_contains(dim, others, vertices[i])) extreme.push_back(vertices[i]);
  }
  auto data = std::make_shared<Data>();
  data->dim = dim;
  data->source = Representation::vertices;
  data->has_vertices = true;
  data->affine_dim = affine_rank(dim, extreme);
  data->vertices = std::move(extreme);
  return ConvexBody(std::move(data));
}

ConvexBody ConvexBody::ball_approximation(Vector center, Rational radius, int sides) {
  if (center.size() != 2) throw InputError("ball approximations are planar");
  if (radius <= 0) throw InputError("ball radius must be positive");
  if (sides < 3) throw InputError("ball approximation needs at least 3 sides");
  std::vector<Vector> pts;
  for (int k = 0; k < sides; ++k) {
    const Vector u = circle_point(2 * std::numbers::pi * k / sides);
    pts.push_back(Vector{center[0] + radius * u[0], center[1] + radius * u[1]});
  }
  ConvexBody body = from_vertex_data(2, std::move(pts), Representation::ball);
  if (body.vertices().size() != static_cast<std::size_t>(sides)) {
    throw InputError("ball approximation with " + std::to_string(sides) + " sides has coincident vertices");
  }
  auto data = std::make_shared<Data>(*body.data_);
  data->ball = BallSpec{std::move(center), std::move(radius), sides};
  return ConvexBody(std::move(data));
}

ConvexBody ConvexBody::from_polygon(planar::Polygon polygon) {
  if (polygon.empty()) throw InputError("empty polygon");
  auto data = std::make_shared<Data>();
  data->dim = 2;
  data->source = Representation::vertices;
  data->has_vertices = data->has_halfspaces = true;
  data->affine_dim = std::min<std::size_t>(polygon.size() - 1, 2);
  if (polygon.size() >= 3) {
    data->angular_edges = planar::edge_halfplanes(polygon);
    data->halfspaces = data->angular_edges;
    sort_unique(data->halfspaces);
  } else {
    data->halfspaces = hull_halfspaces(2, polygon);
  }
  data->vertices = std::move(polygon);
  return ConvexBody(std::move(data));
}

ConvexBody ConvexBody::point(Vector p) {
  const std::size_t d = p.size();
  return from_vertices(d, {std::move(p)});
}

ConvexBody ConvexBody::from_vertex_data(std::size_t dim, std::vector<Vector> points, Representation source) {
  if (dim == 2) {
    ConvexBody b = from_polygon(planar::convex_hull(std::move(points)));
    auto data = std::make_shared<Data>(*b.data_);
    data->source = source;
    return ConvexBody(std::move(data));
  }
  sort_unique(points);
  auto data = std::make_shared<Data>();
  data->dim = dim;
  data->source = source;
  data->has_vertices = data->has_halfspaces = true;
  data->halfspaces = hull_halfspaces(dim, points);
  data->vertices = extreme_points(dim, points, data->halfspaces);
  data->affine_dim = affine_rank(dim, data->vertices);
  return ConvexBody(std::move(data));
}

const std::vector<Halfspace>& ConvexBody::halfspaces() const {
  if (!data_->has_halfspaces) throw InputError("halfspace form is not available for this body");
  return data_->halfspaces;
}

const std::vector<Vector>& ConvexBody::vertices() const {
  if (!data_->has_vertices) throw InputError("vertex form is not available for this body");
  return data_->vertices;
}

const planar::Polygon& ConvexBody::polygon() const {
  if (data_->dim != 2) throw InputError("polygon view needs a planar body");
  return data_->vertices;
}

bool ConvexBody::contains(const Vector& x) const {
  if (x.size() != dim()) throw InputError("point dimension does not match body");
  if (data_->has_halfspaces) {
    return std::all_of(data_->halfspaces.begin(), data_->halfspaces.end(),
                       [&](const Halfspace& h) { return numeric::satisfies(h, x); });
  }
  return lp_hull_contains(dim(), data_->vertices, x);
}

bool ConvexBody::contains_strictly(const Vector& x) const {
  if (x.size() != dim()) throw InputError("point dimension does not match body");
  if (!data_->has_halfspaces) throw InputError("interior test needs the halfspace form");
  return std::all_of(data_->halfspaces.begin(), data_->halfspaces.end(),
                     [&](const Halfspace& h) { return dot(h.normal, x) < h.offset; });
}

ConvexBody ConvexBody::translated(const Vector& t) const {
  if (t.size() != dim()) throw InputError("translation dimension does not match body");
  auto data = std::make_shared<Data>(*data_);
  for (auto& v : data->vertices) v = numeric::add(v, t);
  for (auto& h : data->halfspaces) h.offset += dot(h.normal, t);
  for (auto& h : data->angular_edges) h.offset += dot(h.normal, t);
  if (data->ball) data->ball->center = numeric::add(data->ball->center, t);
  return ConvexBody(std::move(data));
}

ConvexBody ConvexBody::reflected() const {
  auto data = std::make_shared<Data>(*data_);
  for (auto& v : data->vertices) v = numeric::negate(v);
  if (dim() == 2) {
    data->vertices = planar::canonical_rotation(std::move(data->vertices));
  } else {
    sort_unique(data->vertices);
  }
  for (auto& h : data->halfspaces) h.normal = numeric::negate(h.normal);
  sort_unique(data->halfspaces);
  if (!data->angular_edges.empty()) data->angular_edges = planar::edge_halfplanes(data->vertices);
  if (data->ball) data->ball->center = numeric::negate(data->ball->center);
  return ConvexBody(std::move(data));
}

bool ConvexBody::operator==(const ConvexBody& other) const {
  if (dim() != other.dim()) return false;
  if (has_vertices() && other.has_vertices()) return vertices() == other.vertices();
  if (has_halfspaces() && other.has_halfspaces()) return halfspaces() == other.halfspaces();
  throw InputError("equality of bodies held in different forms needs d <= 3");
}

}  // namespace strongconv::bodies
