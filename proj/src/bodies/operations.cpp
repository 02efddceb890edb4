#include "strongconv/bodies/operations.hpp"

#include "strongconv/errors.hpp"

#include <algorithm>

namespace strongconv::bodies {

using numeric::dot;

namespace {

void require_same_dim(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim()) throw InputError("bodies have different dimensions");
}

std::vector<Vector> body_points(const ConvexBody& t) {
  if (!t.has_vertices()) throw InputError("this operation needs the vertex form of the second body");
  return t.vertices();
}

}  // namespace

Rational support_value(const ConvexBody& k, const Vector& p) {
  if (p.size() != k.dim()) throw InputError("direction dimension does not match body");
  if (k.has_vertices()) return planar::support(k.vertices(), p);
  const auto r = numeric::lp_maximize(p, k.halfspaces());
  if (r.status != numeric::LPStatus::optimal) throw InputError("support of an invalid body");
  return r.optimum;
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  require_same_dim(a, b);
  if (a.dim() == 2) return ConvexBody::from_polygon(planar::minkowski_sum(a.polygon(), b.polygon()));
  const auto va = body_points(a), vb = body_points(b);
  std::vector<Vector> sums;
  sums.reserve(va.size() * vb.size());
  for (const auto& p : va)
    for (const auto& q : vb) sums.push_back(numeric::add(p, q));
  return ConvexBody::from_vertices(a.dim(), std::move(sums));
}

std::vector<Halfspace> erosion_halfspaces(const ConvexBody& k, const std::vector<Vector>& t) {
  if (t.empty()) throw InputError("erosion by an empty set");
  std::vector<Halfspace> out;
  for (const auto& h : k.halfspaces()) {
    Rational b = h.offset - planar::support(t, h.normal);
    out.push_back(Halfspace{h.normal, std::move(b)});
  }
  return out;
}

std::optional<planar::Polygon> erode_polygon(const ConvexBody& k, const std::vector<Vector>& t) {
  if (t.empty()) throw InputError("erosion by an empty set");
  for (const auto& p : t) {
    if (p.size() != k.dim()) throw InputError("erosion point dimension does not match body");
  }
  if (k.dim() != 2) throw InputError("planar erosion needs d = 2");
  if (!k.angular_edges().empty()) {
    // The edge normals of K are in angular order, so the support sweep and
    // the halfplane intersection are both linear.
    auto edges = k.angular_edges();
    const auto sweep = planar::support_sweep(planar::convex_hull(t), edges);
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].offset -= sweep.values[i];
    return planar::intersect_sorted_halfplanes(edges);
  }
  return planar::intersect_halfplanes(erosion_halfspaces(k, t));
}

std::optional<ConvexBody> erode(const ConvexBody& k, const std::vector<Vector>& t) {
  if (k.dim() == 2) {
    auto region = erode_polygon(k, t);
    if (!region) return std::nullopt;
    return ConvexBody::from_polygon(std::move(*region));
  }
  for (const auto& p : t) {
    if (p.size() != k.dim()) throw InputError("erosion point dimension does not match body");
  }
  auto hs = erosion_halfspaces(k, t);
  if (!numeric::lp_feasible(k.dim(), hs)) return std::nullopt;
  return ConvexBody::from_halfspaces(k.dim(), std::move(hs));
}

std::optional<ConvexBody> erode(const ConvexBody& k, const ConvexBody& t) {
  require_same_dim(k, t);
  return erode(k, body_points(t));
}

ConvexBody strongly_convex_hull(const ConvexBody& k, const std::vector<Vector>& x) {
  if (x.empty()) throw InputError("strongly convex hull of an empty set");
  auto covers = erode(k, x);
  if (!covers) {
    std::string names;
    for (std::size_t i = 0; i < x.size() && i < 8; ++i) names += (i ? ", " : "") + numeric::to_string(x[i]);
    if (x.size() > 8) names += ", ...";
    throw NotCoverableError("no translate of the body contains the point set {" + names + "}");
  }
  auto hull = erode(k, *covers);
  // X ⊆ K ⊖ (K ⊖ X) always holds, so the second erosion is nonempty.
  return std::move(*hull);
}

std::string to_string(BodyRelation r) {
  switch (r) {
    case BodyRelation::equal: return "equal";
    case BodyRelation::a_subset_b: return "A_subset_B";
    case BodyRelation::b_subset_a: return "B_subset_A";
    case BodyRelation::incomparable: return "incomparable";
  }
  return "unknown";
}

bool is_subset(const ConvexBody& a, const ConvexBody& b) {
  require_same_dim(a, b);
  if (a.has_vertices()) {
    return std::all_of(a.vertices().begin(), a.vertices().end(), [&](const Vector& v) { return b.contains(v); });
  }
  for (const auto& h : b.halfspaces()) {
    if (support_value(a, h.normal) > h.offset) return false;
  }
  return true;
}

BodyRelation body_relation(const ConvexBody& a, const ConvexBody& b) {
  const bool ab = is_subset(a, b), ba = is_subset(b, a);
  if (ab && ba) return BodyRelation::equal;
  if (ab) return BodyRelation::a_subset_b;
  if (ba) return BodyRelation::b_subset_a;
  return BodyRelation::incomparable;
}

SummandReport is_summand(const ConvexBody& m, const ConvexBody& k) {
  require_same_dim(m, k);
  if (k.dim() > 3) throw InputError("summand test needs d <= 3");
  SummandReport report;
  auto rest = erode(k, m);
  if (!rest) {
    report.witness_point = *std::min_element(k.vertices().begin(), k.vertices().end(), numeric::LexLess{});
    return report;
  }
  const ConvexBody sum = minkowski_sum(m, *rest);
  if (sum == k) {
    report.is_summand = true;
    report.complement = std::move(*rest);
    return report;
  }
  std::optional<Vector> witness;
  for (const auto& v : k.vertices()) {
    if (!sum.contains(v) && (!witness || numeric::compare_lex(v, *witness) < 0)) witness = v;
  }
  report.witness_point = std::move(witness);
  return report;
}

GeneratingReport generating_probe(const ConvexBody& k, const std::vector<std::pair<Vector, Vector>>& pairs) {
  GeneratingReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto m = erode(k, std::vector<Vector>{pairs[i].first, pairs[i].second});
    if (!m) {
      throw PreconditionError("pair " + std::to_string(i) + " is not contained in any translate of the body");
    }
    auto s = is_summand(*m, k);
    ++report.pairs_checked;
    if (!s.is_summand) {
      report.all_passed = false;
      report.failures.push_back(GeneratingFailure{i, s.witness_point.value_or(Vector{})});
    }
  }
  return report;
}

}  // namespace strongconv::bodies
