#pragma once

#include "strongconv/bodies/convex_body.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strongconv::bodies {

Rational support_value(const ConvexBody& k, const Vector& direction);

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

/// K ⊖ T = {x : x + T ⊆ K}; nullopt when empty.
std::optional<ConvexBody> erode(const ConvexBody& k, const ConvexBody& t);
std::optional<ConvexBody> erode(const ConvexBody& k, const std::vector<Vector>& t);

/// Planar erosion returning only the kernel polygon (d = 2).
std::optional<planar::Polygon> erode_polygon(const ConvexBody& k, const std::vector<Vector>& t);

/// Halfspaces of K with offsets b_i - h_T(a_i), before any simplification.
std::vector<Halfspace> erosion_halfspaces(const ConvexBody& k, const std::vector<Vector>& t);

/// K ⊖ (K ⊖ X). Throws NotCoverableError when no translate of K contains X.
ConvexBody strongly_convex_hull(const ConvexBody& k, const std::vector<Vector>& x);

enum class BodyRelation { equal, a_subset_b, b_subset_a, incomparable };
std::string to_string(BodyRelation r);

bool is_subset(const ConvexBody& a, const ConvexBody& b);
BodyRelation body_relation(const ConvexBody& a, const ConvexBody& b);

struct SummandReport {
  bool is_summand = false;
  std::optional<ConvexBody> complement;
  std::optional<Vector> witness_point;
};

/// Whether M ⊕ (K ⊖ M) = K. When not, `witness_point` is the lexicographically
/// smallest vertex of K outside M ⊕ (K ⊖ M).
SummandReport is_summand(const ConvexBody& m, const ConvexBody& k);

struct GeneratingFailure {
  std::size_t pair_index = 0;
  Vector witness_point;
};

struct GeneratingReport {
  bool all_passed = true;
  std::size_t pairs_checked = 0;
  std::vector<GeneratingFailure> failures;
};

/// Runs the summand test on K ⊖ {t1, t2} for each pair. Sampling evidence
/// only: a pass says nothing about pairs not sampled.
GeneratingReport generating_probe(const ConvexBody& k, const std::vector<std::pair<Vector, Vector>>& pairs);

}  // namespace strongconv::bodies
