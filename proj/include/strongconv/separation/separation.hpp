#pragma once

#include "strongconv/bodies/convex_body.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace strongconv::separation {

using bodies::ConvexBody;
using numeric::Halfspace;
using numeric::Rational;
using numeric::Vector;

struct ColoredPoint {
  Vector x;
  std::size_t color = 0;
};

/// Points with colors 0..colors-1; every color class is nonempty. The same
/// coordinates may appear under several colors.
class ColoredPointSet {
 public:
  ColoredPointSet(std::size_t dim, std::size_t colors, std::vector<ColoredPoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t colors() const { return colors_; }
  const std::vector<ColoredPoint>& points() const { return points_; }
  /// Indices into `points()` of color i, in input order.
  const std::vector<std::size_t>& class_indices(std::size_t i) const { return classes_.at(i); }
  std::vector<Vector> class_points(std::size_t i) const;

 private:
  std::size_t dim_;
  std::size_t colors_;
  std::vector<ColoredPoint> points_;
  std::vector<std::vector<std::size_t>> classes_;
};

/// K - t contains S and misses C: every s in S has s + t in K and
/// a . t > b for the facet (a, b) of K ⊕ (-C).
struct SeparationWitness {
  Vector translate;
  Halfspace violated_facet;
};

/// Separation against a fixed pair (K, C); the forbidden region K ⊕ (-C) is
/// built once and reused for every set S.
class Separator {
 public:
  Separator(ConvexBody k, const ConvexBody& c);
  Separator(ConvexBody k, const Vector& p);

  const ConvexBody& body() const { return k_; }
  const ConvexBody& forbidden() const { return q_; }
  std::optional<SeparationWitness> operator()(const std::vector<Vector>& s) const;

 private:
  void prepare();

  ConvexBody k_;
  ConvexBody q_;
  // Facets of q_ in angular order (planar full-dimensional case) and the rank
  // of each in canonical order.
  std::vector<Halfspace> angular_;
  std::vector<std::size_t> canonical_rank_;
};

/// A translate of K separating S from C, or nullopt. The facet is the first
/// violated one of K ⊕ (-C) in canonical order and t the lexicographically
/// smallest vertex of K ⊖ S maximizing its normal.
std::optional<SeparationWitness> separate(const ConvexBody& k, const std::vector<Vector>& s, const ConvexBody& c);
/// Same with C = {p}.
std::optional<SeparationWitness> separate_from_point(const ConvexBody& k, const std::vector<Vector>& s, const Vector& p);

/// Exact re-check of a witness against its definition.
bool verify_witness(const ConvexBody& k, const std::vector<Vector>& s, const ConvexBody& c, const SeparationWitness& w);

struct VerifyOptions {
  std::uint64_t transversal_cap = 1'000'000;
  /// Accept a color count other than d + 1; the report is marked nonstandard.
  bool allow_nonstandard = false;
  unsigned jobs = 1;
};

struct ColorfulReport {
  bool hypothesis_holds = false;
  bool nonstandard = false;
  /// Point indices of the first inseparable transversal, one per color.
  std::optional<std::vector<std::size_t>> violating_transversal;
  std::optional<std::size_t> separated_color;
  std::optional<std::pair<std::size_t, std::size_t>> separated_pair;
  std::optional<SeparationWitness> witness;
  std::uint64_t transversals_checked = 0;

  /// Hypothesis held but no class (or pair) was separable.
  bool theorem_violated() const { return hypothesis_holds && !separated_color && !separated_pair; }
};

ColorfulReport verify_colorful(const ConvexBody& k, const ColoredPointSet& x, const VerifyOptions& opts = {});
ColorfulReport verify_colorful_compactum(const ConvexBody& k, const ColoredPointSet& x, const ConvexBody& c,
                                         const VerifyOptions& opts = {});
/// Requires the origin and every point in the interior of K.
ColorfulReport verify_very_colorful(const ConvexBody& k, const ColoredPointSet& x, const VerifyOptions& opts = {});

/// Smallest-index i in [0, count) with pred(i), or nullopt. With jobs > 1 the
/// work is split across threads and the answer is still the smallest index.
std::optional<std::uint64_t> first_index(std::uint64_t count, unsigned jobs,
                                         const std::function<bool(std::uint64_t)>& pred);

struct SubsetSearch {
  std::optional<std::vector<std::size_t>> subset;
  std::uint64_t subsets_checked = 0;
};

/// Breadth-first over subset sizes 1, 2, ..., n with subsets of each size in
/// lexicographic order of their sorted index tuples; returns the first subset
/// satisfying `pred`.
SubsetSearch minimal_subset(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& pred,
                            std::uint64_t cap, std::size_t max_size = SIZE_MAX);

/// Smallest X' ⊆ X with p ∈ conv_K X' (lexicographic tie-break), or no subset
/// when p ∉ conv_K X.
SubsetSearch caratheodory_number(const ConvexBody& k, const std::vector<Vector>& x, const Vector& p,
                                 std::uint64_t cap = 1'000'000);

/// p ∈ conv_K X, decided as "no translate of K separates X from p".
bool in_strong_hull(const ConvexBody& k, const std::vector<Vector>& x, const Vector& p);

}  // namespace strongconv::separation
