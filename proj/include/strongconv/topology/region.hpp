#pragma once

#include "strongconv/bodies/convex_body.hpp"
#include "strongconv/bodies/operations.hpp"
#include "strongconv/random.hpp"
#include "strongconv/topology/complex.hpp"

#include <functional>
#include <string>
#include <vector>

namespace strongconv::topology {

using bodies::ConvexBody;
using numeric::Rational;
using numeric::Vector;

/// A region given by a membership test and a bounding box that covers it.
struct RegionOracle {
  std::function<bool(const Vector&)> membership;
  Vector lo;
  Vector hi;
  std::string tag;
  /// Planar only. When set, an enclosed run of outside cells counts as a hole
  /// only if one of its cell centers satisfies this test; shallower pockets
  /// are taken to be below the raster scale.
  std::function<bool(const Vector&)> far_outside;
};

/// Reduced Betti numbers of the union of closed grid cells whose centers lie
/// in the region (resolution cells per axis, dimension 2 or 3). The answer
/// depends on the resolution. No cells gives is_empty_complex.
HomologyProfile region_betti(const RegionOracle& region, std::size_t resolution, std::size_t dimension);

/// Planar set difference A∖B probed through its closure: the region is the
/// closed neighbourhood of radius one cell width around
/// cl(A∖B) = ∪_j A ∩ {a_j·x >= b_j}, over edges j of B that A crosses.
/// Emptiness of A∖B is decided exactly. The box is square and leaves three
/// cells of margin.
struct DifferenceRegion {
  bool empty = true;
  std::vector<bodies::planar::Polygon> pieces;
  RegionOracle oracle;
  Rational cell;
};
DifferenceRegion difference_region(const ConvexBody& a, const ConvexBody& b, std::size_t resolution);

enum class SliceClass { empty, acyclic, other };
std::string to_string(SliceClass c);

struct RegionProbe {
  SliceClass classification = SliceClass::empty;
  HomologyProfile betti;
  std::size_t resolution = 0;
};
/// Classifies A∖B at the given resolution.
RegionProbe probe_difference(const ConvexBody& a, const ConvexBody& b, std::size_t resolution);

/// Rectangular grid of translates lo + (hi - lo) * (i / steps, j / steps).
struct TranslateGrid {
  Vector lo;
  Vector hi;
  std::size_t steps = 8;
};
/// Default grid: the box of t for which A + t meets the bounding box of B.
TranslateGrid default_translate_grid(const ConvexBody& a, const ConvexBody& b, std::size_t steps = 8);

struct SliceResult {
  Vector t;
  RegionProbe probe;
  /// Present when the first pass was not empty-or-acyclic and the slice was
  /// recomputed at twice the resolution.
  std::optional<RegionProbe> refined;
  SliceClass final_class() const { return refined ? refined->classification : probe.classification; }
};

struct SummandProbeReport {
  bool all_acyclic_on_grid = true;
  bodies::SummandReport summand;
  /// False only if A is a summand but some slice stayed non-acyclic after
  /// refinement; the converse direction is evidence only.
  bool consistent = true;
  std::vector<SliceResult> slices;
  std::size_t resolution = 0;
};
/// Slices (A + t)∖B over the grid next to the exact summand test.
SummandProbeReport summand_acyclicity_probe(const ConvexBody& a, const ConvexBody& b, const TranslateGrid& grid,
                                            std::size_t resolution);

/// Profile of (A + B)∖A.
RegionProbe sum_difference_profile(const ConvexBody& a, const ConvexBody& b, std::size_t resolution);

/// Nerve of the family {(K - x)∖K : x ∈ points}; a subfamily meets exactly
/// when some translate of K contains those points and misses the origin.
SimplicialComplex translate_nerve(const ConvexBody& k, const std::vector<Vector>& points, std::uint64_t cap = 50'000);

/// K and T for probing K \ (K + T): K is the hull of 6 integer points in
/// [-6, 6]^2, T the hull of 4 integer points in [-2, 2]^2 shifted by an
/// integer vector in [-2, 2]^2.
std::pair<ConvexBody, ConvexBody> random_difference_pair(Rng& rng);

/// A and B = A + C for random lattice polygons A (6 points in [-3, 3]^2) and
/// C (4 points in [-2, 2]^2), so A is a summand of B.
std::pair<ConvexBody, ConvexBody> random_summand_pair(Rng& rng);

}  // namespace strongconv::topology
