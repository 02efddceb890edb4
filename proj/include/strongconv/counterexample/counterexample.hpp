#pragma once

#include "strongconv/bodies/convex_body.hpp"
#include "strongconv/separation/separation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strongconv::counterexample {

using bodies::ConvexBody;
using numeric::Rational;
using numeric::Vector;

/// Sections f(x, y) = x^2 - sum_k c_k(|y|) phi_k(x) / N_k of an epigraph in R^3,
/// for phi_k(x) = x^2 prod_{m != k} (x^2 - m^2)^2 and N_k the largest second
/// difference quotient of phi_k on the x-grid.
struct EpigraphFamily {
  int n = 3;
  Rational delta{1, 1000};
  Rational clip_height;
  Rational x_window;
  Rational x_step{1, 4};
  Rational y_step{1, 20};
  std::vector<Rational> y_grid;
  std::vector<Rational> x_grid;
  std::vector<Rational> norms;  // N_1..N_n at index k-1

  /// c_k(y): for k < n, delta * dist(min(|y|, n), [k-1, k])^2; for k = n,
  /// delta * max(0, n - 1 - |y|)^2.
  Rational coefficient(int k, const Rational& y) const;
  static Rational phi(int k, int n, const Rational& x);
  Rational f(const Rational& x, const Rational& y) const;
};

struct CounterexampleInstance {
  EpigraphFamily family;
  /// ξ_{+1}, ξ_{-1}, ξ_{+2}, ξ_{-2}, ... as (±k, 0, k^2).
  std::vector<Vector> points;
  std::vector<std::string> labels;
  /// Sections K_y for y on the grid, in the (x, z) plane.
  std::map<Rational, ConvexBody> sections;

  /// The points projected to the (x, z) plane.
  std::vector<Vector> planar_points() const;
};

struct BuildParams {
  int n = 3;
  Rational delta{1, 1000};
  std::optional<Rational> clip_height;  // default (n + 2)^2
  std::optional<Rational> x_window;     // default n + 2
  Rational y_step{1, 20};
  Rational x_step{1, 4};
};

/// Builds and validates the family; a chain whose slopes decrease is
/// rejected with a PreconditionError naming y and x.
CounterexampleInstance build_family(const BuildParams& params);

/// K_y as a planar body; |y| must be on the grid or at least n.
ConvexBody planar_section_body(const CounterexampleInstance& inst, const Rational& y);

struct SubsetWitness {
  std::size_t dropped = 0;
  std::string label;
  std::optional<Rational> y;
  std::optional<separation::SeparationWitness> witness;
};

struct SectionCertificate {
  Rational y;
  bool blocked = false;
};

struct CounterexampleReport {
  std::vector<SubsetWitness> maximal_subsets;
  std::vector<SectionCertificate> sections;
  bool maximal_subsets_separable = false;
  bool full_set_blocked = false;
  bool passed = false;
  /// Size of the smallest subset keeping the origin in every grid section's
  /// hull (lexicographic breadth-first search).
  std::optional<std::size_t> caratheodory;
  std::optional<std::vector<std::size_t>> caratheodory_subset;
  std::vector<std::string> failures;
};

CounterexampleReport verify_counterexample(const CounterexampleInstance& inst, std::size_t jobs = 1);

}  // namespace strongconv::counterexample
