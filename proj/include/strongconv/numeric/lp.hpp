#pragma once

#include "strongconv/numeric/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace strongconv::numeric {

/// The closed halfspace normal . x <= offset.
struct Halfspace {
  Vector normal;
  Rational offset;

  bool operator==(const Halfspace&) const = default;
};

/// Scales to a primitive integer normal (positive factor, so the set is unchanged).
Halfspace normalized(const Halfspace& h);
/// Lexicographic on (normal, offset).
std::strong_ordering compare_halfspaces(const Halfspace& a, const Halfspace& b);
bool satisfies(const Halfspace& h, std::span<const Rational> x);

enum class LPStatus { optimal, infeasible, unbounded };
std::string to_string(LPStatus status);

struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  Rational optimum;
  Vector point;
};

/// Maximizes objective . x over {x : a_i . x <= b_i}, x free.
///
/// Two-phase dense tableau simplex with Bland's rule, so it terminates without
/// any tolerance. An optimal point is moved to a vertex of the feasible region
/// whenever the region has one.
LPOutcome lp_maximize(std::span<const Rational> objective, std::span<const Halfspace> constraints);

/// Whether {x : a_i . x <= b_i} is nonempty.
bool lp_feasible(std::size_t dim, std::span<const Halfspace> constraints);

}  // namespace strongconv::numeric
