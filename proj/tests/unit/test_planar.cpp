#include "doctest.h"

#include "strongconv/bodies/planar.hpp"
#include "strongconv/errors.hpp"

#include <algorithm>
#include <random>

using namespace strongconv;
using namespace strongconv::bodies::planar;
using strongconv::numeric::dot;

namespace {

Vector pt(long x, long y) { return Vector{Rational(x), Rational(y)}; }

Polygon random_polygon(std::mt19937_64& rng, int count, int range) {
  std::uniform_int_distribution<int> c(-range, range);
  std::vector<Vector> pts;
  for (int i = 0; i < count; ++i) pts.push_back(pt(c(rng), c(rng)));
  return convex_hull(pts);
}

// Reference intersection: every feasible pairwise line intersection, then hull.
std::optional<Polygon> oracle_intersection(const std::vector<Halfspace>& hs) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const auto& a = hs[i];
      const auto& b = hs[j];
      Rational det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
      if (det == 0) continue;
      Vector p{(a.offset * b.normal[1] - b.offset * a.normal[1]) / det,
               (a.normal[0] * b.offset - b.normal[0] * a.offset) / det};
      bool ok = std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return dot(h.normal, p) <= h.offset; });
      if (ok) pts.push_back(p);
    }
  }
  if (pts.empty()) return std::nullopt;
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("hull basics") {
  CHECK(convex_hull({pt(1, 1)}) == Polygon{pt(1, 1)});
  CHECK(convex_hull({pt(2, 0), pt(0, 0), pt(1, 0)}) == Polygon{pt(0, 0), pt(2, 0)});
  auto sq = convex_hull({pt(1, 1), pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 0)});
  CHECK(sq == Polygon{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
}

TEST_CASE("angular order") {
  std::vector<Vector> dirs{pt(1, 0), pt(1, 1), pt(0, 1), pt(-1, 1), pt(-1, 0), pt(-1, -1), pt(0, -1), pt(1, -1)};
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = 0; j < dirs.size(); ++j) CHECK(angle_less(dirs[i], dirs[j]) == (i < j));
}

TEST_CASE("square intersection and degenerate results") {
  std::vector<Halfspace> box{{pt(1, 0), 2}, {pt(-1, 0), 0}, {pt(0, 2), 4}, {pt(0, -1), 0}};
  auto r = intersect_halfplanes(box);
  REQUIRE(r);
  CHECK(*r == Polygon{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  std::vector<Halfspace> seg{{pt(1, 0), 1}, {pt(-1, 0), -1}, {pt(0, 1), 3}, {pt(0, -1), 0}};
  r = intersect_halfplanes(seg);
  REQUIRE(r);
  CHECK(*r == Polygon{pt(1, 0), pt(1, 3)});
  std::vector<Halfspace> dot_{{pt(1, 0), 1}, {pt(-1, 0), -1}, {pt(0, 1), 3}, {pt(0, -1), -3}};
  r = intersect_halfplanes(dot_);
  REQUIRE(r);
  CHECK(*r == Polygon{pt(1, 3)});
  std::vector<Halfspace> none{{pt(1, 0), 0}, {pt(-1, 0), -1}, {pt(0, 1), 3}, {pt(0, -1), 0}};
  CHECK_FALSE(intersect_halfplanes(none));
  std::vector<Halfspace> open{{pt(1, 0), 0}, {pt(0, 1), 3}};
  CHECK_THROWS_AS(intersect_halfplanes(open), InputError);
}

TEST_CASE("halfplane intersection matches pairwise oracle") {
  std::mt19937_64 rng(2024);
  int empties = 0, degenerate = 0;
  for (int trial = 0; trial < 600; ++trial) {
    Polygon k = random_polygon(rng, 4 + trial % 8, 6);
    if (k.size() < 3) continue;
    auto hs = edge_halfplanes(k);
    // Translated copies, as in an erosion, produce degenerate and empty overlaps.
    std::uniform_int_distribution<int> shift(-4, 4);
    const int copies = 1 + trial % 3;
    std::vector<Halfspace> all;
    std::vector<Halfspace> sorted_form = hs;
    for (int c = 0; c < copies; ++c) {
      Vector t = pt(shift(rng), shift(rng));
      for (const auto& h : hs) all.push_back(Halfspace{h.normal, h.offset - dot(h.normal, t)});
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
      Rational b = all[i].offset;
      for (int c = 1; c < copies; ++c) b = std::min(b, all[c * hs.size() + i].offset);
      sorted_form[i].offset = b;
    }
    auto expect = oracle_intersection(all);
    auto got = intersect_halfplanes(all);
    auto got_sorted = intersect_sorted_halfplanes(sorted_form);
    REQUIRE(got.has_value() == expect.has_value());
    REQUIRE(got_sorted.has_value() == expect.has_value());
    if (!expect) {
      ++empties;
      continue;
    }
    if (expect->size() < 3) ++degenerate;
    CHECK(*got == *expect);
    CHECK(*got_sorted == *expect);
  }
  CHECK(empties > 10);
  CHECK(degenerate > 5);
}

TEST_CASE("minkowski sum matches pairwise hull") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Polygon a = random_polygon(rng, 1 + trial % 7, 5);
    Polygon b = random_polygon(rng, 1 + (trial / 7) % 7, 5);
    std::vector<Vector> sums;
    for (const auto& p : a)
      for (const auto& q : b) sums.push_back(numeric::add(p, q));
    CHECK(minkowski_sum(a, b) == convex_hull(sums));
  }
  CHECK(minkowski_sum({pt(0, 0), pt(1, 0)}, {pt(0, 0), pt(0, 1)}) == Polygon{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
}

TEST_CASE("support sweep matches brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Polygon q = random_polygon(rng, 3 + trial % 9, 7);
    Polygon p = random_polygon(rng, 1 + trial % 6, 7);
    if (q.size() < 3) continue;
    auto facets = edge_halfplanes(q);
    auto sweep = support_sweep(p, facets);
    for (std::size_t i = 0; i < facets.size(); ++i) {
      CHECK(sweep.values[i] == support(p, facets[i].normal));
      // lexicographically smallest maximizer
      std::optional<Vector> best;
      for (const auto& v : p)
        if (dot(facets[i].normal, v) == sweep.values[i] && (!best || numeric::compare_lex(v, *best) < 0)) best = v;
      CHECK(p[sweep.argmax[i]] == *best);
    }
  }
}

TEST_CASE("containment") {
  Polygon sq{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  CHECK(contains(sq, pt(2, 1)));
  CHECK_FALSE(contains_strictly(sq, pt(2, 1)));
  CHECK(contains_strictly(sq, pt(1, 1)));
  CHECK_FALSE(contains(sq, pt(3, 1)));
  Polygon seg{pt(0, 0), pt(2, 2)};
  CHECK(contains(seg, pt(1, 1)));
  CHECK_FALSE(contains(seg, pt(3, 3)));
  CHECK_FALSE(contains(seg, pt(1, 0)));
  CHECK(reflect(sq) == Polygon{pt(-2, -2), pt(0, -2), pt(0, 0), pt(-2, 0)});
}
