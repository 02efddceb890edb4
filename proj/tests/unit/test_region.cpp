#include "doctest.h"

#include "oracles.hpp"
#include "strongconv/bodies/operations.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/separation/generators.hpp"
#include "strongconv/topology/region.hpp"

#include <random>

using namespace strongconv;
using namespace strongconv::topology;
using oracle::pt;

namespace {

RegionOracle radial(const Rational& r_in2, const Rational& r_out2, const Rational& box) {
  RegionOracle r;
  r.membership = [=](const Vector& p) {
    Rational s = 0;
    for (const auto& x : p) s += x * x;
    return s >= r_in2 && s <= r_out2;
  };
  r.lo = Vector{-box, -box};
  r.hi = Vector{box, box};
  r.tag = "radial";
  return r;
}

// Oracle reading a voxel array by cell-center location on the unit-cell grid.
RegionOracle voxels(const std::vector<char>& on, std::size_t n, std::size_t dim) {
  RegionOracle r;
  r.membership = [&on, n, dim](const Vector& p) {
    std::size_t idx = 0, mul = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      idx += static_cast<std::size_t>(numeric::floor_integer(p[i]).convert_to<long>()) * mul;
      mul *= n;
    }
    return on[idx] != 0;
  };
  r.lo = numeric::zero_vector(dim);
  r.hi = Vector(dim, Rational(static_cast<long>(n)));
  return r;
}

// Freudenthal triangulation of the union of closed unit cells.
SimplicialComplex freudenthal(const std::vector<char>& on, std::size_t n, std::size_t dim) {
  const std::size_t m = n + 1;
  auto vid = [&](std::array<std::size_t, 3> c) { return c[0] + m * (c[1] + m * c[2]); };
  std::vector<Simplex> facets;
  const std::size_t cells = dim == 2 ? n * n : n * n * n;
  for (std::size_t k = 0; k < cells; ++k) {
    if (!on[k]) continue;
    std::array<std::size_t, 3> base{k % n, k / n % n, dim == 3 ? k / (n * n) : 0};
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      if (dim == 2 && perm[2] != 2) continue;
      std::array<std::size_t, 3> cur = base;
      Simplex s = Simplex{1} << vid(cur);
      for (std::size_t i = 0; i < dim; ++i) {
        ++cur[perm[i]];
        s |= Simplex{1} << vid(cur);
      }
      facets.push_back(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const std::size_t verts = dim == 2 ? m * m : m * m * m;
  return SimplicialComplex::from_masks(SimplicialComplex::numbered(verts), facets);
}

ConvexBody poly(std::mt19937_64& rng, int points, int range) {
  return ConvexBody::from_polygon(oracle::random_polygon(rng, points, range));
}

}  // namespace

TEST_CASE("region_betti on annulus and disk") {
  const HomologyProfile annulus = region_betti(radial(1, 4, Rational(5, 2)), 200, 2);
  CHECK(annulus.at(0) == 0);
  CHECK(annulus.at(1) == 1);
  const HomologyProfile disk = region_betti(radial(0, 4, Rational(5, 2)), 200, 2);
  CHECK(disk.all_zero());
  CHECK_FALSE(disk.is_empty_complex);
  const HomologyProfile none = region_betti(radial(9, 16, Rational(1)), 50, 2);
  CHECK(none.is_empty_complex);
  CHECK_THROWS_AS(region_betti(radial(0, 1, 1), 10, 4), InputError);
}

TEST_CASE("region_betti in three dimensions") {
  RegionOracle shell;
  shell.membership = [](const Vector& p) {
    const Rational s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    return s >= 1 && s <= 4;
  };
  shell.lo = Vector(3, Rational(-3));
  shell.hi = Vector(3, Rational(3));
  const HomologyProfile hs = region_betti(shell, 30, 3);
  CHECK(hs.at(0) == 0);
  CHECK(hs.at(1) == 0);
  CHECK(hs.at(2) == 1);

  RegionOracle torus;
  torus.membership = [](const Vector& p) {
    const double x = numeric::to_double(p[0]), y = numeric::to_double(p[1]), z = numeric::to_double(p[2]);
    const double r = std::hypot(x, y) - 2;
    return r * r + z * z <= 0.64;
  };
  torus.lo = Vector(3, Rational(-3));
  torus.hi = Vector(3, Rational(3));
  const HomologyProfile ht = region_betti(torus, 40, 3);
  CHECK(ht.at(0) == 0);
  CHECK(ht.at(1) == 1);
  CHECK(ht.at(2) == 0);
}

TEST_CASE("region_betti agrees with a Freudenthal triangulation") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = trial % 2 ? 3 : 2;
    const std::size_t n = dim == 2 ? 6 : 3;
    const std::size_t cells = dim == 2 ? n * n : n * n * n;
    std::bernoulli_distribution coin(0.3 + 0.4 * (trial % 5) / 4.0);
    std::vector<char> on(cells);
    for (auto& c : on) c = coin(rng);
    const HomologyProfile raster = region_betti(voxels(on, n, dim), n, dim);
    const HomologyProfile exact = reduced_betti(freudenthal(on, n, dim));
    bool any = false;
    for (char c : on) any = any || c;
    CHECK(raster.is_empty_complex == !any);
    if (!any) continue;
    for (int i = -1; i <= 3; ++i) CHECK(raster.at(i) == exact.at(i));
  }
}

TEST_CASE("difference region pieces") {
  const ConvexBody a = ConvexBody::from_polygon({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  const ConvexBody b = ConvexBody::from_polygon({pt(1, -1), pt(3, -1), pt(3, 3), pt(1, 3)});
  const DifferenceRegion r = difference_region(a, b, 100);
  CHECK_FALSE(r.empty);
  REQUIRE(r.pieces.size() == 1);
  CHECK(r.pieces[0] == bodies::planar::Polygon{pt(0, 0), pt(1, 0), pt(1, 2), pt(0, 2)});
  CHECK(r.cell == Rational(2, 94));
  CHECK(r.oracle.hi[0] - r.oracle.lo[0] == Rational(200, 94));
  CHECK(r.oracle.membership(pt(1, 1)));
  CHECK(r.oracle.membership(Vector{Rational(1) + r.cell, Rational(1)}));
  CHECK_FALSE(r.oracle.membership(Vector{Rational(1) + r.cell + Rational(1, 10000), Rational(1)}));

  CHECK(difference_region(a, ConvexBody::from_polygon({pt(-1, -1), pt(3, -1), pt(3, 3), pt(-1, 3)}), 50).empty);
  // A touching B from inside is still contained
  CHECK(difference_region(a, a, 50).empty);
}

TEST_CASE("K minus K+T is empty or acyclic on random pairs") {
  std::mt19937_64 rng(31);
  int nonempty = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const ConvexBody k = poly(rng, 6, 6);
    const ConvexBody t = poly(rng, 4, 2).translated(pt(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2));
    const RegionProbe p = probe_difference(k, bodies::minkowski_sum(k, t), 200);
    CHECK(p.classification != SliceClass::other);
    if (p.classification == SliceClass::acyclic) ++nonempty;
  }
  CHECK(nonempty >= 4);
}

TEST_CASE("summand acyclicity probe") {
  const ConvexBody a = ConvexBody::from_polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  const ConvexBody b = ConvexBody::from_polygon({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  const SummandProbeReport r = summand_acyclicity_probe(a, b, default_translate_grid(a, b, 6), 60);
  CHECK(r.summand.is_summand);
  CHECK(r.all_acyclic_on_grid);
  CHECK(r.consistent);
  CHECK(r.slices.size() == 49);
  std::size_t empty = 0;
  for (const auto& s : r.slices) empty += s.final_class() == SliceClass::empty;
  CHECK(empty >= 1);  // t in [0,1]^2 lands inside B

  // thin triangle against a disk: not a summand; the grid may or may not see
  // a non-acyclic slice, so only the bookkeeping is checked
  const ConvexBody thin = ConvexBody::from_polygon({pt(0, 0), Vector{Rational(3, 2), Rational(0)}, Vector{Rational(3, 4), Rational(1, 8)}});
  const ConvexBody disk = separation::named_body("disk");
  const SummandProbeReport d = summand_acyclicity_probe(thin, disk, default_translate_grid(thin, disk, 8), 60);
  CHECK_FALSE(d.summand.is_summand);
  CHECK(d.consistent);
  for (const auto& s : d.slices) {
    if (s.probe.classification == SliceClass::other) {
      REQUIRE(s.refined);
      CHECK(s.refined->resolution == 120);
    } else {
      CHECK_FALSE(s.refined);
    }
  }
}

TEST_CASE("sum difference profile") {
  const ConvexBody a = ConvexBody::from_polygon({pt(-2, -2), pt(2, -2), pt(2, 2), pt(-2, 2)});
  const ConvexBody b = ConvexBody::from_polygon({pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)});
  // (A+B)∖A is a square annulus: the homology of a circle
  const RegionProbe p = sum_difference_profile(a, b, 100);
  CHECK(p.betti.at(0) == 0);
  CHECK(p.betti.at(1) == 1);
  // shifted B: (A+B)∖A is an L-shaped band, acyclic
  const RegionProbe q = sum_difference_profile(a, b.translated(pt(1, 1)), 100);
  CHECK(q.classification == SliceClass::acyclic);
}

TEST_CASE("holes in a difference region and the pocket threshold") {
  const ConvexBody a = ConvexBody::from_polygon({pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)});
  // at resolution 106 a cell is 10/100; B of side 2 leaves a hole 20 cells wide
  const ConvexBody big = ConvexBody::from_polygon({pt(4, 4), pt(6, 4), pt(6, 6), pt(4, 6)});
  const RegionProbe p = probe_difference(a, big, 106);
  CHECK(p.classification == SliceClass::other);
  CHECK(p.betti.at(1) == 1);
  // side 3/10: the thickened set leaves a pocket about one cell wide, below the raster scale
  const Rational lo(485, 100), hi(515, 100);
  const ConvexBody tiny = ConvexBody::from_polygon({Vector{lo, lo}, Vector{hi, lo}, Vector{hi, hi}, Vector{lo, hi}});
  CHECK(probe_difference(a, tiny, 106).betti.at(1) == 0);
  // the same pocket is a hole at a finer raster
  CHECK(probe_difference(a, tiny, 1006).betti.at(1) == 1);
  // acute corner of B inside A + t, which once left a trapped cell
  const ConvexBody at = ConvexBody::from_polygon({pt(-2, 1), pt(0, -3), pt(3, -1)}).translated(Vector{Rational(-11, 4), Rational(3)});
  const ConvexBody b = ConvexBody::from_polygon({pt(-1, -1), pt(2, -5), pt(5, -3), pt(5, -2), pt(2, 1), pt(-3, 3)});
  for (std::size_t res : {60, 100, 200}) CHECK(probe_difference(at, b, res).classification == SliceClass::acyclic);
}

TEST_CASE("translate nerve contains every colorful transversal") {
  Rng rng(37);
  const ConvexBody k = separation::named_body("square");
  const separation::Separator sep(k, numeric::zero_vector(2));
  separation::InstanceParams params;
  params.extent = 1;
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = separation::hypothesis_instance(rng, sep, params);
    std::vector<Vector> pts;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t c = 0; c < 3; ++c) {
      classes.push_back({});
      for (const auto& p : inst.points.class_points(c)) {
        classes.back().push_back(pts.size());
        pts.push_back(p);
      }
    }
    const SimplicialComplex n = translate_nerve(k, pts);
    for (std::size_t i : classes[0])
      for (std::size_t j : classes[1])
        for (std::size_t l : classes[2]) CHECK(n.contains(Simplex{1} << i | Simplex{1} << j | Simplex{1} << l));
  }
}

TEST_CASE("nerve homology matches the rasterized union") {
  // Lattice boxes: with cell edges on integer lines the closed-cell raster is
  // the union itself, including contacts along edges and corners.
  std::mt19937_64 rng(41);
  std::vector<std::vector<bodies::planar::Polygon>> families;
  std::vector<bodies::planar::Polygon> ring;
  const std::vector<std::pair<int, int>> spots{{0, 0}, {3, 0}, {6, 0}, {6, 3}, {6, 6}, {3, 6}, {0, 6}, {0, 3}};
  for (auto [x, y] : spots) ring.push_back({pt(x, y), pt(x + 4, y), pt(x + 4, y + 4), pt(x, y + 4)});
  families.push_back(ring);
  for (int i = 0; i < 120; ++i) {
    std::vector<bodies::planar::Polygon> fam;
    const int count = 3 + i % 6;
    for (int j = 0; j < count; ++j) {
      const long x = static_cast<long>(rng() % 14) - 8, y = static_cast<long>(rng() % 14) - 8;
      const long w = 1 + static_cast<long>(rng() % 6), h = 1 + static_cast<long>(rng() % 6);
      fam.push_back({pt(x, y), pt(x + w, y), pt(x + w, y + h), pt(x, y + h)});
    }
    families.push_back(fam);
  }
  std::size_t holes = 0, split = 0;
  for (const auto& fam : families) {
    const SimplicialComplex nv = nerve(SimplicialComplex::numbered(fam.size()), [&](Simplex s) {
      std::vector<numeric::Halfspace> hs;
      for (std::size_t v : simplex_vertices(s)) {
        auto e = bodies::planar::edge_halfplanes(fam[v]);
        hs.insert(hs.end(), e.begin(), e.end());
      }
      return bodies::planar::intersect_halfplanes(hs).has_value();
    });
    RegionOracle uni;
    uni.membership = [&](const Vector& p) {
      for (const auto& poly : fam)
        if (bodies::planar::contains(poly, p)) return true;
      return false;
    };
    uni.lo = Vector{Rational(-10), Rational(-10)};
    uni.hi = Vector{Rational(12), Rational(12)};
    const HomologyProfile hn = reduced_betti(nv);
    for (std::size_t res : {22, 44}) {
      const HomologyProfile r = region_betti(uni, res, 2);
      for (int i = -1; i <= 2; ++i) CHECK(hn.at(i) == r.at(i));
    }
    holes += hn.at(1) > 0;
    split += hn.at(0) > 0;
  }
  // the sample exercises both kinds of nontrivial topology
  CHECK(holes >= 3);
  CHECK(split >= 10);
  CHECK(reduced_betti(nerve(SimplicialComplex::numbered(ring.size()), [&](Simplex s) {
          const auto v = simplex_vertices(s);
          if (v.size() == 1) return true;
          if (v.size() > 2) return false;
          std::size_t d = v[1] - v[0];
          return d == 1 || d == ring.size() - 1;
        })).at(1) == 1);
}
