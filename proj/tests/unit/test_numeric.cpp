#include "doctest.h"

#include "strongconv/errors.hpp"
#include "strongconv/numeric/lp.hpp"
#include "strongconv/numeric/matrix.hpp"

#include <random>

using namespace strongconv;
using namespace strongconv::numeric;

namespace {

Halfspace hs(std::initializer_list<int> a, int b) {
  Vector n;
  for (int v : a) n.emplace_back(v);
  return Halfspace{n, Rational(b)};
}

Vector vec(std::initializer_list<int> a) {
  Vector v;
  for (int x : a) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0.001") == Rational(1, 1000));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK(floor_integer(Rational(-3, 2)) == -2);
  CHECK(ceil_integer(Rational(-3, 2)) == -1);
  CHECK(round_to_denominator(0.26, 4) == Rational(1, 4));
}

TEST_CASE("primitive scaling keeps direction") {
  Vector v{Rational(2, 3), Rational(-4, 9)};
  const Rational f = primitive_scale_factor(v);
  CHECK(f > 0);
  CHECK(scale(v, f) == vec({3, -2}));
}

TEST_CASE("lp box maximum") {
  std::vector<Halfspace> box{hs({1, 0}, 1), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0)};
  const Vector c{1, 1};
  auto r = lp_maximize(c, box);
  REQUIRE(r.status == LPStatus::optimal);
  CHECK(r.optimum == 2);
  CHECK(r.point == vec({1, 1}));
}

TEST_CASE("lp infeasible and unbounded") {
  std::vector<Halfspace> bad{hs({1}, 0), hs({-1}, -1)};
  const Vector c1{1};
  CHECK(lp_maximize(c1, bad).status == LPStatus::infeasible);
  CHECK_FALSE(lp_feasible(1, bad));
  std::vector<Halfspace> half{hs({0, 1}, 0)};
  const Vector c2{1, 0};
  CHECK(lp_maximize(c2, half).status == LPStatus::unbounded);
  const Vector c3{1, 0, 0};
  CHECK_THROWS_AS(lp_maximize(c3, half), InputError);
}

TEST_CASE("lp returns a vertex of a degenerate face") {
  // The optimum face x + y = 2 is an edge; the point must be one of its ends.
  std::vector<Halfspace> tri{hs({1, 1}, 2), hs({-1, 0}, 0), hs({0, -1}, 0)};
  const Vector c{1, 1};
  auto r = lp_maximize(c, tri);
  REQUIRE(r.status == LPStatus::optimal);
  CHECK(r.optimum == 2);
  CHECK((r.point == vec({2, 0}) || r.point == vec({0, 2})));
}

TEST_CASE("lp property: optimum point is feasible and attains the value") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  int optimal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 2;
    std::vector<Halfspace> cons;
    for (std::size_t i = 0; i < 2 * d + 2; ++i) {
      Vector a(d);
      for (auto& x : a) x = coef(rng);
      cons.push_back(Halfspace{a, Rational(coef(rng))});
    }
    Vector obj(d);
    for (auto& x : obj) x = coef(rng);
    auto r = lp_maximize(obj, cons);
    if (r.status != LPStatus::optimal) continue;
    ++optimal;
    for (const auto& h : cons) CHECK(satisfies(h, r.point));
    CHECK(dot(obj, r.point) == r.optimum);
    // Check optimality against every vertex found by brute force.
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = i + 1; j < cons.size(); ++j) {
        if (d != 2) continue;
        RationalMatrix m = RationalMatrix::from_rows({cons[i].normal, cons[j].normal}, 2);
        auto x = solve_square(m, Vector{cons[i].offset, cons[j].offset});
        if (!x) continue;
        bool ok = true;
        for (const auto& h : cons) ok = ok && satisfies(h, *x);
        if (ok) CHECK(dot(obj, *x) <= r.optimum);
      }
    }
  }
  CHECK(optimal > 20);
}

TEST_CASE("matrix rank examples") {
  CHECK(matrix_rank(RationalMatrix::identity(3)) == 3);
  CHECK(matrix_rank(RationalMatrix(3, 3)) == 0);
  // Boundary of the triangle: rows are vertices 0,1,2, columns edges 01, 02, 12.
  RationalMatrix d1 = RationalMatrix::from_rows({vec({-1, -1, 0}), vec({1, 0, -1}), vec({0, 1, 1})}, 3);
  CHECK(matrix_rank(d1) == 2);
}

TEST_CASE("rank of transpose agrees") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = coef(rng) * (coef(rng) == 0 ? 0 : 1);
    CHECK(matrix_rank(m) == matrix_rank(m.transpose()));
  }
}

TEST_CASE("nullspace and rref") {
  RationalMatrix m = RationalMatrix::from_rows({vec({1, 2, 3}), vec({2, 4, 6})}, 3);
  auto ns = nullspace_basis(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    CHECK(dot(m.row(0), v) == 0);
  }
  CHECK(reduced_row_echelon(m).pivots == std::vector<std::size_t>{0});
  CHECK_FALSE(solve_square(RationalMatrix::from_rows({vec({1, 1}), vec({2, 2})}, 2), vec({1, 2})));
}
