#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "monofold/generators.hpp"
#include "monofold/multi_axis.hpp"
#include "monofold/monoid.hpp"
#include "monofold/rng.hpp"

using namespace monofold;

namespace {

// 1x1 generators: R_x = (2), R_y = (3). Scalar cases make the
// bookkeeping auditable by hand.
FamilyPtr<double> scalar_family() {
  return GeneratorFamily<double>::create(
      {Matrix<double>::diagonal({2.0}), Matrix<double>::diagonal({3.0})});
}

FamilyPtr<double> noncommuting_family() {
  return GeneratorFamily<double>::create(
      {Matrix<double>::from_rows({{0, 1}, {1, 0}}), Matrix<double>::diagonal({1, 2})});
}

Vector<double> random_vec(Rng& rng, std::size_t d) {
  Vector<double> v(d);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

std::vector<std::vector<Vector<double>>> random_grid(Rng& rng, std::size_t rows,
                                                     std::size_t cols, std::size_t d) {
  std::vector<std::vector<Vector<double>>> g(rows);
  for (auto& row : g) {
    row.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) row.push_back(random_vec(rng, d));
  }
  return g;
}

}  // namespace

TEST_CASE("generator family construction") {
  const auto fam = scalar_family();
  CHECK(fam->axis_count() == 2);
  CHECK(fam->dim() == 1);
  CHECK(fam->commuting());
  CHECK(fam->max_commutator() == 0.0);

  CHECK_FALSE(noncommuting_family()->commuting());
  CHECK(noncommuting_family()->max_commutator() == 1.0);

  CHECK_THROWS_AS(GeneratorFamily<double>::create({}), InvalidArgument);
  CHECK_THROWS_AS(GeneratorFamily<double>::create(
                      {Matrix<double>::identity(2), Matrix<double>::identity(3)}),
                  DimensionMismatch);
}

TEST_CASE("memoized powers match mat_pow") {
  const auto fam = GeneratorFamily<double>::create(
      {Matrix<double>::diagonal({2.0, 0.5}), rotation_block(0.7)});
  // Mixed access order exercises both cache walks.
  for (long long e : {5LL, 2LL, 7LL, 0LL, -1LL, -4LL, 3LL, -2LL}) {
    for (std::size_t axis : {0u, 1u}) {
      CHECK(max_abs_diff(fam->power(axis, e), mat_pow(fam->axis(axis), e)) <= 1e-12);
    }
  }

  const auto singular = GeneratorFamily<double>::create(
      {Matrix<double>::from_rows({{1, 1}, {1, 1}}), Matrix<double>::identity(2)});
  CHECK_THROWS_AS(singular->power(0, -1), SingularMatrix);
  CHECK(singular->power(0, 0) == Matrix<double>::identity(2));
}

TEST_CASE("compose_axis") {
  const auto fam = scalar_family();

  SECTION("scalar example: 2^0 * 1 + 1 = 2") {
    const AxisElement<double> u({1.0}, {0, 0}, fam);
    const AxisElement<double> v({1.0}, {1, 0}, fam);
    const auto e = compose_axis(u, v, 0);
    CHECK(e.vec == Vector<double>{2.0});
    CHECK(e.exponents == std::vector<long long>{1, 0});
  }

  SECTION("zero vector and zero exponent on the left is neutral") {
    const AxisElement<double> zero({0.0}, {0, 5}, fam);
    const AxisElement<double> v({7.0}, {3, 5}, fam);
    const auto e = compose_axis(zero, v, 0);
    CHECK(e.vec == v.vec);
    CHECK(e.exponents == std::vector<long long>{3, 5});
  }

  SECTION("off-axis exponent mismatch") {
    const AxisElement<double> u({1.0}, {0, 0}, fam);
    const AxisElement<double> w({1.0}, {1, 0}, fam);
    CHECK_THROWS_AS(compose_axis(u, w, 1), AxisMismatch);
  }

  SECTION("family mismatch") {
    const AxisElement<double> a({1.0}, {0, 0}, scalar_family());
    const AxisElement<double> b({1.0}, {0, 0}, scalar_family());  // distinct instance
    CHECK_THROWS_AS(compose_axis(a, b, 0), FamilyMismatch);
  }

  SECTION("identity_for_axis is neutral") {
    Rng rng(3);
    const auto dfam = family_diagonal_random(3, 2, 77);
    const AxisElement<double> e(random_vec(rng, 3), {2, 4}, dfam);
    for (std::size_t axis : {0u, 1u}) {
      const auto id = identity_for_axis(e, axis);
      const auto left = compose_axis(id, e, axis);
      CHECK(left.vec == e.vec);
      CHECK(left.exponents == e.exponents);
    }
  }

  SECTION("negative exponents use the generator inverse") {
    const AxisElement<double> l({1.0}, {-1, 2}, fam);
    const AxisElement<double> r({4.0}, {3, 2}, fam);
    const auto e = compose_axis(l, r, 0);
    CHECK(e.vec == Vector<double>{3.0});  // 1 + 2^-1 * 4
    CHECK(e.exponents == std::vector<long long>{2, 2});

    const auto singular = GeneratorFamily<double>::create(
        {Matrix<double>::from_rows({{1, 1}, {1, 1}}), Matrix<double>::identity(2)});
    const AxisElement<double> a({1.0, 0.0}, {-1, 0}, singular);
    const AxisElement<double> b({0.0, 1.0}, {1, 0}, singular);
    CHECK_THROWS_AS(compose_axis(a, b, 0), SingularMatrix);
  }

  SECTION("associative along a fixed axis") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t d = 1 + rng.index(6);
      const auto dfam = family_diagonal_random(d, 2, rng.next());
      const std::size_t axis = rng.index(2);
      const long long off = rng.uniform_int(0, 4);
      const auto elem = [&](long long on) {
        std::vector<long long> exps(2);
        exps[axis] = on;
        exps[1 - axis] = off;
        return AxisElement<double>(random_vec(rng, d), exps, dfam);
      };
      const auto a = elem(rng.uniform_int(0, 4));
      const auto b = elem(rng.uniform_int(0, 4));
      const auto c = elem(rng.uniform_int(0, 4));
      const auto lhs = compose_axis(compose_axis(a, b, axis), c, axis);
      const auto rhs = compose_axis(a, compose_axis(b, c, axis), axis);
      CHECK(max_abs_diff(lhs.vec, rhs.vec) <= 1e-9);
      CHECK(lhs.exponents == rhs.exponents);
    }
  }
}

TEST_CASE("check_interchange") {
  SECTION("scalar example: both sides give 38") {
    const auto fam = scalar_family();
    const AxisElement<double> a({1.0}, {1, 1}, fam);
    const AxisElement<double> b({2.0}, {1, 1}, fam);
    const AxisElement<double> c({3.0}, {1, 1}, fam);
    const AxisElement<double> d({4.0}, {1, 1}, fam);
    const auto lhs = compose_axis(compose_axis(a, b, 0), compose_axis(c, d, 0), 1);
    CHECK(lhs.vec == Vector<double>{38.0});
    const auto report = check_interchange(a, b, c, d, 0, 1);
    CHECK(report.pass);
    CHECK(report.max_abs_error == 0.0);
  }

  SECTION("identity generators reduce to plain addition") {
    const auto fam = GeneratorFamily<double>::create(
        {Matrix<double>::identity(1), Matrix<double>::identity(1)});
    const AxisElement<double> a({1.0}, {1, 1}, fam);
    const AxisElement<double> b({2.0}, {1, 1}, fam);
    const AxisElement<double> c({3.0}, {1, 1}, fam);
    const AxisElement<double> d({4.0}, {1, 1}, fam);
    const auto lhs = compose_axis(compose_axis(a, b, 0), compose_axis(c, d, 0), 1);
    CHECK(lhs.vec == Vector<double>{10.0});
    CHECK(check_interchange(a, b, c, d, 0, 1).pass);
  }

  SECTION("non-commuting family fails with a witness") {
    const auto fam = noncommuting_family();
    const AxisElement<double> a({1.0, 2.0}, {1, 1}, fam);
    const AxisElement<double> b({3.0, 4.0}, {1, 1}, fam);
    const AxisElement<double> c({5.0, 6.0}, {1, 1}, fam);
    const AxisElement<double> d({1.0, 0.0}, {1, 1}, fam);
    const auto report = check_interchange(a, b, c, d, 0, 1);
    CHECK_FALSE(report.pass);
    CHECK(report.max_abs_error > 0.0);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->lhs != report.witness->rhs);
  }

  SECTION("500 random commuting families pass at 1e-9") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t d = 1 + rng.index(8);
      const auto fam = family_diagonal_random(d, 2, rng.next());
      const long long n = rng.uniform_int(0, 4), m = rng.uniform_int(0, 4);
      const long long k = rng.uniform_int(0, 4), q = rng.uniform_int(0, 4);
      const AxisElement<double> a(random_vec(rng, d), {n, m}, fam);
      const AxisElement<double> b(random_vec(rng, d), {k, m}, fam);
      const AxisElement<double> c(random_vec(rng, d), {n, q}, fam);
      const AxisElement<double> dd(random_vec(rng, d), {k, q}, fam);
      const auto report = check_interchange(a, b, c, dd, 0, 1);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("fold_grid") {
  SECTION("1x1 grid") {
    const auto fam = scalar_family();
    const auto e = fold_grid<double>({{{5.0}}}, fam);
    CHECK(e.vec == Vector<double>{5.0});
    CHECK(e.exponents == std::vector<long long>{1, 1});
  }

  SECTION("2x2 scalar grid sums to 37") {
    // 1 + 3*2 + 2*3 + 6*4 with R_x = (2), R_y = (3).
    const auto fam = scalar_family();
    const std::vector<std::vector<Vector<double>>> grid{{{1.0}, {2.0}}, {{3.0}, {4.0}}};
    const auto e = fold_grid(grid, fam);
    CHECK(e.vec == Vector<double>{37.0});
    CHECK(e.exponents == std::vector<long long>{2, 2});
  }

  SECTION("identity generators sum the grid") {
    const auto fam = GeneratorFamily<double>::create(
        {Matrix<double>::identity(1), Matrix<double>::identity(1)});
    const std::vector<std::vector<Vector<double>>> grid{{{1.5}, {2.5}}, {{3.0}, {-1.0}}};
    CHECK(fold_grid(grid, fam).vec == Vector<double>{6.0});
  }

  SECTION("refuses non-commuting families") {
    const std::vector<std::vector<Vector<double>>> grid{{{1.0, 0.0}}};
    CHECK_THROWS_AS(fold_grid(grid, noncommuting_family()), NonCommutingFamily);
  }

  SECTION("empty grid is an error") {
    CHECK_THROWS_AS(fold_grid<double>({}, scalar_family()), InvalidArgument);
  }

  SECTION("Hx1 grid degenerates to the 1D closed form") {
    Rng rng(55);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t d = 1 + rng.index(4);
      const std::size_t rows = 1 + rng.index(8);
      Matrix<double> r(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(i, j) = rng.uniform(-1.0, 1.0);
      const auto fam = family_from_powers(r, {1, 0});  // R_y = R^0 = I
      std::vector<std::vector<Vector<double>>> grid(rows);
      std::vector<MonoidElement<double>> elems;
      for (auto& row : grid) {
        row.push_back(random_vec(rng, d));
        elems.emplace_back(row.front(), r);
      }
      CHECK(max_abs_diff(fold_grid(grid, fam).vec, closed_form(elems).vec) <= 1e-12);
    }
  }
}

TEST_CASE("fold_grid_scheduled") {
  const auto fam = scalar_family();
  const std::vector<std::vector<Vector<double>>> grid{{{1.0}, {2.0}}, {{3.0}, {4.0}}};

  SECTION("canonical schedules reproduce fold_grid") {
    const auto by_rows = fold_grid_scheduled(grid, fam, rows_then_columns_schedule(2, 2));
    const auto by_cols = fold_grid_scheduled(grid, fam, columns_then_rows_schedule(2, 2));
    CHECK(by_rows.vec == Vector<double>{37.0});
    CHECK(by_cols.vec == Vector<double>{37.0});
    CHECK(by_rows.exponents == std::vector<long long>{2, 2});
  }

  SECTION("non-commuting generators make the order observable") {
    const auto bad = noncommuting_family();
    const std::vector<std::vector<Vector<double>>> g{
        {{1.0, 0.0}, {0.0, 1.0}}, {{2.0, 1.0}, {1.0, 2.0}}};
    const auto by_rows = fold_grid_scheduled(g, bad, rows_then_columns_schedule(2, 2));
    const auto by_cols = fold_grid_scheduled(g, bad, columns_then_rows_schedule(2, 2));
    CHECK(max_abs_diff(by_rows.vec, by_cols.vec) > 1e-6);
  }

  SECTION("random schedules agree with fold_grid on commuting families") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t rows = 1 + rng.index(6), cols = 1 + rng.index(6);
      const std::size_t d = 1 + rng.index(4);
      const auto dfam = family_diagonal_random(d, 2, rng.next());
      const auto g = random_grid(rng, rows, cols, d);
      const auto base = fold_grid(g, dfam);
      for (int s = 0; s < 20; ++s) {
        const auto alt = fold_grid_scheduled(g, dfam, random_schedule(rows, cols, rng));
        CHECK(max_abs_diff(base.vec, alt.vec) <= 1e-9);
        CHECK(base.exponents == alt.exponents);
      }
    }
  }

  SECTION("invalid schedules are rejected") {
    // Unknown tile.
    CHECK_THROWS_AS(fold_grid_scheduled(grid, fam, {{5, 5, 6, 5, 0}}), InvalidSchedule);
    // Misaligned merge: tiles not adjacent along the axis.
    CHECK_THROWS_AS(fold_grid_scheduled(grid, fam, {{0, 0, 1, 1, 0}}), InvalidSchedule);
    // Incomplete reduction.
    CHECK_THROWS_AS(fold_grid_scheduled(grid, fam, {{0, 0, 0, 1, 1}}), InvalidSchedule);
    // A step that would merge tiles of unequal extent: the top row is
    // already a 1x2 strip, the left column cell below it is 1x1.
    const GridSchedule bad{{0, 0, 0, 1, 1}, {0, 0, 1, 0, 0}};
    CHECK_THROWS_AS(fold_grid_scheduled(grid, fam, bad), InvalidSchedule);
  }
}
