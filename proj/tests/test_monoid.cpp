#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "monofold/monoid.hpp"
#include "monofold/rng.hpp"

using namespace monofold;

namespace {

MonoidElement<double> random_element(Rng& rng, std::size_t d) {
  Vector<double> v(d);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  Matrix<double> m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
  return {std::move(v), std::move(m)};
}

MonoidElement<std::int64_t> random_int_element(Rng& rng, std::size_t d) {
  Vector<std::int64_t> v(d);
  for (auto& x : v) x = rng.uniform_int(-3, 3);
  Matrix<std::int64_t> m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rng.uniform_int(-3, 3);
  return {std::move(v), std::move(m)};
}

// Left-to-right grouping; fold_sequence folds right-to-left, and
// associativity says the two must agree.
template <class T>
MonoidElement<T> fold_left(const std::vector<MonoidElement<T>>& elems) {
  MonoidElement<T> acc = elems.front();
  for (std::size_t i = 1; i < elems.size(); ++i) acc = compose(acc, elems[i]);
  return acc;
}

}  // namespace

TEST_CASE("compose") {
  const auto swap = Matrix<std::int64_t>::from_rows({{0, 1}, {1, 0}});
  const MonoidElement<std::int64_t> l({1, 0}, swap);
  const MonoidElement<std::int64_t> r({0, 2}, Matrix<std::int64_t>::identity(2));

  SECTION("identity is left-neutral") {
    const auto e = compose(identity_element<std::int64_t>(2), r);
    CHECK(e.vec == r.vec);
    CHECK(e.op == r.op);
  }

  SECTION("direct evaluation") {
    const auto e = compose(l, r);
    CHECK(e.vec == Vector<std::int64_t>{3, 0});
    CHECK(e.op == swap);
  }

  SECTION("non-commutativity witness") {
    const auto lr = compose(l, r);
    const auto rl = compose(r, l);
    CHECK(rl.vec == Vector<std::int64_t>{1, 2});
    CHECK(rl.op == swap);
    CHECK(lr.vec != rl.vec);  // order matters, exactly
  }

  SECTION("dimension mismatch") {
    CHECK_THROWS_AS(compose(l, identity_element<std::int64_t>(3)), DimensionMismatch);
    CHECK_THROWS_AS(MonoidElement<double>({1.0}, Matrix<double>::identity(2)),
                    DimensionMismatch);
  }
}

TEST_CASE("identity_element") {
  const auto id = identity_element<double>(2);
  CHECK(id.vec == Vector<double>{0.0, 0.0});
  CHECK(id.op == Matrix<double>::identity(2));
  CHECK_THROWS_AS(identity_element<double>(0), InvalidArgument);

  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng.index(6);
    const auto e = random_element(rng, d);
    const auto idd = identity_element<double>(d);
    // Neutral on both sides, exactly (no tolerance).
    CHECK(compose(idd, e).vec == e.vec);
    CHECK(compose(idd, e).op == e.op);
    CHECK(compose(e, idd).vec == e.vec);
    CHECK(compose(e, idd).op == e.op);
  }
}

TEST_CASE("associativity") {
  SECTION("float kind, 1000 random triples") {
    Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t d = 1 + rng.index(6);
      const auto a = random_element(rng, d);
      const auto b = random_element(rng, d);
      const auto c = random_element(rng, d);
      CHECK(max_abs_diff(compose(compose(a, b), c), compose(a, compose(b, c))) <= 1e-9);
    }
  }

  SECTION("integer kind, exact") {
    Rng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t d = 1 + rng.index(4);
      const auto a = random_int_element(rng, d);
      const auto b = random_int_element(rng, d);
      const auto c = random_int_element(rng, d);
      const auto lhs = compose(compose(a, b), c);
      const auto rhs = compose(a, compose(b, c));
      CHECK(lhs.vec == rhs.vec);
      CHECK(lhs.op == rhs.op);
    }
  }
}

TEST_CASE("fold_sequence") {
  const auto swap = Matrix<double>::from_rows({{0, 1}, {1, 0}});
  const MonoidElement<double> e1({1.0, 0.0}, swap);
  const MonoidElement<double> e2({0.0, 2.0}, Matrix<double>::diagonal({2.0, 3.0}));

  SECTION("single element folds to itself") {
    const auto f = fold_sequence<double>({e1});
    CHECK(f.vec == e1.vec);
    CHECK(f.op == e1.op);
  }

  SECTION("two elements: (v1 + R1 v2, R1 R2)") {
    const auto f = fold_sequence<double>({e1, e2});
    CHECK(f.vec == vec_add(e1.vec, mat_vec(e1.op, e2.vec)));
    CHECK(f.op == mat_mul(e1.op, e2.op));
  }

  SECTION("empty list is an error") {
    CHECK_THROWS_AS(fold_sequence<double>({}), InvalidArgument);
  }

  SECTION("right-to-left equals left-to-right") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t d = 1 + rng.index(5);
      const std::size_t len = 1 + rng.index(10);
      std::vector<MonoidElement<double>> elems;
      for (std::size_t i = 0; i < len; ++i) elems.push_back(random_element(rng, d));
      CHECK(max_abs_diff(fold_sequence(elems), fold_left(elems)) <= 1e-9);
    }
  }
}

TEST_CASE("closed_form") {
  Rng rng(23);

  SECTION("single element") {
    const auto e = random_element(rng, 3);
    const auto cf = closed_form<double>({e});
    CHECK(cf.vec == e.vec);
    CHECK(cf.op == e.op);
  }

  SECTION("identity operators reduce to plain addition") {
    std::vector<MonoidElement<double>> elems;
    Vector<double> total(2, 0.0);
    for (int i = 0; i < 5; ++i) {
      Vector<double> v{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      total = vec_add(total, v);
      elems.emplace_back(v, Matrix<double>::identity(2));
    }
    const auto cf = closed_form(elems);
    CHECK(approx_eq(cf.vec, total, 1e-15));
    CHECK(cf.op == Matrix<double>::identity(2));
  }

  SECTION("matches fold_sequence on three random 2x2 elements") {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<MonoidElement<double>> elems{random_element(rng, 2), random_element(rng, 2),
                                               random_element(rng, 2)};
      CHECK(max_abs_diff(closed_form(elems), fold_sequence(elems)) <= 1e-12);
    }
  }

  SECTION("matches fold_sequence on random lists up to 32") {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t d = 1 + rng.index(6);
      const std::size_t len = 1 + rng.index(32);
      std::vector<MonoidElement<double>> elems;
      for (std::size_t i = 0; i < len; ++i) elems.push_back(random_element(rng, d));
      CHECK(max_abs_diff(closed_form(elems), fold_sequence(elems)) <= 1e-9);
    }
  }
}

TEST_CASE("fold_shared_operator") {
  Rng rng(31);

  SECTION("equals the generic fold when all operators coincide") {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t d = 1 + rng.index(5);
      const std::size_t len = 1 + rng.index(12);
      Matrix<double> op(d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) op(r, c) = rng.uniform(-1.0, 1.0);
      std::vector<Vector<double>> vecs;
      std::vector<MonoidElement<double>> elems;
      for (std::size_t i = 0; i < len; ++i) {
        Vector<double> v(d);
        for (auto& x : v) x = rng.uniform(-1.0, 1.0);
        vecs.push_back(v);
        elems.emplace_back(v, op);
      }
      // Bitwise equal: both paths perform the same scalar operations
      // in the same order on the vector part.
      CHECK(fold_shared_operator(op, vecs) == fold_sequence(elems).vec);
    }
  }

  SECTION("counts scalar work") {
    const Matrix<double> op = Matrix<double>::identity(3);
    std::size_t ops = 0;
    (void)fold_shared_operator(op, {Vector<double>(3, 1.0), Vector<double>(3, 2.0)}, &ops);
    CHECK(ops == 2 * 9 + 3);  // one matvec plus one vector add
  }

  SECTION("errors") {
    CHECK_THROWS_AS(fold_shared_operator(Matrix<double>::identity(2), {}), InvalidArgument);
    CHECK_THROWS_AS(
        fold_shared_operator(Matrix<double>::identity(2), {Vector<double>(3, 0.0)}),
        DimensionMismatch);
  }
}
