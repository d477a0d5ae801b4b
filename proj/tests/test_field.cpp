#include <random>
#include <set>

#include "doctest.h"

#include "chromastate/field.hpp"
#include "support/oracles.hpp"

using namespace chromastate;

namespace {

FieldMatrix six_cycle_block(PrimeDimension d) {
  // red-blue coupling of the six-particle circle
  FieldMatrix a(d, 3, 3);
  const int rows[3][3] = {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) a.at(r, c) = rows[r][c];
  }
  return a;
}

FieldMatrix with_identity_prefix(const FieldMatrix& a) {
  FieldMatrix g(a.dim, a.rows, a.rows + a.cols);
  for (int r = 0; r < a.rows; ++r) {
    g.at(r, r) = 1;
    for (int c = 0; c < a.cols; ++c) g.at(r, a.rows + c) = a.at(r, c);
  }
  return g;
}

}  // namespace

TEST_CASE("prime dimension construction") {
  CHECK(PrimeDimension(2).value() == 2);
  CHECK(PrimeDimension(97).value() == 97);
  CHECK_THROWS_AS(PrimeDimension(1), InputError);
  CHECK_THROWS_AS(PrimeDimension(4), InputError);
  CHECK_THROWS_AS(PrimeDimension(9), InputError);
  CHECK_THROWS_AS(PrimeDimension(101), InputError);
}

TEST_CASE("field operations") {
  PrimeDimension d3(3), d5(5), d2(2);
  CHECK(d3.mul(2, 2) == 1);
  CHECK(d5.inv(3) == 2);
  CHECK(d2.add(1, 1) == 0);
  CHECK(d5.sub(1, 3) == 3);
  CHECK(d5.neg(2) == 3);
  CHECK(d5.neg(0) == 0);
  CHECK(d3.reduce(-4) == 2);
  CHECK_THROWS_AS(d3.inv(0), std::domain_error);
  for (int d : {2, 3, 5, 7, 97}) {
    PrimeDimension dim(d);
    for (int a = 1; a < d; ++a) {
      CHECK(dim.mul(a, dim.inv(a)) == 1);
    }
  }
}

TEST_CASE("mat_rank on fixed matrices") {
  PrimeDimension d2(2), d3(3);
  FieldMatrix equal_rows(d2, 2, 2);
  equal_rows.at(0, 0) = equal_rows.at(0, 1) = 1;
  equal_rows.at(1, 0) = equal_rows.at(1, 1) = 1;
  CHECK(mat_rank(equal_rows) == 1);

  // rows of the six-cycle block sum to zero mod 2 but not mod 3
  CHECK(mat_rank(six_cycle_block(d2)) == 2);
  CHECK(mat_rank(six_cycle_block(d3)) == 3);
  CHECK(chromastate::testing::rank_by_row_span(six_cycle_block(d2)) == 2);
  CHECK(chromastate::testing::rank_by_row_span(six_cycle_block(d3)) == 3);
}

TEST_CASE("mat_rank matches the row-span oracle on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int dvals[] = {2, 3, 5};
    PrimeDimension dim(dvals[rng() % 3]);
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    FieldMatrix m(dim, rows, cols);
    for (int& e : m.entries) e = static_cast<int>(rng() % dim.value());
    const int got = mat_rank(m);
    CHECK(got == chromastate::testing::rank_by_row_span(m));
    CHECK(got == mat_rank(m.transposed()));
  }
}

TEST_CASE("identity-prefixed matrices have full row rank") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int dvals[] = {2, 3, 5};
    PrimeDimension dim(dvals[rng() % 3]);
    const int k = 1 + static_cast<int>(rng() % 4);
    const int extra = static_cast<int>(rng() % 4);
    FieldMatrix b(dim, k, extra);
    for (int& e : b.entries) e = static_cast<int>(rng() % dim.value());
    CHECK(mat_rank(with_identity_prefix(b)) == k);
  }
}

TEST_CASE("mat_vec_mul") {
  PrimeDimension d2(2), d3(3);
  const FieldMatrix g = with_identity_prefix(six_cycle_block(d2));
  const FieldVector v(d2, {1, 1, 0});
  CHECK(mat_vec_mul(v, g).entries == std::vector<int>{1, 1, 0, 0, 1, 1});

  FieldMatrix any(d3, 2, 4);
  any.at(0, 1) = 2;
  any.at(1, 3) = 1;
  CHECK(mat_vec_mul(FieldVector(d3, {0, 0}), any).entries ==
        std::vector<int>{0, 0, 0, 0});

  FieldMatrix ghz(d2, 1, 3);
  ghz.at(0, 0) = ghz.at(0, 1) = ghz.at(0, 2) = 1;
  CHECK(mat_vec_mul(FieldVector(d2, {1}), ghz).entries ==
        std::vector<int>{1, 1, 1});

  CHECK_THROWS_AS(mat_vec_mul(FieldVector(d2, {1, 0}), g), std::invalid_argument);
}

TEST_CASE("vector enumeration order and determinism") {
  PrimeDimension d2(2), d3(3);
  {
    VectorEnumerator en(1, d2);
    std::vector<int> v;
    REQUIRE(en.next(v));
    CHECK(v == std::vector<int>{0});
    REQUIRE(en.next(v));
    CHECK(v == std::vector<int>{1});
    CHECK_FALSE(en.next(v));
  }
  {
    VectorEnumerator en(2, d2);
    std::vector<std::vector<int>> got;
    std::vector<int> v;
    while (en.next(v)) got.push_back(v);
    CHECK(got == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }
  {
    VectorEnumerator en(2, d3);
    CHECK(en.count() == 9);
    std::vector<std::vector<int>> got;
    std::vector<int> v;
    while (en.next(v)) got.push_back(v);
    CHECK(got.size() == 9);
    CHECK(got.front() == std::vector<int>{0, 0});
    CHECK(got.back() == std::vector<int>{2, 2});
    std::set<std::vector<int>> distinct(got.begin(), got.end());
    CHECK(distinct.size() == 9);

    en.reset();
    std::vector<std::vector<int>> again;
    while (en.next(v)) again.push_back(v);
    CHECK(again == got);
  }
  CHECK_THROWS_AS(VectorEnumerator(23, d2), CapError);
}
