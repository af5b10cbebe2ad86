#include <random>

#include "brute_force.hpp"
#include "csd/delaunay_builder.hpp"
#include "csd/errors.hpp"
#include "doctest.h"

using namespace csd;

TEST_CASE("point validation") {
  CHECK_THROWS_AS(PointSet(std::vector<Point>{{0.0, 1.0}, {2.0}}), Error);
  CHECK_THROWS_AS(PointSet(std::vector<Point>{{std::nan("")}}), Error);
  CHECK(PointSet(std::vector<Point>{{0.0, 1.0}}).dimension() == 2);
}

TEST_CASE("nearest neighbor rows") {
  const auto d = nearest_neighbor_matrix(PointSet(std::vector<Point>{{0.0}}), PointSet(std::vector<Point>{{-1.0}, {2.0}}));
  REQUIRE(d.rows.size() == 1);
  CHECK(d.rows[0][0].landmark == 1);
  CHECK(d.rows[0][0].distance == 1.0);
  CHECK(d.rows[0][1].landmark == 2);

  const auto tie = nearest_neighbor_matrix(PointSet(std::vector<Point>{{0.0}}), PointSet(std::vector<Point>{{1.0}, {-1.0}}));
  CHECK(tie.rows[0][0].landmark == 1);
  CHECK_THROWS_AS(nearest_neighbor_matrix(PointSet(std::vector<Point>{{0.0}}), PointSet()), EmptyLandmarks);
}

TEST_CASE("rows sorted against brute force") {
  std::mt19937_64 rng(5);
  const auto p = testing::random_planar_points(rng, 30, 1.0);
  const auto q = testing::random_planar_points(rng, 10, 1.0);
  for (const auto& row : nearest_neighbor_matrix(p, q).rows) {
    REQUIRE(row.size() == q.size());
    for (std::size_t j = 1; j < row.size(); ++j) CHECK(row[j - 1].distance <= row[j].distance);
  }
}

TEST_CASE("witness emission") {
  const auto d = nearest_neighbor_matrix(PointSet(std::vector<Point>{{0.0, 0.0}}),
                                         PointSet(std::vector<Point>{{1.0, 0.0}, {0.0, 1.4}, {-3.0, 0.0}}));
  const auto w = witness_simplices(d, {.rho = 1.0, .t = 2});
  REQUIRE(w.size() == 3);
  CHECK(w[0] == std::pair{Simplex{1}, Level{0}});
  CHECK(w[1] == std::pair{Simplex{1, 2}, Level{1}});
  CHECK(w[2] == std::pair{Simplex{1, 2}, Level{2}});

  const auto zero = witness_simplices(d, {.rho = 0.0, .t = 3});
  for (const auto& [s, _] : zero) CHECK(s == Simplex{1});
  CHECK_THROWS_AS(witness_simplices(d, {.rho = 1.0, .t = 0}), FiltrationOutOfRange);
}

TEST_CASE("generous relaxation gives one triangle") {
  const PointSet q({{0.0}, {1.0}, {2.0}});
  const auto d = build_delaunay(q, q, {.rho = 5.0, .t = 2});
  CHECK(d.is_maximal(Simplex{1, 2, 3}));
  CHECK(d.stats().k == 1);
}

TEST_CASE("no relaxation gives bare vertices") {
  const PointSet q({{0.0, 0.0}, {1.0, 0.3}, {2.5, 1.0}});
  const auto d = build_delaunay(q, q, {.rho = 0.0, .t = 2});
  CHECK(testing::stored_entries(d) ==
        std::vector<oracle::CriticalEntry>{
            {Simplex{1}, 0, true}, {Simplex{2}, 0, true}, {Simplex{3}, 0, true}});
}

TEST_CASE("builder agrees with the witness oracle") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 40; ++round) {
    const auto p = testing::random_planar_points(rng, 20, 1.0);
    const auto q = testing::random_planar_points(rng, 6, 1.0);
    const RelaxationConfig cfg{.rho = 0.3, .t = 3};
    const auto want = oracle::critical_set(testing::witness_complex(p, q, cfg.rho, cfg.t));
    const auto got = testing::stored_entries(build_delaunay(p, q, cfg));
    REQUIRE_MESSAGE(got == want, testing::first_difference(got, want));
  }
}
