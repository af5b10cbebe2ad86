#include <random>

#include "brute_force.hpp"
#include "csd/flag_builder.hpp"
#include "csd/serialize.hpp"
#include "csd/simplex_tree.hpp"
#include "doctest.h"
#include "traces.hpp"

using namespace csd;

TEST_SUITE("properties") {
  TEST_CASE("flag builds answer every query like the oracle") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 150; ++round) {
      const std::size_t n = 1 + rng() % 8;
      const Level t = static_cast<Level>(rng() % 6);
      const auto g = testing::random_graph(rng, n, 0.6, t);
      const auto d = build_flag(g, t);
      const auto c = testing::flag_complex_by_subsets(g, t);
      REQUIRE_MESSAGE(testing::compare_queries(d, c).empty(), testing::compare_queries(d, c));
      REQUIRE(testing::stored_entries(d) == oracle::critical_set(c));
      REQUIRE(expand(d).node_count() == c.size());
    }
  }

  TEST_CASE("dynamic traces track the oracle") {
    std::mt19937_64 rng(202);
    std::size_t total = 0;
    for (int round = 0; round < 80; ++round) {
      const auto r = testing::random_trace(rng, 2 + rng() % 6, 20);
      REQUIRE_MESSAGE(r.failure.empty(), r.failure);
      total += r.operations;
    }
    MESSAGE("operations applied: " << total);
    CHECK(total > 80 * 10);
  }

  TEST_CASE("vertex collapses join the traces") {
    std::mt19937_64 rng(303);
    std::size_t total = 0;
    for (int round = 0; round < 80; ++round) {
      const auto r = testing::random_trace(rng, 2 + rng() % 6, 20, true);
      REQUIRE_MESSAGE(r.failure.empty(), r.failure);
      total += r.operations;
    }
    MESSAGE("operations applied: " << total);
    CHECK(total > 80 * 10);
  }

  TEST_CASE("cleanup never changes an answer") {
    std::mt19937_64 rng(404);
    for (int round = 0; round < 60; ++round) {
      auto d = testing::random_lazy_batch(rng, 2 + rng() % 7, 1 + static_cast<Level>(rng() % 5), 6);
      const auto c = testing::represented(d);
      REQUIRE(testing::compare_queries(d, c).empty());
      d.cleanup();
      REQUIRE(testing::compare_queries(d, c).empty());
      REQUIRE(testing::stored_entries(d) == oracle::critical_set(c));
    }
  }

  TEST_CASE("serialization round trip is byte stable") {
    std::mt19937_64 rng(505);
    for (int round = 0; round < 60; ++round) {
      const auto d = testing::random_lazy_batch(rng, 2 + rng() % 7, 3, 4);
      const std::string text = to_text(d);
      const auto back = from_text(text);
      REQUIRE(testing::stored_entries(back) == testing::stored_entries(d));
      REQUIRE(to_text(back) == text);
    }
  }
}
