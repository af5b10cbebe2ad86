#include "csd/errors.hpp"
#include "csd/simplex_tree.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace csd;

TEST_CASE("simplex tree of the running example") {
  SimplexTree st;
  for (const Edge& e : testing::running_example_edges()) st.insert(Simplex{e.u, e.v}, e.weight);
  for (Vertex v = 1; v <= 6; ++v) st.insert(Simplex{v}, 0);
  st.insert(Simplex{3, 5, 6}, 2);
  st.insert(Simplex{1, 3, 4}, 3);
  CHECK(st.node_count() == 17);
  st.insert(Simplex{1, 2, 3, 4}, 5);
  CHECK(st.node_count() == 21);
  CHECK(st.filtration(Simplex{1, 3, 4}) == 3);
  CHECK(st.filtration(Simplex{5, 6}) == 1);
  CHECK(st.contains(Simplex{2, 3, 4}));
  CHECK_FALSE(st.contains(Simplex{1, 5}));
  CHECK_THROWS_AS(st.filtration(Simplex{1, 5}), NotInComplex);
  CHECK_THROWS_AS(st.insert(Simplex{1, 4}, 3), MonotonicityError);
}

TEST_CASE("expanding a diagram") {
  const SimplexTree st = expand(testing::running_example_diagram());
  CHECK(st.node_count() == 21);
  const auto want = testing::running_example_oracle();
  for (const auto& [s, level] : want.table()) {
    CHECK(st.find(s) == level);
  }
}

TEST_CASE("trivial trees") {
  SimplexTree st;
  CHECK(st.node_count() == 0);
  st.insert(Simplex{4}, 0);
  CHECK(st.node_count() == 1);
}
