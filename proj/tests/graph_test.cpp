#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "oddfactor/graph.hpp"
#include "test_util.hpp"

using namespace oddfactor;

TEST_CASE("build_graph basic shapes") {
  const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3 == complete_graph(3));

  const Graph edgeless = build_graph(2, {});
  CHECK(edgeless.edge_count() == 0);

  const Graph dedup = build_graph(4, {{0, 1}, {0, 1}, {2, 3}});
  CHECK(dedup.edge_count() == 2);
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK(complete_graph(0).order() == 0);
  for (int v = 0; v < 5; ++v) CHECK(complete_graph(5).degree(v) == 4);
}

TEST_CASE("union and join") {
  const Graph k3 = complete_graph(3);
  const Graph two_k1 = Graph(2);
  const Graph u = union_graphs(k3, two_k1);
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 3);
  CHECK(component_report(u).component_count == 3);

  const Graph pair = union_graphs(complete_graph(2), complete_graph(2));
  CHECK(pair.edge_count() == 2);
  CHECK(component_report(pair).component_count == 2);

  CHECK(union_graphs(Graph(0), k3) == k3);
  CHECK(join_graphs(Graph(0), k3) == k3);
  CHECK(join_graphs(complete_graph(1), complete_graph(1)) == complete_graph(2));

  // K2 v (K3 u 2K1): 1 + 3 + 2*5 = 14 edges
  const Graph j = join_graphs(complete_graph(2), u);
  CHECK(j.order() == 7);
  CHECK(j.edge_count() == 14);
}

TEST_CASE("join/union edge arithmetic on random pairs") {
  testutil::Rng rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = testutil::random_graph(rng, rng.range(0, 7), rng.unit());
    const Graph b = testutil::random_graph(rng, rng.range(0, 7), rng.unit());
    CHECK(union_graphs(a, b).edge_count() == a.edge_count() + b.edge_count());
    CHECK(join_graphs(a, b).edge_count() ==
          a.edge_count() + b.edge_count() +
              static_cast<long long>(a.order()) * b.order());
  }
}

TEST_CASE("degree sum equals twice the edge count") {
  testutil::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testutil::random_graph(rng, rng.range(1, 12), rng.unit());
    long long sum = 0;
    for (int d : g.degrees()) sum += d;
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("delete_vertices") {
  const Graph k4 = complete_graph(4);
  const DeletionResult r = delete_vertices(k4, {1, 3});
  CHECK(r.graph == complete_graph(2));
  CHECK(r.kept == std::vector<int>{0, 2});

  // hub removal of K2 v (K3 u 2K1) recovers K3 u 2K1
  const Graph inner = union_graphs(complete_graph(3), Graph(2));
  const Graph joined = join_graphs(complete_graph(2), inner);
  const DeletionResult hubless = delete_vertices(joined, {0, 1});
  CHECK(hubless.graph == inner);

  CHECK(delete_vertices(k4, {}).graph == k4);
  CHECK_THROWS_AS(delete_vertices(k4, {4}), std::invalid_argument);
  CHECK_THROWS_AS(delete_vertices(k4, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(delete_vertices(k4, {2, 1}), std::invalid_argument);
}

TEST_CASE("component_report examples") {
  const Graph u = union_graphs(complete_graph(3), Graph(2));
  const ComponentReport r = component_report(u);
  CHECK(r.component_count == 3);
  CHECK(r.odd_count == 3);

  const ComponentReport even = component_report(
      union_graphs(complete_graph(2), complete_graph(2)));
  CHECK(even.component_count == 2);
  CHECK(even.odd_count == 0);

  const ComponentReport k5 = component_report(complete_graph(5));
  CHECK(k5.component_count == 1);
  CHECK(k5.odd_count == 1);
}

TEST_CASE("component_report invariants on random graphs") {
  testutil::Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.range(0, 12);
    const Graph g = testutil::random_graph(rng, n, rng.unit());
    const ComponentReport r = component_report(g);
    long long total = 0;
    for (const auto& comp : r.components) total += comp.size();
    CHECK(total == n);
    CHECK(r.odd_count % 2 == n % 2);
    CHECK(r.odd_count <= r.component_count);
  }
}

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(complete_graph(4), 3));
  CHECK_FALSE(is_k_connected(build_graph(3, {{0, 1}, {1, 2}}), 2));

  const Graph joined = join_graphs(
      complete_graph(2), union_graphs(complete_graph(3), Graph(2)));
  CHECK(is_k_connected(joined, 2));
  CHECK_FALSE(is_k_connected(joined, 3));  // the hub pair is a 2-cut

  CHECK_FALSE(is_k_connected(complete_graph(3), 3));  // n > k required
  CHECK(is_k_connected(complete_graph(1), 0));
  CHECK_THROWS_AS(is_k_connected(complete_graph(3), -1), std::invalid_argument);
}

TEST_CASE("1-connected means connected, exhaustively to n=5") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < testutil::labeled_graph_count(n); ++mask) {
      const Graph g = testutil::graph_from_mask(n, mask);
      const bool lhs = is_k_connected(g, 1);
      const bool rhs = component_report(g).component_count == 1 && n >= 2;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("relabeling preserves structure") {
  testutil::Rng rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.range(1, 10);
    const Graph g = testutil::random_graph(rng, n, 0.5);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    const Graph h = relabeled(g, perm);
    CHECK(h.edge_count() == g.edge_count());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(g.adjacent(u, v) == h.adjacent(perm[u], perm[v]));
  }
  CHECK_THROWS_AS(relabeled(complete_graph(2), {0, 0}), std::invalid_argument);
}
