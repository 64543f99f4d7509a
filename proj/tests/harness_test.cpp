#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "oddfactor/errors.hpp"
#include "oddfactor/harness.hpp"
#include "oddfactor/spectral.hpp"
#include "test_util.hpp"

using namespace oddfactor;

TEST_CASE("rational_ceil") {
  CHECK(rational_ceil(Rational(7, 2)) == 4);
  CHECK(rational_ceil(Rational(6, 2)) == 3);
  CHECK(rational_ceil(Rational(-7, 2)) == -3);
  CHECK(rational_ceil(Rational(0)) == 0);
}

TEST_CASE("thresholds at the worked parameter points") {
  const ThresholdReport r = thresholds(1, 1, 2);
  CHECK(r.size_expr1 == Rational(14, 3));  // 28/6
  CHECK(r.size_expr2 == Rational(12));
  CHECK(r.size_bound == Rational(12));
  CHECK(r.n_min_size == 13);
  CHECK(r.spectral_expr1 == 3);
  CHECK(r.spectral_expr2 == 10);
  CHECK(r.spectral_bound == 10);
  CHECK(r.n_min_spectral == 11);
  CHECK(r.parity == 1);

  const ThresholdReport r3 = thresholds(3, 1, 2);
  CHECK(r3.size_expr1 == Rational(59, 9));  // 118/18
  CHECK(r3.size_expr2 == Rational(26, 3));
  CHECK(r3.size_bound == Rational(26, 3));
  CHECK(r3.n_min_size == 9);
  CHECK(r3.spectral_bound == 16);
  CHECK(r3.n_min_spectral == 17);

  CHECK_THROWS_AS(thresholds(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(thresholds(1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(thresholds(1, 1, 1), std::invalid_argument);
}

TEST_CASE("thresholds are monotone in delta on the grid") {
  for (const int b : {1, 3, 5}) {
    for (const int k : {1, 2, 3}) {
      ThresholdReport prev = thresholds(b, k, k + 1);
      for (int delta = k + 2; delta <= k + 8; ++delta) {
        const ThresholdReport cur = thresholds(b, k, delta);
        CHECK(cur.size_bound >= prev.size_bound);
        CHECK(cur.spectral_bound >= prev.spectral_bound);
        prev = cur;
      }
    }
  }
}

TEST_CASE("extremal shape recognition") {
  const Graph gstar = build_g_star({13, 1, 1, 2});
  CHECK(is_gstar_shaped(gstar, 1, 1));
  CHECK_FALSE(is_gstar_shaped(complete_graph(13), 1, 1));

  // a relabeling keeps the shape
  testutil::Rng rng(3);
  std::vector<int> perm(13);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 13; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  CHECK(is_gstar_shaped(relabeled(gstar, perm), 1, 1));

  // any extra edge breaks it
  Graph plus = gstar;
  plus.add_edge(11, 2);  // singleton into the dominant clique
  CHECK_FALSE(is_gstar_shaped(plus, 1, 1));
  Graph pair = gstar;
  pair.add_edge(11, 12);  // singleton to singleton
  CHECK_FALSE(is_gstar_shaped(pair, 1, 1));
}

TEST_CASE("classify_instance on the extremal graph") {
  const Graph gstar = build_g_star({13, 1, 1, 2});
  const InstanceVerdict v = classify_instance(gstar, 1, 1, Mode::size);
  CHECK(v.classification == Classification::extremal_equality);
  CHECK(v.connected_ok);
  CHECK(v.parity_ok);
  CHECK(v.order_ok);
  CHECK(v.bound_ok);
  CHECK(v.edge_value == 59);
  CHECK(v.edge_bound == 59);
  CHECK_FALSE(v.critical);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->deficiency == 2);

  const Graph g11 = build_g_star({11, 1, 1, 2});
  const InstanceVerdict sv = classify_instance(g11, 1, 1, Mode::spectral);
  CHECK(sv.classification == Classification::extremal_equality);
  CHECK(std::abs(sv.rho_value - sv.rho_bound) <= 1e-8);
}

TEST_CASE("classify_instance on the complete graph") {
  const InstanceVerdict v = classify_instance(complete_graph(13), 1, 1, Mode::size);
  CHECK(v.critical);
  CHECK(v.classification == Classification::consistent);
  CHECK(v.delta == 12);
}

TEST_CASE("adding edges to the extremal graph never yields a counterexample") {
  testutil::Rng rng(51);
  const Graph gstar = build_g_star({13, 1, 1, 2});
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = gstar;
    for (int extra = rng.range(1, 6); extra > 0; --extra) {
      const int u = rng.range(0, 11);  // keep vertex 12 pinned at degree delta
      const int v = rng.range(0, 11);
      if (u != v && !g.adjacent(u, v)) g.add_edge(u, v);
    }
    const InstanceVerdict v = classify_instance(g, 1, 1, Mode::size);
    CHECK(v.classification != Classification::counterexample);
  }
}

TEST_CASE("sweep is deterministic and clean at the worked point") {
  SweepParams params;
  params.b = 1;
  params.k = 1;
  params.delta = 2;
  params.n = 13;
  params.mode = Mode::size;
  params.samples = 24;
  params.seed = 7;
  const auto first = sweep(params);
  const auto second = sweep(params);
  REQUIRE(first.size() == 24);
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].graph6 == second[i].graph6);
    CHECK(first[i].classification == second[i].classification);
    CHECK(first[i].classification != Classification::counterexample);
  }
  // canonical report order within the (single) classification group
  bool sorted = true;
  for (size_t i = 1; i < first.size(); ++i)
    if (first[i - 1].classification == first[i].classification &&
        first[i - 1].graph6 > first[i].graph6)
      sorted = false;
  CHECK(sorted);

  params.samples = 0;
  CHECK(sweep(params).empty());
}

TEST_CASE("sweep validates its conditioning") {
  SweepParams params;
  params.b = 1;
  params.k = 1;
  params.delta = 2;
  params.mode = Mode::size;
  params.samples = 1;
  params.seed = 1;
  params.n = 11;  // below the size threshold of 12
  CHECK_THROWS_AS(sweep(params), std::invalid_argument);
  params.n = 14;  // parity violation
  CHECK_THROWS_AS(sweep(params), std::invalid_argument);
  params.n = 13;
  SearchCaps tight;
  tight.subset_enum = 10;
  CHECK_THROWS_AS(sweep(params, tight), CapacityError);
}

TEST_CASE("edge-gap cubic worked values") {
  // g(k+1) at (13,1,1,2): 2n + bk - b delta - 2 delta - 2 = 19
  CHECK(poly::edge_gap_cubic(2, 13, 1, 1, 2) == 19);
  CHECK(check_edge_gap_base_value(13, 1, 1, 2) == CheckStatus::holds);
  CHECK(check_edge_gap_base_value(30, 5, 2, 4) == CheckStatus::holds);

  CHECK(check_edge_difference_identity(13, 1, 1, 3, 2) == CheckStatus::holds);
  CHECK_THROWS_AS(check_edge_difference_identity(13, 1, 1, 3, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_edge_difference_identity(13, 1, 1, 3, 1),
                  std::invalid_argument);

  CHECK(check_edge_gap_monotone(13, 1, 1, 3) == CheckStatus::holds);
  CHECK(check_edge_gap_monotone(13, 1, 1, 2) == CheckStatus::not_applicable);
  CHECK(check_edge_gap_monotone(4, 1, 1, 3) == CheckStatus::not_applicable);
}

TEST_CASE("quotient difference identities at worked points") {
  CHECK(check_quotient_difference_b2(13, 1, 1, 2, 3) == CheckStatus::holds);
  CHECK(check_quotient_difference_b2(13, 1, 1, 2, 2) == CheckStatus::holds);
  CHECK_THROWS_AS(check_quotient_difference_b2(13, 1, 1, 2, 3, {0, 1, 2}),
                  std::invalid_argument);

  CHECK(check_quotient_difference_b3(13, 1, 1, 3, 2) == CheckStatus::holds);
  CHECK(check_quotient_difference_b3(13, 1, 1, 3, 3) == CheckStatus::holds);
  CHECK_THROWS_AS(check_quotient_difference_b3(13, 1, 1, 3, 1),
                  std::invalid_argument);
}

TEST_CASE("positivity and derivative chains at worked points") {
  CHECK(check_b2_positivity_chain(17, 1, 1, 2, 3) == CheckStatus::holds);
  CHECK(check_b2_positivity_chain(17, 1, 1, 2, 2) == CheckStatus::not_applicable);

  CHECK(check_b3_derivative_chain(13, 1, 1, 3, 2) == CheckStatus::holds);
  CHECK(check_b3_derivative_chain(7, 1, 1, 3, 2) == CheckStatus::not_applicable);
}

TEST_CASE("identity grid holds on a reduced sweep") {
  IdentityGridOptions opt;
  opt.n_max = 24;
  opt.delta_span = 3;
  const IdentityGridReport report = run_identity_grid(opt);
  CHECK(report.all_hold());
  for (const auto& line : report.lines) {
    CHECK(line.points > 0);
    CHECK(line.fails == 0);
  }
}
