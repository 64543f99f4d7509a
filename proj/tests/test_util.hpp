#pragma once

// Shared helpers for the test suites: a deterministic RNG, random graph
// generators, and naive brute-force oracles kept deliberately independent of
// the library's mask-based implementations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "oddfactor/graph.hpp"

namespace testutil {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {  // splitmix64
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t m) { return m == 0 ? 0 : next() % m; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }
};

inline oddfactor::Graph random_graph(Rng& rng, int n, double p) {
  oddfactor::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

inline oddfactor::Graph random_connected_graph(Rng& rng, int n, double p) {
  for (;;) {
    oddfactor::Graph g = random_graph(rng, n, p);
    if (oddfactor::component_report(g).component_count == 1) return g;
  }
}

// Graph from the C(n,2)-bit edge mask, pairs ordered (0,1),(0,2),(1,2),...
inline oddfactor::Graph graph_from_mask(int n, std::uint64_t mask) {
  oddfactor::Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

inline std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// ---------------------------------------------------------------------------
// Naive oracles (recursive DFS, plain subset recursion, 2^m edge subsets).

inline void naive_dfs(const oddfactor::Graph& g, int v,
                      const std::vector<char>& removed, std::vector<char>& seen) {
  seen[v] = 1;
  for (int u = 0; u < g.order(); ++u)
    if (!seen[u] && !removed[u] && g.adjacent(v, u)) naive_dfs(g, u, removed, seen);
}

// Sizes of the components of g minus the removed set, via recursive DFS.
inline std::vector<int> naive_component_sizes(const oddfactor::Graph& g,
                                              const std::vector<int>& removed_set) {
  std::vector<char> removed(g.order(), 0);
  for (int v : removed_set) removed[v] = 1;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> sizes;
  for (int v = 0; v < g.order(); ++v) {
    if (removed[v] || seen[v]) continue;
    std::vector<char> before = seen;
    naive_dfs(g, v, removed, seen);
    int size = 0;
    for (int u = 0; u < g.order(); ++u)
      if (seen[u] && !before[u]) ++size;
    sizes.push_back(size);
  }
  return sizes;
}

inline int naive_odd_components(const oddfactor::Graph& g,
                                const std::vector<int>& removed_set) {
  int odd = 0;
  for (int size : naive_component_sizes(g, removed_set))
    if (size % 2 == 1) ++odd;
  return odd;
}

struct NaiveDeficiency {
  long long value = 0;
  std::vector<int> witness;
  bool found = false;
};

// Recursion over subsets in (size, lex) order, strict improvement only, so
// the witness follows the same tie-break the library promises.
inline NaiveDeficiency naive_deficiency(const oddfactor::Graph& g, int b, int k) {
  NaiveDeficiency best;
  const int n = g.order();
  std::vector<int> subset;
  auto consider = [&]() {
    if (static_cast<int>(subset.size()) < k) return;
    const long long def = naive_odd_components(g, subset) -
                          static_cast<long long>(b) * subset.size() +
                          static_cast<long long>(b) * k;
    if (!best.found || def > best.value) {
      best.found = true;
      best.value = def;
      best.witness = subset;
    }
  };
  for (int size = 0; size <= n; ++size) {
    // lexicographic combinations of the given size
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    if (size > n) break;
    for (;;) {
      subset = pick;
      consider();
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return best;
}

// 2^m enumeration of edge subsets; exact but only for small m.
inline bool naive_has_odd_factor(const oddfactor::Graph& g,
                                 const std::vector<int>& bound) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
  const int m = static_cast<int>(edges.size());
  if (m > 22) throw std::runtime_error("naive factor oracle limited to 22 edges");
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<int> deg(g.order(), 0);
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1) {
        ++deg[edges[i].first];
        ++deg[edges[i].second];
      }
    bool ok = true;
    for (int v = 0; v < g.order() && ok; ++v)
      ok = deg[v] >= 1 && deg[v] <= bound[v] && deg[v] % 2 == 1;
    if (ok) return true;
  }
  return false;
}

inline bool naive_has_odd_factor(const oddfactor::Graph& g, int b) {
  return naive_has_odd_factor(g, std::vector<int>(g.order(), b));
}

}  // namespace testutil
