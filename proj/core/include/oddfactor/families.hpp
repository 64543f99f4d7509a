#pragma once

#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor {

// K_s ∨ (K_{n-s-p(t-1)} ∪ (t-1)K_p): a hub clique joined to one dominant
// clique and t-1 small cliques of size p.
struct ClusterJoinSpec {
  int n = 0;
  int s = 0;
  int t = 1;
  int p = 1;
};
void validate_cluster_join(const ClusterJoinSpec& spec);

// Parameters of the extremal graph
// K_delta ∨ (K_{n-(b+1)delta+bk-1} ∪ (b*delta-bk+1) K_1).
struct ExtremalParams {
  int n = 0;
  int b = 1;
  int k = 1;
  int delta = 2;
};
// require_parity additionally demands n ≡ k (mod 2), which theorem instances
// need but plain builders do not.
void validate_extremal_params(const ExtremalParams& p, bool require_parity = false);

/// K_s ∨ (K_{parts[0]} ∪ K_{parts[1]} ∪ ...).  Hub vertices come first, then
/// the parts in nonincreasing size; parts are sorted internally so the
/// labeling convention is canonical.  Every part must be >= 1.
Graph build_parts(int s, std::vector<int> parts);

Graph build_cluster_join(int n, int s, int t, int p);
Graph build_cluster_join(const ClusterJoinSpec& spec);

Graph build_g_star(const ExtremalParams& p);

// Hub of size s with one dominant clique and bs-bk+1 isolated-part vertices.
Graph build_g2(int n, int b, int k, int s);
// Hub of size s with one dominant clique and bs-bk+1 cliques of size
// delta+1-s.  Requires s <= delta-1 and every derived part >= 1.
Graph build_g3(int n, int b, int k, int s, int delta);

/// Closed-form e(G*) = C(n-b*delta+bk-1, 2) + delta*(b*delta-bk+1).
long long edge_count_star(const ExtremalParams& p);

struct EdgeComparison {
  long long lhs = 0;  // e(K_s ∨ (K_{parts[0]} ∪ ...))
  long long rhs = 0;  // e(K_s ∨ (K_{n-s-p(t-1)} ∪ (t-1)K_p))
};

/// Edge-count comparison against the dominant-part configuration.  The
/// hypotheses (parts nonincreasing, each >= p >= 1, sum + s = n,
/// parts[0] < n-s-p(t-1)) are enforced; under them lhs < rhs must hold, and
/// the function throws InvariantViolation otherwise.
EdgeComparison compare_edges_dominant(int n, int s, int p,
                                      const std::vector<int>& parts);

}  // namespace oddfactor
