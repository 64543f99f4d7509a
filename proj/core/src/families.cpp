#include "oddfactor/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oddfactor/errors.hpp"

namespace oddfactor {

void validate_cluster_join(const ClusterJoinSpec& spec) {
  if (spec.s < 0) throw std::invalid_argument("hub size must be >= 0");
  if (spec.t < 1) throw std::invalid_argument("part count must be >= 1");
  if (spec.p < 1) throw std::invalid_argument("small part size must be >= 1");
  const long long big = static_cast<long long>(spec.n) - spec.s -
                        static_cast<long long>(spec.p) * (spec.t - 1);
  if (big < spec.p)
    throw std::invalid_argument("dominant part must be at least the small part size");
}

void validate_extremal_params(const ExtremalParams& p, bool require_parity) {
  if (p.b < 1 || p.b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
  if (p.delta < p.k + 1) throw std::invalid_argument("delta must be >= k+1");
  const long long big = static_cast<long long>(p.n) -
                        static_cast<long long>(p.b + 1) * p.delta +
                        static_cast<long long>(p.b) * p.k - 1;
  if (big < 1)
    throw std::invalid_argument("dominant part of the extremal graph is empty");
  const long long singles = static_cast<long long>(p.b) * p.delta -
                            static_cast<long long>(p.b) * p.k + 1;
  if (singles < 1)
    throw std::invalid_argument("isolated-part count of the extremal graph is empty");
  if (require_parity && (p.n - p.k) % 2 != 0)
    throw std::invalid_argument("theorem instances require n ≡ k (mod 2)");
}

Graph build_parts(int s, std::vector<int> parts) {
  if (s < 0) throw std::invalid_argument("hub size must be >= 0");
  if (parts.empty()) throw std::invalid_argument("at least one part required");
  for (int part : parts)
    if (part < 1) throw std::invalid_argument("every part must be >= 1");
  std::sort(parts.begin(), parts.end(), std::greater<int>());

  long long total = s;
  for (int part : parts) total += part;
  Graph g(static_cast<int>(total));
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < total; ++v) g.add_edge(u, v);
  int offset = s;
  for (int part : parts) {
    for (int u = offset; u < offset + part; ++u)
      for (int v = u + 1; v < offset + part; ++v) g.add_edge(u, v);
    offset += part;
  }
  return g;
}

Graph build_cluster_join(const ClusterJoinSpec& spec) {
  validate_cluster_join(spec);
  std::vector<int> parts;
  parts.push_back(spec.n - spec.s - spec.p * (spec.t - 1));
  for (int i = 1; i < spec.t; ++i) parts.push_back(spec.p);
  return build_parts(spec.s, std::move(parts));
}

Graph build_cluster_join(int n, int s, int t, int p) {
  return build_cluster_join(ClusterJoinSpec{n, s, t, p});
}

Graph build_g_star(const ExtremalParams& p) {
  validate_extremal_params(p);
  const int t = p.b * p.delta - p.b * p.k + 2;
  return build_cluster_join(p.n, p.delta, t, 1);
}

Graph build_g2(int n, int b, int k, int s) {
  if (b < 1 || b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const long long singles = static_cast<long long>(b) * s - static_cast<long long>(b) * k + 1;
  const long long big = static_cast<long long>(n) - static_cast<long long>(b + 1) * s +
                        static_cast<long long>(b) * k - 1;
  if (s < 0 || singles < 1 || big < 1)
    throw std::invalid_argument("derived part sizes must all be >= 1");
  std::vector<int> parts;
  parts.push_back(static_cast<int>(big));
  for (long long i = 0; i < singles; ++i) parts.push_back(1);
  return build_parts(s, std::move(parts));
}

Graph build_g3(int n, int b, int k, int s, int delta) {
  if (b < 1 || b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (s > delta - 1)
    throw std::invalid_argument("hub size must be <= delta-1");
  const long long count = static_cast<long long>(b) * s - static_cast<long long>(b) * k + 1;
  const long long small = static_cast<long long>(delta) + 1 - s;
  const long long big = static_cast<long long>(n) - s - count * small;
  if (s < 0 || count < 1 || small < 1 || big < 1)
    throw std::invalid_argument("derived part sizes must all be >= 1");
  std::vector<int> parts;
  parts.push_back(static_cast<int>(big));
  for (long long i = 0; i < count; ++i) parts.push_back(static_cast<int>(small));
  return build_parts(s, std::move(parts));
}

long long edge_count_star(const ExtremalParams& p) {
  validate_extremal_params(p);
  const long long m = static_cast<long long>(p.n) - static_cast<long long>(p.b) * p.delta +
                      static_cast<long long>(p.b) * p.k - 1;
  const long long singles = static_cast<long long>(p.b) * p.delta -
                            static_cast<long long>(p.b) * p.k + 1;
  return m * (m - 1) / 2 + static_cast<long long>(p.delta) * singles;
}

EdgeComparison compare_edges_dominant(int n, int s, int p,
                                      const std::vector<int>& parts) {
  if (p < 1) throw std::invalid_argument("small part size must be >= 1");
  if (parts.size() < 2)
    throw std::invalid_argument("at least two parts required");
  long long sum = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < p)
      throw std::invalid_argument("every part must be >= the small part size");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("parts must be nonincreasing");
    sum += parts[i];
  }
  if (sum + s != n)
    throw std::invalid_argument("parts plus hub must sum to n");
  const int t = static_cast<int>(parts.size());
  const long long dominant = static_cast<long long>(n) - s -
                             static_cast<long long>(p) * (t - 1);
  if (parts[0] >= dominant)
    throw std::invalid_argument("hypothesis requires parts[0] < n - s - p(t-1)");

  EdgeComparison cmp;
  cmp.lhs = build_parts(s, parts).edge_count();
  cmp.rhs = build_cluster_join(n, s, t, p).edge_count();
  if (cmp.lhs >= cmp.rhs)
    throw InvariantViolation("edge-count comparison failed: " +
                             std::to_string(cmp.lhs) + " >= " +
                             std::to_string(cmp.rhs));
  return cmp;
}

}  // namespace oddfactor
