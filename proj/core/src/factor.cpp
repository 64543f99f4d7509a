#include "oddfactor/factor.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "oddfactor/errors.hpp"

namespace oddfactor {

void validate_factor_params(const FactorParams& p) {
  if (p.b < 1 || p.b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

int odd_components_masked(const std::vector<std::uint64_t>& adj,
                          std::uint64_t kept) {
  int odd = 0;
  std::uint64_t rem = kept;
  while (rem) {
    std::uint64_t comp = rem & (~rem + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj[v];
      }
      next &= kept & ~comp;
      comp |= next;
      frontier = next;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    rem &= ~comp;
  }
  return odd;
}

// Tie-break order on witness sets: smaller size first, then lexicographically
// smaller sorted vertex list.  On masks the latter means: the set containing
// the lowest differing vertex comes first.
bool witness_before(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  return a & (diff & (~diff + 1));
}

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

void check_enumeration_caps(const Graph& g, const SearchCaps& caps) {
  if (g.order() > caps.subset_enum)
    throw CapacityError("order exceeds the subset enumeration cap (" +
                        std::to_string(caps.subset_enum) + ")");
  if (g.order() > 62)
    throw CapacityError("subset enumeration supports order <= 62");
}

// Backtracking search for a spanning subgraph with every degree odd and
// within the per-vertex bound.  Vertices are processed in ascending order;
// at vertex v all edges to lower vertices are already decided, so choosing
// the set of higher edges fixes d(v).  Submasks are visited in ascending
// numeric order, making the first factor found deterministic.
struct FactorSearch {
  int n;
  std::vector<std::uint64_t> higher;  // neighbors with larger index
  const std::vector<int>& bound;
  std::vector<int> deg;
  std::vector<std::uint64_t> chosen;

  FactorSearch(const Graph& g, const std::vector<int>& bound_)
      : n(g.order()), higher(n), bound(bound_), deg(n, 0), chosen(n, 0) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t hi = g.neighbor_mask(v);
      hi &= ~((v < 63) ? ((std::uint64_t{1} << (v + 1)) - 1) : ~std::uint64_t{0});
      higher[v] = hi;
    }
  }

  bool solve(int v) {
    if (v == n) return true;
    const std::uint64_t options = higher[v];
    const int dlow = deg[v];
    for (std::uint64_t sub = 0;; sub = (sub - options) & options) {
      const int extra = std::popcount(sub);
      const int dv = dlow + extra;
      if (dv >= 1 && dv <= bound[v] && dv % 2 == 1 && fits(sub)) {
        apply(v, sub);
        if (solve(v + 1)) return true;
        undo(v, sub);
      }
      if (sub == options) break;
    }
    return false;
  }

  bool fits(std::uint64_t sub) const {
    while (sub) {
      const int u = std::countr_zero(sub);
      sub &= sub - 1;
      if (deg[u] + 1 > bound[u]) return false;
    }
    return true;
  }

  void apply(int v, std::uint64_t sub) {
    chosen[v] = sub;
    deg[v] += std::popcount(sub);
    while (sub) {
      const int u = std::countr_zero(sub);
      sub &= sub - 1;
      ++deg[u];
    }
  }

  void undo(int v, std::uint64_t sub) {
    chosen[v] = 0;
    deg[v] -= std::popcount(sub);
    while (sub) {
      const int u = std::countr_zero(sub);
      sub &= sub - 1;
      --deg[u];
    }
  }

  OddFactor factor() const {
    OddFactor f;
    for (int v = 0; v < n; ++v) {
      std::uint64_t sub = chosen[v];
      while (sub) {
        const int u = std::countr_zero(sub);
        sub &= sub - 1;
        f.edges.emplace_back(v, u);
      }
    }
    return f;
  }
};

std::optional<OddFactor> factor_search(const Graph& g,
                                       const std::vector<int>& bound,
                                       const SearchCaps& caps) {
  if (g.order() > caps.factor_search)
    throw CapacityError("order exceeds the factor search cap (" +
                        std::to_string(caps.factor_search) + ")");
  if (static_cast<int>(bound.size()) != g.order())
    throw std::invalid_argument("degree bound size mismatch");
  for (int f : bound)
    if (f < 1 || f % 2 == 0)
      throw std::invalid_argument("every degree bound must be a positive odd integer");

  // An all-odd-degrees subgraph forces every component to have even order.
  for (const auto& comp : component_report(g).components)
    if (comp.size() % 2 == 1) return std::nullopt;

  FactorSearch search(g, bound);
  if (!search.solve(0)) return std::nullopt;
  return search.factor();
}

}  // namespace

bool odd_factor_valid_general(const Graph& g, const OddFactor& f,
                              const std::vector<int>& bound) {
  if (static_cast<int>(bound.size()) != g.order()) return false;
  std::vector<int> deg(g.order(), 0);
  std::vector<std::vector<char>> used(g.order(),
                                      std::vector<char>(g.order(), 0));
  for (const auto& [u, v] : f.edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
    if (!g.adjacent(u, v)) return false;
    if (used[u][v]) return false;
    used[u][v] = used[v][u] = 1;
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < g.order(); ++v)
    if (deg[v] % 2 == 0 || deg[v] < 1 || deg[v] > bound[v]) return false;
  return true;
}

bool odd_factor_valid(const Graph& g, const OddFactor& f, int b) {
  return odd_factor_valid_general(g, f, std::vector<int>(g.order(), b));
}

std::optional<OddFactor> has_odd_factor(const Graph& g, int b,
                                        const SearchCaps& caps) {
  if (b < 1 || b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  return factor_search(g, std::vector<int>(g.order(), b), caps);
}

std::optional<OddFactor> has_odd_factor_general(const Graph& g,
                                                const std::vector<int>& bound,
                                                const SearchCaps& caps) {
  return factor_search(g, bound, caps);
}

DeficiencyCertificate certificate_for(const Graph& g, const FactorParams& p,
                                      const VertexSet& s) {
  validate_factor_params(p);
  validate_vertex_set(g, s);
  if (static_cast<int>(s.size()) < p.k)
    throw std::invalid_argument("witness set smaller than k");
  DeficiencyCertificate cert;
  cert.witness = s;
  cert.witness_size = static_cast<int>(s.size());
  cert.odd_components = component_report(delete_vertices(g, s).graph).odd_count;
  cert.deficiency = static_cast<long long>(cert.odd_components) -
                    static_cast<long long>(p.b) * cert.witness_size +
                    static_cast<long long>(p.b) * p.k;
  return cert;
}

DeficiencyResult deficiency(const Graph& g, const FactorParams& p,
                            const SearchCaps& caps) {
  validate_factor_params(p);
  const int n = g.order();
  if (n < p.k + 2) throw std::invalid_argument("order must be >= k+2");
  check_enumeration_caps(g, caps);

  const auto adj = adjacency_masks(g);
  const std::uint64_t full =
      (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  bool found = false;
  long long best_def = 0;
  std::uint64_t best_mask = 0;
  int best_t = 0;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const int s = std::popcount(mask);
    if (s < p.k) continue;
    const int t = odd_components_masked(adj, full & ~mask);
    const long long def = static_cast<long long>(t) -
                          static_cast<long long>(p.b) * s +
                          static_cast<long long>(p.b) * p.k;
    if (!found || def > best_def ||
        (def == best_def && witness_before(mask, best_mask))) {
      found = true;
      best_def = def;
      best_mask = mask;
      best_t = t;
    }
    if (mask == full) break;  // guards the n == 64 wrap
  }

  DeficiencyResult result;
  result.max_deficiency = best_def;
  result.certificate.witness = mask_to_set(best_mask);
  result.certificate.witness_size = std::popcount(best_mask);
  result.certificate.odd_components = best_t;
  result.certificate.deficiency = best_def;
  return result;
}

CriticalityVerdict is_k_critical(const Graph& g, const FactorParams& p,
                                 const SearchCaps& caps) {
  const DeficiencyResult r = deficiency(g, p, caps);
  CriticalityVerdict verdict;
  verdict.critical = r.max_deficiency <= 0;
  if (!verdict.critical) verdict.witness = r.certificate;
  return verdict;
}

DirectCriticalityVerdict is_k_critical_direct(const Graph& g,
                                              const FactorParams& p,
                                              const SearchCaps& caps) {
  validate_factor_params(p);
  const int n = g.order();
  if (n < p.k + 2) throw std::invalid_argument("order must be >= k+2");
  if (n - p.k > caps.factor_search)
    throw CapacityError("order after deletion exceeds the factor search cap (" +
                        std::to_string(caps.factor_search) + ")");

  std::vector<int> pick(p.k);
  for (int i = 0; i < p.k; ++i) pick[i] = i;
  while (true) {
    VertexSet x(pick.begin(), pick.end());
    if (!has_odd_factor(delete_vertices(g, x).graph, p.b, caps))
      return {false, x};
    int i = p.k - 1;
    while (i >= 0 && pick[i] == n - p.k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p.k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {true, std::nullopt};
}

CriticalityVerdict is_k_critical_general(const Graph& g,
                                         const std::vector<int>& bound, int k,
                                         const SearchCaps& caps) {
  const int n = g.order();
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (static_cast<int>(bound.size()) != n)
    throw std::invalid_argument("degree bound size mismatch");
  for (int f : bound)
    if (f < 1 || f % 2 == 0)
      throw std::invalid_argument("every degree bound must be a positive odd integer");
  if (n < k + 2) throw std::invalid_argument("order must be >= k+2");
  check_enumeration_caps(g, caps);

  const auto adj = adjacency_masks(g);
  const std::uint64_t full =
      (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  bool found = false;
  long long best_slack = 0;
  std::uint64_t best_mask = 0;
  int best_t = 0;
  std::vector<int> values;
  values.reserve(n);
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const int s = std::popcount(mask);
    if (s < k) continue;
    long long sum = 0;
    values.clear();
    std::uint64_t m = mask;
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      sum += bound[v];
      values.push_back(bound[v]);
    }
    std::nth_element(values.begin(), values.begin() + (k - 1), values.end(),
                     std::greater<int>());
    long long topk = 0;
    for (int i = 0; i < k; ++i) topk += values[i];
    const int t = odd_components_masked(adj, full & ~mask);
    const long long slack = static_cast<long long>(t) - (sum - topk);
    if (!found || slack > best_slack ||
        (slack == best_slack && witness_before(mask, best_mask))) {
      found = true;
      best_slack = slack;
      best_mask = mask;
      best_t = t;
    }
    if (mask == full) break;
  }

  CriticalityVerdict verdict;
  verdict.critical = best_slack <= 0;
  if (!verdict.critical) {
    DeficiencyCertificate cert;
    cert.witness = mask_to_set(best_mask);
    cert.witness_size = std::popcount(best_mask);
    cert.odd_components = best_t;
    cert.deficiency = best_slack;
    verdict.witness = cert;
  }
  return verdict;
}

bool parity_audit(const Graph& g, const FactorParams& p,
                  const DeficiencyCertificate& cert) {
  validate_factor_params(p);
  validate_vertex_set(g, cert.witness);
  if ((g.order() - p.k) % 2 != 0)
    throw std::invalid_argument("parity audit requires n ≡ k (mod 2)");
  if (cert.deficiency <= 0)
    throw std::invalid_argument("parity audit requires a violating certificate");
  if (cert.witness_size != static_cast<int>(cert.witness.size()) ||
      cert.witness_size < p.k)
    return false;

  const int t = component_report(delete_vertices(g, cert.witness).graph).odd_count;
  if (t != cert.odd_components) return false;
  const long long base = static_cast<long long>(p.b) * cert.witness_size -
                         static_cast<long long>(p.b) * p.k;
  if (cert.deficiency != t - base) return false;
  const long long gap = t - base;
  return gap >= 2 && ((t - base) % 2 == 0);
}

}  // namespace oddfactor
