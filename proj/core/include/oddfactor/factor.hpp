#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor {

// Parameters of the criticality questions: every vertex of a factor must
// have odd degree between 1 and b (b odd), and k vertices get deleted.
struct FactorParams {
  int b = 1;
  int k = 1;
};
void validate_factor_params(const FactorParams& p);

// Enumeration caps.  The subset sweep is 2^n and the factor search is
// worst-case exponential; exceeding a cap raises CapacityError instead of
// silently burning CPU.
struct SearchCaps {
  int subset_enum = 20;
  int factor_search = 12;
};

// A spanning subgraph given by its edge list.
struct OddFactor {
  std::vector<std::pair<int, int>> edges;
};

// Re-validates an OddFactor against its host graph: every edge present in g,
// every vertex degree odd and within the bound.
bool odd_factor_valid(const Graph& g, const OddFactor& f, int b);
bool odd_factor_valid_general(const Graph& g, const OddFactor& f,
                              const std::vector<int>& bound);

/// Exact decision of factor existence by backtracking over edge choices with
/// parity pruning.  Returns a concrete factor when one exists.
std::optional<OddFactor> has_odd_factor(const Graph& g, int b,
                                        const SearchCaps& caps = {});
// Per-vertex odd degree bounds (each bound[v] odd, >= 1).
std::optional<OddFactor> has_odd_factor_general(const Graph& g,
                                                const std::vector<int>& bound,
                                                const SearchCaps& caps = {});

// Witness subset S with the quantities the criticality criterion is built
// from.  For the uniform-b criterion, deficiency = t - b*s + b*k.
struct DeficiencyCertificate {
  VertexSet witness;        // S
  int witness_size = 0;     // s = |S|
  int odd_components = 0;   // t = o(G - S)
  long long deficiency = 0;
};

// Certificate for one given S, no enumeration.  Works at any order.
DeficiencyCertificate certificate_for(const Graph& g, const FactorParams& p,
                                      const VertexSet& s);

struct DeficiencyResult {
  long long max_deficiency = 0;
  DeficiencyCertificate certificate;
};

/// max over all S with |S| >= k of o(G-S) - b|S| + bk, with the attaining
/// witness.  Ties break to the smallest |S|, then the lexicographically
/// smallest S.  Requires order >= k+2 and order within caps.subset_enum.
DeficiencyResult deficiency(const Graph& g, const FactorParams& p,
                            const SearchCaps& caps = {});

struct CriticalityVerdict {
  bool critical = false;
  std::optional<DeficiencyCertificate> witness;  // set when not critical
};

/// Criterion route: critical iff the maximum deficiency is <= 0.
CriticalityVerdict is_k_critical(const Graph& g, const FactorParams& p,
                                 const SearchCaps& caps = {});

struct DirectCriticalityVerdict {
  bool critical = false;
  std::optional<VertexSet> failing_deletion;  // set when not critical
};

/// Definition route: critical iff G - X has a factor for every |X| = k.
/// Must agree with is_k_critical on every input.
DirectCriticalityVerdict is_k_critical_direct(const Graph& g,
                                              const FactorParams& p,
                                              const SearchCaps& caps = {});

/// Per-vertex criterion: for all S with |S| >= k,
///   o(G-S) <= sum of bound over S - (sum of the k largest bounds on S).
/// Reduces to is_k_critical when bound is constant b.  The returned
/// certificate's deficiency field holds the criterion slack.
CriticalityVerdict is_k_critical_general(const Graph& g,
                                         const std::vector<int>& bound, int k,
                                         const SearchCaps& caps = {});

/// Audits a violating certificate under the parity hypothesis n ≡ k (mod 2):
/// recomputes t from the graph and checks o(G-S) ≡ b|S|-bk (mod 2) and
/// o(G-S) >= b|S|-bk+2.  Throws if the parity hypothesis or the positive-
/// deficiency precondition fails; returns false on any audited violation.
bool parity_audit(const Graph& g, const FactorParams& p,
                  const DeficiencyCertificate& cert);

}  // namespace oddfactor
