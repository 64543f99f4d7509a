#include "oddfactor/harness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "oddfactor/errors.hpp"
#include "oddfactor/graph6.hpp"
#include "oddfactor/spectral.hpp"

namespace oddfactor {

long long rational_ceil(const Rational& r) {
  const long long num = r.numerator();
  const long long den = r.denominator();  // boost normalizes den > 0
  long long q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

const char* to_string(Mode m) {
  return m == Mode::size ? "size" : "spectral";
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::consistent: return "consistent";
    case Classification::extremal_equality: return "extremal-equality";
    case Classification::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

namespace {

void validate_bkd(int b, int k, int delta) {
  if (b < 1 || b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (delta < k + 1) throw std::invalid_argument("delta must be >= k+1");
}

long long smallest_admissible(const Rational& bound, int k) {
  long long n = std::max(rational_ceil(bound), static_cast<long long>(k) + 2);
  if ((n - k) % 2 != 0) ++n;
  return n;
}

}  // namespace

ThresholdReport thresholds(int b, int k, int delta) {
  validate_bkd(b, k, delta);
  const long long B = b, K = k, D = delta;
  ThresholdReport r;
  r.b = b;
  r.k = k;
  r.delta = delta;
  r.size_expr1 = Rational(
      B * B * K * K - 2 * B * B * K * D - 4 * B * B * K - B * K + B * B * D * D +
          4 * B * B * D + 7 * B * D + B * B + 8 * B + 1,
      6 * B);
  r.size_expr2 =
      Rational((B + 5) * D - (B + 4) * K - B + 1) + Rational(5, B);
  r.size_bound = std::max(r.size_expr1, r.size_expr2);
  r.spectral_expr1 = B * D * D - B * K;
  r.spectral_expr2 = (2 * B + 3) * D - B * K + 1;
  r.spectral_bound = std::max(r.spectral_expr1, r.spectral_expr2);
  r.parity = k % 2;
  r.n_min_size = smallest_admissible(r.size_bound, k);
  r.n_min_spectral = smallest_admissible(Rational(r.spectral_bound), k);
  return r;
}

bool is_gstar_shaped(const Graph& g, int b, int k) {
  const int n = g.order();
  if (n == 0) return false;
  const int delta = g.min_degree();
  if (delta < k + 1) return false;
  const long long q = static_cast<long long>(b) * delta -
                      static_cast<long long>(b) * k + 1;
  const long long big = static_cast<long long>(n) -
                        static_cast<long long>(b + 1) * delta +
                        static_cast<long long>(b) * k - 1;
  if (q < 1 || big < 1) return false;

  VertexSet hub;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) hub.push_back(v);
  if (static_cast<int>(hub.size()) != delta) return false;

  const DeletionResult rest = delete_vertices(g, hub);
  long long singles = 0, cliques = 0;
  for (const auto& comp : component_report(rest.graph).components) {
    if (comp.size() == 1) {
      ++singles;
      continue;
    }
    ++cliques;
    if (static_cast<long long>(comp.size()) != big) return false;
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (!rest.graph.adjacent(comp[i], comp[j])) return false;
  }
  if (big == 1) return cliques == 0 && singles == q + 1;
  return cliques == 1 && singles == q;
}

InstanceVerdict classify_instance(const Graph& g, int b, int k, Mode mode,
                                  const SearchCaps& caps) {
  if (b < 1 || b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int n = g.order();
  if (n < k + 2) throw std::invalid_argument("order must be >= k+2");

  InstanceVerdict v;
  v.graph6 = emit_graph6(g);
  v.mode = mode;
  v.b = b;
  v.k = k;
  v.n = n;
  v.delta = g.min_degree();
  v.connected_ok = is_k_connected(g, k + 1);
  v.parity_ok = (n - k) % 2 == 0;
  v.edge_value = g.edge_count();
  if (mode == Mode::spectral) v.rho_value = spectral_radius(g);

  if (v.delta >= k + 1) {
    const ExtremalParams ep{n, b, k, v.delta};
    bool admissible = true;
    try {
      validate_extremal_params(ep);
    } catch (const std::invalid_argument&) {
      admissible = false;
    }
    if (admissible) {
      v.bound_defined = true;
      const ThresholdReport tr = thresholds(b, k, v.delta);
      v.edge_bound = edge_count_star(ep);
      if (mode == Mode::size) {
        v.order_ok = Rational(n) >= tr.size_bound;
        v.bound_ok = v.edge_value >= v.edge_bound;
      } else {
        v.order_ok = n >= tr.spectral_bound;
        v.rho_bound = spectral_radius(build_g_star(ep));
        v.bound_ok = v.rho_value >= v.rho_bound - 1e-8;
      }
    }
  }

  const CriticalityVerdict crit = is_k_critical(g, FactorParams{b, k}, caps);
  v.critical = crit.critical;
  v.witness = crit.witness;

  const bool hypotheses =
      v.connected_ok && v.parity_ok && v.bound_defined && v.order_ok;
  if (hypotheses && v.bound_ok && !v.critical)
    v.classification = is_gstar_shaped(g, b, k)
                           ? Classification::extremal_equality
                           : Classification::counterexample;
  else
    v.classification = Classification::consistent;
  return v;
}

// ---------------------------------------------------------------------------
// Seeded sampling

namespace {

struct DetRng {
  std::uint64_t state;
  explicit DetRng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {  // splitmix64
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t m) { return m == 0 ? 0 : next() % m; }
  double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  DetRng r(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return r.next();
}

// The extremal graph plus a random set of extra edges.  One singleton is left
// untouched so the minimum degree stays exactly delta; added edges never
// lower connectivity or either bound, so every sample passes the hypotheses.
Graph sample_star_plus_edges(DetRng& rng, const ExtremalParams& ep) {
  Graph g = build_g_star(ep);
  const int n = ep.n;
  const int guard = n - 1;  // a singleton under hub-first labeling
  std::vector<std::pair<int, int>> addable;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (v != guard && !g.adjacent(u, v)) addable.emplace_back(u, v);
  for (size_t i = addable.size(); i > 1; --i)
    std::swap(addable[i - 1], addable[rng.below(i)]);
  const std::uint64_t count = rng.below(addable.size() + 1);
  for (std::uint64_t i = 0; i < count; ++i)
    g.add_edge(addable[i].first, addable[i].second);
  return g;
}

// Dense random graph repaired to minimum degree exactly delta, rejected
// until it passes connectivity and the bound.
Graph sample_dense_repaired(DetRng& rng, const ExtremalParams& ep, Mode mode,
                            long long edge_bound, double rho_bound,
                            int retry_budget) {
  const int n = ep.n;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    const double p = 0.82 + 0.13 * rng.unit();
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.unit() < p) g.add_edge(u, v);

    // raise every degree to at least delta
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      while (g.degree(v) < ep.delta) {
        std::vector<int> non;
        for (int u = 0; u < n; ++u)
          if (u != v && !g.adjacent(u, v)) non.push_back(u);
        if (non.empty()) {
          ok = false;
          break;
        }
        g.add_edge(v, non[rng.below(non.size())]);
      }
    }
    if (!ok) continue;

    // trim one vertex down to exactly delta
    int w = 0;
    for (int v = 1; v < n; ++v)
      if (g.degree(v) < g.degree(w)) w = v;
    while (ok && g.degree(w) > ep.delta) {
      std::vector<int> removable;
      for (int u : g.neighbors(w))
        if (g.degree(u) > ep.delta) removable.push_back(u);
      if (removable.empty()) {
        ok = false;
        break;
      }
      g.remove_edge(w, removable[rng.below(removable.size())]);
    }
    if (!ok || g.min_degree() != ep.delta) continue;
    if (!is_k_connected(g, ep.k + 1)) continue;
    if (mode == Mode::size) {
      if (g.edge_count() < edge_bound) continue;
    } else {
      if (spectral_radius(g) < rho_bound - 1e-9) continue;
    }
    return g;
  }
  throw SamplingError("conditioned sampling exhausted its retry budget");
}

}  // namespace

std::vector<InstanceVerdict> sweep(const SweepParams& sp,
                                   const SearchCaps& caps) {
  const ThresholdReport tr = thresholds(sp.b, sp.k, sp.delta);
  if (sp.samples < 0) throw std::invalid_argument("sample count must be >= 0");
  const ExtremalParams ep{sp.n, sp.b, sp.k, sp.delta};
  validate_extremal_params(ep, /*require_parity=*/true);
  const bool meets = sp.mode == Mode::size ? Rational(sp.n) >= tr.size_bound
                                           : sp.n >= tr.spectral_bound;
  if (!meets)
    throw std::invalid_argument("order is below the theorem threshold");
  if (sp.n > caps.subset_enum)
    throw CapacityError("sweep order exceeds the subset enumeration cap (" +
                        std::to_string(caps.subset_enum) + ")");

  const long long edge_bound = edge_count_star(ep);
  const double rho_bound =
      sp.mode == Mode::spectral ? spectral_radius(build_g_star(ep)) : 0.0;

  std::vector<InstanceVerdict> out;
  out.reserve(sp.samples);
  for (int i = 0; i < sp.samples; ++i) {
    DetRng rng(mix_seed(sp.seed, static_cast<std::uint64_t>(i)));
    Graph g = (i % 2 == 0)
                  ? sample_star_plus_edges(rng, ep)
                  : sample_dense_repaired(rng, ep, sp.mode, edge_bound,
                                          rho_bound, sp.retry_budget);
    out.push_back(classify_instance(g, sp.b, sp.k, sp.mode, caps));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const InstanceVerdict& a, const InstanceVerdict& b) {
                     const bool ca =
                         a.classification == Classification::counterexample;
                     const bool cb =
                         b.classification == Classification::counterexample;
                     if (ca != cb) return ca;
                     return a.graph6 < b.graph6;
                   });
  return out;
}

// ---------------------------------------------------------------------------
// Exact polynomial identities

namespace poly {

long long edge_gap_cubic(long long x, long long n, long long b, long long k,
                         long long d) {
  return b * b * x * x * x -
         (2 * b * b * k + b * b * d + 2 * b * b - b) * x * x +
         (2 * b * n + 2 * b * b * k * d + b * b * k * k + 4 * b * b * k +
          b * b - 3 * b * d - b * k - 4 * b) * x -
         (2 * b * k + 2 * b - 2) * n - b * b * k * k * d - 2 * b * b * k * k -
         2 * b * b * k + b * b * d + 3 * b * k * d + 4 * b * k + 2 * b * d -
         2 * d + 3 * b - 2;
}

long long edge_gap_cubic_derivative(long long x, long long n, long long b,
                                    long long k, long long d) {
  return 3 * b * b * x * x -
         2 * (2 * b * b * k + b * b * d + 2 * b * b - b) * x +
         (2 * b * n + 2 * b * b * k * d + b * b * k * k + 4 * b * b * k +
          b * b - 3 * b * d - b * k - 4 * b);
}

Rational edge_gap_cubic_derivative_at(const Rational& x, long long n,
                                      long long b, long long k, long long d) {
  return Rational(3 * b * b) * x * x -
         Rational(2 * (2 * b * b * k + b * b * d + 2 * b * b - b)) * x +
         Rational(2 * b * n + 2 * b * b * k * d + b * b * k * k +
                  4 * b * b * k + b * b - 3 * b * d - b * k - 4 * b);
}

long long b2_gap_quadratic(long long x, long long n, long long b, long long k,
                           long long d, long long s) {
  return b * x * x + (-b * s - b * d + b * k + b - 1) * x -
         b * (b + 1) * (s * s + d * s + d * d) +
         (s + d) * (b * n + 2 * b * b * k + b * k - 3 * b - 1) - b * k * n +
         n - b * b * k * k + 3 * b * k - 2;
}

long long b2_gap_at_anchor(long long n, long long b, long long k, long long d,
                           long long s) {
  return -b * (b + 1) * s * s + (b * b * k - b * d + b * k - b - 1) * s +
         b * n * n + (-2 * b * b * d + 2 * b * b * k - 3 * b) * n +
         (b * b * b - b) * d * d +
         (-2 * b * b * b * k + 3 * b * b + b * k - 1) * d + b * b * b * k * k -
         3 * b * b * k + 2 * b;
}

Rational b2_gap_at_anchor_rational(long long n, long long b, long long k,
                                   long long d, const Rational& s) {
  return Rational(-b * (b + 1)) * s * s +
         Rational(b * b * k - b * d + b * k - b - 1) * s +
         Rational(b * n * n + (-2 * b * b * d + 2 * b * b * k - 3 * b) * n +
                  (b * b * b - b) * d * d +
                  (-2 * b * b * b * k + 3 * b * b + b * k - 1) * d +
                  b * b * b * k * k - 3 * b * b * k + 2 * b);
}

long long b3_gap_quadratic(long long x, long long n, long long b, long long k,
                           long long d, long long s) {
  return (b * s - b * k - b) * x * x +
         (n - b * d * s + b * s + b * k * d + b * d - b * k - b - d - 1) * x +
         (b * s * s - b * k * s - b * s - b * d + b * k + s) * n +
         b * b * s * s * s * s -
         (b * b * d + 2 * b * b * k + 2 * b * b - b) * s * s * s +
         (2 * b * b * k * d - 2 * b * d + b * b * k * k + 4 * b * b * k +
          b * b - b * k - 3 * b) * s * s -
         (b * b * k * k * d - b * b * d - 2 * b * k * d + 2 * b * b * k * k +
          2 * b * b * k - 3 * b * k - 2 * b + d + 1) * s +
         b * b * d * d + b * d * d - 2 * b * b * k * d + 3 * b * d +
         b * b * k * k - 2 * b * k + 2;
}

long long b3_char_derivative(long long x, long long n, long long b,
                             long long k, long long d, long long s) {
  const MonicCubic phi = char_cubic(QuotientFamily::B3, static_cast<int>(n),
                                    static_cast<int>(b), static_cast<int>(k),
                                    static_cast<int>(d), static_cast<int>(s))
                             .phi;
  return 3 * x * x + 2 * phi.c2 * x + phi.c1;
}

long long b3_derivative_at_anchor_expanded(long long n, long long b,
                                           long long k, long long d,
                                           long long s) {
  return n * n +
         (-2 * b * s * s + 2 * b * d * s + 2 * b * k * s + 2 * b * s - s -
          2 * b * k * d - 4 * b * d + d + 2 * b * k - 3) * n +
         (2 * b * b * d - 2 * b * b * k + b * d + 3 * b) * s * s +
         (-2 * b * b * d * d - b * d * d - 2 * b * b * d - b * k * d -
          4 * b * d + d + 2 * b * b * k * k + 2 * b * b * k - 3 * b * k -
          3 * b + 1) * s +
         2 * b * b * k * d * d + 3 * b * b * d * d + b * k * d * d - d * d -
         2 * b * b * k * k * d - 4 * b * b * k * d + 4 * b * k * d +
         6 * b * d - 2 * d + b * b * k * k - 3 * b * k + 2;
}

}  // namespace poly

CheckStatus check_edge_difference_identity(int n, int b, int k, int delta,
                                           int s) {
  validate_bkd(b, k, delta);
  if (s < k + 1 || s > delta - 1)
    throw std::invalid_argument("s must lie in [k+1, delta-1]");
  const Graph g3 = build_g3(n, b, k, s, delta);
  const Graph gs = build_g_star(ExtremalParams{n, b, k, delta});
  const long long lhs = 2 * (g3.edge_count() - gs.edge_count());
  const long long rhs =
      (static_cast<long long>(s) - delta) * poly::edge_gap_cubic(s, n, b, k, delta);
  return lhs == rhs ? CheckStatus::holds : CheckStatus::fails;
}

CheckStatus check_edge_gap_base_value(int n, int b, int k, int delta) {
  validate_bkd(b, k, delta);
  if (n < k + 2) throw std::invalid_argument("order must be >= k+2");
  const long long N = n, B = b, K = k, D = delta;
  const long long base = poly::edge_gap_cubic(K + 1, N, B, K, D);
  if (base != 2 * N + B * K - B * D - 2 * D - 2) return CheckStatus::fails;
  const Rational lower =
      Rational((B + 5) * D - (B + 4) * K - B + 1) + Rational(5, B);
  if (delta >= k + 2 && Rational(N) >= lower && base <= 0)
    return CheckStatus::fails;
  return CheckStatus::holds;
}

CheckStatus check_edge_gap_monotone(int n, int b, int k, int delta) {
  validate_bkd(b, k, delta);
  const long long N = n, B = b, K = k, D = delta;
  const Rational lower(B * B * K * K - 2 * B * B * K * D - 4 * B * B * K -
                           B * K + B * B * D * D + 4 * B * B * D + 7 * B * D +
                           B * B + 8 * B + 1,
                       6 * B);
  if (delta < k + 2 || Rational(N) < lower) return CheckStatus::not_applicable;

  const Rational vertex(2 * B * K + B * D + 2 * B - 1, 3 * B);
  const Rational at_vertex =
      poly::edge_gap_cubic_derivative_at(vertex, N, B, K, D);
  const Rational packaged(6 * B * N - B * B * K * K + 2 * B * B * K * D +
                              4 * B * B * K + B * K - B * B * D * D -
                              4 * B * B * D - 7 * B * D - B * B - 8 * B - 1,
                          3);
  if (at_vertex != packaged || at_vertex < Rational(0))
    return CheckStatus::fails;
  for (long long x = K + 1; x < D - 1; ++x)
    if (poly::edge_gap_cubic(x + 1, N, B, K, D) <
        poly::edge_gap_cubic(x, N, B, K, D))
      return CheckStatus::fails;
  return CheckStatus::holds;
}

CheckStatus check_quotient_difference_b2(int n, int b, int k, int delta, int s,
                                         const std::vector<long long>& xs) {
  validate_bkd(b, k, delta);
  if (xs.size() < 4)
    throw std::invalid_argument("at least 4 sample points required");
  const MonicCubic phi_b2 =
      char_cubic(QuotientFamily::B2, n, b, k, delta, s).phi;
  const MonicCubic phi_star =
      char_cubic(QuotientFamily::Bstar, n, b, k, delta).phi;
  const long long N = n, B = b, K = k, D = delta, S = s;
  for (const long long x : xs) {
    const long long lhs = phi_b2.eval(x) - phi_star.eval(x);
    const long long rhs = (S - D) * poly::b2_gap_quadratic(x, N, B, K, D, S);
    if (lhs != rhs) return CheckStatus::fails;
  }
  return CheckStatus::holds;
}

CheckStatus check_quotient_difference_b3(int n, int b, int k, int delta, int s,
                                         const std::vector<long long>& xs) {
  validate_bkd(b, k, delta);
  if (s < k + 1 || s > delta)
    throw std::invalid_argument("s must lie in [k+1, delta]");
  if (xs.size() < 4)
    throw std::invalid_argument("at least 4 sample points required");
  const MonicCubic phi_b3 = char_cubic(QuotientFamily::B3, n, b, k, delta, s).phi;
  const MonicCubic phi_star =
      char_cubic(QuotientFamily::Bstar, n, b, k, delta).phi;
  const long long N = n, B = b, K = k, D = delta, S = s;
  for (const long long x : xs) {
    const long long lhs = phi_b3.eval(x) - phi_star.eval(x);
    const long long rhs = (D - S) * poly::b3_gap_quadratic(x, N, B, K, D, S);
    if (lhs != rhs) return CheckStatus::fails;
  }
  return CheckStatus::holds;
}

CheckStatus check_b2_positivity_chain(int n, int b, int k, int delta, int s) {
  validate_bkd(b, k, delta);
  const long long N = n, B = b, K = k, D = delta, S = s;
  if (S < D + 1 || N < (B + 1) * S - B * K + 2 ||
      N < (2 * B + 3) * D - B * K + 1)
    return CheckStatus::not_applicable;

  const long long anchor = N - B * D + B * K - 2;
  const long long direct = poly::b2_gap_quadratic(anchor, N, B, K, D, S);
  const long long expanded = poly::b2_gap_at_anchor(N, B, K, D, S);
  if (direct != expanded) return CheckStatus::fails;
  if (expanded <= 0) return CheckStatus::fails;
  // downward parabola in s, decreasing past its axis: the closed form at the
  // right endpoint of the admissible range is a lower bound
  const Rational right(N + B * K - 2, B + 1);
  const Rational at_right = poly::b2_gap_at_anchor_rational(N, B, K, D, right);
  if (Rational(expanded) < at_right) return CheckStatus::fails;
  return CheckStatus::holds;
}

CheckStatus check_b3_derivative_chain(int n, int b, int k, int delta, int s) {
  validate_bkd(b, k, delta);
  const long long N = n, B = b, K = k, D = delta, S = s;
  if (S < K + 1 || S > D - 1 || N < B * D * D - B * K ||
      N < (B * S - B * K + 2) * (D + 1 - S) + S)
    return CheckStatus::not_applicable;

  const long long anchor = N - B * D + B * K - 2;
  const MonicCubic phi = char_cubic(QuotientFamily::B3, n, b, k, delta, s).phi;
  // vertex of phi' left of the anchor makes phi' increasing past it
  if (!(-phi.c2 < 3 * anchor)) return CheckStatus::fails;
  const long long direct = poly::b3_char_derivative(anchor, N, B, K, D, S);
  const long long expanded =
      poly::b3_derivative_at_anchor_expanded(N, B, K, D, S);
  if (direct != expanded) return CheckStatus::fails;
  if (expanded <= 0) return CheckStatus::fails;
  for (long long x = anchor; x < anchor + 6; ++x)
    if (phi.eval(x + 1) <= phi.eval(x)) return CheckStatus::fails;
  return CheckStatus::holds;
}

// ---------------------------------------------------------------------------

bool IdentityGridReport::all_hold() const {
  for (const auto& line : lines)
    if (line.fails != 0 || line.points == 0) return false;
  return true;
}

IdentityGridReport run_identity_grid(const IdentityGridOptions& opt) {
  IdentityGridReport::Line edge_diff{"edge-difference-identity"};
  IdentityGridReport::Line base{"edge-gap-base-value"};
  IdentityGridReport::Line mono{"edge-gap-monotone"};
  IdentityGridReport::Line qd2{"quotient-difference-b2"};
  IdentityGridReport::Line qd3{"quotient-difference-b3"};
  IdentityGridReport::Line chain2{"b2-positivity-chain"};
  IdentityGridReport::Line chain3{"b3-derivative-chain"};

  const auto tally = [](IdentityGridReport::Line& line, CheckStatus st) {
    if (st == CheckStatus::not_applicable) return;
    ++line.points;
    if (st == CheckStatus::holds)
      ++line.holds;
    else
      ++line.fails;
  };

  const int n_max = opt.n_max;
  for (const int b : {1, 3, 5}) {
    for (const int k : {1, 2, 3}) {
      for (int delta = k + 1; delta <= k + opt.delta_span; ++delta) {
        const long long B = b, K = k, D = delta;
        const long long star_min = (B + 1) * D - B * K + 2;

        for (int n = k + 2; n <= n_max; ++n) {
          tally(base, check_edge_gap_base_value(n, b, k, delta));
          tally(mono, check_edge_gap_monotone(n, b, k, delta));
        }

        for (int s = delta + 1; s <= delta + 4; ++s)
          for (int n = k + 2; n <= n_max; ++n)
            tally(chain2, check_b2_positivity_chain(n, b, k, delta, s));

        for (int s = k + 1; s <= delta - 1; ++s) {
          const long long S = s;
          const long long g3_min = S + (B * S - B * K + 1) * (D + 1 - S) + 1;
          const long long lo = std::max(star_min, g3_min);
          for (long long n = lo; n <= n_max; ++n) {
            tally(edge_diff, check_edge_difference_identity(
                                 static_cast<int>(n), b, k, delta, s));
            tally(chain3, check_b3_derivative_chain(static_cast<int>(n), b, k,
                                                    delta, s));
          }
        }

        for (int s = k; s <= delta + 3; ++s) {
          const long long b2_min = (B + 1) * s - B * K + 2;
          const long long lo = std::max(star_min, b2_min);
          for (long long n = lo; n <= n_max; ++n)
            tally(qd2, check_quotient_difference_b2(static_cast<int>(n), b, k,
                                                    delta, s));
        }

        for (int s = k + 1; s <= delta; ++s) {
          const long long S = s;
          const long long b3_min = S + (B * S - B * K + 1) * (D + 1 - S) + 1;
          const long long lo = std::max(star_min, b3_min);
          for (long long n = lo; n <= n_max; ++n)
            tally(qd3, check_quotient_difference_b3(static_cast<int>(n), b, k,
                                                    delta, s));
        }
      }
    }
  }

  IdentityGridReport report;
  report.lines = {edge_diff, base, mono, qd2, qd3, chain2, chain3};
  return report;
}

}  // namespace oddfactor
