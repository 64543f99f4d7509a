#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "oddfactor/factor.hpp"
#include "oddfactor/families.hpp"
#include "oddfactor/graph.hpp"

namespace oddfactor {

using Rational = boost::rational<long long>;

long long rational_ceil(const Rational& r);

// The order thresholds of the two sufficient conditions, evaluated in exact
// rational arithmetic.  Admissible orders additionally satisfy n ≡ k (mod 2)
// and n >= k+2.
struct ThresholdReport {
  int b = 1, k = 1, delta = 2;
  Rational size_expr1;        // (b²k² - 2b²kδ - 4b²k - bk + b²δ² + 4b²δ + 7bδ + b² + 8b + 1) / 6b
  Rational size_expr2;        // (b+5)δ - (b+4)k - b + 1 + 5/b
  Rational size_bound;        // max of the two
  long long spectral_expr1 = 0;  // bδ² - bk
  long long spectral_expr2 = 0;  // (2b+3)δ - bk + 1
  long long spectral_bound = 0;  // max of the two
  int parity = 0;                // admissible n ≡ parity (mod 2), parity = k mod 2
  long long n_min_size = 0;      // smallest admissible n for the size condition
  long long n_min_spectral = 0;  // smallest admissible n for the spectral condition
};
ThresholdReport thresholds(int b, int k, int delta);

enum class Mode { size, spectral };
enum class Classification { consistent, extremal_equality, counterexample };

const char* to_string(Mode m);
const char* to_string(Classification c);

struct InstanceVerdict {
  std::string graph6;
  Mode mode = Mode::size;
  int b = 1, k = 1;
  int n = 0;
  int delta = 0;              // measured minimum degree
  bool connected_ok = false;  // (k+1)-connected
  bool parity_ok = false;     // n ≡ k (mod 2)
  bool order_ok = false;      // n >= mode threshold at delta(G)
  bool bound_defined = false; // extremal comparison graph exists for (n,b,k,delta)
  bool bound_ok = false;      // e(G) >= e(G*) resp. rho(G) >= rho(G*) - 1e-8
  long long edge_value = 0;
  long long edge_bound = 0;
  double rho_value = 0;
  double rho_bound = 0;
  bool critical = false;
  std::optional<DeficiencyCertificate> witness;
  Classification classification = Classification::consistent;
};

/// Full theorem pipeline on one graph: hypotheses, bound, criticality, and
/// the exception-shape test.  counterexample requires every hypothesis and
/// the bound to hold, criticality to fail, and the graph not to be of the
/// extremal shape.  Capacity errors from the criticality check propagate.
InstanceVerdict classify_instance(const Graph& g, int b, int k, Mode mode,
                                  const SearchCaps& caps = {});

/// Degree-multiset/structure test for the extremal shape: exactly delta
/// universal vertices whose removal leaves one clique of the expected size
/// plus b*delta-bk+1 isolated vertices.  This determines the shape up to
/// isomorphism without canonization.
bool is_gstar_shaped(const Graph& g, int b, int k);

struct SweepParams {
  int b = 1, k = 1, delta = 2, n = 0;
  Mode mode = Mode::size;
  int samples = 0;
  std::uint64_t seed = 0;
  int retry_budget = 200;
};

/// Seeded random audit: samples graphs conditioned to satisfy the hypotheses
/// and the bound (extremal graph plus random edges, alternating with dense
/// repaired samples), classifies each, and returns counterexamples first,
/// each group sorted by graph6.  Deterministic in (seed, index) regardless
/// of scheduling.
std::vector<InstanceVerdict> sweep(const SweepParams& params,
                                   const SearchCaps& caps = {});

// ---------------------------------------------------------------------------
// Exact verification of the proof-internal identities and inequality chains.
// All arithmetic below is integer or rational; nothing floating-point.

enum class CheckStatus { holds, fails, not_applicable };
const char* to_string(CheckStatus s);

namespace poly {

// Cubic g controlling the clustered-vs-extremal edge-count gap:
// 2*(e(G3) - e(G*)) = (s - delta) * edge_gap_cubic(s).
long long edge_gap_cubic(long long x, long long n, long long b, long long k,
                         long long delta);
long long edge_gap_cubic_derivative(long long x3, long long n, long long b,
                                    long long k, long long delta);  // at x = x3 (integer)
Rational edge_gap_cubic_derivative_at(const Rational& x, long long n,
                                      long long b, long long k, long long delta);

// Quadratic f1 with phi_B2(x) - phi_Bstar(x) = (s - delta) * f1(x).
long long b2_gap_quadratic(long long x, long long n, long long b, long long k,
                           long long delta, long long s);
// f1 evaluated at the anchor n - b*delta + bk - 2, expanded as a closed form
// in s (the quantity called f2 in the positivity chain).
long long b2_gap_at_anchor(long long n, long long b, long long k,
                           long long delta, long long s);
Rational b2_gap_at_anchor_rational(long long n, long long b, long long k,
                                   long long delta, const Rational& s);

// Quadratic g1 with phi_B3(x) - phi_Bstar(x) = (delta - s) * g1(x).
long long b3_gap_quadratic(long long x, long long n, long long b, long long k,
                           long long delta, long long s);

// phi'_B3 at an integer point, and its printed expansion at the anchor.
long long b3_char_derivative(long long x, long long n, long long b,
                             long long k, long long delta, long long s);
long long b3_derivative_at_anchor_expanded(long long n, long long b,
                                           long long k, long long delta,
                                           long long s);

}  // namespace poly

/// 2*(e(G3)-e(G*)) == (s-delta)*g(s), both sides computed independently
/// (explicit graphs vs. polynomial).  Throws unless k+1 <= s <= delta-1 and
/// both builders are admissible.
CheckStatus check_edge_difference_identity(int n, int b, int k, int delta, int s);

/// g(k+1) == 2n + bk - b*delta - 2*delta - 2 exactly; additionally
/// g(k+1) > 0 whenever n >= (b+5)delta - (b+4)k - b + 1 + 5/b and
/// delta >= k+2.
CheckStatus check_edge_gap_base_value(int n, int b, int k, int delta);

/// g' at its vertex equals the packaged closed form and is >= 0, and g is
/// nondecreasing across the integer points of [k+1, delta-1].  Applicable
/// when delta >= k+2 and n is at least the rational lower bound.
CheckStatus check_edge_gap_monotone(int n, int b, int k, int delta);

/// phi_B2 - phi_Bstar == (s-delta)*f1 at the given integer sample points
/// (>= 4 distinct points certify the degree-<=2 identity).  Throws on
/// inadmissible builder parameters.
CheckStatus check_quotient_difference_b2(int n, int b, int k, int delta, int s,
                                         const std::vector<long long>& xs = {0, 1, 2, 3});

/// phi_B3 - phi_Bstar == (delta-s)*g1 at the sample points; k+1 <= s <= delta.
CheckStatus check_quotient_difference_b3(int n, int b, int k, int delta, int s,
                                         const std::vector<long long>& xs = {0, 1, 2, 3});

/// The positivity chain for the hub-larger-than-delta case:
/// f1(anchor) == f2(s) exactly, f2(s) > 0, and f2(s) >= f2((n+bk-2)/(b+1))
/// in rational arithmetic.  Applicable when s >= delta+1,
/// n >= (b+1)s - bk + 2 and n >= (2b+3)delta - bk + 1.
CheckStatus check_b2_positivity_chain(int n, int b, int k, int delta, int s);

/// The derivative chain for the clustered case: the vertex of phi'_B3 lies
/// left of the anchor, phi'_B3(anchor) matches its printed expansion and is
/// positive, and phi_B3 strictly increases on sampled integer points past
/// the anchor.  Applicable when k+1 <= s <= delta-1, n >= b*delta^2 - bk and
/// n >= (bs-bk+2)(delta+1-s) + s.
CheckStatus check_b3_derivative_chain(int n, int b, int k, int delta, int s);

struct IdentityGridOptions {
  int n_max = 60;         // order sweep limit (arithmetic and builders)
  int delta_span = 5;     // delta ranges over k+1 .. k+delta_span
};

struct IdentityGridReport {
  struct Line {
    std::string name;
    long long points = 0;
    long long holds = 0;
    long long fails = 0;
  };
  std::vector<Line> lines;
  bool all_hold() const;
};

/// Runs every identity/chain check over the full admissible grid
/// b in {1,3,5}, k in {1,2,3}, delta, s, n per check.
IdentityGridReport run_identity_grid(const IdentityGridOptions& opt = {});

}  // namespace oddfactor
