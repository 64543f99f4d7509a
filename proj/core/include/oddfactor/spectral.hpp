#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "oddfactor/graph.hpp"

namespace oddfactor {

// Monic cubic x^3 + c2 x^2 + c1 x + c0 with exact integer coefficients.
struct MonicCubic {
  long long c2 = 0;
  long long c1 = 0;
  long long c0 = 0;

  long long eval(long long x) const { return ((x + c2) * x + c1) * x + c0; }
  double eval(double x) const { return ((x + double(c2)) * x + double(c1)) * x + double(c0); }
  double derivative(double x) const { return (3.0 * x + 2.0 * double(c2)) * x + double(c1); }

  bool operator==(const MonicCubic&) const = default;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Largest adjacency eigenvalue within ±tol.  Deterministic: power iteration
/// on A+I from the all-ones vector with a residual convergence test, falling
/// back to full symmetric diagonalization when convergence stalls.
double spectral_radius(const Graph& g, double tol = 1e-10);

// Eigenvalues of a symmetric matrix, descending.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m);

struct Partition {
  std::vector<VertexSet> blocks;  // disjoint, nonempty, covering 0..n-1
};
void validate_partition(const Graph& g, const Partition& pi);

struct QuotientMatrix {
  Eigen::MatrixXd values;                      // b_ij = average row sum of block (i,j)
  bool equitable = false;                      // every block has constant row sums
  bool integral = false;                       // every entry is an exact integer
  std::vector<std::vector<long long>> exact;   // set when integral
  std::optional<MonicCubic> cubic;             // set when 3x3 and integral
};
QuotientMatrix quotient_matrix(const Graph& g, const Partition& pi);

// Canonical hub / dominant clique / remainder partition used by the family
// graphs (vertex labeling is positional: hub first).
Partition family_partition(int n, int s, int big);

// The three quotient-matrix families of the cluster joins, by hub parameter:
//   B2    = hub s with isolated small parts,
//   Bstar = the same shape at s = delta (the extremal graph),
//   B3    = hub s with small parts of size delta+1-s.
enum class QuotientFamily { B2, Bstar, B3 };

struct FamilyCubic {
  QuotientFamily family;
  int n = 0, b = 1, k = 1, delta = 2, s = 0;
  std::array<std::array<long long, 3>, 3> matrix{};  // quotient matrix entries
  MonicCubic phi;                                    // characteristic polynomial
};

/// Quotient matrix and characteristic cubic of the named family, both as
/// closed-form integer expressions in (n, b, k, delta, s).  For Bstar the s
/// argument is ignored.  Throws std::invalid_argument when the family's
/// builder parameters are inadmissible.
FamilyCubic char_cubic(QuotientFamily family, int n, int b, int k, int delta,
                       int s = 0);

// det(xI - m) of an exact integer 3x3 matrix, expanded exactly.
MonicCubic char_poly_3x3(const std::array<std::array<long long, 3>, 3>& m);

/// All real roots, descending, with multiplicity.  A monic real cubic always
/// has at least one.  Roots are isolated between the critical points and
/// refined by bisection plus Newton polish to ±tol.
std::vector<double> cubic_real_roots(const MonicCubic& c, double tol = 1e-12);
double largest_real_root(const MonicCubic& c, double tol = 1e-12);

/// Cauchy interlacing: eigenvalues of the principal submatrix on `keep`
/// interlace those of m within tol.
bool interlacing_check(const Eigen::MatrixXd& m, const VertexSet& keep,
                       double tol = 1e-9);

struct RhoComparison {
  double lhs = 0;  // rho of the parts join
  double rhs = 0;  // rho of the dominant-part configuration
};

/// Spectral-radius analogue of compare_edges_dominant: same hypotheses, and
/// lhs < rhs - tol must hold (InvariantViolation otherwise).
RhoComparison compare_rho_dominant(int n, int s, int p,
                                   const std::vector<int>& parts,
                                   double tol = 1e-10);

}  // namespace oddfactor
