#include "oddfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "oddfactor/errors.hpp"
#include "oddfactor/families.hpp"

namespace oddfactor {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) a(u, v) = a(v, u) = 1.0;
  return a;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square");
  if (m != m.transpose())
    throw std::invalid_argument("matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue computation failed");
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.rows());
  std::reverse(vals.begin(), vals.end());
  return vals;
}

double spectral_radius(const Graph& g, double tol) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("spectral radius of the empty graph");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  const Eigen::MatrixXd a = adjacency_matrix(g);

  // Power iteration on A+I: the shift makes the top eigenvalue strictly
  // dominant even for bipartite spectra, and the all-ones start always has
  // positive overlap with the Perron vector.
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  const double stop = std::max(tol * 1e-2, 1e-13);
  const int maxit = 400 + 60 * n;
  for (int it = 0; it < maxit; ++it) {
    Eigen::VectorXd y = a * x + x;
    const double mu = x.dot(y);
    const double residual = (y - mu * x).norm();
    if (residual <= stop * std::max(1.0, std::abs(mu))) return mu - 1.0;
    const double norm = y.norm();
    x = y / norm;
  }
  // Small spectral gap: fall back to full symmetric diagonalization.
  return symmetric_eigenvalues(a).front();
}

void validate_partition(const Graph& g, const Partition& pi) {
  if (pi.blocks.empty()) throw std::invalid_argument("partition has no blocks");
  std::vector<char> seen(g.order(), 0);
  int covered = 0;
  for (const auto& block : pi.blocks) {
    if (block.empty()) throw std::invalid_argument("partition block is empty");
    validate_vertex_set(g, block);
    for (int v : block) {
      if (seen[v]) throw std::invalid_argument("partition blocks overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != g.order())
    throw std::invalid_argument("partition does not cover all vertices");
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& pi) {
  validate_partition(g, pi);
  const int r = static_cast<int>(pi.blocks.size());
  QuotientMatrix q;
  q.values = Eigen::MatrixXd::Zero(r, r);
  q.equitable = true;
  q.integral = true;
  q.exact.assign(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      long long total = 0;
      long long first = -1;
      bool constant = true;
      for (int v : pi.blocks[i]) {
        long long count = 0;
        for (int u : pi.blocks[j])
          if (u != v && g.adjacent(v, u)) ++count;
        if (first == -1)
          first = count;
        else if (count != first)
          constant = false;
        total += count;
      }
      const long long rows = static_cast<long long>(pi.blocks[i].size());
      q.equitable = q.equitable && constant;
      q.values(i, j) = static_cast<double>(total) / static_cast<double>(rows);
      if (total % rows == 0)
        q.exact[i][j] = total / rows;
      else
        q.integral = false;
    }
  }
  if (!q.integral) q.exact.clear();
  if (r == 3 && q.integral) {
    std::array<std::array<long long, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = q.exact[i][j];
    q.cubic = char_poly_3x3(m);
  }
  return q;
}

Partition family_partition(int n, int s, int big) {
  if (s < 1 || big < 1 || s + big >= n)
    throw std::invalid_argument("family partition blocks must all be nonempty");
  Partition pi;
  VertexSet hub, dominant, rest;
  for (int v = 0; v < s; ++v) hub.push_back(v);
  for (int v = s; v < s + big; ++v) dominant.push_back(v);
  for (int v = s + big; v < n; ++v) rest.push_back(v);
  pi.blocks = {hub, dominant, rest};
  return pi;
}

MonicCubic char_poly_3x3(const std::array<std::array<long long, 3>, 3>& m) {
  const long long tr = m[0][0] + m[1][1] + m[2][2];
  const long long minors =
      (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
      (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
      (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  const long long det =
      m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return MonicCubic{-tr, minors, -det};
}

FamilyCubic char_cubic(QuotientFamily family, int n, int b, int k, int delta,
                       int s) {
  if (b < 1 || b % 2 == 0)
    throw std::invalid_argument("b must be a positive odd integer");
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  FamilyCubic fc;
  fc.family = family;
  fc.n = n;
  fc.b = b;
  fc.k = k;
  fc.delta = delta;
  fc.s = s;

  const long long N = n, B = b, K = k, D = delta;

  if (family == QuotientFamily::Bstar) {
    validate_extremal_params(ExtremalParams{n, b, k, delta});
    const long long big = N - (B + 1) * D + B * K - 1;
    const long long singles = B * D - B * K + 1;
    fc.s = delta;
    fc.matrix = {{{D - 1, big, singles}, {D, big - 1, 0}, {D, 0, 0}}};
    fc.phi.c2 = -N + B * D - B * K + 3;
    fc.phi.c1 = -N - B * D * D + B * K * D + B * D - D - B * K + 2;
    fc.phi.c0 = -B * (B + 1) * D * D * D + B * N * D * D + 2 * B * B * K * D * D +
                B * K * D * D - (3 * B + 1) * D * D - B * K * N * D + N * D -
                B * B * K * K * D + 3 * B * K * D - 2 * D;
    return fc;
  }

  if (family == QuotientFamily::B2) {
    const long long S = s;
    const long long big = N - (B + 1) * S + B * K - 1;
    const long long singles = B * S - B * K + 1;
    if (s < 1 || big < 1 || singles < 1)
      throw std::invalid_argument("inadmissible B2 parameters");
    fc.matrix = {{{S - 1, big, singles}, {S, big - 1, 0}, {S, 0, 0}}};
    fc.phi.c2 = -N + B * S - B * K + 3;
    fc.phi.c1 = -N - B * S * S + B * K * S + B * S - S - B * K + 2;
    fc.phi.c0 = -B * (B + 1) * S * S * S + B * N * S * S + 2 * B * B * K * S * S +
                B * K * S * S - (3 * B + 1) * S * S - B * K * N * S + N * S -
                B * B * K * K * S + 3 * B * K * S - 2 * S;
    return fc;
  }

  // B3: hub s, small parts of size delta+1-s.  s == delta is the degenerate
  // boundary where the family coincides with B2 at s = delta.
  const long long S = s;
  const long long count = B * S - B * K + 1;
  const long long small = D + 1 - S;
  const long long big = N - S - count * small;
  if (s < 1 || s > delta || count < 1 || small < 1 || big < 1)
    throw std::invalid_argument("inadmissible B3 parameters");
  fc.matrix = {{{S - 1, big, count * small}, {S, big - 1, 0}, {S, 0, D - S}}};
  fc.phi.c2 = -N - B * S * S + B * D * S + B * K * S + B * S - B * K * D - B * K + 3;
  fc.phi.c1 = (B * D - B) * S * S +
              (B * K + B + D - B * D * D - B * K * D - N + 1) * S +
              D * N - N + B * K * D * D - D * D - 2 * D - B * K + 2;
  fc.phi.c0 =
      (-B * S * S * S + B * D * S * S + B * K * S * S + B * S * S - S * S -
       B * K * D * S - B * K * S + D * S + D) * N -
      B * B * S * S * S * S * S +
      (2 * B * B * D + 2 * B * B * K + 2 * B * B - B) * S * S * S * S -
      (B * B * D * D + 4 * B * B * K * D + B * B * K * K + 2 * B * B * D +
       4 * B * B * K + B * B - 3 * B * D - B * K - 3 * B) * S * S * S +
      (2 * B * B * K * D * D + 2 * B * B * K * K * D + 4 * B * B * K * D +
       2 * B * B * K * K - 3 * B * K * D + 2 * B * B * K - 2 * B * D * D -
       3 * B * D - 3 * B * K - 2 * B + D + 1) * S * S -
      (B * B * K * K * D * D + 2 * B * B * K * K * D + B * B * K * K -
       2 * B * K * D * D - 3 * B * K * D + B * D * D - 2 * B * K + B * D +
       D * D + D) * S +
      B * K * D * D + B * K * D - D * D - 2 * D;
  return fc;
}

namespace {

// Bracketed bisection: f changes sign (or vanishes) between lo and hi.
double refine_root(const MonicCubic& c, double lo, double hi, double tol) {
  double flo = c.eval(lo);
  double fhi = c.eval(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = c.eval(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    if (hi - lo <= tol * std::max(1.0, std::abs(mid))) break;
  }
  // guarded Newton polish inside the final bracket
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double d = c.derivative(x);
    if (d == 0.0) break;
    const double next = x - c.eval(x) / d;
    if (next < lo || next > hi) break;
    x = next;
  }
  return x;
}

}  // namespace

std::vector<double> cubic_real_roots(const MonicCubic& c, double tol) {
  const double bound =
      1.0 + std::max({std::abs(double(c.c2)), std::abs(double(c.c1)),
                      std::abs(double(c.c0))});
  std::vector<double> roots;
  const double disc = 4.0 * double(c.c2) * double(c.c2) - 12.0 * double(c.c1);
  if (disc <= 0.0) {
    // no two distinct critical points: strictly monotone, single real root
    roots.push_back(refine_root(c, -bound, bound, tol));
  } else {
    const double sq = std::sqrt(disc);
    const double x1 = (-2.0 * double(c.c2) - sq) / 6.0;  // local max
    const double x2 = (-2.0 * double(c.c2) + sq) / 6.0;  // local min
    const double f1 = c.eval(x1);
    const double f2 = c.eval(x2);
    if (f1 < 0.0) {
      roots.push_back(refine_root(c, x2, bound, tol));
    } else if (f1 == 0.0) {
      roots.push_back(x1);
      roots.push_back(x1);
      roots.push_back(refine_root(c, x2, bound, tol));
    } else {  // f1 > 0: a root left of the local max always exists
      roots.push_back(refine_root(c, -bound, x1, tol));
      if (f2 == 0.0) {
        roots.push_back(x2);
        roots.push_back(x2);
      } else if (f2 < 0.0) {
        roots.push_back(refine_root(c, x1, x2, tol));
        roots.push_back(refine_root(c, x2, bound, tol));
      }
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

double largest_real_root(const MonicCubic& c, double tol) {
  return cubic_real_roots(c, tol).front();
}

bool interlacing_check(const Eigen::MatrixXd& m, const VertexSet& keep,
                       double tol) {
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  const int size = static_cast<int>(m.rows());
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= size)
      throw std::invalid_argument("keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("keep set must be sorted and duplicate-free");
  }
  const int sub = static_cast<int>(keep.size());
  Eigen::MatrixXd nmat(sub, sub);
  for (int i = 0; i < sub; ++i)
    for (int j = 0; j < sub; ++j) nmat(i, j) = m(keep[i], keep[j]);

  const std::vector<double> lm = symmetric_eigenvalues(m);
  const std::vector<double> ln = symmetric_eigenvalues(nmat);
  for (int i = 0; i < sub; ++i) {
    if (lm[i] + tol < ln[i]) return false;
    if (ln[i] + tol < lm[size - sub + i]) return false;
  }
  return true;
}

RhoComparison compare_rho_dominant(int n, int s, int p,
                                   const std::vector<int>& parts, double tol) {
  // same hypothesis validation as the edge-count comparator
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

  RhoComparison cmp;
  cmp.lhs = spectral_radius(build_parts(s, parts));
  cmp.rhs = spectral_radius(build_cluster_join(n, s, t, p));
  if (!(cmp.lhs < cmp.rhs - tol))
    throw InvariantViolation("spectral-radius comparison failed: " +
                             std::to_string(cmp.lhs) + " !< " +
                             std::to_string(cmp.rhs));
  return cmp;
}

}  // namespace oddfactor
