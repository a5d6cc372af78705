#include "nodes1d.hpp"

#include <cmath>

#include "errors.hpp"

namespace lebmesh {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Legendre value and first derivative at x by the three-term recurrence.
void legendre_eval(int k, double x, double& p, double& dp) {
  double pm1 = 1.0, pk = x;
  if (k == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int j = 1; j < k; ++j) {
    const double pj1 = ((2.0 * j + 1.0) * x * pk - j * pm1) / (j + 1.0);
    pm1 = pk;
    pk = pj1;
  }
  p = pk;
  // (x^2 - 1) P_k' = k (x P_k - P_{k-1})
  dp = k * (x * pk - pm1) / (x * x - 1.0);
}

// Enforce exact negation symmetry on a decreasing node list.
void symmetrize(std::vector<double>& x) {
  const std::size_t n = x.size();
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double v = 0.5 * (x[j] - x[n - 1 - j]);
    x[j] = v;
    x[n - 1 - j] = -v;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
}

}  // namespace

std::vector<double> chebyshev_zeros(int k) {
  require(k >= 1, errc::invalid_argument, "chebyshev_zeros requires k >= 1");
  std::vector<double> x(k);
  // sin form: antisymmetric by construction, midpoint exactly zero
  for (int j = 1; j <= k; ++j) x[j - 1] = std::sin(kPi * (k - 2 * j + 1) / (2.0 * k));
  return x;
}

std::vector<double> chebyshev_lobatto(int k) {
  require(k >= 1, errc::invalid_argument, "chebyshev_lobatto requires k >= 1");
  std::vector<double> x(k + 1);
  for (int j = 0; j <= k; ++j) x[j] = std::sin(kPi * (k - 2 * j) / (2.0 * k));
  return x;
}

GaussRule gauss_legendre(int k) {
  require(k >= 1, errc::invalid_argument, "gauss_legendre requires k >= 1");
  GaussRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (int j = 1; j <= k; ++j) {
    double x = std::cos(kPi * (j - 0.25) / (k + 0.5));
    double p = 0.0, dp = 1.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      legendre_eval(k, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    require(converged, errc::numerical_failure, "gauss_legendre: Newton refinement did not converge");
    legendre_eval(k, x, p, dp);
    rule.nodes[j - 1] = x;
    rule.weights[j - 1] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  symmetrize(rule.nodes);
  for (int j = 0; j < k / 2; ++j) {
    const double w = 0.5 * (rule.weights[j] + rule.weights[k - 1 - j]);
    rule.weights[j] = w;
    rule.weights[k - 1 - j] = w;
  }
  return rule;
}

std::vector<double> gauss_legendre_lobatto(int k) {
  require(k >= 2, errc::invalid_argument, "gauss_legendre_lobatto requires k >= 2");
  std::vector<double> x(k + 1);
  x[0] = 1.0;
  x[k] = -1.0;
  for (int j = 1; j < k; ++j) {
    // interior nodes: roots of P_k'; Chebyshev-Lobatto points are good guesses
    double t = std::cos(kPi * j / k);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p, dp;
      legendre_eval(k, t, p, dp);
      const double ddp = (2.0 * t * dp - k * (k + 1.0) * p) / (1.0 - t * t);
      const double dt = dp / ddp;
      t -= dt;
      if (std::abs(dt) <= 1e-15) {
        converged = true;
        break;
      }
    }
    require(converged, errc::numerical_failure, "gauss_legendre_lobatto: Newton refinement did not converge");
    x[j] = t;
  }
  symmetrize(x);
  return x;
}

std::vector<double> equispaced(int k, double a, double b) {
  require(k >= 1, errc::invalid_argument, "equispaced requires k >= 1");
  require(a < b, errc::invalid_argument, "equispaced requires a < b");
  std::vector<double> x(k + 1);
  for (int i = 0; i <= k; ++i) x[i] = ((k - i) * a + i * b) / k;
  return x;
}

}  // namespace lebmesh
