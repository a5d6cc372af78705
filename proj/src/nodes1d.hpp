#pragma once

#include <vector>

namespace lebmesh {

/// Univariate node flavor used by the product Chebyshev meshes.
enum class NodeKind { ChebyshevZeros, ChebyshevLobatto };

/// The k Chebyshev zeros cos((2j-1)pi/(2k)), j = 1..k, in decreasing order.
/// The returned set is exactly symmetric under negation.
std::vector<double> chebyshev_zeros(int k);

/// The k+1 Chebyshev-Lobatto points cos(j pi/k), j = 0..k, in decreasing
/// order, with endpoints exactly +-1.
std::vector<double> chebyshev_lobatto(int k);

struct GaussRule {
  std::vector<double> nodes;    // decreasing
  std::vector<double> weights;  // positive, sum to 2
};

/// Gauss-Legendre rule with k nodes on [-1,1]; exact on polynomials of
/// degree <= 2k-1. Roots are found by Newton refinement from Chebyshev
/// initial guesses (tolerance 1e-15 on the update).
GaussRule gauss_legendre(int k);

/// The k+1 Gauss-Legendre-Lobatto nodes on [-1,1] (the endpoints plus the
/// roots of P_k'), in decreasing order. Requires k >= 2.
std::vector<double> gauss_legendre_lobatto(int k);

/// k+1 uniformly spaced points on [a,b] including both endpoints,
/// in increasing order.
std::vector<double> equispaced(int k, double a, double b);

}  // namespace lebmesh
