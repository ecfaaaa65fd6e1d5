#pragma once

#include "orcas/weights.hpp"

namespace orcas {

// LLR mean above which phi underflows double precision; the check-node
// update degenerates to mu - 4 ln 2 there.
inline constexpr double kMuSaturation = 3000.0;

// Q(x): complementary CDF of the standard normal.
double q_func(double x);

// phi(x) = 1 - E[tanh(L/2)], L ~ N(x, 2x); phi(0) = 1, strictly decreasing.
// Table-backed with monotone cubic interpolation between quadrature nodes.
double phi(double x);

// psi(x) = 1 - phi(x), computed to full relative accuracy also for small x
// where phi is indistinguishable from 1.
double psi(double x);

// ln phi(x) for x > 0; stays finite long after phi itself underflows.
double log_phi(double x);

// Inverse of phi on (0, 1]; phi_inv(1) = 0.
double phi_inv(double y);

// Inverse of psi on [0, 1).
double psi_inv(double y);

// Mean evolution through the check-node update: f(mu) = phi^-1(1 - (1 - phi(mu))^2).
double f_evolve(double mu);

// Mean evolution through the variable-node update: g(mu) = 2 mu.
inline double g_evolve(double mu) { return 2.0 * mu; }

// Two-argument check update phi^-1(1 - (1 - phi(mu1))(1 - phi(mu2))) for
// non-identically distributed inputs (punctured/shortened channels).
double check_combine_mu(double mu1, double mu2);

// Variable-node counterpart: mu1 + mu2.
inline double var_combine_mu(double mu1, double mu2) { return mu1 + mu2; }

// Slow reference evaluation of phi by adaptive quadrature of
//   phi(x) = e^{-x/4} / sqrt(4 pi x) * Int e^{-u^2/(4x)} sech(u/2) du,
// an algebraically equivalent all-positive form of the defining integral.
double phi_quadrature(double x);

// Union bound sum_{w>=1} A_w Q(sqrt(w)/sigma), clamped to [0,1].
double union_bound(double sigma, const WeightDistribution& weights);

// Weight distribution of the leaf code at (n,k): NPRS when k <= bit_length(n),
// NPRSD otherwise. Cached process-wide.
const WeightDistribution& cached_leaf_weights(int n, int k);

// Union-bound BLER of the (n,k) leaf code at LLR mean mu, capped by the
// BLER of uncoded transmission 1 - (1 - Q(1/sigma))^n.
double leaf_bler(double mu, int n, int k);

}  // namespace orcas
