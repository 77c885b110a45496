#pragma once

#include "qent/entropy.hpp"
#include "qent/state.hpp"

namespace qent {

// Output of the constructive smoothing G rho G^dagger.
struct SmoothingResult {
  double lambda;
  double epsilon_achieved;        // sqrt(2 tr Delta), in [0, sqrt 2]
  DensityOperator smoothed_state; // subnormalized
  double hmin_of_smoothed;        // h_min_rel(smoothed, sigma)
};

// epsilon(lambda) = sqrt(2 tr {rho - lambda 1 (x) sigma}_+); continuous and
// non-increasing in lambda, epsilon(0) = sqrt(2 tr rho).
double epsilon_of_lambda(const DensityOperator& rho,
                         const DensityOperator& sigma, double lambda);

// Inverts epsilon(lambda) on [0, 2^{-h_min_rel}] by bracketed root finding,
// stopping at |epsilon(lambda) - epsilon| <= 1e-9 or bracket width 1e-12.
// The returned lambda sits on the epsilon(lambda) >= epsilon side.
double lambda_for_epsilon(const DensityOperator& rho,
                          const DensityOperator& sigma, double epsilon);

// Lambda = lambda 1 (x) sigma, Delta = {rho - Lambda}_+,
// G = Lambda^{1/2} (Lambda + Delta)^{-1/2} (inverse on the support), and the
// smoothed state G rho G^dagger.
SmoothingResult smooth_state(const DensityOperator& rho,
                             const DensityOperator& sigma, double lambda);

// Certified lower bound on the smooth min-entropy:
// -log2 lambda_for_epsilon(rho, sigma, epsilon); -inf on support violation.
EntropyValue constructive_hmin_lower(const DensityOperator& rho,
                                     const DensityOperator& sigma,
                                     double epsilon);

// H_alpha(rho|sigma) - log2(2/epsilon^2)/(alpha - 1) for alpha in (1, 2];
// -inf when the alpha-entropy diverges.
EntropyValue theorem2_rhs(const DensityOperator& rho,
                          const DensityOperator& sigma, double epsilon,
                          double alpha);

}  // namespace qent
