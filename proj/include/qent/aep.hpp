#pragma once

#include <vector>

#include "qent/smooth.hpp"

namespace qent {

// delta(epsilon, eta) = 4 log2(eta) sqrt(log2(2/epsilon^2)) together with
// the n threshold (8/5) log2(2/epsilon^2) above which it applies.
struct DeltaError {
  double delta;
  double n_min;
};

DeltaError delta_error(double epsilon, double eta);

// Optimizer of mu log2(2/epsilon^2) + (log2 eta)^2 / mu; substituting it
// into that objective yields delta/2.
double mu_star(double epsilon, double eta);

// Admissible alpha interval (1, 1 + log2(3)/(4 log2 eta)) for the
// alpha-to-von-Neumann bound.
struct AlphaWindow {
  double lo;
  double hi;
  bool contains(double alpha) const { return alpha > lo && alpha < hi; }
};

struct AlphaLowerBound {
  EntropyValue value;  // H(A|B)_{rho|sigma} - 4 (alpha-1) (log2 eta)^2
  AlphaWindow window;
  double eta;
};

// Throws InvalidInput (naming the admissible interval) when alpha is
// outside the window.
AlphaLowerBound alpha_lower_bound(const DensityOperator& rho,
                                  const DensityOperator& sigma, double alpha);

// One row of a finite-n convergence table. When eta diverges the bound is
// -inf (stored as an IEEE infinity; the row is terminal data, no arithmetic
// consumes it).
struct AepBoundRow {
  int n;
  double epsilon;
  double eta;
  double h_vn;   // H(A|B) (relative version: H(A|B)_{rho|sigma})
  double bound;  // h_vn - delta/sqrt(n)
  double gap;    // delta/sqrt(n)
  bool valid;    // n >= n_min
};

AepBoundRow qep_bound(const DensityOperator& rho, double epsilon, int n,
                      std::size_t a_subsystems = 1);

AepBoundRow qep_bound_rel(const DensityOperator& rho,
                          const DensityOperator& sigma, double epsilon,
                          int n);

// Full numerical walk through the finite-n proof chain on actual tensor
// powers.
struct FiniteNReport {
  int n;
  double epsilon;
  double eta;
  double n_min;
  bool used_mu_star;  // false: largest admissible mu fallback (n < n_min)
  double mu;
  double alpha;

  double additivity_lhs;  // H_alpha(rho^n | sigma^n)
  double additivity_rhs;  // n * H_alpha(rho | sigma)
  bool additivity_ok;     // |lhs - rhs| <= 1e-7 * n

  double per_n_constructive;  // (1/n) constructive_hmin_lower
  double per_n_theorem2_rhs;  // (1/n) theorem2_rhs at alpha
  bool theorem2_ok;

  double bound;   // qep_bound_rel bound for this (epsilon, n)
  bool valid;     // n >= n_min
  bool bound_ok;  // per_n_constructive >= bound - 1e-6 (when valid)

  bool all_ok() const {
    return additivity_ok && theorem2_ok && (!valid || bound_ok);
  }
};

FiniteNReport verify_finite_n(const DensityOperator& rho,
                              const DensityOperator& sigma, double epsilon,
                              int n);

// Rows sorted by (epsilon, n); gap strictly decreasing in n at fixed
// epsilon.
std::vector<AepBoundRow> convergence_table(const DensityOperator& rho,
                                           std::vector<double> eps_list,
                                           std::vector<int> n_list,
                                           std::size_t a_subsystems = 1);

}  // namespace qent
