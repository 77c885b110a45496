#include "qent/smooth.hpp"

#include <cmath>
#include <sstream>

namespace qent {

namespace {

HermitianMatrix lambda_operator(const DensityOperator& rho,
                                const DensityOperator& sigma, double lambda) {
  const Index da = detail::leading_dim(rho, sigma);
  return detail::identity_tensor(da, sigma.matrix()) * lambda;
}

double positive_trace(const HermitianMatrix& h) {
  // Eigenvalues only; the full decomposition is not needed here and this is
  // the hot loop of the bisection.
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.mat(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("positive_trace: eigensolver did not converge");
  }
  return es.eigenvalues().cwiseMax(0.0).sum();
}

void require_support(const DensityOperator& rho, const DensityOperator& sigma,
                     const char* what) {
  const Index da = detail::leading_dim(rho, sigma);
  const HermitianMatrix rho_b =
      partial_trace(rho.matrix(), {da, sigma.dim()}, {1});
  if (!support_contained(rho_b, sigma.matrix())) {
    std::ostringstream oss;
    oss << what << ": supp(rho_B) is not contained in supp(sigma)";
    throw InvalidInput(oss.str());
  }
}

}  // namespace

double epsilon_of_lambda(const DensityOperator& rho,
                         const DensityOperator& sigma, double lambda) {
  if (lambda < 0) throw InvalidInput("epsilon_of_lambda: lambda >= 0");
  const HermitianMatrix delta =
      rho.matrix() - lambda_operator(rho, sigma, lambda);
  return std::sqrt(2.0 * positive_trace(delta));
}

double lambda_for_epsilon(const DensityOperator& rho,
                          const DensityOperator& sigma, double epsilon) {
  require_support(rho, sigma, "lambda_for_epsilon");
  const double eps0 = std::sqrt(2.0 * rho.trace());
  if (!(epsilon > 0) || !(epsilon < eps0)) {
    std::ostringstream oss;
    oss << "lambda_for_epsilon: epsilon must lie in (0, " << eps0 << ")";
    throw InvalidInput(oss.str());
  }
  double lo = 0.0;                 // epsilon(lo) = eps0 > epsilon
  double f_lo = eps0 - epsilon;
  double hi = std::exp2(-h_min_rel(rho, sigma).finite_value());
  double f_hi = epsilon_of_lambda(rho, sigma, hi) - epsilon;
  for (int guard = 0; guard < 50 && f_hi > 0; ++guard) {
    // epsilon(2^{-h_min_rel}) is 0 up to eigensolver noise; widen if needed.
    hi *= 2.0;
    f_hi = epsilon_of_lambda(rho, sigma, hi) - epsilon;
  }
  if (f_hi > 0) {
    throw NumericalError("lambda_for_epsilon: could not bracket the root");
  }

  // Illinois-weighted regula falsi with bisection fallback. epsilon(lambda)
  // is continuous and non-increasing, so the bracket stays valid.
  double best = lo;  // largest lambda seen with epsilon(lambda) >= target
  for (int it = 0; it < 200; ++it) {
    double mid;
    const double denom = f_lo - f_hi;
    if (std::abs(denom) > 1e-300) {
      mid = lo + (hi - lo) * f_lo / denom;
      if (!(mid > lo) || !(mid < hi)) mid = 0.5 * (lo + hi);
    } else {
      mid = 0.5 * (lo + hi);
    }
    const double f_mid = epsilon_of_lambda(rho, sigma, mid) - epsilon;
    if (f_mid >= 0) {
      best = mid;
      lo = mid;
      f_lo = f_mid;
      f_hi *= 0.5;  // Illinois weighting against stagnation
    } else {
      hi = mid;
      f_hi = f_mid;
      f_lo *= 0.5;
    }
    if (std::abs(f_mid) <= 1e-9 && f_mid >= 0) return mid;
    if (hi - lo <= 1e-12) return best;
  }
  throw NumericalError("lambda_for_epsilon: root finder did not converge");
}

SmoothingResult smooth_state(const DensityOperator& rho,
                             const DensityOperator& sigma, double lambda) {
  if (!(lambda > 0)) throw InvalidInput("smooth_state: lambda > 0 required");
  require_support(rho, sigma, "smooth_state");
  const HermitianMatrix big_lambda = lambda_operator(rho, sigma, lambda);
  const HermitianMatrix delta = positive_part(rho.matrix() - big_lambda);
  const Matrix g =
      psd_sqrt(big_lambda).mat() * psd_inv_sqrt(big_lambda + delta).mat();
  Matrix smoothed = g * rho.matrix().mat() * g.adjoint();
  DensityOperator tilde(hermitian_unchecked(std::move(smoothed)), rho.dims());
  const double eps = std::sqrt(2.0 * std::max(0.0, delta.trace()));
  const double hmin = h_min_rel(tilde, sigma).finite_value();
  return SmoothingResult{lambda, eps, std::move(tilde), hmin};
}

EntropyValue constructive_hmin_lower(const DensityOperator& rho,
                                     const DensityOperator& sigma,
                                     double epsilon) {
  const Index da = detail::leading_dim(rho, sigma);
  const HermitianMatrix rho_b =
      partial_trace(rho.matrix(), {da, sigma.dim()}, {1});
  if (!support_contained(rho_b, sigma.matrix())) {
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  const double lambda = lambda_for_epsilon(rho, sigma, epsilon);
  return EntropyValue::finite(-std::log2(lambda));
}

EntropyValue theorem2_rhs(const DensityOperator& rho,
                          const DensityOperator& sigma, double epsilon,
                          double alpha) {
  if (!(alpha > 1.0) || !(alpha <= 2.0)) {
    throw InvalidInput("theorem2_rhs: alpha must lie in (1, 2]");
  }
  if (!(epsilon > 0)) throw InvalidInput("theorem2_rhs: epsilon > 0");
  const EntropyValue h = h_alpha_rel(rho, sigma, alpha);
  if (h.is_neg_inf()) return h;
  const double penalty = std::log2(2.0 / (epsilon * epsilon)) / (alpha - 1.0);
  return EntropyValue::finite(h.finite_value() - penalty);
}

}  // namespace qent
