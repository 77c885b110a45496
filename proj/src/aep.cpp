#include "qent/aep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qent {

namespace {

double log2_two_over_eps2(double epsilon) {
  if (!(epsilon > 0) || !(epsilon < std::sqrt(2.0))) {
    throw InvalidInput("epsilon must lie in (0, sqrt 2)");
  }
  return std::log2(2.0 / (epsilon * epsilon));
}

}  // namespace

DeltaError delta_error(double epsilon, double eta) {
  const double l = log2_two_over_eps2(epsilon);
  if (!(eta > 1.0)) {
    throw InvalidInput("delta_error: eta > 1 required (log eta degenerates)");
  }
  return DeltaError{4.0 * std::log2(eta) * std::sqrt(l), 1.6 * l};
}

double mu_star(double epsilon, double eta) {
  const double l = log2_two_over_eps2(epsilon);
  if (!(eta > 1.0)) {
    throw InvalidInput("mu_star: eta > 1 required");
  }
  return std::sqrt(std::log2(eta) * std::log2(eta) / l);
}

namespace {

AlphaWindow window_for_eta(double eta) {
  return AlphaWindow{1.0, 1.0 + std::log2(3.0) / (4.0 * std::log2(eta))};
}

}  // namespace

AlphaLowerBound alpha_lower_bound(const DensityOperator& rho,
                                  const DensityOperator& sigma, double alpha) {
  const UpsilonResult ups = upsilon(rho, sigma);
  if (!ups.value.is_finite()) {
    // Window collapses; treat like the divergent entropy it comes from.
    return AlphaLowerBound{
        EntropyValue::neg_inf(DivergedReason::SupportViolation),
        AlphaWindow{1.0, 1.0}, std::numeric_limits<double>::infinity()};
  }
  const double eta = ups.value.finite_value();
  const AlphaWindow window = window_for_eta(eta);
  if (!window.contains(alpha)) {
    std::ostringstream oss;
    oss << "alpha_lower_bound: alpha " << alpha
        << " outside the admissible window (" << window.lo << ", "
        << window.hi << ")";
    throw InvalidInput(oss.str());
  }
  const EntropyValue h = h_vn_rel(rho, sigma);
  if (h.is_neg_inf()) {
    return AlphaLowerBound{h, window, eta};
  }
  const double le = std::log2(eta);
  const double value = h.finite_value() - 4.0 * (alpha - 1.0) * le * le;
  return AlphaLowerBound{EntropyValue::finite(value), window, eta};
}

AepBoundRow qep_bound(const DensityOperator& rho, double epsilon, int n,
                      std::size_t a_subsystems) {
  return qep_bound_rel(rho, rho.marginal_b(a_subsystems), epsilon, n);
}

AepBoundRow qep_bound_rel(const DensityOperator& rho,
                          const DensityOperator& sigma, double epsilon,
                          int n) {
  if (n < 1) throw InvalidInput("qep_bound: n >= 1 required");
  if (!rho.normalized()) {
    throw InvalidInput("qep_bound: state must be normalized");
  }
  log2_two_over_eps2(epsilon);  // range check
  const UpsilonResult ups = upsilon(rho, sigma);
  if (!ups.value.is_finite()) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return AepBoundRow{n, epsilon, inf, -inf, -inf, inf, false};
  }
  const double eta = ups.value.finite_value();
  const DeltaError d = delta_error(epsilon, eta);
  const double h = h_vn_rel(rho, sigma).finite_value();
  const double gap = d.delta / std::sqrt(static_cast<double>(n));
  return AepBoundRow{n,       epsilon, eta, h, h - gap, gap,
                     static_cast<double>(n) >= d.n_min};
}

FiniteNReport verify_finite_n(const DensityOperator& rho,
                              const DensityOperator& sigma, double epsilon,
                              int n) {
  if (n < 1) throw InvalidInput("verify_finite_n: n >= 1 required");
  const UpsilonResult ups = upsilon(rho, sigma);
  if (!ups.value.is_finite()) {
    throw InvalidInput(
        "verify_finite_n: convergence parameter diverges for this sigma");
  }
  const double eta = ups.value.finite_value();
  const DeltaError de = delta_error(epsilon, eta);
  const AlphaWindow window = window_for_eta(eta);
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  // alpha = 1 + 1/(2 mu sqrt(n)); mu = mu_star when that alpha is
  // admissible (guaranteed for n >= n_min), otherwise the smallest window
  // margin: the largest of mu_star and the boundary value keeps alpha just
  // inside.
  const double ms = mu_star(epsilon, eta);
  const double mu_boundary = 1.0 / (2.0 * sqrt_n * (window.hi - 1.0));
  double mu = ms;
  bool used_mu_star = true;
  if (!window.contains(1.0 + 1.0 / (2.0 * ms * sqrt_n))) {
    mu = std::max(ms, mu_boundary * (1.0 + 1e-6));
    used_mu_star = false;
  }
  const double alpha = 1.0 + 1.0 / (2.0 * mu * sqrt_n);

  const DensityOperator rho_n = tensor_power(rho, n);
  const DensityOperator sigma_n = tensor_power(sigma, n);

  FiniteNReport rep{};
  rep.n = n;
  rep.epsilon = epsilon;
  rep.eta = eta;
  rep.n_min = de.n_min;
  rep.used_mu_star = used_mu_star;
  rep.mu = mu;
  rep.alpha = alpha;

  rep.additivity_lhs = h_alpha_rel(rho_n, sigma_n, alpha).finite_value();
  rep.additivity_rhs =
      static_cast<double>(n) * h_alpha_rel(rho, sigma, alpha).finite_value();
  rep.additivity_ok =
      std::abs(rep.additivity_lhs - rep.additivity_rhs) <= 1e-7 * n;

  const double constructive =
      constructive_hmin_lower(rho_n, sigma_n, epsilon).finite_value();
  const double rhs = theorem2_rhs(rho_n, sigma_n, epsilon, alpha).finite_value();
  rep.per_n_constructive = constructive / n;
  rep.per_n_theorem2_rhs = rhs / n;
  rep.theorem2_ok = constructive >= rhs - 1e-9;

  const AepBoundRow row = qep_bound_rel(rho, sigma, epsilon, n);
  rep.bound = row.bound;
  rep.valid = row.valid;
  rep.bound_ok = !row.valid || rep.per_n_constructive >= row.bound - 1e-6;
  return rep;
}

std::vector<AepBoundRow> convergence_table(const DensityOperator& rho,
                                           std::vector<double> eps_list,
                                           std::vector<int> n_list,
                                           std::size_t a_subsystems) {
  std::sort(eps_list.begin(), eps_list.end());
  std::sort(n_list.begin(), n_list.end());
  const DensityOperator sigma = rho.marginal_b(a_subsystems);
  std::vector<AepBoundRow> rows;
  rows.reserve(eps_list.size() * n_list.size());
  for (double eps : eps_list) {
    for (int n : n_list) {
      rows.push_back(qep_bound_rel(rho, sigma, eps, n));
    }
  }
  return rows;
}

}  // namespace qent
