#include "qent/functional.hpp"

#include <cmath>

namespace qent {

ScalarFunction::ScalarFunction(std::function<double(double)> eval,
                               KernelLimit limit, ConvexityClass convexity)
    : eval_(std::move(eval)), limit_(limit), convexity_(convexity) {
  if (eval_(0.0) != 0.0) {
    throw InvalidInput("ScalarFunction: f(0) must be exactly 0");
  }
}

ScalarFunction power_function(double alpha) {
  if (!(alpha > 0)) {
    throw InvalidInput("power_function: alpha > 0 required");
  }
  KernelLimit limit = alpha < 1 ? KernelLimit::Zero : KernelLimit::PosInfinity;
  if (alpha == 1.0) limit = KernelLimit::Zero;  // xi * (lambda/xi) = lambda
  ConvexityClass cls = ConvexityClass::General;
  if (alpha > 1.0 && alpha <= 2.0) cls = ConvexityClass::OperatorConvex;
  if (alpha > 0.0 && alpha < 1.0) cls = ConvexityClass::OperatorConcave;
  return ScalarFunction(
      [alpha](double t) { return std::pow(t, alpha); }, limit, cls);
}

ScalarFunction t_log2_t() {
  return ScalarFunction(
      [](double t) { return t > 0 ? t * std::log2(t) : 0.0; },
      KernelLimit::PosInfinity, ConvexityClass::OperatorConvex);
}

ScalarFunction minus_t_log2_t() {
  return ScalarFunction(
      [](double t) { return t > 0 ? -t * std::log2(t) : 0.0; },
      KernelLimit::NegInfinity, ConvexityClass::OperatorConcave);
}

ScalarFunction cosh_log(double beta) {
  return ScalarFunction(
      [beta](double t) {
        return t > 0 ? std::cosh(beta * std::log(t)) - 1.0 : 0.0;
      },
      KernelLimit::PosInfinity,
      beta >= 1.0 ? ConvexityClass::Convex : ConvexityClass::General);
}

EntropyValue s_f(const HermitianMatrix& a, const HermitianMatrix& b,
                 const ScalarFunction& f) {
  if (a.dim() != b.dim()) throw InvalidInput("s_f: dimension mismatch");
  const Spectrum sa = eig_hermitian(a);
  const Spectrum sb = eig_hermitian(b);
  detail::require_psd(sa, "s_f(A)");
  detail::require_psd(sb, "s_f(B)");
  const double cut_a = support_cutoff(sa);
  const double cut_b = support_cutoff(sb);

  const Matrix overlaps = sa.eigenvectors.adjoint() * sb.eigenvectors;
  double acc = 0.0;
  bool pos_div = false, neg_div = false;
  for (Index i = 0; i < sa.eigenvalues.size(); ++i) {
    const double lam = std::max(sa.eigenvalues(i), 0.0);
    for (Index j = 0; j < sb.eigenvalues.size(); ++j) {
      const double w = std::norm(overlaps(i, j));
      if (w <= 1e-14) continue;
      const double mu = std::max(sb.eigenvalues(j), 0.0);
      if (mu <= cut_b) {
        if (lam <= cut_a) continue;  // xi f(0) = 0
        switch (f.kernel_limit()) {
          case KernelLimit::Zero:
            break;
          case KernelLimit::PosInfinity:
            pos_div = true;
            break;
          case KernelLimit::NegInfinity:
            neg_div = true;
            break;
        }
        continue;
      }
      acc += mu * f(lam / mu) * w;
    }
  }
  if (pos_div) return EntropyValue::pos_inf(DivergedReason::SupportViolation);
  if (neg_div) return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  return EntropyValue::finite(acc);
}

bool check_jensen(const ScalarFunction& f, const HermitianMatrix& x,
                  const Vector& phi, double tol) {
  if (phi.size() != x.dim()) throw InvalidInput("check_jensen: shape");
  if (std::abs(phi.norm() - 1.0) > 1e-9) {
    throw InvalidInput("check_jensen: phi must be a unit vector");
  }
  const Spectrum s = eig_hermitian(x);
  double lhs = 0.0;
  const Vector coeffs = s.eigenvectors.adjoint() * phi;
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    lhs += std::norm(coeffs(i)) * f(s.eigenvalues(i));
  }
  const double mean = (phi.adjoint() * x.mat() * phi)(0, 0).real();
  return lhs >= f(mean) - tol;
}

bool check_operator_jensen(const ScalarFunction& f, const Isometry& v,
                           const HermitianMatrix& c, double tol) {
  if (c.dim() != v.dout()) {
    throw InvalidInput("check_operator_jensen: C must act on the image space");
  }
  const HermitianMatrix fc = matrix_function(c, [&f](double t) { return f(t); },
                                             false);
  const Matrix lhs = v.matrix().adjoint() * fc.mat() * v.matrix();
  const HermitianMatrix compressed =
      hermitian_unchecked(v.matrix().adjoint() * c.mat() * v.matrix());
  const HermitianMatrix rhs =
      matrix_function(compressed, [&f](double t) { return f(t); }, false);
  return operator_geq(hermitian_unchecked(lhs), rhs, tol);
}

bool check_monotonicity(const HermitianMatrix& a, const HermitianMatrix& b,
                        const QuantumChannel& e, const ScalarFunction& f,
                        double tol) {
  const EntropyValue before = s_f(a, b, f);
  const EntropyValue after = s_f(e.apply(a), e.apply(b), f);
  if (before.is_pos_inf()) return true;
  if (before.is_neg_inf()) return after.is_neg_inf();
  if (after.is_pos_inf()) return false;
  if (after.is_neg_inf()) return true;
  return before.finite_value() >= after.finite_value() - tol;
}

}  // namespace qent
