#include "qent/entropy.hpp"

#include <cmath>
#include <sstream>

namespace qent {

EntropyValue EntropyValue::finite(double v) {
  if (!std::isfinite(v)) {
    throw NumericalError("EntropyValue::finite got a non-finite value");
  }
  EntropyValue e;
  e.kind_ = Kind::Finite;
  e.value_ = v;
  return e;
}

EntropyValue EntropyValue::neg_inf(DivergedReason r) {
  EntropyValue e;
  e.kind_ = Kind::NegInf;
  e.reason_ = r;
  return e;
}

EntropyValue EntropyValue::pos_inf(DivergedReason r) {
  EntropyValue e;
  e.kind_ = Kind::PosInf;
  e.reason_ = r;
  return e;
}

double EntropyValue::finite_value() const {
  if (kind_ != Kind::Finite) {
    throw NumericalError("EntropyValue: divergent value used as finite");
  }
  return value_;
}

double EntropyValue::as_real() const {
  switch (kind_) {
    case Kind::Finite:
      return value_;
    case Kind::NegInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::PosInf:
      return std::numeric_limits<double>::infinity();
  }
  return value_;
}

std::string EntropyValue::str() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  std::ostringstream oss;
  oss.precision(12);
  oss << value_;
  return oss.str();
}

namespace detail {

Index leading_dim(const DensityOperator& rho, const DensityOperator& sigma) {
  const Index db = sigma.dim();
  if (db < 1 || rho.dim() % db != 0) {
    std::ostringstream oss;
    oss << "conditioning dimension " << db << " does not divide state dim "
        << rho.dim();
    throw InvalidInput(oss.str());
  }
  return rho.dim() / db;
}

HermitianMatrix identity_tensor(Index da, const HermitianMatrix& sigma) {
  return tensor_product(HermitianMatrix::identity(da), sigma,
                        da * sigma.dim());
}

Index a_dim(const DensityOperator& rho, std::size_t a_subsystems) {
  if (a_subsystems < 1 || a_subsystems >= rho.dims().size()) {
    throw InvalidInput("invalid A/B split of the subsystem list");
  }
  Index da = 1;
  for (std::size_t k = 0; k < a_subsystems; ++k) da *= rho.dims()[k];
  return da;
}

}  // namespace detail

namespace {

// supp(rho_B) subseteq supp(sigma_B) decision for the xi->0 limits.
bool conditioning_support_ok(const DensityOperator& rho,
                             const DensityOperator& sigma) {
  const Index da = detail::leading_dim(rho, sigma);
  const HermitianMatrix rho_b =
      partial_trace(rho.matrix(), {da, sigma.dim()}, {1});
  return support_contained(rho_b, sigma.matrix());
}

// tr(rho log2 m) with the log on the support of m; contributions of rho on
// the kernel of m are assumed checked away by the caller.
double trace_rho_log2(const Matrix& rho, const HermitianMatrix& m) {
  const HermitianMatrix lg = matrix_function(
      m, [](double t) { return std::log2(t); }, true);
  return (rho * lg.mat()).trace().real();
}

}  // namespace

EntropyValue h_vn_rel(const DensityOperator& rho,
                      const DensityOperator& sigma) {
  if (!conditioning_support_ok(rho, sigma)) {
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  const Index da = detail::leading_dim(rho, sigma);
  const HermitianMatrix big =
      detail::identity_tensor(da, sigma.matrix());
  const double cross = trace_rho_log2(rho.matrix().mat(), big);
  const double self = trace_rho_log2(rho.matrix().mat(), rho.matrix());
  return EntropyValue::finite(cross - self);
}

double h_vn_cond(const DensityOperator& rho, std::size_t a_subsystems) {
  const DensityOperator sigma = rho.marginal_b(a_subsystems);
  return h_vn_rel(rho, sigma).finite_value();
}

EntropyValue h_min_rel(const DensityOperator& rho,
                       const DensityOperator& sigma) {
  if (!conditioning_support_ok(rho, sigma)) {
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  const Index da = detail::leading_dim(rho, sigma);
  const HermitianMatrix big = detail::identity_tensor(da, sigma.matrix());
  const Matrix k = psd_inv_sqrt(big).mat();
  const HermitianMatrix scaled =
      hermitian_unchecked(k * rho.matrix().mat() * k);
  const double top = eig_hermitian(scaled).max_eigenvalue();
  if (top <= 0) {
    // rho is (numerically) zero; the supremum is unbounded.
    return EntropyValue::pos_inf(DivergedReason::SupportViolation);
  }
  return EntropyValue::finite(-std::log2(top));
}

EntropyValue h_alpha_rel(const DensityOperator& rho,
                         const DensityOperator& sigma, double alpha) {
  if (!(alpha > 0) || alpha == 1.0) {
    throw InvalidInput(
        "h_alpha_rel: alpha must lie in (0,1) u (1,inf); use h_vn_rel at 1");
  }
  if (alpha > 1 && !conditioning_support_ok(rho, sigma)) {
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  const Index da = detail::leading_dim(rho, sigma);
  const HermitianMatrix rho_pow = matrix_function(
      rho.matrix(), [alpha](double t) { return std::pow(t, alpha); }, true);
  const HermitianMatrix sig_pow = matrix_function(
      sigma.matrix(),
      [alpha](double t) { return std::pow(t, 1.0 - alpha); }, true);
  const HermitianMatrix big = detail::identity_tensor(da, sig_pow);
  const double t = (rho_pow.mat() * big.mat()).trace().real();
  if (t <= 0) {
    // Fully orthogonal supports: the xi->0 limit of the trace vanishes.
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  return EntropyValue::finite(std::log2(t) / (1.0 - alpha));
}

EntropyValue h_inf_rel(const DensityOperator& rho,
                       const DensityOperator& sigma) {
  if (!conditioning_support_ok(rho, sigma)) {
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  const Index da = detail::leading_dim(rho, sigma);
  const Index db = sigma.dim();
  const Spectrum srho = eig_hermitian(rho.matrix());
  const Spectrum ssig = eig_hermitian(sigma.matrix());
  const double cut_rho = support_cutoff(srho);
  const double cut_sig = support_cutoff(ssig);

  // Weight of rho-eigenvector |i> on the mu_j eigenspace of 1 (x) sigma:
  // reshape |i> to a dA x dB matrix and hit it with conj(v_j).
  double max_ratio = 0.0;
  for (Index i = 0; i < srho.eigenvalues.size(); ++i) {
    const double nu = srho.eigenvalues(i);
    if (nu <= cut_rho) continue;
    Eigen::Map<const Matrix> psi(srho.eigenvectors.col(i).data(), db, da);
    // psi(b, a) = <a b|i> because the B index is fastest (column-major map).
    for (Index j = 0; j < ssig.eigenvalues.size(); ++j) {
      const double w = (psi.transpose() * ssig.eigenvectors.col(j).conjugate())
                           .squaredNorm();
      if (w <= 1e-12) continue;
      const double mu = ssig.eigenvalues(j);
      if (mu <= cut_sig) {
        // Overlap with the kernel beyond tolerance: the ratio diverges.
        if (nu * w > 1e-9 * rho.trace()) {
          return EntropyValue::neg_inf(DivergedReason::SupportViolation);
        }
        continue;
      }
      max_ratio = std::max(max_ratio, nu / mu);
    }
  }
  if (max_ratio <= 0) {
    return EntropyValue::pos_inf(DivergedReason::SupportViolation);
  }
  return EntropyValue::finite(-std::log2(max_ratio));
}

EntropyValue h_zero_rel(const DensityOperator& rho,
                        const DensityOperator& sigma) {
  const Index da = detail::leading_dim(rho, sigma);
  const HermitianMatrix proj = support_projector(rho.matrix());
  const HermitianMatrix big = detail::identity_tensor(da, sigma.matrix());
  const double t = (proj.mat() * big.mat()).trace().real();
  if (t <= 0) {
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  return EntropyValue::finite(std::log2(t));
}

EntropyValue d_max(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InvalidInput("d_max: dimension mismatch");
  }
  if (!support_contained(rho.matrix(), sigma.matrix())) {
    return EntropyValue::pos_inf(DivergedReason::SupportViolation);
  }
  const Matrix k = psd_inv_sqrt(sigma.matrix()).mat();
  const HermitianMatrix scaled =
      hermitian_unchecked(k * rho.matrix().mat() * k);
  const double top = eig_hermitian(scaled).max_eigenvalue();
  if (top <= 0) {
    return EntropyValue::neg_inf(DivergedReason::SupportViolation);
  }
  return EntropyValue::finite(std::log2(top));
}

UpsilonResult upsilon(const DensityOperator& rho,
                      const DensityOperator& sigma) {
  const EntropyValue h32 = h_alpha_rel(rho, sigma, 1.5);
  const EntropyValue h12 = h_alpha_rel(rho, sigma, 0.5);
  UpsilonResult r;
  r.term_three_half =
      h32.is_neg_inf()
          ? EntropyValue::pos_inf(DivergedReason::SupportViolation)
          : EntropyValue::finite(std::exp2(-0.5 * h32.finite_value()));
  r.term_half =
      h12.is_neg_inf()
          ? EntropyValue::finite(0.0)
          : EntropyValue::finite(std::exp2(0.5 * h12.finite_value()));
  if (r.term_three_half.is_pos_inf()) {
    r.value = EntropyValue::pos_inf(DivergedReason::SupportViolation);
  } else {
    r.value = EntropyValue::finite(r.term_three_half.finite_value() +
                                   r.term_half.finite_value() + 1.0);
  }
  return r;
}

}  // namespace qent
