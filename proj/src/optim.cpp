#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qent/entropy.hpp"

namespace qent {

namespace {

constexpr int kIterationCap = 10000;

// Orthonormal (Frobenius) basis of Hermitian d x d matrices: diagonal units,
// then real and imaginary off-diagonal pairs.
std::vector<Matrix> hermitian_basis(Index d) {
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(d * d));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < d; ++i) {
    Matrix b = Matrix::Zero(d, d);
    b(i, i) = 1.0;
    basis.push_back(std::move(b));
  }
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      Matrix re = Matrix::Zero(d, d);
      re(i, j) = inv_sqrt2;
      re(j, i) = inv_sqrt2;
      basis.push_back(std::move(re));
      Matrix im = Matrix::Zero(d, d);
      im(i, j) = Complex(0, inv_sqrt2);
      im(j, i) = Complex(0, -inv_sqrt2);
      basis.push_back(std::move(im));
    }
  }
  return basis;
}

// log det of a positive definite Hermitian matrix via Cholesky; returns
// false when the matrix is not (numerically) positive definite.
bool logdet_pd(const Matrix& m, double& out) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) return false;
  double acc = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    const double d = llt.matrixL()(i, i).real();
    if (!(d > 0)) return false;
    acc += std::log(d);
  }
  out = 2.0 * acc;
  return true;
}

Matrix kron_identity_left(Index da, const Matrix& x) {
  const Index db = x.rows();
  Matrix out = Matrix::Zero(da * db, da * db);
  for (Index a = 0; a < da; ++a) out.block(a * db, a * db, db, db) = x;
  return out;
}

// tr_A of a (dA*dB) x (dA*dB) matrix.
Matrix trace_out_a(const Matrix& m, Index da, Index db) {
  Matrix out = Matrix::Zero(db, db);
  for (Index a = 0; a < da; ++a) out += m.block(a * db, a * db, db, db);
  return out;
}

struct BarrierState {
  Matrix x;       // current Hermitian iterate, dB x dB
  double t;       // path parameter
  int newtons = 0;
};

// One centering stage: damped Newton on t*tr(X) - logdet(1(x)X - rho)
// - logdet(X) over Hermitian X.
void center(BarrierState& st, const Matrix& rho, Index da, Index db,
            const std::vector<Matrix>& basis) {
  const Index nb = static_cast<Index>(basis.size());
  for (int it = 0; it < 60; ++it) {
    if (st.newtons >= kIterationCap) {
      throw NumericalError(
          "h_min: barrier solver hit the iteration cap before reaching the "
          "requested duality gap");
    }
    ++st.newtons;
    const Matrix s = kron_identity_left(da, st.x) - rho;
    const Matrix s_inv = s.llt().solve(Matrix::Identity(s.rows(), s.cols()));
    const Matrix x_inv =
        st.x.llt().solve(Matrix::Identity(db, db));

    Eigen::VectorXd grad(nb);
    std::vector<Matrix> ts(static_cast<std::size_t>(nb));
    std::vector<Matrix> us(static_cast<std::size_t>(nb));
    const Matrix s_inv_partial = trace_out_a(s_inv, da, db);
    for (Index k = 0; k < nb; ++k) {
      const Matrix& bk = basis[static_cast<std::size_t>(k)];
      grad(k) = st.t * bk.trace().real() -
                (s_inv_partial * bk).trace().real() -
                (x_inv * bk).trace().real();
      ts[static_cast<std::size_t>(k)] = s_inv * kron_identity_left(da, bk);
      us[static_cast<std::size_t>(k)] = x_inv * bk;
    }
    Eigen::MatrixXd hess(nb, nb);
    for (Index k = 0; k < nb; ++k) {
      for (Index l = k; l < nb; ++l) {
        // tr(AB) as an elementwise sum; the full products would dominate
        // the stage cost at dB = 9.
        const auto& tk = ts[static_cast<std::size_t>(k)];
        const auto& tl = ts[static_cast<std::size_t>(l)];
        const auto& uk = us[static_cast<std::size_t>(k)];
        const auto& ul = us[static_cast<std::size_t>(l)];
        const double v =
            tk.cwiseProduct(tl.transpose()).sum().real() +
            uk.cwiseProduct(ul.transpose()).sum().real();
        hess(k, l) = v;
        hess(l, k) = v;
      }
    }
    const Eigen::VectorXd step = hess.ldlt().solve(-grad);
    const double decrement2 = -grad.dot(step);
    if (!(decrement2 > 1e-11)) return;

    Matrix dx = Matrix::Zero(db, db);
    for (Index k = 0; k < nb; ++k) {
      dx += step(k) * basis[static_cast<std::size_t>(k)];
    }

    auto objective = [&](const Matrix& x, double& val) {
      double ld_s, ld_x;
      if (!logdet_pd(kron_identity_left(da, x) - rho, ld_s)) return false;
      if (!logdet_pd(x, ld_x)) return false;
      val = st.t * x.trace().real() - ld_s - ld_x;
      return true;
    };
    double f0;
    objective(st.x, f0);
    double stepsize = 1.0;
    for (int bt = 0; bt < 60; ++bt) {
      double f1;
      if (objective(st.x + stepsize * dx, f1) &&
          f1 <= f0 + 0.25 * stepsize * grad.dot(step)) {
        break;
      }
      stepsize *= 0.5;
    }
    if (stepsize * std::sqrt(std::max(decrement2, 0.0)) < 1e-14) return;
    st.x += stepsize * dx;
  }
}

}  // namespace

HminResult h_min(const DensityOperator& rho, std::size_t a_subsystems) {
  if (!rho.normalized()) {
    throw InvalidInput("h_min: state must be normalized");
  }
  const Index da = detail::a_dim(rho, a_subsystems);
  const Index db = rho.dim() / da;
  const Matrix& r = rho.matrix().mat();
  const std::vector<Matrix> basis = hermitian_basis(db);

  BarrierState st;
  const double top = eig_hermitian(rho.matrix()).max_eigenvalue();
  st.x = (top + 1.0) * Matrix::Identity(db, db);
  const double nu = static_cast<double>(da * db + db);
  st.t = std::max(1.0, nu / st.x.trace().real());

  double gap = nu / st.t;
  for (int stage = 0; stage < 80; ++stage) {
    center(st, r, da, db, basis);
    gap = nu / st.t;
    const double tr = st.x.trace().real();
    if (gap <= 1e-10 * std::max(tr, 1e-6)) break;
    st.t *= 20.0;
  }
  const double tr = st.x.trace().real();
  if (gap > 1e-7 * std::max(tr, 1e-6)) {
    std::ostringstream oss;
    oss << "h_min: solver stopped with duality gap " << gap
        << "; best bound -log2 tr X = " << -std::log2(tr);
    throw NumericalError(oss.str());
  }
  HminResult out{-std::log2(tr), tr,
                 DensityOperator(hermitian_unchecked(st.x / tr), {db}), gap,
                 st.newtons};
  return out;
}

double h_max(const DensityOperator& rho, std::size_t a_subsystems) {
  if (!rho.normalized()) {
    throw InvalidInput("h_max: state must be normalized");
  }
  const DensityOperator pure = purify(rho);
  // Keep the leading A factors and the appended purifying system.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < a_subsystems; ++k) keep.push_back(k);
  keep.push_back(pure.dims().size() - 1);
  const DensityOperator tau_ac = pure.marginal(keep);
  return -h_min(tau_ac, a_subsystems).value;
}

namespace {

// Projection of a Hermitian matrix onto {tau >= 0, tr tau = 1}: spectral
// decomposition plus Euclidean simplex projection of the eigenvalues.
Matrix project_to_states(const Matrix& m) {
  const Spectrum s = eig_hermitian(hermitian_unchecked((m + m.adjoint()) / 2));
  RealVector lam = s.eigenvalues;
  std::vector<double> sorted(lam.data(), lam.data() + lam.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumsum = 0.0, theta = 0.0;
  int k = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumsum += sorted[i];
    const double t = (cumsum - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - t > 0) {
      theta = t;
      k = static_cast<int>(i + 1);
    }
  }
  (void)k;
  RealVector proj = (lam.array() - theta).cwiseMax(0.0);
  return s.eigenvectors * proj.cast<Complex>().asDiagonal() *
         s.eigenvectors.adjoint();
}

struct FidelityEval {
  double value;
  Matrix gradient;  // dB x dB Hermitian
};

// F(rho, 1 (x) tau) and its gradient (1/2) tr_A[sqrt(rho) M^{-1/2}
// sqrt(rho)] with M = sqrt(rho) (1 (x) tau) sqrt(rho).
FidelityEval fidelity_and_grad(const Matrix& sq_rho, const Matrix& tau,
                               Index da, Index db) {
  const Matrix m = sq_rho * kron_identity_left(da, tau) * sq_rho;
  const Spectrum s = eig_hermitian(hermitian_unchecked((m + m.adjoint()) / 2));
  const double cut = support_cutoff(s);
  double f = 0.0;
  RealVector inv_sqrt(s.eigenvalues.size());
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double lam = std::max(s.eigenvalues(i), 0.0);
    f += std::sqrt(lam);
    inv_sqrt(i) = lam > cut ? 1.0 / std::sqrt(lam) : 0.0;
  }
  const Matrix m_inv_sqrt = s.eigenvectors *
                            inv_sqrt.cast<Complex>().asDiagonal() *
                            s.eigenvectors.adjoint();
  const Matrix inner = sq_rho * m_inv_sqrt * sq_rho;
  return FidelityEval{f, 0.5 * trace_out_a(inner, da, db)};
}

}  // namespace

HmaxDirectResult h_max_direct(const DensityOperator& rho,
                              std::size_t a_subsystems) {
  if (!rho.normalized()) {
    throw InvalidInput("h_max_direct: state must be normalized");
  }
  const Index da = detail::a_dim(rho, a_subsystems);
  const Index db = rho.dim() / da;
  const Matrix sq_rho = psd_sqrt(rho.matrix()).mat();

  Matrix tau = Matrix::Identity(db, db) / static_cast<double>(db);
  FidelityEval cur = fidelity_and_grad(sq_rho, tau, da, db);
  double step = 1.0;
  double gap = std::numeric_limits<double>::infinity();
  int iters = 0;
  const int cap = 200000;
  while (iters < cap) {
    ++iters;
    // Linear-maximization certificate over the state set: for concave F,
    // F* - F <= lambda_max(grad) - <grad, tau>.
    const Spectrum gs = eig_hermitian(
        hermitian_unchecked((cur.gradient + cur.gradient.adjoint()) / 2));
    gap = gs.max_eigenvalue() - (cur.gradient * tau).trace().real();
    if (gap <= 1e-9) break;

    bool advanced = false;
    for (int bt = 0; bt < 50; ++bt) {
      const Matrix cand = project_to_states(tau + step * cur.gradient);
      const FidelityEval next = fidelity_and_grad(sq_rho, cand, da, db);
      if (next.value > cur.value + 1e-16) {
        tau = cand;
        cur = next;
        step *= 1.3;
        advanced = true;
        break;
      }
      step *= 0.5;
    }
    if (!advanced) break;
  }
  if (gap > 1e-6) {
    std::ostringstream oss;
    oss << "h_max_direct: ascent stalled with optimality gap " << gap;
    throw NumericalError(oss.str());
  }
  const double f = cur.value;
  return HmaxDirectResult{2.0 * std::log2(f),
                          DensityOperator(HermitianMatrix(tau), {db}), gap,
                          iters};
}

}  // namespace qent
