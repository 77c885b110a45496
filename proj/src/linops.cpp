#include "qent/linops.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace qent {

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw InvalidInput("HermitianMatrix requires a nonempty square matrix");
  }
  mat_ = (m + m.adjoint()) / 2.0;
}

HermitianMatrix hermitian_unchecked(Matrix m) {
  return HermitianMatrix(std::move(m), HermitianMatrix::AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::identity(Index dim) {
  return hermitian_unchecked(Matrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(Index dim) {
  return hermitian_unchecked(Matrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  return hermitian_unchecked(d.cast<Complex>().asDiagonal().toDenseMatrix());
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  return hermitian_unchecked(mat_ + o.mat_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  return hermitian_unchecked(mat_ - o.mat_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  return hermitian_unchecked(mat_ * s);
}

Spectrum eig_hermitian(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat());
  if (es.info() != Eigen::Success) {
    std::ostringstream oss;
    oss << "Hermitian eigensolver did not converge (dim " << m.dim() << ")";
    throw NumericalError(oss.str());
  }
  return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

double support_cutoff(const Spectrum& s) {
  const double top = s.max_eigenvalue();
  return top > 0 ? kSupportCutoffRel * top : 0.0;
}

namespace detail {

std::vector<Index> subsystem_strides(const std::vector<Index>& dims) {
  std::vector<Index> strides(dims.size());
  Index acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    strides[k] = acc;
    acc *= dims[k];
  }
  return strides;
}

Index product_dim(const std::vector<Index>& dims) {
  Index acc = 1;
  for (Index d : dims) {
    if (d < 1) throw InvalidInput("subsystem dimensions must be positive");
    acc *= d;
  }
  return acc;
}

void require_psd(const Spectrum& s, const char* what) {
  const double scale = std::max(s.eigenvalues.sum(), 1e-300);
  if (s.min_eigenvalue() < -1e-9 * scale) {
    std::ostringstream oss;
    oss << what << ": not positive semidefinite (min eigenvalue "
        << s.min_eigenvalue() << ", trace " << s.eigenvalues.sum() << ")";
    throw InvalidInput(oss.str());
  }
}

}  // namespace detail

HermitianMatrix matrix_function(const HermitianMatrix& m,
                                const std::function<double(double)>& f,
                                bool on_support) {
  const Spectrum s = eig_hermitian(m);
  detail::require_psd(s, "matrix_function");
  const double cut = support_cutoff(s);
  RealVector mapped(s.eigenvalues.size());
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double lam = std::max(s.eigenvalues(i), 0.0);
    if (on_support && lam <= cut) {
      mapped(i) = 0.0;
      continue;
    }
    const double v = f(lam);
    if (!std::isfinite(v)) {
      std::ostringstream oss;
      oss << "matrix_function: f undefined at eigenvalue " << lam;
      throw InvalidInput(oss.str());
    }
    mapped(i) = v;
  }
  return hermitian_unchecked(s.eigenvectors *
                             mapped.cast<Complex>().asDiagonal() *
                             s.eigenvectors.adjoint());
}

HermitianMatrix partial_trace(const HermitianMatrix& m,
                              const std::vector<Index>& dims,
                              const std::vector<std::size_t>& keep) {
  if (detail::product_dim(dims) != m.dim()) {
    throw InvalidInput("partial_trace: dims do not factor the matrix");
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw InvalidInput("partial_trace: bad keep index");
    kept[k] = true;
  }
  const std::vector<Index> strides = detail::subsystem_strides(dims);

  std::vector<Index> keep_dims, keep_strides, tr_dims, tr_strides;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    (kept[k] ? keep_dims : tr_dims).push_back(dims[k]);
    (kept[k] ? keep_strides : tr_strides).push_back(strides[k]);
  }
  const Index dk = detail::product_dim(keep_dims);
  const Index dt = detail::product_dim(tr_dims);

  // Flat offsets of every kept / traced multi-index.
  auto offsets = [](const std::vector<Index>& ds, const std::vector<Index>& ss,
                    Index total) {
    std::vector<Index> off(static_cast<std::size_t>(total), 0);
    Index block = 1;
    for (std::size_t k = ds.size(); k-- > 0;) {
      for (Index i = 0; i < total; ++i) {
        off[static_cast<std::size_t>(i)] += ((i / block) % ds[k]) * ss[k];
      }
      block *= ds[k];
    }
    return off;
  };
  const std::vector<Index> koff = offsets(keep_dims, keep_strides, dk);
  const std::vector<Index> toff = offsets(tr_dims, tr_strides, dt);

  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& in = m.mat();
  for (Index r = 0; r < dk; ++r) {
    for (Index c = 0; c < dk; ++c) {
      Complex acc = 0;
      for (Index t = 0; t < dt; ++t) {
        acc += in(koff[static_cast<std::size_t>(r)] +
                      toff[static_cast<std::size_t>(t)],
                  koff[static_cast<std::size_t>(c)] +
                      toff[static_cast<std::size_t>(t)]);
      }
      out(r, c) = acc;
    }
  }
  return hermitian_unchecked(std::move(out));
}

HermitianMatrix tensor_product(const HermitianMatrix& a,
                               const HermitianMatrix& b, Index cap) {
  const Index d = a.dim() * b.dim();
  if (d > cap) {
    std::ostringstream oss;
    oss << "tensor_product: result dimension " << d << " exceeds cap " << cap;
    throw InvalidInput(oss.str());
  }
  Matrix out(d, d);
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < a.dim(); ++j) {
      out.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) =
          a.mat()(i, j) * b.mat();
    }
  }
  return hermitian_unchecked(std::move(out));
}

HermitianMatrix positive_part(const HermitianMatrix& h) {
  const Spectrum s = eig_hermitian(h);
  RealVector clamped = s.eigenvalues.cwiseMax(0.0);
  return hermitian_unchecked(s.eigenvectors *
                             clamped.cast<Complex>().asDiagonal() *
                             s.eigenvectors.adjoint());
}

double fidelity(const HermitianMatrix& rho, const HermitianMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InvalidInput("fidelity: dimension mismatch");
  }
  const Matrix prod = psd_sqrt(rho).mat() * psd_sqrt(sigma).mat();
  Eigen::BDCSVD<Matrix> svd(prod);
  return svd.singularValues().sum();
}

double purified_distance(const HermitianMatrix& rho,
                         const HermitianMatrix& sigma) {
  const double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

bool operator_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                  double tol) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("operator_geq: dimension mismatch");
  }
  const Spectrum s = eig_hermitian(a - b);
  return s.min_eigenvalue() >= -tol;
}

HermitianMatrix support_projector(const HermitianMatrix& m, double cutoff) {
  const Spectrum s = eig_hermitian(m);
  detail::require_psd(s, "support_projector");
  Matrix acc = Matrix::Zero(m.dim(), m.dim());
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues(i) > cutoff) {
      acc += s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint();
    }
  }
  return hermitian_unchecked(std::move(acc));
}

HermitianMatrix support_projector(const HermitianMatrix& m) {
  const Spectrum s = eig_hermitian(m);
  detail::require_psd(s, "support_projector");
  const double cut = support_cutoff(s);
  Matrix acc = Matrix::Zero(m.dim(), m.dim());
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues(i) > cut) {
      acc += s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint();
    }
  }
  return hermitian_unchecked(std::move(acc));
}

HermitianMatrix permute_subsystems(const HermitianMatrix& m,
                                   const std::vector<Index>& dims,
                                   const std::vector<std::size_t>& perm) {
  const Index d = detail::product_dim(dims);
  if (d != m.dim() || perm.size() != dims.size()) {
    throw InvalidInput("permute_subsystems: shape mismatch");
  }
  std::vector<Index> new_dims(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) new_dims[p] = dims[perm[p]];
  const std::vector<Index> old_strides = detail::subsystem_strides(dims);
  const std::vector<Index> new_strides = detail::subsystem_strides(new_dims);

  std::vector<Index> map(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) {
    Index old = 0;
    for (std::size_t p = 0; p < perm.size(); ++p) {
      const Index digit = (i / new_strides[p]) % new_dims[p];
      old += digit * old_strides[perm[p]];
    }
    map[static_cast<std::size_t>(i)] = old;
  }
  Matrix out(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      out(r, c) = m.mat()(map[static_cast<std::size_t>(r)],
                          map[static_cast<std::size_t>(c)]);
    }
  }
  return hermitian_unchecked(std::move(out));
}

HermitianMatrix psd_sqrt(const HermitianMatrix& m) {
  return matrix_function(m, [](double t) { return std::sqrt(t); }, true);
}

HermitianMatrix psd_inv_sqrt(const HermitianMatrix& m) {
  return matrix_function(m, [](double t) { return 1.0 / std::sqrt(t); }, true);
}

double support_leak(const HermitianMatrix& rho, const HermitianMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InvalidInput("support_leak: dimension mismatch");
  }
  const HermitianMatrix pi = support_projector(sigma);
  const Matrix rest = rho.mat() - pi.mat() * rho.mat() * pi.mat();
  return rest.trace().real();
}

bool support_contained(const HermitianMatrix& rho,
                       const HermitianMatrix& sigma) {
  const double leak = support_leak(rho, sigma);
  return leak <= 1e-9 * std::max(rho.trace(), 1e-300);
}

}  // namespace qent
