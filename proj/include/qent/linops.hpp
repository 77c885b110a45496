#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "qent/errors.hpp"

namespace qent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Largest matrix dimension produced by tensor products.
inline constexpr Index kDimensionCap = 4096;

// Relative scale below which eigenvalues count as kernel.
inline constexpr double kSupportCutoffRel = 1e-10;

// Dense complex square matrix, Hermitian by construction: the stored entries
// are (M + M^dagger)/2 of whatever was passed in, so entries(i,j) ==
// conj(entries(j,i)) holds exactly.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m);

  static HermitianMatrix identity(Index dim);
  static HermitianMatrix zero(Index dim);
  static HermitianMatrix diagonal(const RealVector& d);

  Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }
  double trace() const { return mat_.trace().real(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;

 private:
  struct AlreadyHermitian {};
  HermitianMatrix(Matrix m, AlreadyHermitian) : mat_(std::move(m)) {}
  Matrix mat_;

  friend HermitianMatrix hermitian_unchecked(Matrix m);
};

// Wraps a matrix that is Hermitian by construction at the call site,
// skipping the symmetrization pass.
HermitianMatrix hermitian_unchecked(Matrix m);

// Eigendecomposition of a Hermitian matrix.
struct Spectrum {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, columns match eigenvalues

  double max_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
  double min_eigenvalue() const { return eigenvalues(0); }
};

Spectrum eig_hermitian(const HermitianMatrix& m);

// Absolute kernel threshold for a PSD spectrum: kSupportCutoffRel times the
// largest eigenvalue (0 for the zero matrix).
double support_cutoff(const Spectrum& s);

// U f(diag) U^dagger for PSD m. With on_support, eigenvalues at or below the
// support cutoff map to 0; otherwise f is applied to every (clamped)
// eigenvalue and a non-finite result is a domain error.
HermitianMatrix matrix_function(const HermitianMatrix& m,
                                const std::function<double(double)>& f,
                                bool on_support);

// Trace over the subsystems of `dims` not listed in `keep` (ascending
// subsystem indices, tensor factors ordered left to right).
HermitianMatrix partial_trace(const HermitianMatrix& m,
                              const std::vector<Index>& dims,
                              const std::vector<std::size_t>& keep);

// Kronecker product; throws when the result would exceed `cap`.
HermitianMatrix tensor_product(const HermitianMatrix& a,
                               const HermitianMatrix& b,
                               Index cap = kDimensionCap);

// {H}_+ : eigenvalues clamped at 0, eigenvectors kept.
HermitianMatrix positive_part(const HermitianMatrix& h);

// F(rho, sigma) = sum of singular values of sqrt(rho) sqrt(sigma).
// Inputs must be PSD within tolerance.
double fidelity(const HermitianMatrix& rho, const HermitianMatrix& sigma);

// C(rho, sigma) = sqrt(1 - F^2).
double purified_distance(const HermitianMatrix& rho,
                         const HermitianMatrix& sigma);

// True iff the smallest eigenvalue of a - b is >= -tol.
bool operator_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                  double tol);

// Projector onto the eigenspaces of PSD m with eigenvalue > cutoff.
HermitianMatrix support_projector(const HermitianMatrix& m, double cutoff);
HermitianMatrix support_projector(const HermitianMatrix& m);  // default cutoff

// Subsystem reordering: perm[p] is the old position of the subsystem that
// lands at new position p. dims describe the input ordering.
HermitianMatrix permute_subsystems(const HermitianMatrix& m,
                                   const std::vector<Index>& dims,
                                   const std::vector<std::size_t>& perm);

// PSD square root on support.
HermitianMatrix psd_sqrt(const HermitianMatrix& m);

// t^{-1/2} on support, kernel mapped to 0.
HermitianMatrix psd_inv_sqrt(const HermitianMatrix& m);

// Trace mass of `rho` outside the support of `sigma`, i.e.
// tr(rho (1 - Pi_sigma)). Both PSD, same dim.
double support_leak(const HermitianMatrix& rho, const HermitianMatrix& sigma);

// Decision rule used everywhere a xi->0 limit needs supp(rho) subseteq
// supp(sigma): leak at most 1e-9 relative to tr(rho).
bool support_contained(const HermitianMatrix& rho,
                       const HermitianMatrix& sigma);

namespace detail {
// Flat index strides for a subsystem dimension list (row-major).
std::vector<Index> subsystem_strides(const std::vector<Index>& dims);
Index product_dim(const std::vector<Index>& dims);
// Requires PSD within tolerance 1e-9 * max(trace, tiny); throws otherwise.
void require_psd(const Spectrum& s, const char* what);
}  // namespace detail

}  // namespace qent
