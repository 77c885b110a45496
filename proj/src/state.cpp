#include "qent/state.hpp"

#include <Eigen/QR>
#include <cmath>
#include <random>
#include <sstream>

namespace qent {

namespace {

Matrix ginibre(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = nd(rng);
      const double im = nd(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

// QR with the R diagonal rotated positive, so the distribution is Haar and
// the result deterministic.
Matrix haar_isometry(Index din, Index dout, std::uint64_t seed) {
  if (dout < din) {
    throw InvalidInput("isometry needs dout >= din");
  }
  Matrix g = ginibre(dout, din, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dout, din);
  Matrix r = q.adjoint() * g;
  for (Index j = 0; j < din; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

}  // namespace

DensityOperator::DensityOperator(HermitianMatrix m, std::vector<Index> dims)
    : matrix_(std::move(m)), dims_(std::move(dims)) {
  if (detail::product_dim(dims_) != matrix_.dim()) {
    throw InvalidInput("DensityOperator: dims do not factor the matrix");
  }
  const Spectrum s = eig_hermitian(matrix_);
  detail::require_psd(s, "DensityOperator");
  const double tr = matrix_.trace();
  if (tr > 1.0 + 1e-9) {
    std::ostringstream oss;
    oss << "DensityOperator: trace " << tr << " exceeds 1";
    throw InvalidInput(oss.str());
  }
  normalized_ = std::abs(tr - 1.0) <= 1e-9;
}

DensityOperator DensityOperator::with_dims(std::vector<Index> dims) const {
  return DensityOperator(matrix_, std::move(dims));
}

DensityOperator DensityOperator::marginal(
    const std::vector<std::size_t>& keep) const {
  HermitianMatrix reduced = partial_trace(matrix_, dims_, keep);
  std::vector<Index> kept;
  for (std::size_t k : keep) kept.push_back(dims_[k]);
  return DensityOperator(std::move(reduced), std::move(kept));
}

DensityOperator DensityOperator::marginal_b(std::size_t a_subsystems) const {
  if (a_subsystems >= dims_.size()) {
    throw InvalidInput("marginal_b: no subsystems left to condition on");
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = a_subsystems; k < dims_.size(); ++k) keep.push_back(k);
  return marginal(keep);
}

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw InvalidInput("QuantumChannel needs at least one Kraus operator");
  }
  dout_ = kraus_.front().rows();
  din_ = kraus_.front().cols();
  Matrix acc = Matrix::Zero(din_, din_);
  for (const Matrix& k : kraus_) {
    if (k.rows() != dout_ || k.cols() != din_) {
      throw InvalidInput("QuantumChannel: inconsistent Kraus shapes");
    }
    acc += k.adjoint() * k;
  }
  const double dev = (acc - Matrix::Identity(din_, din_)).cwiseAbs().maxCoeff();
  if (dev > 1e-9) {
    std::ostringstream oss;
    oss << "QuantumChannel: not trace preserving (deviation " << dev << ")";
    throw InvalidInput(oss.str());
  }
}

HermitianMatrix QuantumChannel::apply(const HermitianMatrix& m) const {
  if (m.dim() != din_) {
    throw InvalidInput("QuantumChannel::apply: dimension mismatch");
  }
  Matrix out = Matrix::Zero(dout_, dout_);
  for (const Matrix& k : kraus_) out += k * m.mat() * k.adjoint();
  return hermitian_unchecked(std::move(out));
}

Isometry::Isometry(Matrix v) : matrix_(std::move(v)) {
  if (matrix_.rows() < matrix_.cols() || matrix_.cols() < 1) {
    throw InvalidInput("Isometry: requires dout >= din >= 1");
  }
  const Matrix gram = matrix_.adjoint() * matrix_;
  const double dev =
      (gram - Matrix::Identity(matrix_.cols(), matrix_.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (dev > 1e-9) {
    std::ostringstream oss;
    oss << "Isometry: V^dagger V deviates from identity by " << dev;
    throw InvalidInput(oss.str());
  }
}

DensityOperator random_density(Index dim, Index rank, std::uint64_t seed) {
  if (rank < 1 || rank > dim) {
    throw InvalidInput("random_density: need 1 <= rank <= dim");
  }
  const Matrix g = ginibre(dim, rank, seed);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(hermitian_unchecked(std::move(m)), {dim});
}

Vector random_pure_vector(Index dim, std::uint64_t seed) {
  Matrix g = ginibre(dim, 1, seed);
  Vector v = g.col(0);
  return v / v.norm();
}

Isometry random_isometry(Index din, Index dout, std::uint64_t seed) {
  return Isometry(haar_isometry(din, dout, seed));
}

QuantumChannel random_channel(Index din, Index dout, int k,
                              std::uint64_t seed) {
  if (k < 1) throw InvalidInput("random_channel: k >= 1 required");
  if (static_cast<Index>(k) * dout < din) {
    throw InvalidInput("random_channel: k * dout must cover din");
  }
  const Matrix v = haar_isometry(din, static_cast<Index>(k) * dout, seed);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    kraus.push_back(v.middleRows(static_cast<Index>(j) * dout, dout));
  }
  return QuantumChannel(std::move(kraus));
}

namespace {

// Embeds op acting on subsystem s as 1 (x) op (x) 1.
Matrix embed_on_subsystem(const Matrix& op, const std::vector<Index>& dims,
                          std::size_t s) {
  Index left = 1, right = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k < s) left *= dims[k];
    if (k > s) right *= dims[k];
  }
  const Index rows = op.rows(), cols = op.cols();
  Matrix out = Matrix::Zero(left * rows * right, left * cols * right);
  for (Index l = 0; l < left; ++l) {
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) {
        out.block((l * rows + i) * right, (l * cols + j) * right, right,
                  right) += op(i, j) * Matrix::Identity(right, right);
      }
    }
  }
  return out;
}

}  // namespace

DensityOperator apply_channel(const DensityOperator& rho,
                              const QuantumChannel& e, std::size_t subsystem) {
  if (subsystem >= rho.dims().size() ||
      rho.dims()[subsystem] != e.din()) {
    throw InvalidInput("apply_channel: subsystem dimension mismatch");
  }
  std::vector<Index> new_dims = rho.dims();
  new_dims[subsystem] = e.dout();
  const Index dnew = detail::product_dim(new_dims);
  Matrix out = Matrix::Zero(dnew, dnew);
  for (const Matrix& k : e.kraus()) {
    const Matrix full = embed_on_subsystem(k, rho.dims(), subsystem);
    out += full * rho.matrix().mat() * full.adjoint();
  }
  return DensityOperator(hermitian_unchecked(std::move(out)),
                         std::move(new_dims));
}

DensityOperator apply_isometry(const DensityOperator& rho, const Isometry& v,
                               std::size_t subsystem) {
  if (subsystem >= rho.dims().size() ||
      rho.dims()[subsystem] != v.din()) {
    throw InvalidInput("apply_isometry: subsystem dimension mismatch");
  }
  std::vector<Index> new_dims = rho.dims();
  new_dims[subsystem] = v.dout();
  const Matrix full = embed_on_subsystem(v.matrix(), rho.dims(), subsystem);
  Matrix out = full * rho.matrix().mat() * full.adjoint();
  return DensityOperator(hermitian_unchecked(std::move(out)),
                         std::move(new_dims));
}

DensityOperator embed_classical(const RealVector& p) {
  if (p.size() < 1) throw InvalidInput("embed_classical: empty vector");
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0) {
      throw InvalidInput("embed_classical: negative probability entry");
    }
  }
  return DensityOperator(HermitianMatrix::diagonal(p), {p.size()});
}

DensityOperator tensor_power(const DensityOperator& rho, int n, Index cap) {
  if (n < 1) throw InvalidInput("tensor_power: n >= 1 required");
  double projected = 1.0;
  for (int c = 0; c < n; ++c) projected *= static_cast<double>(rho.dim());
  if (projected > static_cast<double>(cap)) {
    std::ostringstream oss;
    oss << "tensor_power: dimension " << projected << " exceeds cap " << cap;
    throw InvalidInput(oss.str());
  }
  if (n == 1) return rho;

  HermitianMatrix acc = rho.matrix();
  std::vector<Index> interleaved = rho.dims();
  for (int c = 1; c < n; ++c) {
    acc = tensor_product(acc, rho.matrix(), cap);
    for (Index d : rho.dims()) interleaved.push_back(d);
  }
  const std::size_t k = rho.dims().size();
  std::vector<std::size_t> perm(k * static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
      perm[s * static_cast<std::size_t>(n) + c] = c * k + s;
    }
  }
  HermitianMatrix blocked = permute_subsystems(acc, interleaved, perm);
  std::vector<Index> new_dims;
  for (std::size_t s = 0; s < k; ++s) {
    for (int c = 0; c < n; ++c) new_dims.push_back(rho.dims()[s]);
  }
  return DensityOperator(std::move(blocked), std::move(new_dims));
}

DensityOperator purify(const DensityOperator& rho) {
  const Index d = rho.dim();
  const Matrix s = psd_sqrt(rho.matrix()).mat();
  Vector phi(d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) phi(i * d + j) = s(i, j);
  }
  Matrix m = phi * phi.adjoint();
  std::vector<Index> dims = rho.dims();
  dims.push_back(d);
  return DensityOperator(hermitian_unchecked(std::move(m)), std::move(dims));
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

double purified_distance(const DensityOperator& rho,
                         const DensityOperator& sigma) {
  return purified_distance(rho.matrix(), sigma.matrix());
}

}  // namespace qent
