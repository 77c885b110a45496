#pragma once

#include <cstdint>
#include <vector>

#include "qent/linops.hpp"

namespace qent {

// PSD matrix with trace <= 1 and a subsystem dimension list.
class DensityOperator {
 public:
  DensityOperator(HermitianMatrix m, std::vector<Index> dims);

  Index dim() const { return matrix_.dim(); }
  const HermitianMatrix& matrix() const { return matrix_; }
  const std::vector<Index>& dims() const { return dims_; }
  bool normalized() const { return normalized_; }
  double trace() const { return matrix_.trace(); }

  // Same matrix, reinterpreted subsystem structure.
  DensityOperator with_dims(std::vector<Index> dims) const;

  // Partial trace keeping the listed subsystems.
  DensityOperator marginal(const std::vector<std::size_t>& keep) const;

  // Marginal on everything after the first a_subsystems factors (the
  // conditioning system when the leading factors are A).
  DensityOperator marginal_b(std::size_t a_subsystems = 1) const;

 private:
  HermitianMatrix matrix_;
  std::vector<Index> dims_;
  bool normalized_;
};

// Trace-preserving completely positive map as a Kraus-operator list.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<Matrix> kraus);

  Index din() const { return din_; }
  Index dout() const { return dout_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  // Action on a plain PSD matrix of dimension din.
  HermitianMatrix apply(const HermitianMatrix& m) const;

 private:
  std::vector<Matrix> kraus_;
  Index din_, dout_;
};

// V with V^dagger V = 1 on the input space.
class Isometry {
 public:
  explicit Isometry(Matrix v);

  Index din() const { return matrix_.cols(); }
  Index dout() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

// Ginibre construction G G^dagger / tr, exactly `rank` nonzero eigenvalues,
// deterministic per seed.
DensityOperator random_density(Index dim, Index rank, std::uint64_t seed);

// Random pure state vector (Haar direction), deterministic per seed.
Vector random_pure_vector(Index dim, std::uint64_t seed);

// Haar-like random isometry din -> dout via QR of a Ginibre matrix.
Isometry random_isometry(Index din, Index dout, std::uint64_t seed);

// Random channel din -> dout with k Kraus operators (random isometry into
// dout x k, sliced). Requires k * dout >= din.
QuantumChannel random_channel(Index din, Index dout, int k,
                              std::uint64_t seed);

// Apply a channel to one subsystem.
DensityOperator apply_channel(const DensityOperator& rho,
                              const QuantumChannel& e, std::size_t subsystem);

// Conjugate one subsystem by an isometry.
DensityOperator apply_isometry(const DensityOperator& rho, const Isometry& v,
                               std::size_t subsystem);

// Diagonal state diag(p) from a subnormalized probability vector.
DensityOperator embed_classical(const RealVector& p);

// n-fold tensor power, subsystems regrouped so that all copies of each
// original factor sit together: input dims (d_1,...,d_k) produce output dims
// (d_1 x n, ..., d_k x n). The interleaved Kronecker order
// (copy 1 of all factors, copy 2, ...) is mapped to this block order by the
// qudit permutation perm[s*n + c] = c*k + s.
DensityOperator tensor_power(const DensityOperator& rho, int n,
                             Index cap = kDimensionCap);

// (sqrt(rho) tensor 1)|gamma>: rank-1 state on the doubled space whose
// partial trace over the appended copy is rho.
DensityOperator purify(const DensityOperator& rho);

double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
double purified_distance(const DensityOperator& rho,
                         const DensityOperator& sigma);

}  // namespace qent
