#pragma once

#include <functional>

#include "qent/entropy.hpp"
#include "qent/state.hpp"

namespace qent {

// Behaviour of xi * f(lambda/xi) as xi -> 0+ for lambda > 0; this fixes the
// kernel contributions of s_f analytically instead of by extrapolation.
enum class KernelLimit { Zero, PosInfinity, NegInfinity };

enum class ConvexityClass { OperatorConvex, OperatorConcave, Convex, General };

// Continuous f: [0,inf) -> R with f(0) = 0, tagged with its kernel limit and
// convexity class.
class ScalarFunction {
 public:
  ScalarFunction(std::function<double(double)> eval, KernelLimit limit,
                 ConvexityClass convexity);

  double operator()(double t) const { return eval_(t); }
  KernelLimit kernel_limit() const { return limit_; }
  ConvexityClass convexity() const { return convexity_; }

 private:
  std::function<double(double)> eval_;
  KernelLimit limit_;
  ConvexityClass convexity_;
};

// t^alpha for alpha > 0, with the matching kernel limit
// (0 for alpha < 1, +inf for alpha > 1) and operator-convexity tag on (1,2].
ScalarFunction power_function(double alpha);

// t log2 t (0 at 0); operator convex, kernel limit +inf.
ScalarFunction t_log2_t();

// -t log2 t; operator concave, kernel limit -inf.
ScalarFunction minus_t_log2_t();

// cosh(beta ln t) - 1, continued by 0 at t = 0 when beta >= 1 is not
// required; convex on (0,inf) for beta >= 1.
ScalarFunction cosh_log(double beta);

// S_f(A, B) as the spectral double sum
//   sum_{i,j} mu_j f(lambda_i / mu_j) |<i|j>|^2
// with the tagged kernel rule for mu_j = 0, lambda_i > 0.
EntropyValue s_f(const HermitianMatrix& a, const HermitianMatrix& b,
                 const ScalarFunction& f);

// <phi| f(X) |phi> >= f(<phi|X|phi>) - tol for convex f; phi must be
// normalized and the spectrum of X inside f's domain is the caller's
// responsibility.
bool check_jensen(const ScalarFunction& f, const HermitianMatrix& x,
                  const Vector& phi, double tol = 1e-9);

// v^dagger f(C) v >= f(v^dagger C v) - tol * 1 for operator convex f and an
// isometry v.
bool check_operator_jensen(const ScalarFunction& f, const Isometry& v,
                           const HermitianMatrix& c, double tol = 1e-8);

// S_f(A, B) >= S_f(E(A), E(B)) - tol, with +inf dominating everything.
bool check_monotonicity(const HermitianMatrix& a, const HermitianMatrix& b,
                        const QuantumChannel& e, const ScalarFunction& f,
                        double tol = 1e-8);

}  // namespace qent
