#pragma once

#include <optional>
#include <string>

#include "qent/state.hpp"

namespace qent {

enum class DivergedReason { SupportViolation };

// Extended real in R u {-inf, +inf}. Infinities are carried symbolically;
// formulas consuming them short-circuit to the analytically forced value
// instead of doing IEEE-infinity arithmetic.
class EntropyValue {
 public:
  static EntropyValue finite(double v);
  static EntropyValue neg_inf(
      DivergedReason r = DivergedReason::SupportViolation);
  static EntropyValue pos_inf(
      DivergedReason r = DivergedReason::SupportViolation);

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  // Throws unless finite.
  double finite_value() const;

  // IEEE representation (+-inf for the divergent cases); display only.
  double as_real() const;

  std::optional<DivergedReason> diverged_reason() const { return reason_; }

  std::string str() const;

 private:
  enum class Kind { Finite, NegInf, PosInf };
  Kind kind_ = Kind::Finite;
  double value_ = 0.0;
  std::optional<DivergedReason> reason_;
};

// All conditioning below follows the trailing-B convention: for the relative
// quantities sigma lives on the trailing tensor factor of rho, whose
// dimension is sigma.dim(); for the optimized quantities the first
// a_subsystems entries of rho.dims() form A and the rest form B.

// tr(rho (1 (x) log2 sigma - log2 rho)) with logs on support; -inf when
// supp(rho_B) is not inside supp(sigma).
EntropyValue h_vn_rel(const DensityOperator& rho,
                      const DensityOperator& sigma);

// Conditional von Neumann entropy H(A|B) = H(A|B)_{rho|rho_B}.
double h_vn_cond(const DensityOperator& rho, std::size_t a_subsystems = 1);

// -log2 of the largest eigenvalue of (1 (x) sigma)^{-1/2} rho
// (1 (x) sigma)^{-1/2} on the support of 1 (x) sigma.
EntropyValue h_min_rel(const DensityOperator& rho,
                       const DensityOperator& sigma);

struct HminResult {
  double value;                // -log2 tr X*
  double trace_x;              // optimal SDP objective
  DensityOperator sigma_star;  // X*/tr X*
  double gap;                  // certified duality-gap bound at exit
  int newton_steps;
};

// H_min(A|B) via the trace-minimization program
//   minimize tr X  s.t.  1_A (x) X >= rho, X >= 0.
HminResult h_min(const DensityOperator& rho, std::size_t a_subsystems = 1);

// Dual route: purify over C and return -H_min(A|C).
double h_max(const DensityOperator& rho, std::size_t a_subsystems = 1);

struct HmaxDirectResult {
  double value;              // log2 F^2 at the optimizer
  DensityOperator tau_star;  // maximizing conditioning state
  double gap;                // certified suboptimality bound on F at exit
  int iterations;
};

// Direct route: maximize log2 F^2(rho, 1 (x) tau) over states tau by
// projected gradient ascent on the concave fidelity.
HmaxDirectResult h_max_direct(const DensityOperator& rho,
                              std::size_t a_subsystems = 1);

// (1/(1-alpha)) log2 tr(rho^alpha (1 (x) sigma)^{1-alpha}), powers on
// support. alpha in (0,1) u (1,inf); for alpha > 1 the value is -inf when
// supp(rho_B) is not inside supp(sigma).
EntropyValue h_alpha_rel(const DensityOperator& rho,
                         const DensityOperator& sigma, double alpha);

// alpha -> inf limit via the eigenpair ratio formula.
EntropyValue h_inf_rel(const DensityOperator& rho,
                       const DensityOperator& sigma);

// alpha -> 0 limit: log2 tr(Pi_supp(rho) (1 (x) sigma)).
EntropyValue h_zero_rel(const DensityOperator& rho,
                        const DensityOperator& sigma);

// Max relative entropy: least lambda with rho <= 2^lambda sigma;
// +inf on support violation. Equals -h_min_rel with trivial A.
EntropyValue d_max(const DensityOperator& rho, const DensityOperator& sigma);

struct UpsilonResult {
  EntropyValue value;            // term_three_half + term_half + 1
  EntropyValue term_three_half;  // 2^{-H_{3/2}/2}
  EntropyValue term_half;        // 2^{+H_{1/2}/2}
};

// Convergence parameter 2^{-H_{3/2}/2} + 2^{H_{1/2}/2} + 1 (always >= 3 for
// normalized inputs).
UpsilonResult upsilon(const DensityOperator& rho,
                      const DensityOperator& sigma);

namespace detail {
// Splits rho.dim() as dA * dB with dB = sigma.dim(); validates divisibility.
Index leading_dim(const DensityOperator& rho, const DensityOperator& sigma);
// 1_{dA} (x) sigma.
HermitianMatrix identity_tensor(Index da, const HermitianMatrix& sigma);
// Product of the first a_subsystems dims.
Index a_dim(const DensityOperator& rho, std::size_t a_subsystems);
}  // namespace detail

}  // namespace qent
