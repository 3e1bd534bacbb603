#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "kg/phonon.hpp"

namespace kg {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Hessians of a quartic normal form with respect to its action variables.
///
/// Odd N: hessian_a is over (a_1, ..., a_{(N-1)/2}, a_N) and hessian_b over
/// (b_1, ..., b_{(N-1)/2}); det_full = det_a * det_b is the determinant of
/// the full N x N action Hessian. closed_form_det is the product formula
/// (3 beta / 2N)^N (2N - 1) / 2^N prod_{j=1}^{N} lambda_j^2.
///
/// Fixed endpoints: hessian_a is over (I_1, ..., I_n), hessian_b is empty
/// and integer_template holds F_n with its exact determinant.
struct KamReport {
  Eigen::MatrixXd hessian_a;
  Eigen::MatrixXd hessian_b;
  double det_a = 0.0;
  double det_b = 1.0;
  double det_full = 0.0;
  std::optional<double> closed_form_det;
  /// Ratio of the a-Hessian prefactor implied by the normal form (3 beta/N)
  /// to the one printed next to the entry template (3 beta / 2N).
  std::optional<double> prefactor_ratio;
  std::optional<IntMatrix> integer_template;
  std::optional<BigInt> template_det;
  bool nondegenerate = false;
};

/// Relative tolerance for calling a determinant nonzero: |det| must exceed
/// this times the product of the row norms.
inline constexpr double kNondegeneracyTolerance = 1e-12;

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt exact_determinant(const IntMatrix& m);

/// Integer template F_n of the fixed-endpoint Hessian: 3 on the diagonal,
/// 6 on the anti-diagonal k + l = n + 1, 4 elsewhere; for odd n the middle
/// diagonal entry is 4.
IntMatrix fixed_endpoint_template(int n);

/// Analytic Hessians of the odd-N normal form.
KamReport kam_hessians_odd(const FrequencySpectrum& w, double beta);

/// Analytic Hessian of the fixed-endpoint normal form
/// beta / (2 (2n+2)) * Lambda (3/2) F_n Lambda with Lambda = diag(1/omega_k).
KamReport kam_hessian_dirichlet(const FrequencySpectrum& w, double beta, int n);

}  // namespace kg
