#pragma once

#include <optional>
#include <string>

#include "kg/laurent_series.hpp"

namespace kg {

/// Default linear coefficient shift of the pole series: u solves
/// u'' = -(a + shift) u + 2 u^3. Shift 4 yields u = 1/s + (4+a)/6 s + ...
inline constexpr int kPoleSeriesShift = 4;

/// Laurent series at the pole s = t - t_1 of u'' = -(a + shift) u + 2u^3,
/// u = 1/s + u_1 s + g3 s^3 + u_5 s^5 + ..., known below s^order. The
/// coefficient at the resonant exponent 3 is the free symbol g3.
LaurentSeries u_series(int order, int shift = kPoleSeriesShift);

struct ObstructionReport {
  bool zero = true;
  /// Highest exponent checked (inclusive).
  int checked_through = 0;
  /// First exponent with a nonzero residual coefficient, if any.
  std::optional<int> first_nonzero;
  Polynomial coefficient;
};

/// Residual u'' + (a + shift) u - 2u^3 of a given series.
ObstructionReport verify_u_ode(const LaurentSeries& u, int shift = kPoleSeriesShift);
ObstructionReport verify_u_ode(int order, int shift = kPoleSeriesShift);

/// Fundamental system of y'' + (A - 6 u^2) y = 0 at the pole:
/// y1 = s^-2 + ... (free coefficient at s^3 set to 0), y2 = s^3/5 + ...,
/// with unit Wronskian y1 y2' - y1' y2.
struct LameSystem {
  Polynomial channel;
  LaurentSeries u;
  LaurentSeries y1;
  LaurentSeries y2;
  LaurentSeries wronskian;
  /// Right-hand side of the y1 recursion at the resonant exponent 3; must
  /// vanish for the s^3 coefficient to be free.
  Polynomial resonance_obstruction;
  /// Residual of y1 and y2 substituted back into the equation.
  ObstructionReport y1_residual;
  ObstructionReport y2_residual;
};

/// y1, y2 known below s^order; A defaults to the uniform-mode channel A = a.
LameSystem lame_fundamental(const Polynomial& channel, int order, int shift = kPoleSeriesShift);

/// Smallest truncation order for which the residue is determined.
inline constexpr int kMinResidueOrder = 6;

struct ResidueCertificate {
  int order = 0;
  /// Coefficient of s^-1 in -u y1^3.
  Polynomial residue;
  /// The reference bracket
  /// a^3/252 + a^2/21 + 4a/21 + 3a g3/7 + (73 g3 + 16)/63.
  Polynomial reference;
  /// reference = factor * residue, when such a rational factor exists.
  std::optional<Rational> factor;
  /// All coefficients of residue(a, g3 = 1) as a polynomial in a are positive.
  bool positive_at_g3_one = false;
};

Polynomial reference_bracket();
/// gamma_5 as the closed expression (1/14)[16/27 + 4g3 + 4a/9 + a g3 + a^2/9 + a^3/108].
Polynomial reference_gamma5();

/// Exact factor c with p = c q, if p and q are proportional and q != 0.
std::optional<Rational> proportionality_factor(const Polynomial& p, const Polynomial& q);

bool all_coefficients_positive(const Polynomial& p);

ResidueCertificate residue_certificate(int order = 12, int shift = kPoleSeriesShift);

}  // namespace kg
