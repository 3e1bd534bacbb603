#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kg/phonon.hpp"

namespace kg {

/// Number of 1:1 mode pairs (k, N-k) with 1 <= k < N/2.
constexpr int pair_count(int n_sites) { return (n_sites - 1) / 2; }

/// Quadratic invariants of the 1:1 resonant mode pairs.
///
/// For 1 <= k < N/2 (stored at index k-1):
///   a_k = 1/2 (Q_k^2 + P_k^2 + Q_{N-k}^2 + P_{N-k}^2)
///   b_k = Q_k P_{N-k} - Q_{N-k} P_k
///   c_k = 1/2 (Q_k^2 + P_k^2 - Q_{N-k}^2 - P_{N-k}^2)
///   d_k = Q_k Q_{N-k} + P_k P_{N-k}
/// plus a_{N/2} (even N only) and a_N, computed in the scaled chart.
/// They satisfy a_k^2 = b_k^2 + c_k^2 + d_k^2.
///
/// The same layout is reused for partial derivatives of functions of the
/// Hopf variables (see h4bar_partials).
struct HopfCoordinates {
  int n_sites = 0;
  std::vector<double> a, b, c, d;
  std::optional<double> a_half;
  double a_N = 0.0;

  HopfCoordinates() = default;
  explicit HopfCoordinates(int n);

  int pairs() const { return static_cast<int>(a.size()); }
  double ak(int k) const { return a.at(static_cast<std::size_t>(k - 1)); }
  double bk(int k) const { return b.at(static_cast<std::size_t>(k - 1)); }
  double ck(int k) const { return c.at(static_cast<std::size_t>(k - 1)); }
  double dk(int k) const { return d.at(static_cast<std::size_t>(k - 1)); }

  HopfCoordinates scaled_by(double lambda) const;
};

HopfCoordinates hopf_from_modal(const ModalState& x);

double h2_hopf(const HopfCoordinates& h, const FrequencySpectrum& w);

/// Truncated quartic normal form of the periodic lattice, all parities.
/// The a_{N/2} terms enter for even N and the c_{N/4}, d_{N/4} term for 4 | N.
double h4bar_periodic(const HopfCoordinates& h, const FrequencySpectrum& w, double beta);

/// Odd-N reduction of h4bar_periodic, written out on its own.
double h4bar_odd(const HopfCoordinates& h, const FrequencySpectrum& w, double beta);

/// Gradient of h4bar_periodic with respect to the Hopf variables.
HopfCoordinates h4bar_partials(const HopfCoordinates& h, const FrequencySpectrum& w,
                               double beta);

/// Even-N quartic integral K_k, 1 <= k < N/4.
double quartic_K(const HopfCoordinates& h, const FrequencySpectrum& w, int k);
HopfCoordinates quartic_K_partials(const HopfCoordinates& h, const FrequencySpectrum& w,
                                   int k);

/// Fixed-endpoint normal form in the actions I_1..I_n, with frequencies of
/// the periodic lattice with N = 2n+2 sites.
double h4bar_dirichlet(std::span<const double> actions, const FrequencySpectrum& w,
                       double beta);

/// Hopf coordinates of the Fix<S> image of Dirichlet actions I:
/// b = d = 0, c_k = -a_k = -I_k, a_N = a_{N/2} = 0.
HopfCoordinates hopf_from_dirichlet_actions(std::span<const double> actions);

/// Resonance exponent |nu(Theta, theta)| = |sum_k omega_k (Theta_k - theta_k)|
/// for multi-indices of length N.
double resonance_exponent(std::span<const int> big_theta, std::span<const int> small_theta,
                          const FrequencySpectrum& w);

}  // namespace kg
