#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kg/lattice.hpp"

namespace kg {

/// Phonon frequencies omega_k = sqrt(a + 4 sin^2(k pi / N)), k = 1..N.
///
/// omega_k and omega_{N-k} are produced by the same floating-point
/// expression, so the 1:1 pairing holds bitwise.
struct FrequencySpectrum {
  double a = 1.0;
  std::vector<double> omega;  // omega[k-1] = omega_k

  int size() const { return static_cast<int>(omega.size()); }
  /// 1-based access, k in 1..N.
  double operator()(int k) const { return omega.at(static_cast<std::size_t>(k - 1)); }
  double max() const;
};

FrequencySpectrum frequencies(int n_sites, double a);

/// Circulant L_N with 2+a on the diagonal and -1 at (j, j+-1 mod N).
Eigen::MatrixXd lattice_matrix(int n_sites, double a);

/// Orthogonal Fourier-type matrix M with q = M Q. Columns are ordered by
/// mode index k = 1..N: cosine columns for k < N/2, sine columns for N-k,
/// the alternating column for k = N/2 (even N) and the constant column k = N.
class TransformMatrix {
 public:
  explicit TransformMatrix(int n_sites);

  int size() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

TransformMatrix build_transform(int n_sites);

/// Phonon coordinates. Unscaled (Q, P) satisfy q = M Q, p = M P. The scaled
/// chart is Q -> sqrt(omega) Q, P -> P / sqrt(omega), in which
/// H_2 = sum omega_k/2 (P_k^2 + Q_k^2).
struct ModalState {
  std::vector<double> Q;
  std::vector<double> P;
  bool scaled = false;
  double t = 0.0;

  ModalState() = default;
  explicit ModalState(std::size_t n, bool scaled_ = false)
      : Q(n, 0.0), P(n, 0.0), scaled(scaled_) {}

  std::size_t size() const { return Q.size(); }
};

ModalState to_modal(const TransformMatrix& m, const LatticeState& s);
LatticeState from_modal(const TransformMatrix& m, const ModalState& x);

ModalState scale_modal(const ModalState& x, const FrequencySpectrum& w);
ModalState unscale_modal(const ModalState& x, const FrequencySpectrum& w);

/// sum omega_k/2 (P_k^2 + Q_k^2) on a scaled state.
double modal_quadratic_energy(const ModalState& x, const FrequencySpectrum& w);

/// Spectrum and transform for one periodic lattice, built once.
class PhononBasis {
 public:
  PhononBasis(int n_sites, double a);

  int size() const { return spectrum_.size(); }
  const FrequencySpectrum& spectrum() const { return spectrum_; }
  const TransformMatrix& transform() const { return transform_; }

  ModalState to_modal(const LatticeState& s) const;
  LatticeState from_modal(const ModalState& x) const;
  /// Lattice state -> scaled phonon chart, and back.
  ModalState to_scaled(const LatticeState& s) const;
  LatticeState from_scaled(const ModalState& x) const;

 private:
  FrequencySpectrum spectrum_;
  TransformMatrix transform_;
};

}  // namespace kg
