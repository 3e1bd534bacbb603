#pragma once

#include <vector>

#include "kg/phonon.hpp"

namespace kg {

/// Action-angle coordinates of the odd-N normal form on the regular set
/// a_j > 0, |b_j| < a_j, a_N > 0. Angles lie in [0, 2 pi).
///
/// With A_j = arg(-P_{N-j} - Q_j, P_j - Q_{N-j}) and
/// B_j = arg(P_{N-j} - Q_j, P_j + Q_{N-j}):
///   phi_j = (A_j + B_j) / 2,  psi_j = (A_j - B_j) / 2,
///   phi_N = arg(Q_N, -P_N),
/// so that sum dP ^ dQ = sum da_j ^ dphi_j + db_j ^ dpsi_j + da_N ^ dphi_N.
struct ActionAngleChart {
  std::vector<double> a, b;
  double a_N = 0.0;
  std::vector<double> phi, psi;
  double phi_N = 0.0;
};

/// Argument of (x, y) reduced to [0, 2 pi).
double arg_2pi(double x, double y);

ActionAngleChart action_angle(const ModalState& x);

}  // namespace kg
