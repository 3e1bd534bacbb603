#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "kg/lattice.hpp"
#include "kg/phonon.hpp"

namespace kg::testing {

inline LatticeState random_state(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  LatticeState s(n);
  for (std::size_t j = 0; j < n; ++j) {
    s.q[j] = u(rng);
    s.p[j] = u(rng);
  }
  return s;
}

inline ModalState random_scaled(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  ModalState m(n, true);
  for (std::size_t k = 0; k < n; ++k) {
    m.Q[k] = u(rng);
    m.P[k] = u(rng);
  }
  return m;
}

inline double rel_diff(double x, double y) {
  const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::abs(x - y) / scale;
}

}  // namespace kg::testing
