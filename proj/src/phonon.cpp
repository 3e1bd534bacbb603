#include "kg/phonon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kg {

double FrequencySpectrum::max() const {
  return *std::max_element(omega.begin(), omega.end());
}

FrequencySpectrum frequencies(int n_sites, double a) {
  if (n_sites < 2) throw InvalidInput("spectrum needs N >= 2");
  if (!(a > 0.0)) throw InvalidInput("on-site coefficient a must be positive");
  FrequencySpectrum w;
  w.a = a;
  w.omega.resize(static_cast<std::size_t>(n_sites));
  for (int k = 1; k <= n_sites; ++k) {
    const int r = std::min(k, n_sites - k);  // k = N gives r = 0
    const double s = std::sin(r * std::numbers::pi / n_sites);
    w.omega[static_cast<std::size_t>(k - 1)] = std::sqrt(a + 4.0 * s * s);
  }
  return w;
}

Eigen::MatrixXd lattice_matrix(int n_sites, double a) {
  if (n_sites < 2) throw InvalidInput("lattice matrix needs N >= 2");
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n_sites, n_sites);
  for (int j = 0; j < n_sites; ++j) {
    l(j, j) += 2.0 + a;
    l(j, (j + 1) % n_sites) += -1.0;
    l(j, (j + n_sites - 1) % n_sites) += -1.0;
  }
  return l;
}

TransformMatrix::TransformMatrix(int n_sites) : m_(n_sites, n_sites) {
  if (n_sites < 2) throw InvalidInput("transform needs N >= 2");
  const double n = n_sites;
  const double c2 = std::sqrt(2.0 / n);
  const double c1 = 1.0 / std::sqrt(n);
  for (int j = 1; j <= n_sites; ++j) {
    for (int k = 1; 2 * k < n_sites; ++k) {
      const double angle = 2.0 * std::numbers::pi * k * j / n;
      m_(j - 1, k - 1) = c2 * std::cos(angle);
      m_(j - 1, n_sites - k - 1) = c2 * std::sin(angle);
    }
    if (n_sites % 2 == 0) m_(j - 1, n_sites / 2 - 1) = (j % 2 == 0 ? c1 : -c1);
    m_(j - 1, n_sites - 1) = c1;
  }
}

TransformMatrix build_transform(int n_sites) { return TransformMatrix(n_sites); }

namespace {

Eigen::Map<const Eigen::VectorXd> view(const std::vector<double>& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

ModalState to_modal(const TransformMatrix& m, const LatticeState& s) {
  if (s.q.size() != static_cast<std::size_t>(m.size()) || s.p.size() != s.q.size())
    throw InvalidInput("state size does not match transform");
  ModalState x;
  x.Q = to_std(m.matrix().transpose() * view(s.q));
  x.P = to_std(m.matrix().transpose() * view(s.p));
  x.t = s.t;
  return x;
}

LatticeState from_modal(const TransformMatrix& m, const ModalState& x) {
  if (x.scaled) throw InvalidInput("from_modal expects unscaled phonon coordinates");
  if (x.Q.size() != static_cast<std::size_t>(m.size()) || x.P.size() != x.Q.size())
    throw InvalidInput("modal state size does not match transform");
  return LatticeState(to_std(m.matrix() * view(x.Q)), to_std(m.matrix() * view(x.P)), x.t);
}

ModalState scale_modal(const ModalState& x, const FrequencySpectrum& w) {
  if (x.scaled) throw InvalidInput("modal state is already scaled");
  if (x.size() != static_cast<std::size_t>(w.size()))
    throw InvalidInput("modal state size does not match spectrum");
  ModalState y = x;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double r = std::sqrt(w.omega[k]);
    y.Q[k] = x.Q[k] * r;
    y.P[k] = x.P[k] / r;
  }
  y.scaled = true;
  return y;
}

ModalState unscale_modal(const ModalState& x, const FrequencySpectrum& w) {
  if (!x.scaled) throw InvalidInput("modal state is not scaled");
  if (x.size() != static_cast<std::size_t>(w.size()))
    throw InvalidInput("modal state size does not match spectrum");
  ModalState y = x;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double r = std::sqrt(w.omega[k]);
    y.Q[k] = x.Q[k] / r;
    y.P[k] = x.P[k] * r;
  }
  y.scaled = false;
  return y;
}

double modal_quadratic_energy(const ModalState& x, const FrequencySpectrum& w) {
  if (!x.scaled) throw InvalidInput("expected scaled phonon coordinates");
  double e = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    e += 0.5 * w.omega[k] * (x.P[k] * x.P[k] + x.Q[k] * x.Q[k]);
  return e;
}

PhononBasis::PhononBasis(int n_sites, double a)
    : spectrum_(frequencies(n_sites, a)), transform_(n_sites) {}

ModalState PhononBasis::to_modal(const LatticeState& s) const {
  return kg::to_modal(transform_, s);
}

LatticeState PhononBasis::from_modal(const ModalState& x) const {
  return kg::from_modal(transform_, x);
}

ModalState PhononBasis::to_scaled(const LatticeState& s) const {
  return scale_modal(kg::to_modal(transform_, s), spectrum_);
}

LatticeState PhononBasis::from_scaled(const ModalState& x) const {
  return kg::from_modal(transform_, unscale_modal(x, spectrum_));
}

}  // namespace kg
