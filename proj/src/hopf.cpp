#include <cmath>

#include "kg/normal_form.hpp"

namespace kg {

HopfCoordinates::HopfCoordinates(int n) : n_sites(n) {
  const auto m = static_cast<std::size_t>(pair_count(n));
  a.assign(m, 0.0);
  b.assign(m, 0.0);
  c.assign(m, 0.0);
  d.assign(m, 0.0);
  if (n % 2 == 0) a_half = 0.0;
}

HopfCoordinates HopfCoordinates::scaled_by(double lambda) const {
  HopfCoordinates r = *this;
  for (auto* v : {&r.a, &r.b, &r.c, &r.d})
    for (double& x : *v) x *= lambda;
  if (r.a_half) *r.a_half *= lambda;
  r.a_N *= lambda;
  return r;
}

HopfCoordinates hopf_from_modal(const ModalState& x) {
  if (!x.scaled) throw InvalidInput("Hopf variables are defined on scaled phonon coordinates");
  const int n = static_cast<int>(x.size());
  if (n < 2) throw InvalidInput("Hopf variables need N >= 2");
  HopfCoordinates h(n);
  for (int k = 1; k <= pair_count(n); ++k) {
    const std::size_t i = k - 1, m = n - k - 1;
    const double qi = x.Q[i], pi = x.P[i], qm = x.Q[m], pm = x.P[m];
    h.a[i] = 0.5 * (qi * qi + pi * pi + qm * qm + pm * pm);
    h.b[i] = qi * pm - qm * pi;
    h.c[i] = 0.5 * (qi * qi + pi * pi - qm * qm - pm * pm);
    h.d[i] = qi * qm + pi * pm;
  }
  if (n % 2 == 0) {
    const std::size_t half = n / 2 - 1;
    h.a_half = 0.5 * (x.Q[half] * x.Q[half] + x.P[half] * x.P[half]);
  }
  h.a_N = 0.5 * (x.Q.back() * x.Q.back() + x.P.back() * x.P.back());
  return h;
}

double h2_hopf(const HopfCoordinates& h, const FrequencySpectrum& w) {
  if (w.size() != h.n_sites) throw InvalidInput("spectrum size does not match Hopf coordinates");
  double e = 0.0;
  for (int k = 1; k <= h.pairs(); ++k) e += w(k) * h.ak(k);
  if (h.a_half) e += w(h.n_sites / 2) * *h.a_half;
  e += w(h.n_sites) * h.a_N;
  return e;
}

double resonance_exponent(std::span<const int> big_theta, std::span<const int> small_theta,
                          const FrequencySpectrum& w) {
  if (big_theta.size() != small_theta.size() ||
      big_theta.size() != static_cast<std::size_t>(w.size()))
    throw InvalidInput("multi-indices must have length N");
  double nu = 0.0;
  for (std::size_t k = 0; k < big_theta.size(); ++k)
    nu += w.omega[k] * (big_theta[k] - small_theta[k]);
  return std::abs(nu);
}

}  // namespace kg
