#include <algorithm>
#include <cmath>
#include <random>

#include "kg/dynamics.hpp"
#include "kg/observables.hpp"

namespace kg {

double default_time_step(const FrequencySpectrum& w) { return std::min(0.01, 0.05 / w.max()); }

ModalState random_unit_modal(int n_sites, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ModalState x(static_cast<std::size_t>(n_sites), true);
  double norm2 = 0.0;
  for (int k = 0; k < n_sites; ++k) {
    x.Q[k] = normal(gen);
    x.P[k] = normal(gen);
    norm2 += x.Q[k] * x.Q[k] + x.P[k] * x.P[k];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (int k = 0; k < n_sites; ++k) {
    x.Q[k] *= inv;
    x.P[k] *= inv;
  }
  return x;
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
}

}  // namespace

DriftReport drift_experiment(const LatticeParams& params, const DriftConfig& cfg) {
  params.validate();
  if (params.boundary != Boundary::periodic)
    throw InvalidInput("drift experiments run on the periodic lattice");
  if (cfg.eps.empty()) throw InvalidInput("eps list is empty");
  for (std::size_t i = 0; i < cfg.eps.size(); ++i) {
    if (!(cfg.eps[i] >= 0.0)) throw InvalidInput("eps must be non-negative");
    if (i > 0 && !(cfg.eps[i] > cfg.eps[i - 1])) throw InvalidInput("eps list must be strictly increasing");
  }
  if (!(cfg.horizon_c > 0.0)) throw InvalidInput("horizon constant must be positive");

  const int n = params.n_particles;
  const PhononBasis basis(n, params.a);
  const FrequencySpectrum& w = basis.spectrum();

  std::vector<Observable> obs;
  obs.push_back(observables::h2(w));
  for (auto& o : observables::normal_form_integrals(w)) obs.push_back(std::move(o));

  DriftReport report;
  report.params = params;
  report.config = cfg;
  report.dt = cfg.dt > 0.0 ? cfg.dt : default_time_step(w);

  const ModalState direction = random_unit_modal(n, cfg.seed);

  for (double eps : cfg.eps) {
    if (eps >= 1.0)
      report.warnings.push_back("eps = " + std::to_string(eps) +
                                " is not small: amplitude >= 1 leaves the near-equilibrium regime");
    ModalState x0 = direction;
    for (std::size_t k = 0; k < x0.size(); ++k) {
      x0.Q[k] *= eps;
      x0.P[k] *= eps;
    }
    std::vector<double> initial(obs.size()), dev(obs.size(), 0.0);
    for (std::size_t k = 0; k < obs.size(); ++k) initial[k] = obs[k](x0);

    if (eps > 0.0) {
      IntegratorConfig ic;
      ic.dt = report.dt;
      ic.steps = static_cast<long long>(std::llround(cfg.horizon_c / eps / report.dt));
      ic.scheme = cfg.scheme;
      integrate_visit(params, basis.from_scaled(x0), ic, [&](long long, const LatticeState& s) {
        const ModalState x = basis.to_scaled(s);
        for (std::size_t k = 0; k < obs.size(); ++k)
          dev[k] = std::max(dev[k], std::abs(obs[k](x) - initial[k]));
      });
    }
    for (std::size_t k = 0; k < obs.size(); ++k) {
      DriftRow r;
      r.eps = eps;
      r.observable = obs[k].name();
      r.initial = initial[k];
      r.max_deviation = dev[k];
      r.drift = std::abs(initial[k]) > 1e-12 ? dev[k] / std::abs(initial[k]) : dev[k];
      report.rows.push_back(r);
    }
  }

  for (std::size_t k = 0; k < obs.size(); ++k) {
    std::vector<double> lx, ly, drifts;
    for (const auto& r : report.rows) {
      if (r.observable != obs[k].name()) continue;
      drifts.push_back(r.drift);
      if (r.eps > 0.0 && r.drift > 0.0) {
        lx.push_back(std::log(r.eps));
        ly.push_back(std::log(r.drift));
      }
    }
    DriftSlope s;
    s.observable = obs[k].name();
    s.points = static_cast<int>(lx.size());
    s.slope = lx.size() >= 2 ? fit_slope(lx, ly) : 0.0;
    s.monotone = std::is_sorted(drifts.begin(), drifts.end());
    report.slopes.push_back(s);
  }
  return report;
}

}  // namespace kg
