#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kg/lattice.hpp"
#include "kg/phonon.hpp"

namespace kg {

/// Raised when a trajectory leaves the finite numbers.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, long long step)
      : std::runtime_error(what), step_(step) {}
  long long step() const { return step_; }

 private:
  long long step_;
};

/// One kick-drift-kick step for H = T(p) + V(q).
LatticeState step_verlet(const LatticeParams& params, const LatticeState& s, double dt);

/// Symmetric splitting of H = H_quadratic + beta/4 sum q^4: half kick with
/// the quartic force, exact linear flow over dt, half kick. Exact for
/// beta = 0 up to rounding. The linear propagator is built once.
class HarmonicSplitStepper {
 public:
  HarmonicSplitStepper(const LatticeParams& params, double dt);

  double dt() const { return dt_; }
  void step(LatticeState& s) const;
  LatticeState step(const LatticeState& s) const;

 private:
  LatticeParams params_;
  double dt_;
  // q' = cq q + cp p,  p' = sq q + sp p
  Eigen::MatrixXd cq_, cp_, sq_, sp_;
};

enum class Scheme { verlet, harmonic_split };

std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& text);

struct IntegratorConfig {
  double dt = 0.01;
  long long steps = 1000;
  long long record_every = 1;
  Scheme scheme = Scheme::harmonic_split;

  void validate() const;
};

/// Named scalar function of the lattice state.
struct LatticeObservable {
  std::string name;
  std::function<double(const LatticeState&)> fn;
};

/// Samples at t = 0 and every record_every steps.
struct TimeSeries {
  std::vector<double> t;
  std::vector<LatticeState> states;
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;  // values[obs][sample]
};

/// Integrates from s0. Throws NumericFailure naming the step at which a
/// non-finite coordinate first appears.
TimeSeries integrate(const LatticeParams& params, const LatticeState& s0,
                     const IntegratorConfig& cfg,
                     const std::vector<LatticeObservable>& observables = {});

/// Calls `visit(step, state)` after every step without storing anything.
void integrate_visit(const LatticeParams& params, const LatticeState& s0,
                     const IntegratorConfig& cfg,
                     const std::function<void(long long, const LatticeState&)>& visit);

// --- drift of approximate integrals -----------------------------------------

struct DriftConfig {
  std::vector<double> eps{0.02, 0.05, 0.1, 0.2};
  double horizon_c = 1.0;  // T(eps) = horizon_c / eps
  double dt = 0.0;         // 0 selects min(0.01, 0.05 / max omega)
  std::uint64_t seed = 20240601;
  Scheme scheme = Scheme::harmonic_split;
};

struct DriftRow {
  double eps = 0.0;
  std::string observable;
  double initial = 0.0;
  double max_deviation = 0.0;
  /// max_deviation / |initial| when |initial| > 1e-12, else max_deviation.
  double drift = 0.0;
};

struct DriftSlope {
  std::string observable;
  double slope = 0.0;       // least-squares slope of log drift vs log eps
  bool monotone = false;    // drift non-increasing as eps decreases
  int points = 0;           // points entering the fit
};

struct DriftReport {
  LatticeParams params;
  DriftConfig config;
  double dt = 0.0;
  std::vector<DriftRow> rows;  // sorted by eps, then by observable order
  std::vector<DriftSlope> slopes;
  std::vector<std::string> warnings;
};

double default_time_step(const FrequencySpectrum& w);

/// Unit vector in the scaled phonon chart (Q, P), drawn from the seed.
ModalState random_unit_modal(int n_sites, std::uint64_t seed);

/// For each eps, starts from eps times one seeded unit direction in the
/// scaled phonon chart, integrates to horizon_c / eps and records the drift
/// of H_2 = sum omega_k a_k and of every normal-form integral.
DriftReport drift_experiment(const LatticeParams& params, const DriftConfig& cfg);

}  // namespace kg
