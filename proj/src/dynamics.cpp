#include <cmath>

#include "kg/dynamics.hpp"

namespace kg {

namespace {

// Stiffness matrix of the quadratic part, periodic or with fixed ends.
Eigen::MatrixXd stiffness(const LatticeParams& params) {
  if (params.boundary == Boundary::periodic) return lattice_matrix(params.n_particles, params.a);
  const int n = params.n_particles;
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    l(j, j) = 2.0 + params.a;
    if (j + 1 < n) l(j, j + 1) = l(j + 1, j) = -1.0;
  }
  return l;
}

bool finite(const LatticeState& s) {
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!std::isfinite(s.q[j]) || !std::isfinite(s.p[j])) return false;
  return true;
}

}  // namespace

LatticeState step_verlet(const LatticeParams& params, const LatticeState& s, double dt) {
  if (!(dt > 0.0)) throw InvalidInput("time step must be positive");
  check_state(params, s);
  LatticeState r = s;
  std::vector<double> f(s.size());
  forces_into(params, r.q, f);
  for (std::size_t j = 0; j < s.size(); ++j) r.p[j] += 0.5 * dt * f[j];
  for (std::size_t j = 0; j < s.size(); ++j) r.q[j] += dt * r.p[j];
  forces_into(params, r.q, f);
  for (std::size_t j = 0; j < s.size(); ++j) r.p[j] += 0.5 * dt * f[j];
  r.t = s.t + dt;
  return r;
}

HarmonicSplitStepper::HarmonicSplitStepper(const LatticeParams& params, double dt)
    : params_(params), dt_(dt) {
  params.validate();
  if (!(dt > 0.0)) throw InvalidInput("time step must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(stiffness(params));
  const Eigen::MatrixXd& v = eig.eigenvectors();
  const Eigen::VectorXd w = eig.eigenvalues().cwiseSqrt();
  const Eigen::Index n = w.size();
  Eigen::VectorXd c(n), s_over_w(n), w_s(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    c(k) = std::cos(w(k) * dt);
    const double s = std::sin(w(k) * dt);
    s_over_w(k) = s / w(k);
    w_s(k) = -w(k) * s;
  }
  cq_ = v * c.asDiagonal() * v.transpose();
  cp_ = v * s_over_w.asDiagonal() * v.transpose();
  sq_ = v * w_s.asDiagonal() * v.transpose();
  sp_ = cq_;
}

void HarmonicSplitStepper::step(LatticeState& s) const {
  const Eigen::Index n = static_cast<Eigen::Index>(s.size());
  if (n != cq_.rows()) throw InvalidInput("state size does not match the stepper");
  Eigen::Map<Eigen::VectorXd> q(s.q.data(), n), p(s.p.data(), n);
  const double beta = params_.beta;
  const double h = 0.5 * dt_;
  if (beta != 0.0)
    for (Eigen::Index j = 0; j < n; ++j) p(j) -= h * beta * q(j) * q(j) * q(j);
  const Eigen::VectorXd q0 = q;
  q = cq_ * q0 + cp_ * p;
  p = sq_ * q0 + sp_ * p;
  if (beta != 0.0)
    for (Eigen::Index j = 0; j < n; ++j) p(j) -= h * beta * q(j) * q(j) * q(j);
  s.t += dt_;
}

LatticeState HarmonicSplitStepper::step(const LatticeState& s) const {
  LatticeState r = s;
  step(r);
  return r;
}

std::string to_string(Scheme s) { return s == Scheme::verlet ? "verlet" : "harmonic_split"; }

Scheme parse_scheme(const std::string& text) {
  if (text == "verlet") return Scheme::verlet;
  if (text == "harmonic_split" || text == "split") return Scheme::harmonic_split;
  throw InvalidInput("unknown integrator scheme '" + text + "'");
}

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw InvalidInput("dt must be positive");
  if (steps < 0) throw InvalidInput("steps must be non-negative");
  if (record_every < 1) throw InvalidInput("record_every must be >= 1");
}

void integrate_visit(const LatticeParams& params, const LatticeState& s0,
                     const IntegratorConfig& cfg,
                     const std::function<void(long long, const LatticeState&)>& visit) {
  params.validate();
  cfg.validate();
  check_state(params, s0);
  LatticeState s = s0;
  if (cfg.scheme == Scheme::harmonic_split) {
    const HarmonicSplitStepper stepper(params, cfg.dt);
    for (long long i = 1; i <= cfg.steps; ++i) {
      stepper.step(s);
      if (!finite(s)) throw NumericFailure("non-finite state at step " + std::to_string(i), i);
      visit(i, s);
    }
  } else {
    for (long long i = 1; i <= cfg.steps; ++i) {
      s = step_verlet(params, s, cfg.dt);
      if (!finite(s)) throw NumericFailure("non-finite state at step " + std::to_string(i), i);
      visit(i, s);
    }
  }
}

TimeSeries integrate(const LatticeParams& params, const LatticeState& s0,
                     const IntegratorConfig& cfg,
                     const std::vector<LatticeObservable>& observables) {
  TimeSeries ts;
  for (const auto& o : observables) ts.names.push_back(o.name);
  ts.values.resize(observables.size());
  auto record = [&](const LatticeState& s) {
    ts.t.push_back(s.t);
    ts.states.push_back(s);
    for (std::size_t k = 0; k < observables.size(); ++k) ts.values[k].push_back(observables[k].fn(s));
  };
  check_state(params, s0);
  record(s0);
  integrate_visit(params, s0, cfg, [&](long long i, const LatticeState& s) {
    if (i % cfg.record_every == 0) record(s);
  });
  return ts;
}

}  // namespace kg
