#include "kg/lattice.hpp"

namespace kg {

std::string to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "dirichlet";
}

Boundary parse_boundary(const std::string& text) {
  if (text == "periodic") return Boundary::periodic;
  if (text == "dirichlet") return Boundary::dirichlet;
  throw InvalidInput("unknown boundary '" + text + "' (expected periodic|dirichlet)");
}

void LatticeParams::validate() const {
  const int min_n = boundary == Boundary::periodic ? 2 : 1;
  if (n_particles < min_n)
    throw InvalidInput(to_string(boundary) + " lattice needs at least " +
                       std::to_string(min_n) + " particles, got " +
                       std::to_string(n_particles));
  if (!(a > 0.0)) throw InvalidInput("on-site coefficient a must be positive");
}

void check_state(const LatticeParams& params, const LatticeState& s) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.n_particles);
  if (s.q.size() != n || s.p.size() != n)
    throw InvalidInput("state has " + std::to_string(s.q.size()) + "/" +
                       std::to_string(s.p.size()) + " components, lattice has " +
                       std::to_string(n));
}

namespace {

// Sum over bonds (q_{j+1} - q_j)^2 / 2, including the implicit zero ends for
// Dirichlet chains.
double coupling_energy(Boundary boundary, std::span<const double> q) {
  const std::size_t n = q.size();
  double e = 0.0;
  if (boundary == Boundary::periodic) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = q[(j + 1) % n] - q[j];
      e += 0.5 * d * d;
    }
  } else {
    e += 0.5 * q[0] * q[0];
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double d = q[j + 1] - q[j];
      e += 0.5 * d * d;
    }
    e += 0.5 * q[n - 1] * q[n - 1];
  }
  return e;
}

}  // namespace

double hamiltonian(const LatticeParams& params, const LatticeState& s) {
  check_state(params, s);
  double e = coupling_energy(params.boundary, s.q);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double x2 = s.q[j] * s.q[j];
    e += 0.5 * s.p[j] * s.p[j] + 0.5 * params.a * x2 + 0.25 * params.beta * x2 * x2;
  }
  return e;
}

double quadratic_energy(const LatticeParams& params, const LatticeState& s) {
  LatticeParams linear = params;
  linear.beta = 0.0;
  return hamiltonian(linear, s);
}

void forces_into(const LatticeParams& params, std::span<const double> q,
                 std::span<double> out) {
  const std::size_t n = q.size();
  const bool periodic = params.boundary == Boundary::periodic;
  for (std::size_t j = 0; j < n; ++j) {
    double left, right;
    if (periodic) {
      left = q[(j + n - 1) % n];
      right = q[(j + 1) % n];
    } else {
      left = j == 0 ? 0.0 : q[j - 1];
      right = j + 1 == n ? 0.0 : q[j + 1];
    }
    const double x = q[j];
    out[j] = (right + left) - 2.0 * x - params.a * x - params.beta * (x * x * x);
  }
}

std::vector<double> forces(const LatticeParams& params, const LatticeState& s) {
  check_state(params, s);
  std::vector<double> f(s.size());
  forces_into(params, s.q, f);
  return f;
}

LatticeState apply_R(const LatticeState& s) {
  const std::size_t n = s.size();
  LatticeState r(n);
  r.t = s.t;
  for (std::size_t j = 0; j < n; ++j) {
    r.q[j] = s.q[(j + 1) % n];
    r.p[j] = s.p[(j + 1) % n];
  }
  return r;
}

LatticeState apply_R_inverse(const LatticeState& s) {
  const std::size_t n = s.size();
  LatticeState r(n);
  r.t = s.t;
  for (std::size_t j = 0; j < n; ++j) {
    r.q[(j + 1) % n] = s.q[j];
    r.p[(j + 1) % n] = s.p[j];
  }
  return r;
}

LatticeState apply_S(const LatticeState& s) {
  // 1-based: q'_j = -q_{N-j} for j < N, q'_N = -q_N. In 0-based storage the
  // source of slot i is slot (N-2-i) mod N.
  const std::size_t n = s.size();
  LatticeState r(n);
  r.t = s.t;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = (2 * n - 2 - i) % n;
    r.q[i] = -s.q[src];
    r.p[i] = -s.p[src];
  }
  return r;
}

LatticeState embed_dirichlet(const LatticeState& s) {
  const std::size_t n = s.size();
  if (n == 0) throw InvalidInput("empty Dirichlet state");
  const std::size_t big = 2 * n + 2;
  LatticeState r(big);
  r.t = s.t;
  for (std::size_t j = 1; j <= n; ++j) {
    r.q[j - 1] = s.q[j - 1];
    r.p[j - 1] = s.p[j - 1];
    r.q[big - j - 1] = -s.q[j - 1];
    r.p[big - j - 1] = -s.p[j - 1];
  }
  return r;
}

LatticeState restrict_dirichlet(const LatticeState& periodic) {
  const std::size_t big = periodic.size();
  if (big < 4 || big % 2 != 0)
    throw InvalidInput("periodic image of a Dirichlet chain has N = 2n+2 >= 4 sites");
  const std::size_t n = (big - 2) / 2;
  LatticeState r(n);
  r.t = periodic.t;
  for (std::size_t j = 0; j < n; ++j) {
    r.q[j] = periodic.q[j];
    r.p[j] = periodic.p[j];
  }
  return r;
}

}  // namespace kg
