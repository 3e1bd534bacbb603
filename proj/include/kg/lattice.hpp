#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kg {

/// Raised when a state or parameter set violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Boundary { periodic, dirichlet };

std::string to_string(Boundary b);
Boundary parse_boundary(const std::string& text);

/// Klein-Gordon chain with on-site potential V(x) = a/2 x^2 + beta/4 x^4
/// and unit nearest-neighbour coupling.
///
/// Periodic lattices carry N >= 2 sites with index wrap. Dirichlet lattices
/// store only the n >= 1 interior sites; the endpoints q_0 = q_{n+1} = 0 are
/// implicit.
struct LatticeParams {
  int n_particles = 3;
  double a = 1.0;
  double beta = 0.0;
  Boundary boundary = Boundary::periodic;

  void validate() const;
};

/// Phase-space point. Storage is 0-based: q[j-1] holds q_j for sites j = 1..N.
struct LatticeState {
  std::vector<double> q;
  std::vector<double> p;
  double t = 0.0;

  LatticeState() = default;
  explicit LatticeState(std::size_t n) : q(n, 0.0), p(n, 0.0) {}
  LatticeState(std::vector<double> q_, std::vector<double> p_, double t_ = 0.0)
      : q(std::move(q_)), p(std::move(p_)), t(t_) {}

  std::size_t size() const { return q.size(); }
};

void check_state(const LatticeParams& params, const LatticeState& s);

double hamiltonian(const LatticeParams& params, const LatticeState& s);

/// Quadratic part 1/2 p.p + 1/2 q.L q (the beta = 0 Hamiltonian).
double quadratic_energy(const LatticeParams& params, const LatticeState& s);

/// -dH/dq. Component j is q_{j+1} - 2 q_j + q_{j-1} - a q_j - beta q_j^3.
std::vector<double> forces(const LatticeParams& params, const LatticeState& s);

/// Writes forces into `out` (sized like s.q). Neighbour sums are formed as
/// (q_{j+1} + q_{j-1}) so that the result is bitwise reflection-equivariant.
void forces_into(const LatticeParams& params, std::span<const double> q,
                 std::span<double> out);

/// Cyclic shift (q_1..q_N) -> (q_2..q_N, q_1), same on momenta.
LatticeState apply_R(const LatticeState& s);
/// Inverse cyclic shift.
LatticeState apply_R_inverse(const LatticeState& s);
/// Reflection-negation (q_1..q_N) -> -(q_{N-1}, ..., q_1, q_N).
LatticeState apply_S(const LatticeState& s);

/// Image of a Dirichlet state with n sites in the periodic lattice with
/// N = 2n+2 sites; the image lies in Fix<S>.
LatticeState embed_dirichlet(const LatticeState& s);

/// Inverse of embed_dirichlet on Fix<S> (drops the mirrored half).
LatticeState restrict_dirichlet(const LatticeState& periodic);

}  // namespace kg
