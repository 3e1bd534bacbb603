#include "kg/appendix.hpp"
#include "kg/lattice.hpp"

namespace kg {

namespace {

Polynomial linear_coefficient(int shift) { return Polynomial::a() + Polynomial(shift); }

// Coefficient of s^m in the product of three series given as dense
// coefficient arrays starting at exponent `lead`, restricted to known terms.
Polynomial cube_coefficient(const std::vector<Polynomial>& c, int lead, int m) {
  Polynomial s;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (c[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (c[j].is_zero()) continue;
      const int k = m - 3 * lead - i - j;
      if (k < 0 || k >= n || c[k].is_zero()) continue;
      s += c[i] * c[j] * c[k];
    }
  }
  return s;
}

ObstructionReport first_nonzero(const LaurentSeries& r, int through) {
  ObstructionReport rep;
  rep.checked_through = through;
  for (int k = std::min(r.lead(), through + 1); k <= through; ++k) {
    const Polynomial c = r.coefficient(k);
    if (!c.is_zero()) {
      rep.zero = false;
      rep.first_nonzero = k;
      rep.coefficient = c;
      return rep;
    }
  }
  return rep;
}

}  // namespace

LaurentSeries u_series(int order, int shift) {
  if (order < 2) throw InvalidInput("u_series needs order >= 2");
  const Polynomial A = linear_coefficient(shift);
  // coeff[i] holds u_{i-1}.
  std::vector<Polynomial> c(static_cast<std::size_t>(order + 1));
  c[0] = Polynomial(1);
  for (int n = 1; n < order; ++n) {
    const std::size_t i = static_cast<std::size_t>(n + 1);
    if (n % 2 == 0) continue;
    if (n == 3) {
      c[i] = Polynomial::g3();
      continue;
    }
    // (n - 3)(n + 2) u_n = -A u_{n-2} + 2 [u^3]_{n-2} with u_n excluded.
    const Polynomial rhs = -(A * c[i - 2]) + Polynomial(2) * cube_coefficient(c, -1, n - 2);
    c[i] = rhs * (Rational(1) / Rational((n - 3) * (n + 2)));
  }
  return LaurentSeries(-1, std::move(c), order);
}

ObstructionReport verify_u_ode(const LaurentSeries& u, int shift) {
  const LaurentSeries r =
      u.derivative().derivative() + linear_coefficient(shift) * u - Polynomial(2) * (u * u * u);
  return first_nonzero(r, r.order() - 1);
}

ObstructionReport verify_u_ode(int order, int shift) { return verify_u_ode(u_series(order, shift), shift); }

LameSystem lame_fundamental(const Polynomial& channel, int order, int shift) {
  if (order < 4) throw InvalidInput("lame_fundamental needs order >= 4 to reach the s^3 term of y2");
  LameSystem sys;
  sys.channel = channel;
  sys.u = u_series(order + 4, shift);
  const LaurentSeries u2 = (sys.u * sys.u).truncated(order + 2);

  // Recursion for y = sum y_n s^n:
  // (n - 3)(n + 2) y_n = -A y_{n-2} + 6 sum_{m >= 0} v_m y_{n-2-m}, v = u^2.
  auto solve = [&](int lead, const Polynomial& lead_coeff, Polynomial* obstruction) {
    std::vector<Polynomial> y(static_cast<std::size_t>(order - lead));
    y[0] = lead_coeff;
    for (int n = lead + 1; n < order; ++n) {
      Polynomial rhs;
      if (n - 2 >= lead) rhs -= channel * y[n - 2 - lead];
      for (int m = 0; n - 2 - m >= lead; ++m) rhs += Polynomial(6) * u2.coefficient(m) * y[n - 2 - m - lead];
      const int k = (n - 3) * (n + 2);
      if (k == 0) {
        if (obstruction) *obstruction = rhs;
        y[n - lead] = Polynomial();
      } else {
        y[n - lead] = rhs * (Rational(1) / Rational(k));
      }
    }
    return LaurentSeries(lead, std::move(y), order);
  };
  sys.y1 = solve(-2, Polynomial(1), &sys.resonance_obstruction);
  sys.y2 = solve(3, Polynomial(Rational(1, 5)), nullptr);
  sys.wronskian = sys.y1 * sys.y2.derivative() - sys.y1.derivative() * sys.y2;

  auto residual = [&](const LaurentSeries& y) {
    const LaurentSeries r = y.derivative().derivative() + channel * y - Polynomial(6) * (u2 * y);
    return first_nonzero(r, r.order() - 1);
  };
  sys.y1_residual = residual(sys.y1);
  sys.y2_residual = residual(sys.y2);
  return sys;
}

Polynomial reference_bracket() {
  return Polynomial::parse("1/252*a^3 + 1/21*a^2 + 3/7*a*g3 + 4/21*a + 73/63*g3 + 16/63");
}

Polynomial reference_gamma5() {
  return Polynomial::parse("16/27 + 4*g3 + 4/9*a + a*g3 + 1/9*a^2 + 1/108*a^3") * Rational(1, 14);
}

std::optional<Rational> proportionality_factor(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return Rational(0);
  const auto& [e0, q0] = *q.terms().begin();
  const Rational c = p.coefficient(e0.first, e0.second) / q0;
  if (p == q * c) return c;
  return std::nullopt;
}

bool all_coefficients_positive(const Polynomial& p) {
  if (p.is_zero()) return false;
  for (const auto& [e, c] : p.terms())
    if (c <= 0) return false;
  return true;
}

ResidueCertificate residue_certificate(int order, int shift) {
  if (order < kMinResidueOrder)
    throw InvalidInput("residue needs truncation order >= " + std::to_string(kMinResidueOrder) +
                       ", got " + std::to_string(order));
  const LameSystem sys = lame_fundamental(Polynomial::a(), order, shift);
  const LaurentSeries integrand = Polynomial(-1) * (sys.u * sys.y1 * sys.y1 * sys.y1);
  ResidueCertificate cert;
  cert.order = order;
  cert.residue = integrand.coefficient(-1);
  cert.reference = reference_bracket();
  cert.factor = proportionality_factor(cert.reference, cert.residue);
  cert.positive_at_g3_one = all_coefficients_positive(cert.residue.substitute_g3(1));
  return cert;
}

}  // namespace kg
