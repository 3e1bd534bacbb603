#include <cmath>
#include <numbers>

#include "kg/action_angle.hpp"
#include "kg/normal_form.hpp"

namespace kg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

}  // namespace

double arg_2pi(double x, double y) {
  if (x == 0.0 && y == 0.0) throw InvalidInput("arg is undefined at the origin");
  return reduce_2pi(std::atan2(y, x));
}

ActionAngleChart action_angle(const ModalState& x) {
  const int n = static_cast<int>(x.size());
  if (n % 2 == 0) throw InvalidInput("action-angle chart is defined for odd N only");
  const HopfCoordinates h = hopf_from_modal(x);

  ActionAngleChart c;
  c.a = h.a;
  c.b = h.b;
  c.a_N = h.a_N;
  for (int j = 1; j <= h.pairs(); ++j) {
    const std::string tag = std::to_string(j);
    if (!(h.ak(j) > 0.0)) throw InvalidInput("point is not regular: a_" + tag + " = 0");
    if (!(std::abs(h.bk(j)) < h.ak(j)))
      throw InvalidInput("point is not regular: |b_" + tag + "| = a_" + tag);
  }
  if (!(h.a_N > 0.0)) throw InvalidInput("point is not regular: a_N = 0");

  for (int j = 1; j <= h.pairs(); ++j) {
    const std::size_t i = j - 1, m = n - j - 1;
    const double qi = x.Q[i], pi = x.P[i], qm = x.Q[m], pm = x.P[m];
    const double A = arg_2pi(-pm - qi, pi - qm);
    const double B = arg_2pi(pm - qi, pi + qm);
    c.phi.push_back(reduce_2pi(0.5 * (A + B)));
    c.psi.push_back(reduce_2pi(0.5 * (A - B)));
  }
  c.phi_N = arg_2pi(x.Q.back(), -x.P.back());
  return c;
}

}  // namespace kg
