#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kg/normal_form.hpp"

namespace kg {

/// Gradient of a phase-space function in scaled phonon coordinates.
struct Gradient {
  std::vector<double> dQ;
  std::vector<double> dP;
};

/// Step used by the central-difference fallback when an observable has no
/// analytic gradient.
inline constexpr double kFallbackGradientStep = 1e-6;

/// A named function of the scaled phonon state, optionally with an analytic
/// gradient. Without one, gradients are central differences with step
/// kFallbackGradientStep in each coordinate.
class Observable {
 public:
  using ValueFn = std::function<double(const ModalState&)>;
  using GradientFn = std::function<Gradient(const ModalState&)>;

  Observable(std::string name, ValueFn value, GradientFn gradient = {});

  const std::string& name() const { return name_; }
  double operator()(const ModalState& x) const { return value_(x); }
  bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }
  Gradient gradient(const ModalState& x) const;
  Gradient numeric_gradient(const ModalState& x, double step = kFallbackGradientStep) const;

 private:
  std::string name_;
  ValueFn value_;
  GradientFn gradient_;
};

/// {F, G} = sum_k dF/dQ_k dG/dP_k - dF/dP_k dG/dQ_k.
double poisson_bracket(const Observable& f, const Observable& g, const ModalState& x);
double poisson_bracket(const Gradient& f, const Gradient& g);

/// Chain rule: gradient in (Q, P) of a function whose partial derivatives
/// with respect to the Hopf variables are `partials`.
Gradient hopf_chain_rule(const HopfCoordinates& partials, const ModalState& x);

namespace observables {

Observable hopf_a(int k);
Observable hopf_b(int k);
Observable hopf_c(int k);
Observable hopf_d(int k);
Observable hopf_a_half();
Observable hopf_a_N();
/// b_k - b_{N/2-k}, even N.
Observable b_difference(int k);
Observable h2(const FrequencySpectrum& w);
Observable h4bar(const FrequencySpectrum& w, double beta);
Observable quartic_K(const FrequencySpectrum& w, int k);

/// The Liouville integrals of the quartic normal form:
/// odd N: a_j, b_j (1 <= j <= (N-1)/2) and a_N;
/// even N: a_k (1 <= k < N/2), a_{N/2}, a_N, b_k - b_{N/2-k} and K_k
/// (1 <= k < N/4), and c_{N/4} when 4 | N.
std::vector<Observable> normal_form_integrals(const FrequencySpectrum& w);

}  // namespace observables

}  // namespace kg
