#include "kg/observables.hpp"

namespace kg {

Observable::Observable(std::string name, ValueFn value, GradientFn gradient)
    : name_(std::move(name)), value_(std::move(value)), gradient_(std::move(gradient)) {}

Gradient Observable::gradient(const ModalState& x) const {
  return gradient_ ? gradient_(x) : numeric_gradient(x);
}

Gradient Observable::numeric_gradient(const ModalState& x, double step) const {
  Gradient g{std::vector<double>(x.size()), std::vector<double>(x.size())};
  ModalState y = x;
  for (std::size_t k = 0; k < x.size(); ++k) {
    y.Q[k] = x.Q[k] + step;
    const double qp = value_(y);
    y.Q[k] = x.Q[k] - step;
    const double qm = value_(y);
    y.Q[k] = x.Q[k];
    g.dQ[k] = (qp - qm) / (2.0 * step);

    y.P[k] = x.P[k] + step;
    const double pp = value_(y);
    y.P[k] = x.P[k] - step;
    const double pm = value_(y);
    y.P[k] = x.P[k];
    g.dP[k] = (pp - pm) / (2.0 * step);
  }
  return g;
}

double poisson_bracket(const Gradient& f, const Gradient& g) {
  if (f.dQ.size() != g.dQ.size()) throw InvalidInput("gradient sizes differ");
  double s = 0.0;
  for (std::size_t k = 0; k < f.dQ.size(); ++k) s += f.dQ[k] * g.dP[k] - f.dP[k] * g.dQ[k];
  return s;
}

double poisson_bracket(const Observable& f, const Observable& g, const ModalState& x) {
  return poisson_bracket(f.gradient(x), g.gradient(x));
}

Gradient hopf_chain_rule(const HopfCoordinates& partials, const ModalState& x) {
  const int n = static_cast<int>(x.size());
  if (partials.n_sites != n) throw InvalidInput("partials do not match state size");
  Gradient g{std::vector<double>(x.size(), 0.0), std::vector<double>(x.size(), 0.0)};
  for (int k = 1; k <= partials.pairs(); ++k) {
    const std::size_t i = k - 1, m = n - k - 1;
    const double fa = partials.a[i], fb = partials.b[i], fc = partials.c[i], fd = partials.d[i];
    const double qi = x.Q[i], pi = x.P[i], qm = x.Q[m], pm = x.P[m];
    g.dQ[i] += fa * qi + fb * pm + fc * qi + fd * qm;
    g.dP[i] += fa * pi - fb * qm + fc * pi + fd * pm;
    g.dQ[m] += fa * qm - fb * pi - fc * qm + fd * qi;
    g.dP[m] += fa * pm + fb * qi - fc * pm + fd * pi;
  }
  if (partials.a_half) {
    const std::size_t h = n / 2 - 1;
    g.dQ[h] += *partials.a_half * x.Q[h];
    g.dP[h] += *partials.a_half * x.P[h];
  }
  g.dQ.back() += partials.a_N * x.Q.back();
  g.dP.back() += partials.a_N * x.P.back();
  return g;
}

namespace observables {

namespace {

void check_pair(const ModalState& x, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > pair_count(n))
    throw InvalidInput("pair index k = " + std::to_string(k) + " out of range for N = " +
                       std::to_string(n));
}

// Observable linear in the Hopf variables: value and gradient both go
// through a one-hot partials vector.
Observable linear_hopf(std::string name, std::function<void(HopfCoordinates&, int)> mark,
                       std::function<double(const HopfCoordinates&)> read, int k) {
  auto value = [read, k](const ModalState& x) {
    check_pair(x, k);
    return read(hopf_from_modal(x));
  };
  auto grad = [mark, k](const ModalState& x) {
    check_pair(x, k);
    HopfCoordinates p(static_cast<int>(x.size()));
    mark(p, k);
    return hopf_chain_rule(p, x);
  };
  return Observable(std::move(name), value, grad);
}

}  // namespace

Observable hopf_a(int k) {
  return linear_hopf(
      "a" + std::to_string(k), [](HopfCoordinates& p, int j) { p.a[j - 1] = 1.0; },
      [k](const HopfCoordinates& h) { return h.ak(k); }, k);
}

Observable hopf_b(int k) {
  return linear_hopf(
      "b" + std::to_string(k), [](HopfCoordinates& p, int j) { p.b[j - 1] = 1.0; },
      [k](const HopfCoordinates& h) { return h.bk(k); }, k);
}

Observable hopf_c(int k) {
  return linear_hopf(
      "c" + std::to_string(k), [](HopfCoordinates& p, int j) { p.c[j - 1] = 1.0; },
      [k](const HopfCoordinates& h) { return h.ck(k); }, k);
}

Observable hopf_d(int k) {
  return linear_hopf(
      "d" + std::to_string(k), [](HopfCoordinates& p, int j) { p.d[j - 1] = 1.0; },
      [k](const HopfCoordinates& h) { return h.dk(k); }, k);
}

Observable hopf_a_half() {
  auto value = [](const ModalState& x) {
    const auto h = hopf_from_modal(x);
    if (!h.a_half) throw InvalidInput("a_{N/2} exists only for even N");
    return *h.a_half;
  };
  auto grad = [](const ModalState& x) {
    if (x.size() % 2 != 0) throw InvalidInput("a_{N/2} exists only for even N");
    HopfCoordinates p(static_cast<int>(x.size()));
    *p.a_half = 1.0;
    return hopf_chain_rule(p, x);
  };
  return Observable("a_half", value, grad);
}

Observable hopf_a_N() {
  auto value = [](const ModalState& x) { return hopf_from_modal(x).a_N; };
  auto grad = [](const ModalState& x) {
    HopfCoordinates p(static_cast<int>(x.size()));
    p.a_N = 1.0;
    return hopf_chain_rule(p, x);
  };
  return Observable("aN", value, grad);
}

Observable b_difference(int k) {
  auto value = [k](const ModalState& x) {
    const int n = static_cast<int>(x.size());
    if (n % 2 != 0 || k < 1 || 4 * k >= n) throw InvalidInput("b_k - b_{N/2-k} needs even N, k < N/4");
    const auto h = hopf_from_modal(x);
    return h.bk(k) - h.bk(n / 2 - k);
  };
  auto grad = [k](const ModalState& x) {
    const int n = static_cast<int>(x.size());
    if (n % 2 != 0 || k < 1 || 4 * k >= n) throw InvalidInput("b_k - b_{N/2-k} needs even N, k < N/4");
    HopfCoordinates p(n);
    p.b[k - 1] = 1.0;
    p.b[n / 2 - k - 1] = -1.0;
    return hopf_chain_rule(p, x);
  };
  return Observable("b" + std::to_string(k) + "-b(N/2-" + std::to_string(k) + ")", value, grad);
}

Observable h2(const FrequencySpectrum& w) {
  auto value = [w](const ModalState& x) { return h2_hopf(hopf_from_modal(x), w); };
  auto grad = [w](const ModalState& x) {
    const int n = static_cast<int>(x.size());
    HopfCoordinates p(n);
    for (int k = 1; k <= p.pairs(); ++k) p.a[k - 1] = w(k);
    if (p.a_half) *p.a_half = w(n / 2);
    p.a_N = w(n);
    return hopf_chain_rule(p, x);
  };
  return Observable("H2", value, grad);
}

Observable h4bar(const FrequencySpectrum& w, double beta) {
  auto value = [w, beta](const ModalState& x) {
    return h4bar_periodic(hopf_from_modal(x), w, beta);
  };
  auto grad = [w, beta](const ModalState& x) {
    return hopf_chain_rule(h4bar_partials(hopf_from_modal(x), w, beta), x);
  };
  return Observable("H4bar", value, grad);
}

Observable quartic_K(const FrequencySpectrum& w, int k) {
  auto value = [w, k](const ModalState& x) { return kg::quartic_K(hopf_from_modal(x), w, k); };
  auto grad = [w, k](const ModalState& x) {
    return hopf_chain_rule(quartic_K_partials(hopf_from_modal(x), w, k), x);
  };
  return Observable("K" + std::to_string(k), value, grad);
}

std::vector<Observable> normal_form_integrals(const FrequencySpectrum& w) {
  const int n = w.size();
  std::vector<Observable> out;
  for (int k = 1; k <= pair_count(n); ++k) out.push_back(hopf_a(k));
  if (n % 2 == 1) {
    for (int k = 1; k <= pair_count(n); ++k) out.push_back(hopf_b(k));
  } else {
    out.push_back(hopf_a_half());
    for (int k = 1; 4 * k < n; ++k) {
      out.push_back(b_difference(k));
      out.push_back(quartic_K(w, k));
    }
    if (n % 4 == 0) out.push_back(hopf_c(n / 4));
  }
  out.push_back(hopf_a_N());
  return out;
}

}  // namespace observables

}  // namespace kg
