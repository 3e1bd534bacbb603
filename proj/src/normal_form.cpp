#include <cmath>

#include "kg/normal_form.hpp"

namespace kg {

namespace {

void check_sizes(const HopfCoordinates& h, const FrequencySpectrum& w) {
  if (w.size() != h.n_sites) throw InvalidInput("spectrum size does not match Hopf coordinates");
  if (h.pairs() != pair_count(h.n_sites)) throw InvalidInput("malformed Hopf coordinates");
  if ((h.n_sites % 2 == 0) != h.a_half.has_value())
    throw InvalidInput("a_{N/2} must be present exactly when N is even");
}

// Number of pairs (k, N/2 - k) with 1 <= k < N/4.
int quarter_pairs(int n) { return n % 2 == 0 ? (n / 2 - 1) / 2 : 0; }

}  // namespace

double h4bar_periodic(const HopfCoordinates& h, const FrequencySpectrum& w, double beta) {
  check_sizes(h, w);
  const int n = h.n_sites;
  const double half = h.a_half ? *h.a_half / w(n / 2) : 0.0;
  const double last = h.a_N / w(n);

  double sum_x = 0.0, sum_x2 = 0.0, diag = 0.0;
  for (int k = 1; k <= h.pairs(); ++k) {
    const double x = h.ak(k) / w(k);
    sum_x += x;
    sum_x2 += x * x;
    diag += (3.0 * h.ak(k) * h.ak(k) - h.bk(k) * h.bk(k)) / (w(k) * w(k));
  }
  // sum_{k<l} x_k x_l
  const double cross = 0.5 * (sum_x * sum_x - sum_x2);

  double e = 1.5 * (half * half + last * last) + 6.0 * half * last +
             6.0 * (half + last) * sum_x + 0.75 * diag + 6.0 * cross;

  for (int k = 1; k <= quarter_pairs(n); ++k) {
    const int m = n / 2 - k;
    e += 3.0 * (h.ck(k) * h.ck(m) - h.dk(k) * h.dk(m)) / (w(k) * w(m));
  }
  if (n % 4 == 0) {
    const int q = n / 4;
    e += 0.75 * (h.ck(q) * h.ck(q) - h.dk(q) * h.dk(q)) / (w(q) * w(q));
  }
  return beta / (2.0 * n) * e;
}

double h4bar_odd(const HopfCoordinates& h, const FrequencySpectrum& w, double beta) {
  check_sizes(h, w);
  const int n = h.n_sites;
  if (n % 2 == 0) throw InvalidInput("h4bar_odd requires odd N");
  const int m = (n - 1) / 2;
  double diag = 0.0, mixed = 0.0, pairs = 0.0;
  for (int k = 1; k <= m; ++k) {
    diag += (3.0 * h.ak(k) * h.ak(k) - h.bk(k) * h.bk(k)) / (w(k) * w(k));
    mixed += h.ak(k) / w(k);
    for (int l = k + 1; l <= m; ++l) pairs += h.ak(k) * h.ak(l) / (w(k) * w(l));
  }
  const double an = h.a_N / w(n);
  return beta / (2.0 * n) * (0.75 * diag + 1.5 * an * an + 6.0 * an * mixed + 6.0 * pairs);
}

HopfCoordinates h4bar_partials(const HopfCoordinates& h, const FrequencySpectrum& w,
                               double beta) {
  check_sizes(h, w);
  const int n = h.n_sites;
  const double pf = beta / (2.0 * n);
  HopfCoordinates g(n);

  const double half = h.a_half ? *h.a_half / w(n / 2) : 0.0;
  const double last = h.a_N / w(n);
  double sum_x = 0.0;
  for (int k = 1; k <= h.pairs(); ++k) sum_x += h.ak(k) / w(k);

  for (int k = 1; k <= h.pairs(); ++k) {
    const std::size_t i = k - 1;
    const double wk = w(k);
    const double xk = h.ak(k) / wk;
    g.a[i] = pf * (6.0 * (half + last) / wk + 4.5 * h.ak(k) / (wk * wk) +
                   6.0 * (sum_x - xk) / wk);
    g.b[i] = pf * (-1.5 * h.bk(k) / (wk * wk));
  }
  if (h.a_half) *g.a_half = pf * (3.0 * half + 6.0 * last + 6.0 * sum_x) / w(n / 2);
  g.a_N = pf * (3.0 * last + 6.0 * half + 6.0 * sum_x) / w(n);

  for (int k = 1; k <= quarter_pairs(n); ++k) {
    const int m = n / 2 - k;
    const double den = w(k) * w(m);
    g.c[k - 1] += pf * 3.0 * h.ck(m) / den;
    g.c[m - 1] += pf * 3.0 * h.ck(k) / den;
    g.d[k - 1] += pf * -3.0 * h.dk(m) / den;
    g.d[m - 1] += pf * -3.0 * h.dk(k) / den;
  }
  if (n % 4 == 0) {
    const int q = n / 4;
    const double den = w(q) * w(q);
    g.c[q - 1] += pf * 1.5 * h.ck(q) / den;
    g.d[q - 1] += pf * -1.5 * h.dk(q) / den;
  }
  return g;
}

namespace {

int check_quartic_index(const HopfCoordinates& h, int k) {
  const int n = h.n_sites;
  if (n % 2 != 0) throw InvalidInput("quartic integrals K_k exist only for even N");
  if (k < 1 || 4 * k >= n)
    throw InvalidInput("K_k needs 1 <= k < N/4, got k = " + std::to_string(k));
  return n / 2 - k;
}

}  // namespace

double quartic_K(const HopfCoordinates& h, const FrequencySpectrum& w, int k) {
  check_sizes(h, w);
  const int m = check_quartic_index(h, k);
  const double wk = w(k), wm = w(m);
  return 3.0 * (h.ck(k) * h.ck(m) - h.dk(k) * h.dk(m)) / (wk * wm) -
         0.75 * (h.bk(k) * h.bk(k) / (wk * wk) + h.bk(m) * h.bk(m) / (wm * wm));
}

HopfCoordinates quartic_K_partials(const HopfCoordinates& h, const FrequencySpectrum& w,
                                   int k) {
  check_sizes(h, w);
  const int m = check_quartic_index(h, k);
  const double wk = w(k), wm = w(m);
  HopfCoordinates g(h.n_sites);
  g.c[k - 1] = 3.0 * h.ck(m) / (wk * wm);
  g.c[m - 1] = 3.0 * h.ck(k) / (wk * wm);
  g.d[k - 1] = -3.0 * h.dk(m) / (wk * wm);
  g.d[m - 1] = -3.0 * h.dk(k) / (wk * wm);
  g.b[k - 1] = -1.5 * h.bk(k) / (wk * wk);
  g.b[m - 1] = -1.5 * h.bk(m) / (wm * wm);
  return g;
}

double h4bar_dirichlet(std::span<const double> actions, const FrequencySpectrum& w,
                       double beta) {
  const int n = static_cast<int>(actions.size());
  if (n < 1) throw InvalidInput("need at least one action");
  if (w.size() != 2 * n + 2)
    throw InvalidInput("fixed-endpoint normal form uses the spectrum of N = 2n+2 = " +
                       std::to_string(2 * n + 2) + " sites, got " + std::to_string(w.size()));
  auto I = [&](int k) { return actions[static_cast<std::size_t>(k - 1)]; };

  double e = 0.0;
  for (int k = 1; k <= n; ++k) {
    e += 2.25 * I(k) * I(k) / (w(k) * w(k));
    for (int l = k + 1; l <= n; ++l) e += 6.0 * I(k) * I(l) / (w(k) * w(l));
  }
  for (int k = 1; 2 * k < n + 1; ++k) {
    const int m = n + 1 - k;
    e += 3.0 * I(k) * I(m) / (w(k) * w(m));
  }
  if (n % 2 == 1) {
    const int mid = (n + 1) / 2;
    e += 0.75 * I(mid) * I(mid) / (w(mid) * w(mid));
  }
  return beta / (2.0 * (2 * n + 2)) * e;
}

HopfCoordinates hopf_from_dirichlet_actions(std::span<const double> actions) {
  const int n = static_cast<int>(actions.size());
  HopfCoordinates h(2 * n + 2);
  for (int k = 1; k <= n; ++k) {
    h.a[k - 1] = actions[k - 1];
    h.c[k - 1] = -actions[k - 1];
  }
  return h;
}

}  // namespace kg
