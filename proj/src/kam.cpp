#include <cmath>

#include "kg/kam.hpp"
#include "kg/normal_form.hpp"

namespace kg {

namespace {

bool nonzero_det(const Eigen::MatrixXd& m, double det) {
  if (m.size() == 0) return true;
  double scale = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) scale *= m.row(i).norm();
  return scale > 0.0 && std::abs(det) > kNondegeneracyTolerance * scale;
}

}  // namespace

BigInt exact_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);

  int sign = 1;
  BigInt prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix fixed_endpoint_template(int n) {
  if (n < 1) throw InvalidInput("F_n needs n >= 1");
  IntMatrix f(n, n);
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      long long v = 4;
      if (k == l)
        v = (n % 2 == 1 && 2 * k == n + 1) ? 4 : 3;
      else if (k + l == n + 1)
        v = 6;
      f(k - 1, l - 1) = v;
    }
  }
  return f;
}

KamReport kam_hessians_odd(const FrequencySpectrum& w, double beta) {
  const int n = w.size();
  if (n % 2 == 0) throw InvalidInput("kam_hessians_odd requires odd N, got N = " + std::to_string(n));
  const int m = pair_count(n);
  auto lambda = [&](int j) { return 1.0 / w(j); };

  // Rows (a_1..a_m, a_N); the normal form's second derivatives carry 3 beta/N.
  const double pa = 3.0 * beta / n;
  Eigen::MatrixXd ha(m + 1, m + 1);
  auto action_index = [&](int r) { return r < m ? r + 1 : n; };
  for (int r = 0; r <= m; ++r) {
    for (int c = 0; c <= m; ++c) {
      const double lr = lambda(action_index(r)), lc = lambda(action_index(c));
      double entry = lr * lc;
      if (r == c) entry *= (r == m) ? 0.5 : 0.75;
      ha(r, c) = pa * entry;
    }
  }
  Eigen::MatrixXd hb = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) hb(j, j) = -0.75 * beta / n * lambda(j + 1) * lambda(j + 1);

  KamReport r;
  r.hessian_a = ha;
  r.hessian_b = hb;
  r.det_a = ha.determinant();
  r.det_b = m > 0 ? hb.diagonal().prod() : 1.0;
  r.det_full = r.det_a * r.det_b;

  double prod_lambda2 = 1.0;
  for (int j = 1; j <= n; ++j) prod_lambda2 *= lambda(j) * lambda(j);
  r.closed_form_det =
      std::pow(1.5 * beta / n, n) * (2.0 * n - 1.0) / std::pow(2.0, n) * prod_lambda2;
  r.prefactor_ratio = pa / (1.5 * beta / n);
  r.nondegenerate = nonzero_det(ha, r.det_a) && nonzero_det(hb, r.det_b);
  return r;
}

KamReport kam_hessian_dirichlet(const FrequencySpectrum& w, double beta, int n) {
  if (n < 1) throw InvalidInput("fixed-endpoint lattice needs n >= 1");
  if (w.size() != 2 * n + 2)
    throw InvalidInput("fixed-endpoint Hessian uses the spectrum of N = 2n+2 sites");
  const IntMatrix f = fixed_endpoint_template(n);
  const double pf = beta / (2.0 * (2 * n + 2)) * 1.5;

  Eigen::MatrixXd h(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      h(k, l) = pf * static_cast<double>(f(k, l)) / (w(k + 1) * w(l + 1));

  KamReport r;
  r.hessian_a = h;
  r.det_a = h.determinant();
  r.det_full = r.det_a;
  r.integer_template = f;
  r.template_det = exact_determinant(f);
  r.nondegenerate = *r.template_det != 0 && beta != 0.0;
  return r;
}

}  // namespace kg
