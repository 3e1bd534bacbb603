#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "kg/phonon.hpp"
#include "test_support.hpp"

namespace kg {
namespace {

TEST(Frequencies, HandValues) {
  const FrequencySpectrum w3 = frequencies(3, 1.0);
  EXPECT_NEAR(w3(1), 2.0, 1e-15);
  EXPECT_NEAR(w3(2), 2.0, 1e-15);
  EXPECT_EQ(w3(3), 1.0);

  const FrequencySpectrum w4 = frequencies(4, 1.0);
  EXPECT_NEAR(w4(1), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(w4(2), std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(w4(3), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(w4(4), 1.0);

  const FrequencySpectrum w2 = frequencies(2, 3.0);
  EXPECT_NEAR(w2(1), std::sqrt(7.0), 1e-15);
  EXPECT_NEAR(w2(2), std::sqrt(3.0), 1e-15);
}

TEST(Frequencies, BoundsAndExactPairing) {
  for (double a : {0.25, 1.0, 3.5}) {
    for (int n = 2; n <= 40; ++n) {
      const FrequencySpectrum w = frequencies(n, a);
      ASSERT_EQ(w.size(), n);
      for (int k = 1; k <= n; ++k) {
        EXPECT_GE(w(k), std::sqrt(a) * (1 - 1e-15));
        EXPECT_LE(w(k), std::sqrt(a + 4) * (1 + 1e-15));
        if (k < n) { EXPECT_EQ(w(k), w(n - k)); }
      }
      EXPECT_EQ(w(n), std::sqrt(a));
    }
  }
}

TEST(Frequencies, RejectInvalid) {
  EXPECT_THROW(frequencies(1, 1.0), InvalidInput);
  EXPECT_THROW(frequencies(3, 0.0), InvalidInput);
  EXPECT_THROW(frequencies(3, -2.0), InvalidInput);
}

TEST(LatticeMatrix, ThreeSites) {
  Eigen::MatrixXd expected(3, 3);
  expected << 3, -1, -1, -1, 3, -1, -1, -1, 3;
  EXPECT_EQ(lattice_matrix(3, 1.0), expected);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(expected);
  EXPECT_NEAR(es.eigenvalues()(0), 1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues()(1), 4.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues()(2), 4.0, 1e-14);
}

TEST(LatticeMatrix, QuadraticFormIsLinearEnergy) {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 12; ++n) {
    const LatticeParams p{n, 1.4, 0.0, Boundary::periodic};
    const Eigen::MatrixXd L = lattice_matrix(n, 1.4);
    const LatticeState s = testing::random_state(static_cast<std::size_t>(n), rng);
    const Eigen::Map<const Eigen::VectorXd> q(s.q.data(), n), v(s.p.data(), n);
    EXPECT_LE(testing::rel_diff(0.5 * q.dot(L * q) + 0.5 * v.squaredNorm(), hamiltonian(p, s)), 1e-13);
  }
}

TEST(Transform, OrthogonalAndDiagonalizing) {
  for (int n = 2; n <= 12; ++n) {
    const Eigen::MatrixXd M = build_transform(n).matrix();
    EXPECT_LE((M.transpose() * M - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-13) << n;
    const FrequencySpectrum w = frequencies(n, 1.0);
    const Eigen::MatrixXd D = M.transpose() * lattice_matrix(n, 1.0) * M;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_NEAR(D(i, j), i == j ? w(i + 1) * w(i + 1) : 0.0, 1e-13);
  }
}

TEST(Transform, BlockMapIsSymplectic) {
  for (int n = 2; n <= 12; ++n) {
    const Eigen::MatrixXd M = build_transform(n).matrix();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    J.topLeftCorner(n, n) = M.transpose();
    J.bottomRightCorner(n, n) = M.transpose();
    Eigen::MatrixXd Omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    Omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    Omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    EXPECT_LE((J.transpose() * Omega * J - Omega).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Transform, ConstantAndAlternatingVectors) {
  const TransformMatrix m5(5);
  const ModalState c = to_modal(m5, LatticeState({2, 2, 2, 2, 2}, {0, 0, 0, 0, 0}));
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(c.Q[k], 0.0, 1e-15);
  EXPECT_NEAR(c.Q[4], std::sqrt(5.0) * 2, 1e-14);

  const ModalState alt = to_modal(TransformMatrix(4), LatticeState({-1, 1, -1, 1}, {0, 0, 0, 0}));
  EXPECT_NEAR(alt.Q[0], 0.0, 1e-15);
  EXPECT_NEAR(alt.Q[1], 2.0, 1e-15);
  EXPECT_NEAR(alt.Q[2], 0.0, 1e-15);
  EXPECT_NEAR(alt.Q[3], 0.0, 1e-15);
}

TEST(Transform, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 12; ++n) {
    const PhononBasis basis(n, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const LatticeState s = testing::random_state(static_cast<std::size_t>(n), rng);
      const LatticeState b = basis.from_modal(basis.to_modal(s));
      const LatticeState c = basis.from_scaled(basis.to_scaled(s));
      for (int j = 0; j < n; ++j) {
        EXPECT_NEAR(b.q[j], s.q[j], 1e-13);
        EXPECT_NEAR(b.p[j], s.p[j], 1e-13);
        EXPECT_NEAR(c.q[j], s.q[j], 1e-13);
        EXPECT_NEAR(c.p[j], s.p[j], 1e-13);
      }
    }
  }
}

TEST(Scaling, CanonicalScaling) {
  const FrequencySpectrum w = frequencies(3, 1.0);
  ModalState m(3);
  m.Q = {1, 0, 0};
  const ModalState s = scale_modal(m, w);
  EXPECT_TRUE(s.scaled);
  EXPECT_NEAR(s.Q[0], std::sqrt(2.0), 1e-15);
  EXPECT_EQ(s.Q[1], 0.0);
  const ModalState z = scale_modal(ModalState(3), w);
  EXPECT_EQ(z.Q, (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(z.P, (std::vector<double>{0, 0, 0}));
}

TEST(Scaling, DoubleScalingRejected) {
  const FrequencySpectrum w = frequencies(3, 1.0);
  const ModalState s = scale_modal(ModalState(3), w);
  EXPECT_THROW(scale_modal(s, w), InvalidInput);
  EXPECT_THROW(unscale_modal(ModalState(3), w), InvalidInput);
  EXPECT_THROW(from_modal(TransformMatrix(3), s), InvalidInput);
}

TEST(Scaling, QuadraticEnergyIdentities) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 12; ++n) {
    const LatticeParams p{n, 1.0, 0.0, Boundary::periodic};
    const PhononBasis basis(n, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const LatticeState s = testing::random_state(static_cast<std::size_t>(n), rng);
      const double h25 = quadratic_energy(p, s);
      const ModalState m = basis.to_modal(s);
      double h210 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double w = basis.spectrum()(k + 1);
        h210 += 0.5 * m.P[k] * m.P[k] + 0.5 * w * w * m.Q[k] * m.Q[k];
      }
      EXPECT_LE(testing::rel_diff(h25, h210), 1e-12);
      EXPECT_LE(testing::rel_diff(h25, modal_quadratic_energy(basis.to_scaled(s), basis.spectrum())), 1e-12);
      const ModalState back = unscale_modal(scale_modal(m, basis.spectrum()), basis.spectrum());
      for (int k = 0; k < n; ++k) EXPECT_NEAR(back.Q[k], m.Q[k], 1e-13);
    }
  }
}

}  // namespace
}  // namespace kg
