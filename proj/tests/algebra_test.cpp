#include <gtest/gtest.h>

#include <random>

#include "kg/appendix.hpp"
#include "kg/lattice.hpp"

namespace kg {
namespace {

const Polynomial A = Polynomial::a();
const Polynomial G = Polynomial::g3();

Rational q(long long n, long long d = 1) { return Rational(n) / Rational(d); }

// --- independent oracle ------------------------------------------------------
// Dense Laurent series over Q at a fixed (a, g3), solved coefficient by
// coefficient from the full residual rather than from a recursion formula.

struct Dense {
  int lead;
  std::vector<Rational> c;
  Rational at(int k) const {
    const int i = k - lead;
    return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rational(0);
  }
};

Rational product_coeff(const std::vector<const Dense*>& fs, int k) {
  // Coefficient of s^k in the product of the given series.
  std::vector<std::pair<int, Rational>> acc{{0, Rational(1)}};
  for (const Dense* f : fs) {
    std::vector<std::pair<int, Rational>> next;
    for (const auto& [e, v] : acc)
      for (std::size_t i = 0; i < f->c.size(); ++i)
        if (f->c[i] != 0) next.emplace_back(e + f->lead + static_cast<int>(i), v * f->c[i]);
    acc = std::move(next);
  }
  Rational s = 0;
  for (const auto& [e, v] : acc)
    if (e == k) s += v;
  return s;
}

Rational second_derivative_coeff(const Dense& f, int k) {
  const int j = k + 2;
  return Rational(j) * Rational(j - 1) * f.at(j);
}

struct OracleValues {
  Dense u, y1;
  Rational residue;
};

OracleValues oracle(const Rational& a, const Rational& g3, int terms) {
  OracleValues o;
  o.u = {-1, {Rational(1)}};
  const Rational lin = a + 4;
  for (int n = 0; n <= terms; ++n) {
    o.u.c.push_back(0);
    if (n == 3) {
      o.u.c.back() = g3;
      continue;
    }
    const int k = n - 2;
    const Rational res =
        second_derivative_coeff(o.u, k) + lin * o.u.at(k) - 2 * product_coeff({&o.u, &o.u, &o.u}, k);
    o.u.c.back() = -res / Rational((n - 3) * (n + 2));
  }
  o.y1 = {-2, {Rational(1)}};
  for (int n = -1; n <= terms; ++n) {
    o.y1.c.push_back(0);
    if (n == 3) continue;
    const int k = n - 2;
    const Rational res =
        second_derivative_coeff(o.y1, k) + a * o.y1.at(k) - 6 * product_coeff({&o.u, &o.u, &o.y1}, k);
    o.y1.c.back() = -res / Rational((n - 3) * (n + 2));
  }
  o.residue = -product_coeff({&o.u, &o.y1, &o.y1, &o.y1}, -1);
  return o;
}

std::vector<std::pair<Rational, Rational>> random_points(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  std::vector<std::pair<Rational, Rational>> out;
  for (int i = 0; i < count; ++i) out.emplace_back(q(num(rng), den(rng)), q(num(rng), den(rng)));
  return out;
}

// --- rationals and polynomials ------------------------------------------------

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_string(q(6, -4)), "-3/2");
  EXPECT_EQ(to_string(q(10, 5)), "2");
  EXPECT_EQ(parse_rational("-12/8"), q(-3, 2));
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_EQ(parse_rational(to_string(q(95, 216))), q(95, 216));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("0.5"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(Polynomial, ArithmeticAndFormat) {
  const Polynomial p = A * A * q(1, 3) - G + q(2);
  EXPECT_EQ(p.str(), "1/3*a^2 - g3 + 2");
  EXPECT_EQ(Polynomial::parse(p.str()), p);
  EXPECT_EQ(p.degree_a(), 2);
  EXPECT_EQ(p.degree_g3(), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).str(), "0");
  EXPECT_EQ((A + G) * (A - G), A * A - G * G);
  EXPECT_EQ(p.evaluate(q(3), q(1, 2)), q(9, 2));
  EXPECT_EQ(p.substitute_g3(q(2)), A * A * q(1, 3));
  const Polynomial pg = p + G;
  for (const auto& [e, c] : pg.terms()) EXPECT_NE(c, 0);
  EXPECT_THROW(Polynomial::parse("a +* g3"), InvalidInput);
  EXPECT_THROW(Polynomial::parse("x"), InvalidInput);
}

TEST(Polynomial, ParsesReferenceForms) {
  const Polynomial b = reference_bracket();
  EXPECT_EQ(b.str(), "1/252*a^3 + 1/21*a^2 + 3/7*a*g3 + 4/21*a + 73/63*g3 + 16/63");
  EXPECT_EQ(Polynomial::parse(b.str()), b);
  EXPECT_EQ(b.evaluate(1, 1), q(25, 12));
  EXPECT_EQ(reference_gamma5().evaluate(1, 1), q(95, 216));
}

// --- series -----------------------------------------------------------------

TEST(Series, Examples) {
  const LaurentSeries inv = LaurentSeries::monomial(1, -1);
  EXPECT_EQ(inv * inv, LaurentSeries::monomial(1, -2));
  const LaurentSeries cube = LaurentSeries::monomial(q(1, 5), 3);
  EXPECT_EQ(cube.derivative(), LaurentSeries::monomial(q(3, 5), 2));
  const LaurentSeries x = inv + LaurentSeries::monomial(1, 1);
  const LaurentSeries sq = x * x;
  EXPECT_EQ(sq, LaurentSeries(-2, {1, 0, 2, 0, 1}));
  EXPECT_EQ(sq.str(), "s^-2 + 2 + s^2");
}

TEST(Series, TruncationOrderTracking) {
  const LaurentSeries x(-1, {1, 0, A}, 3);  // 1/s + a s + O(s^3)
  EXPECT_EQ(x.order(), 3);
  EXPECT_THROW(x.coefficient(3), SeriesUnderflow);
  const LaurentSeries y = x * x;  // known below s^(3 - 1)
  EXPECT_EQ(y.order(), 2);
  EXPECT_EQ(y.coefficient(0), Polynomial(2) * A);
  EXPECT_EQ(x.derivative().order(), 2);
  EXPECT_EQ((x + LaurentSeries::monomial(1, 10)).order(), 3);
  EXPECT_EQ(x.truncated(1), LaurentSeries(-1, {1}, 1));
  const LaurentSeries unknown = LaurentSeries::zero(-2);  // O(s^-2)
  EXPECT_EQ((unknown * x).order(), -3);
  EXPECT_THROW((unknown * x).coefficient(-3), SeriesUnderflow);
}

// --- pole series -------------------------------------------------------------

TEST(PoleSeries, PrintedCoefficients) {
  const LaurentSeries u = u_series(12);
  EXPECT_EQ(u.coefficient(-1), Polynomial(1));
  EXPECT_EQ(u.coefficient(1), (A + 4) * q(1, 6));
  EXPECT_EQ(u.coefficient(3), G);
  EXPECT_EQ(u.coefficient(5), reference_gamma5());
  EXPECT_EQ(u.coefficient(5).evaluate(1, 1), q(95, 216));
}

TEST(PoleSeries, OddParity) {
  const LaurentSeries u = u_series(15);
  for (int k = -1; k < 15; k += 2) EXPECT_TRUE(u.coefficient(k + 1).is_zero()) << k + 1;
  const LaurentSeries u2 = u * u;
  for (int k = -2; k < u2.order(); ++k)
    if (k % 2 != 0) { EXPECT_TRUE(u2.coefficient(k).is_zero()); }
}

TEST(PoleSeries, SolvesTheOde) {
  for (int order : {8, 12, 16}) {
    const ObstructionReport r = verify_u_ode(order);
    EXPECT_TRUE(r.zero) << order;
    EXPECT_GE(r.checked_through, order - 3);
  }
  EXPECT_TRUE(verify_u_ode(12, 0).zero);
  EXPECT_EQ(u_series(8, 0).coefficient(1), A * q(1, 6));
}

TEST(PoleSeries, CorruptedGammaIsDetected) {
  const LaurentSeries u = u_series(12);
  std::vector<Polynomial> c;
  for (int k = -1; k < 12; ++k) c.push_back(u.coefficient(k));
  c[6] += Polynomial(1);  // s^5
  const ObstructionReport r = verify_u_ode(LaurentSeries(-1, c, 12));
  EXPECT_FALSE(r.zero);
  ASSERT_TRUE(r.first_nonzero);
  EXPECT_EQ(*r.first_nonzero, 3);
  EXPECT_EQ(r.coefficient, Polynomial(14));
}

TEST(PoleSeries, MatchesOracle) {
  const LaurentSeries u = u_series(12);
  for (const auto& [a, g] : random_points(20, 1)) {
    const OracleValues o = oracle(a, g, 11);
    for (int k = -1; k < 12; ++k) EXPECT_EQ(u.coefficient(k).evaluate(a, g), o.u.at(k)) << k;
  }
  EXPECT_THROW(u_series(1), InvalidInput);
}

// --- Lame system ---------------------------------------------------------------

TEST(Lame, FundamentalSystemShape) {
  const LameSystem sys = lame_fundamental(A, 12);
  EXPECT_EQ(sys.y1.lead(), -2);
  EXPECT_EQ(sys.y1.coefficient(-2), Polynomial(1));
  EXPECT_EQ(sys.y2.lead(), 3);
  EXPECT_EQ(sys.y2.coefficient(3), Polynomial(q(1, 5)));
  EXPECT_TRUE(sys.y1.coefficient(3).is_zero());
  EXPECT_TRUE(sys.resonance_obstruction.is_zero());
  EXPECT_TRUE(sys.y1_residual.zero);
  EXPECT_TRUE(sys.y2_residual.zero);
  for (int k = -2; k < sys.y1.order(); ++k)
    if (k % 2 != 0) { EXPECT_TRUE(sys.y1.coefficient(k).is_zero()) << k; }
}

TEST(Lame, UnitWronskian) {
  for (int order : {6, 12, 16}) {
    const LameSystem sys = lame_fundamental(A, order);
    EXPECT_EQ(sys.wronskian.lead(), 0);
    EXPECT_EQ(sys.wronskian.coefficient(0), Polynomial(1));
    for (int k = 1; k < sys.wronskian.order(); ++k) EXPECT_TRUE(sys.wronskian.coefficient(k).is_zero()) << k;
  }
}

TEST(Lame, LeadingCorrectionOfY1) {
  EXPECT_EQ(lame_fundamental(A, 12).y1.coefficient(0), (A + 8) * q(-1, 6));
}

TEST(Lame, OtherChannelsAreConsistent) {
  for (const Polynomial& channel : {A + 3, A + Polynomial(q(5, 2)), Polynomial(0)}) {
    const LameSystem sys = lame_fundamental(channel, 12);
    EXPECT_TRUE(sys.y1_residual.zero);
    EXPECT_TRUE(sys.y2_residual.zero);
    EXPECT_EQ(sys.wronskian.coefficient(0), Polynomial(1));
  }
}

TEST(Lame, MatchesOracle) {
  const LameSystem sys = lame_fundamental(A, 12);
  for (const auto& [a, g] : random_points(20, 2)) {
    const OracleValues o = oracle(a, g, 12);
    for (int k = -2; k < 12; ++k) EXPECT_EQ(sys.y1.coefficient(k).evaluate(a, g), o.y1.at(k)) << k;
  }
  EXPECT_THROW(lame_fundamental(A, 3), InvalidInput);
}

// --- residue ------------------------------------------------------------------

TEST(Residue, ShapeAndOracle) {
  const ResidueCertificate cert = residue_certificate();
  EXPECT_EQ(cert.order, 12);
  EXPECT_LE(cert.residue.degree_a(), 3);
  EXPECT_LE(cert.residue.degree_g3(), 1);
  EXPECT_FALSE(cert.residue.is_zero());
  for (const auto& [a, g] : random_points(50, 3))
    EXPECT_EQ(cert.residue.evaluate(a, g), oracle(a, g, 12).residue);
  EXPECT_EQ(residue_certificate(6).residue, cert.residue);
  EXPECT_EQ(residue_certificate(16).residue, cert.residue);
}

TEST(Residue, RejectsShortTruncation) {
  try {
    residue_certificate(5);
    FAIL() << "expected rejection";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(kMinResidueOrder)), std::string::npos);
  }
}

TEST(Residue, NonvanishingForPositiveA) {
  const ResidueCertificate cert = residue_certificate();
  EXPECT_TRUE(cert.positive_at_g3_one);
  EXPECT_TRUE(all_coefficients_positive(cert.residue.substitute_g3(1)));
}

TEST(Residue, ProportionalityHelper) {
  EXPECT_EQ(proportionality_factor(A * q(3) + G * q(6), A + G * q(2)), Rational(3));
  EXPECT_FALSE(proportionality_factor(A + G, A + G * q(2)).has_value());
  EXPECT_FALSE(proportionality_factor(A, Polynomial()).has_value());
  EXPECT_FALSE(all_coefficients_positive(A - Polynomial(1)));
}

// The printed bracket should equal the residue up to one rational constant.
TEST(Residue, MatchesReferenceBracketUpToFactor) {
  const ResidueCertificate cert = residue_certificate();
  ASSERT_TRUE(cert.factor.has_value()) << "residue " << cert.residue.str() << " vs reference "
                                       << cert.reference.str();
  for (const auto& [a, g] : random_points(50, 4))
    EXPECT_EQ(cert.reference.evaluate(a, g), *cert.factor * cert.residue.evaluate(a, g));
}

}  // namespace
}  // namespace kg
