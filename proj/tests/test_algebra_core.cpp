#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "logchern/multipoly.hpp"
#include "logchern/rational.hpp"
#include "logchern/unipoly.hpp"

using namespace logchern;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

MultiPoly lin(std::vector<long> c) { return MultiPoly::linear_form(c); }

MultiPoly random_homogeneous(std::mt19937& rng, std::size_t nvars, int degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<MultiPoly::Term> terms;
  for (const auto& m : monomials_of_degree(nvars, degree)) {
    int c = coeff(rng);
    if (c != 0 && rng() % 2 == 0) terms.emplace_back(m, Rational(c));
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

TEST(Rational, CanonicalRendering) {
  EXPECT_EQ(to_string(Rational(4, 6)), "2/3");
  EXPECT_EQ(to_string(Rational(-10, 5)), "-2");
  EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, ExactAdditionMatchesCrossMultiplication) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int k = 0; k < 1000; ++k) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    x.canonicalize();
    y.canonicalize();
    Rational sum = x + y;
    EXPECT_EQ(sum * Rational(b) * Rational(d), Rational(Integer(a) * d + Integer(c) * b));
    EXPECT_GT(sum.get_den(), 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), sum.get_num().get_mpz_t(), sum.get_den().get_mpz_t());
    EXPECT_EQ(g, 1);
  }
}

TEST(MultiPoly, DifferenceOfSquares) {
  auto x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(((x + y) * (x - y)).to_string(), "x^2 - y^2");
}

TEST(MultiPoly, MultiplicativeIdentity) {
  auto f = lin({1, -2, 3}) * lin({0, 1, 1});
  EXPECT_EQ(f * MultiPoly::constant(3, 1), f);
}

TEST(MultiPoly, ArityMismatchThrows) {
  EXPECT_THROW(var(2, 0) + var(3, 0), std::invalid_argument);
  EXPECT_THROW(var(2, 0) * var(3, 0), std::invalid_argument);
}

TEST(MultiPoly, ProductOfEightLinearFormsHasDegreeEight) {
  const std::vector<std::vector<long>> normals = {{1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},
                                                  {0, 0, 0, 1},  {1, 0, 0, -1}, {0, 1, 0, -1},
                                                  {1, 1, 1, 0},  {1, -1, 1, 0}};
  MultiPoly f = MultiPoly::constant(4, 1);
  for (const auto& a : normals) f *= lin(a);
  EXPECT_EQ(f.degree(), 8);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_EQ(f.nvars(), 4u);
}

TEST(MultiPoly, RingAxiomsOnRandomHomogeneousTriples) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 4;
    auto a = random_homogeneous(rng, n, rng() % 5);
    auto b = random_homogeneous(rng, n, rng() % 5);
    auto c = random_homogeneous(rng, n, rng() % 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    auto p = a * b;
    if (!p.is_zero()) {
      EXPECT_TRUE(p.is_homogeneous());
    }
  }
}

TEST(MultiPoly, SerializationIsDeterministic) {
  std::mt19937 rng(3);
  auto a = random_homogeneous(rng, 4, 3) * random_homogeneous(rng, 4, 2);
  auto copy = MultiPoly::from_terms(4, a.terms());
  EXPECT_EQ(a.to_string(), copy.to_string());
  EXPECT_EQ(a.to_string(), a.to_string());
}

TEST(MultiPoly, EulerIdentityForHomogeneous) {
  auto f = lin({1, 2, 0}) * lin({0, 1, -1}) * lin({3, 0, 1});
  MultiPoly euler(3);
  for (std::size_t i = 0; i < 3; ++i) euler += var(3, i) * f.derivative(i);
  EXPECT_EQ(euler, f.scaled(3));
}

TEST(TruncatedPoly, GeometricSeriesInverse) {
  auto a = TruncatedPolyZ(4, {1, -3});
  EXPECT_EQ(truncated_mul_inv(a), TruncatedPolyZ(4, {1, 3, 9, 27}));
}

TEST(TruncatedPoly, InverseOfOne) {
  EXPECT_EQ(truncated_mul_inv(TruncatedPolyZ::one(4)), TruncatedPolyZ::one(4));
}

TEST(TruncatedPoly, QuotientOfPowers) {
  // (1-2t)^5 / (1-3t)^2 mod t^4
  auto num = TruncatedPolyZ::linear(4, -2).pow(5);
  auto den = TruncatedPolyZ::linear(4, -3).pow(2);
  EXPECT_EQ(num * truncated_mul_inv(den), TruncatedPolyZ(4, {1, -4, 7, -2}));
}

TEST(TruncatedPoly, NonUnitConstantThrows) {
  EXPECT_THROW(truncated_mul_inv(TruncatedPolyZ(3, {2, 1})), std::domain_error);
  EXPECT_THROW(truncated_mul_inv(TruncatedPolyQ(3, {0, 1})), std::domain_error);
  auto half = truncated_mul_inv(TruncatedPolyQ(3, {2, 1}));
  EXPECT_EQ(half * TruncatedPolyQ(3, {2, 1}), TruncatedPolyQ::one(3));
}

TEST(TruncatedPoly, InverseTimesInputIsOne) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t len = 1 + rng() % 7;
    TruncatedPolyZ a(len);
    a[0] = (rng() % 2) ? 1 : -1;
    for (std::size_t i = 1; i < len; ++i) a[i] = c(rng);
    EXPECT_EQ(a * truncated_mul_inv(a), TruncatedPolyZ::one(len));
  }
}

TEST(TruncatedPoly, RendersWithExplicitSigns) {
  EXPECT_EQ(TruncatedPolyZ(4, {1, -4, 7, -5}).to_string("h"), "1 - 4h + 7h^2 - 5h^3");
  EXPECT_EQ(TruncatedPolyZ(4, {0, 8, -1, 9}).to_string("h"), "8h - h^2 + 9h^3");
}

TEST(UniPolyQ, SubstituteNegate) {
  UniPolyQ p{1, 7, 18, 17};
  EXPECT_EQ(substitute_negate(p), (UniPolyQ{1, -7, 18, -17}));
  EXPECT_EQ(substitute_negate(substitute_negate(p)), p);
  EXPECT_EQ(substitute_negate(UniPolyQ::constant(5)), UniPolyQ::constant(5));
  EXPECT_EQ(substitute_negate(UniPolyQ{0, 1}), (UniPolyQ{0, -1}));
}

TEST(UniPolyQ, BinomialPolynomials) {
  // binom(t+2, 3) = t^3/6 + t^2/2 + t/3
  EXPECT_EQ(UniPolyQ::binomial_in_t(2, 3), (UniPolyQ{0, Rational(1, 3), Rational(1, 2), Rational(1, 6)}));
  EXPECT_EQ(UniPolyQ::binomial_in_t(2, 3).to_string(), "1/6*t^3 + 1/2*t^2 + 1/3*t");
  for (long t = 0; t < 10; ++t) EXPECT_EQ(UniPolyQ::binomial_in_t(2, 3)(t), Rational(binomial(t + 2, 3)));
}

TEST(UniPolyQ, ExactLinearDivision) {
  UniPolyQ p = UniPolyQ{1, 1} * UniPolyQ{1, 7, 18, 17};
  EXPECT_EQ(p.divided_by_linear(-1), (UniPolyQ{1, 7, 18, 17}));
  EXPECT_THROW(UniPolyQ({1, 0, 1}).divided_by_linear(-1), std::domain_error);
}

TEST(UniPolyQ, ShiftMatchesEvaluation) {
  UniPolyQ p{Rational(-3, 2), 1, Rational(1, 2)};
  UniPolyQ q = p.shifted(-1);
  for (long t = -3; t < 4; ++t) EXPECT_EQ(q(t), p(t - 1));
}
