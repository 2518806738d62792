#include <gtest/gtest.h>

#include <random>

#include "cutpoint/exactmath/errors.hpp"
#include "cutpoint/exactmath/matrix.hpp"
#include "cutpoint/exactmath/number_theory.hpp"
#include "cutpoint/exactmath/scalar.hpp"
#include "cutpoint/exactmath/unitary.hpp"
#include "cutpoint/exactmath/validate.hpp"
#include "support/oracles.hpp"

using namespace cutpoint;
using oracle::q;

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> data;
  for (std::size_t i = 0; i < r * c; ++i) data.push_back(q(num(rng), den(rng)));
  return Matrix<Rational>(r, c, data);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/8"), q(3, 4));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_EQ(to_string(q(-3, 5)), "-3/5");
  EXPECT_EQ(to_string(q(0)), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, ZeroToTheZeroIsOne) {
  EXPECT_EQ(rational_pow(Rational(0), 0), 1);
  EXPECT_EQ(rational_pow(q(-2, 3), 3), q(-8, 27));
}

TEST(Rational, ToDoubleRoundsToNearest) {
  EXPECT_EQ(to_double(q(1, 10)), 0.1);
  EXPECT_EQ(to_double(q(3, 5)), 0.6);
  EXPECT_EQ(to_double(q(-2, 3)), -2.0 / 3.0);
  EXPECT_EQ(to_double(q(32125393, 244140625)), 0.131585609728);
}

TEST(Scalar, KindsAreKeptApart) {
  const Scalar exact(q(1, 2));
  const Scalar approx(0.5);
  EXPECT_TRUE(exact.is_exact());
  EXPECT_FALSE(approx.is_exact());
  EXPECT_FALSE(exact == approx);
  EXPECT_THROW(approx.rational(), DomainError);
  EXPECT_THROW(exact.real_double(), DomainError);
  EXPECT_DOUBLE_EQ(exact.to_approx_real(), 0.5);
  EXPECT_THROW(Scalar(Complex(0, 1)).to_approx_real(), DomainError);
}

TEST(PrimeExponents, Examples) {
  EXPECT_EQ(prime_exponents(Rational(12)), (PrimeExponentVector{{2, 2}, {3, 1}}));
  EXPECT_TRUE(prime_exponents(Rational(1)).empty());
  EXPECT_EQ(prime_exponents(q(8, 27)), (PrimeExponentVector{{2, 3}, {3, -3}}));
  EXPECT_THROW(prime_exponents(Rational(0)), DomainError);
  EXPECT_THROW(prime_exponents(q(-1, 2)), DomainError);
}

TEST(PrimeExponents, RoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(1, 100000);
  for (int i = 0; i < 300; ++i) {
    const Rational r = q(dist(rng), dist(rng));
    EXPECT_EQ(from_prime_exponents(prime_exponents(r)), r);
  }
}

TEST(PrimeExponents, LargePrimeCofactorBeyondBoundThrows) {
  // (10^6 + 3)^2 has no factor below the bound and cannot be certified.
  const Integer p = 1000003;
  EXPECT_THROW(prime_exponents(Rational(p * p), 1000), DomainError);
  EXPECT_EQ(prime_exponents(Rational(p)), (PrimeExponentVector{{p, 1}}));
}

TEST(LogsSameSign, Examples) {
  const std::vector<Rational> a = {2, 3, 1}, b = {q(1, 2), 2}, c = {q(1, 2), q(1, 3)}, empty;
  EXPECT_TRUE(logs_same_sign(a));
  EXPECT_FALSE(logs_same_sign(b));
  EXPECT_TRUE(logs_same_sign(c));
  EXPECT_TRUE(logs_same_sign(empty));
  const std::vector<Rational> bad = {0};
  EXPECT_THROW(logs_same_sign(bad), DomainError);
}

TEST(LogsRationallyEquivalent, Examples) {
  const std::vector<Rational> a = {4, 8}, b = {2, 3}, c = {q(1, 2), 2}, d = {1, 6, 36}, e = {q(4, 9), q(27, 8)};
  EXPECT_TRUE(logs_rationally_equivalent(a));
  EXPECT_FALSE(logs_rationally_equivalent(b));
  EXPECT_TRUE(logs_rationally_equivalent(c));
  EXPECT_TRUE(logs_rationally_equivalent(d));
  EXPECT_TRUE(logs_rationally_equivalent(e));
  const std::vector<Rational> bad = {q(-1, 2)};
  EXPECT_THROW(logs_rationally_equivalent(bad), DomainError);
}

TEST(LogsRationallyEquivalent, InvariantUnderRationalPowers) {
  std::mt19937_64 rng(2);
  const std::vector<Rational> pool = {2, 3, q(1, 2), q(2, 3), 6, q(9, 4), 1};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<unsigned long> e(1, 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> bases = {pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
    const bool before = logs_rationally_equivalent(bases);
    const unsigned long r = e(rng);
    // (b^r)^(p/r) = b^p stays rational.
    std::vector<Rational> raised;
    for (const auto& b : bases) raised.push_back(rational_pow(b, r));
    bases[0] = *rational_power(raised[0], -2, r);
    EXPECT_EQ(logs_rationally_equivalent(bases), before);
    EXPECT_EQ(logs_rationally_equivalent(raised), before);
  }
}

TEST(RationalPower, ExactRoots) {
  EXPECT_EQ(rational_power(q(8, 27), 2, 3), q(4, 9));
  EXPECT_EQ(rational_power(Rational(4), -1, 2), q(1, 2));
  EXPECT_FALSE(rational_power(Rational(2), 1, 2).has_value());
}

TEST(MatPow, Examples) {
  const Rational x = q(1, 2);
  const Matrix<Rational> ax{{0, 0, x}, {1, 0, x}, {0, 1, Rational(1 - 2 * x)}};
  EXPECT_EQ(mat_pow(ax, 2)(2, 0), 1);
  EXPECT_EQ(mat_pow(ax, 0), Matrix<Rational>::identity(3));
  const Matrix<Rational> r{{q(3, 5), q(-4, 5)}, {q(4, 5), q(3, 5)}};
  EXPECT_EQ(mat_pow(r, 2)(0, 0), q(-7, 25));
  EXPECT_THROW(mat_pow(Matrix<Rational>(2, 3), 2), DimensionError);
}

TEST(MatPow, AgreesWithRepeatedProductOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Matrix<Rational> m = random_matrix(rng, 3, 3);
    oracle::Grid g(3, std::vector<oracle::Q>(3));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) g[r][c] = m(r, c);
    oracle::Grid acc = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (unsigned long k = 0; k <= 9; ++k) {
      const Matrix<Rational> p = mat_pow(m, k);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) ASSERT_EQ(p(r, c), acc[r][c]) << "k=" << k;
      acc = oracle::mul(acc, g);
    }
  }
}

TEST(MatPow, ExponentsAdd) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const Matrix<Rational> m = random_matrix(rng, 2, 2);
    EXPECT_EQ(mat_pow(m, 7), mat_pow(m, 3) * mat_pow(m, 4));
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(Matrix<Rational>::identity(2), Matrix<Rational>::identity(2)), Matrix<Rational>::identity(4));
  const Matrix<Rational> b{{1, 2}, {3, 4}};
  EXPECT_EQ(kron(Matrix<Rational>(1, 1, {Rational(3)}), b), b * Rational(3));
  const Matrix<Rational> a{{1, 2}, {3, 4}};
  const Matrix<Rational> k = kron(a, Matrix<Rational>{{0, 5}, {6, 7}});
  ASSERT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(1, 3), 2 * 7);
  EXPECT_EQ(k(2, 1), 3 * 5);
}

TEST(Kron, MixedProduct) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_matrix(rng, 2, 3), b = random_matrix(rng, 2, 2);
    const auto c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 1);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Kron, TensorSquareOfRotationGivesSquaredCosine) {
  const Matrix<GaussianRational> r = to_gaussian(Matrix<Rational>{{q(3, 5), q(-4, 5)}, {q(4, 5), q(3, 5)}});
  const Matrix<GaussianRational> t = kron(conjugate(r), r);
  Matrix<GaussianRational> v = Matrix<GaussianRational>::basis(4, 0);
  const auto c = oracle::cosines(2, 1, 10);
  for (std::size_t k = 0; k <= 10; ++k) {
    EXPECT_EQ(v(0, 0), GaussianRational(Rational(c[k] * c[k]))) << "k=" << k;
    v = t * v;
  }
}

TEST(ValidateMatrix, Stochastic) {
  const Rational x = q(1, 2);
  const Matrix<Rational> ax{{0, 0, x}, {1, 0, x}, {0, 1, Rational(1 - 2 * x)}};
  EXPECT_TRUE(validate_matrix(MatrixKind::Stochastic, ax, 0).empty());
  const Matrix<Rational> bad{{q(1, 2), 0}, {q(2, 5), 1}};
  EXPECT_FALSE(validate_matrix(MatrixKind::Stochastic, bad, 0).empty());
  const Matrix<Rational> negative{{q(3, 2), 0}, {q(-1, 2), 1}};
  EXPECT_FALSE(validate_matrix(MatrixKind::Stochastic, negative, 0).empty());
}

TEST(ValidateMatrix, KrausAndUnitary) {
  const std::vector<Matrix<Rational>> reset = {Matrix<Rational>{{1, 0}, {0, 0}}, Matrix<Rational>{{0, 1}, {0, 0}}};
  EXPECT_TRUE(validate_matrix<Rational>(MatrixKind::KrausSet, reset, 0).empty());
  const std::vector<Matrix<Rational>> too_much = {Matrix<Rational>::identity(2), Matrix<Rational>{{0, 1}, {0, 0}}};
  EXPECT_FALSE(validate_matrix<Rational>(MatrixKind::KrausSet, too_much, 0).empty());
  EXPECT_FALSE(validate_matrix(MatrixKind::Unitary, Matrix<Rational>{{1, 1}, {0, 1}}, 0).empty());
  EXPECT_TRUE(validate_matrix(MatrixKind::Unitary, Matrix<Rational>{{q(3, 5), q(-4, 5)}, {q(4, 5), q(3, 5)}}, 0).empty());
}

TEST(ValidateMatrix, ProjectorAndDensity) {
  EXPECT_TRUE(validate_matrix(MatrixKind::Projector, Matrix<Rational>{{1, 0}, {0, 0}}, 0).empty());
  EXPECT_FALSE(validate_matrix(MatrixKind::Projector, Matrix<Rational>{{q(1, 2), 0}, {0, 0}}, 0).empty());
  EXPECT_TRUE(validate_matrix(MatrixKind::Density, Matrix<Rational>{{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}}, 0).empty());
  // Trace 1, Hermitian, leading minors 0 and 0, yet indefinite.
  EXPECT_FALSE(validate_matrix(MatrixKind::Density, Matrix<Rational>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, 0).empty());
  EXPECT_FALSE(validate_matrix(MatrixKind::Density, Matrix<Rational>{{1, 1}, {0, 0}}, 0).empty());
}

TEST(ValidateMatrix, ToleranceRules) {
  EXPECT_THROW(validate_matrix(MatrixKind::Unitary, Matrix<double>::identity(2), 0.0), DomainError);
  EXPECT_THROW(validate_matrix(MatrixKind::Unitary, Matrix<Rational>::identity(2), -1.0), DomainError);
  const Matrix<double> almost{{1.0 + 1e-14, 0.0}, {0.0, 1.0}};
  EXPECT_TRUE(validate_matrix(MatrixKind::Unitary, almost, 1e-12).empty());
}

TEST(CompleteToUnitary, Examples) {
  const std::vector<Complex> e1 = {1.0, 0.0, 0.0};
  const auto u1 = complete_to_unitary(e1);
  EXPECT_TRUE(validate_matrix(MatrixKind::Unitary, u1, 1e-12).empty());
  EXPECT_EQ(u1(0, 0), Complex(1.0));

  const std::vector<Complex> e2 = {0.0, 1.0};
  const auto u2 = complete_to_unitary(e2);
  EXPECT_EQ(u2(0, 1), Complex(1.0));
  EXPECT_EQ(u2(1, 0), Complex(1.0));

  // c (-lambda, u) for lambda = 1/2 over 2 states accepting state 0.
  const double c = 1.0 / std::sqrt(0.25 + 1.0);
  const std::vector<Complex> row = {-c * 0.5, c, 0.0, 0.0, 0.0};
  const auto u3 = complete_to_unitary(row);
  EXPECT_TRUE(validate_matrix(MatrixKind::Unitary, u3, 1e-12).empty());
  for (std::size_t j = 0; j < row.size(); ++j) EXPECT_NEAR(std::abs(u3(0, j) - row[j]), 0.0, 1e-15);
}

TEST(CompleteToUnitary, RandomRowsGiveUnitaries) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  for (int i = 0; i < 50; ++i) {
    std::vector<Complex> row(5);
    double norm = 0;
    for (auto& v : row) {
      v = Complex(g(rng), g(rng));
      norm += std::norm(v);
    }
    for (auto& v : row) v /= std::sqrt(norm);
    EXPECT_TRUE(validate_matrix(MatrixKind::Unitary, complete_to_unitary(row), 1e-12).empty());
  }
  const std::vector<Complex> not_unit = {1.0, 1.0};
  EXPECT_THROW(complete_to_unitary(not_unit), DomainError);
}
