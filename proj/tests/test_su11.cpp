#include <vcsirreps/repcheck.hpp>
#include <vcsirreps/su11.hpp>

#include "oracles/oracles.hpp"

#include <gtest/gtest.h>

using namespace vcsirreps;

namespace {

Radical entry(const OperatorMatrix& op, std::size_t r, std::size_t c) {
  auto it = op.exact.find({r, c});
  return it == op.exact.end() ? Radical() : it->second;
}

repcheck::Restriction interior(const su11::Irrep& irrep) { return {static_cast<std::size_t>(irrep.n_max)}; }

}  // namespace

TEST(Su11Irrep, Validation) {
  EXPECT_THROW((su11::Irrep{Rational(0), 4}.validate()), std::invalid_argument);
  EXPECT_THROW((su11::Irrep{Rational(-1, 2), 4}.validate()), std::invalid_argument);
  EXPECT_THROW((su11::Irrep{Rational(2), 0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((su11::Irrep{Rational(1, 3), 1}.validate()));
}

TEST(KFactor, Examples) {
  EXPECT_EQ(su11::k_factor({Rational(5, 2), 3}, 0), Radical(1));
  EXPECT_EQ(su11::k_factor({Rational(1), 6}, 5), Radical(1));
  EXPECT_EQ(su11::k_factor({Rational(3), 4}, 2), Radical::sqrt(6));
  EXPECT_THROW(su11::k_factor({Rational(3), 4}, 5), std::out_of_range);
  EXPECT_THROW(su11::k_factor({Rational(3), 4}, -1), std::out_of_range);
}

TEST(KFactor, MatchesRecursionOracle) {
  for (Rational lambda : {Rational(1, 2), Rational(1), Rational(7, 3), Rational(5)}) {
    su11::Irrep irrep{lambda, 12};
    auto squares = oracles::su11_recursion_squares(lambda, 12);
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(su11::k_factor(irrep, n).square(), squares[n]);
  }
}

TEST(Generators, MatrixElements) {
  auto ops = su11::generator_matrices({Rational(2), 5});
  EXPECT_EQ(entry(ops.at("S0"), 0, 0), Radical(1));
  auto ops3 = su11::generator_matrices({Rational(3), 5});
  EXPECT_EQ(entry(ops3.at("S+"), 1, 0), Radical::sqrt(3));
  EXPECT_EQ(ops3.at("S-").values.col(0).norm(), 0.0);
  EXPECT_EQ(ops3.at("S0").dim, 6u);
}

TEST(Generators, HermiticityAndInteriorCommutatorsExact) {
  for (Rational lambda : {Rational(1), Rational(2), Rational(7, 2), Rational(2, 5)}) {
    su11::Irrep irrep{lambda, 9};
    auto ops = su11::generator_matrices(irrep);
    auto spec = repcheck::su11_spec();
    EXPECT_EQ(SurdMatrix::from(ops.at("S+")), SurdMatrix::from(ops.at("S-")).transpose());
    EXPECT_EQ(repcheck::exact_hermiticity_failures(spec, ops), 0u);
    EXPECT_EQ(repcheck::exact_commutator_failures(spec, ops, interior(irrep)), 0u);
    EXPECT_GT(repcheck::exact_commutator_failures(spec, ops), 0u);  // boundary defect
    auto scalar = repcheck::exact_scalar(repcheck::exact_casimir(spec, ops, interior(irrep)));
    ASSERT_TRUE(scalar.has_value());
    EXPECT_EQ(*scalar, Surd(lambda * lambda / 4 - lambda / 2));
  }
}

TEST(SKernel, Examples) {
  auto ones = su11::s_kernel_coefficients({Rational(1), 8}, 8);
  for (const auto& c : ones) EXPECT_EQ(c, 1);
  auto two = su11::s_kernel_coefficients({Rational(2), 8}, 8);
  EXPECT_EQ(two, oracles::geometric_power(2, 8));
  auto three = su11::s_kernel_coefficients({Rational(3), 6}, 6);
  EXPECT_EQ(three, oracles::geometric_power(3, 6));
  EXPECT_EQ(su11::s_kernel_coefficients({Rational(9, 4), 3}, 3).front(), 1);
  EXPECT_THROW(su11::s_kernel_coefficients({Rational(2), 3}, 4), std::out_of_range);
}

TEST(SKernel, EqualsKFactorSquares) {
  su11::Irrep irrep{Rational(7, 2), 15};
  auto coeffs = su11::s_kernel_coefficients(irrep, 15);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(coeffs[n], su11::k_factor(irrep, n).square());
}

TEST(Metadata, ConvergenceRadius) { EXPECT_EQ(su11::kKernelConvergenceRadius, 1.0); }
