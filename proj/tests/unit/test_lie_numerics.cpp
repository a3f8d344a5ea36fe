#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numbers>
#include <random>

#include "gauge_atlas/lie_numerics.hpp"

using namespace gauge_atlas;
using namespace gauge_atlas::lie;

namespace {

const Complex I(0.0, 1.0);
constexpr double pi = std::numbers::pi;

ComplexMatrix diag_i_minus_i() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = I;
  m(1, 1) = -I;
  return m;
}

// Oracle: ad(mu) on gl(r) = mu (x) 1 - 1 (x) mu^T in the matrix-unit basis,
// so Tr(ad mu ad nu) is a plain dense trace.  The centre of gl(r) adds
// nothing, hence the value equals the trace over su(r).
double dense_killing_oracle(const ComplexMatrix& mu, const ComplexMatrix& nu) {
  const auto r = mu.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(r, r);
  auto kron = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };
  const ComplexMatrix ad_mu = kron(mu, id) - kron(id, mu.transpose());
  const ComplexMatrix ad_nu = kron(nu, id) - kron(id, nu.transpose());
  return (ad_mu * ad_nu).trace().real();
}

}  // namespace

TEST(LieElement, RejectsNonSkew) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  try {
    LieElement x(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_element);
  }
}

TEST(LieElement, RejectsTrace) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = I;
  EXPECT_THROW(LieElement{m}, Error);
}

TEST(LieElement, RejectsRankOneAndNonSquare) {
  EXPECT_THROW(LieElement{ComplexMatrix::Zero(1, 1)}, Error);
  EXPECT_THROW(LieElement{ComplexMatrix::Zero(2, 3)}, Error);
}

TEST(Basis, OrthogonalWithNormTwo) {
  for (int r = 2; r <= 6; ++r) {
    const auto gram = basis_gram(r);
    EXPECT_LT((gram - 2.0 * Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(), 1e-13);
    for (const auto& x : su_basis(r)) EXPECT_TRUE(is_su_matrix(x));
  }
}

TEST(Basis, PauliForRankTwo) {
  const auto b = su_basis(2);
  ASSERT_EQ(b.size(), 3u);
  ComplexMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  EXPECT_LT((b[0] - I * s1).norm(), 1e-15);
  EXPECT_LT((b[1] - I * s2).norm(), 1e-15);
  EXPECT_LT((b[2] - I * s3).norm(), 1e-15);
}

TEST(AdOperator, ZeroElement) {
  const auto ad = ad_operator(LieElement::zero(2));
  EXPECT_EQ(ad.matrix.rows(), 3);
  EXPECT_EQ(ad.matrix.cwiseAbs().maxCoeff(), 0.0);
}

TEST(AdOperator, DiagonalEigenvalues) {
  // [H, E_12] = 2i E_12 and [H, E_21] = -2i E_21 for H = diag(i, -i).
  const auto ad = ad_operator(LieElement(diag_i_minus_i()));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(ad.matrix);
  std::vector<Complex> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + 3);
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return a.imag() < b.imag(); });
  EXPECT_NEAR(std::abs(ev[0] - Complex(0, -2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ev[1]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ev[2] - Complex(0, 2)), 0.0, 1e-12);
}

TEST(AdOperator, ActsAsCommutatorAndAnnihilatesMu) {
  std::mt19937_64 rng(11);
  for (int r = 2; r <= 4; ++r) {
    const auto mu = random_element(r, rng);
    const auto ad = ad_operator(mu);
    EXPECT_EQ(ad.matrix.rows(), r * r - 1);
    EXPECT_LT((ad.matrix * coordinates(mu)).cwiseAbs().maxCoeff(), 1e-12);
    const auto x = random_element(r, rng);
    EXPECT_LT((ad.matrix * coordinates(x) - coordinates(commutator(mu.entries(), x.entries()), su_basis(r)))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(AdOperator, SkewForGram) {
  std::mt19937_64 rng(5);
  for (int r = 2; r <= 5; ++r) {
    const auto ad = ad_operator(random_element(r, rng));
    const auto gram = basis_gram(r);
    EXPECT_LT((ad.matrix.transpose() * gram + gram * ad.matrix).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(KillingTrace, DiagonalIsMinusEight) {
  const LieElement h(diag_i_minus_i());
  EXPECT_NEAR(killing_trace(h, h), -8.0, 1e-12);
  // The conjugated form 2r tr(mu mu*) is +8: the identity carries tr(mu nu).
  EXPECT_NEAR(4.0 * (h.entries() * h.entries().adjoint()).trace().real(), 8.0, 1e-12);
}

TEST(KillingTrace, ZeroArgument) {
  std::mt19937_64 rng(2);
  EXPECT_EQ(killing_trace(LieElement::zero(3), random_element(3, rng)), 0.0);
}

TEST(KillingTrace, RankMismatch) {
  try {
    killing_trace(LieElement::zero(2), LieElement::zero(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::rank_mismatch);
  }
}

TEST(KillingTrace, AgreesWithDenseOracleAndIdentity) {
  std::mt19937_64 rng(2024);
  for (int r = 2; r <= 5; ++r) {
    for (int k = 0; k < 50; ++k) {
      const auto mu = random_element(r, rng);
      const auto nu = random_element(r, rng);
      const double value = killing_trace(mu, nu);
      EXPECT_NEAR(value, dense_killing_oracle(mu.entries(), nu.entries()), 1e-9);
      EXPECT_NEAR(value, 2.0 * r * (mu.entries() * nu.entries()).trace().real(), 1e-9);
    }
  }
}

TEST(KillingTrace, NegativeSemidefinite) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto mu = random_element(3, rng);
    EXPECT_LE(killing_trace(mu, mu), 0.0);
  }
}

TEST(InnerProduct, Examples) {
  const LieElement h(diag_i_minus_i());
  EXPECT_NEAR(inner_product(h, h, InnerProductScale::frobenius()), 2.0, 1e-15);
  std::mt19937_64 rng(1);
  EXPECT_EQ(inner_product(LieElement::zero(2), random_element(2, rng), InnerProductScale::frobenius()), 0.0);
  for (int r = 2; r <= 6; ++r) {
    const auto xi = coroot_element(r);
    EXPECT_NEAR(inner_product(xi, xi, InnerProductScale::coroot()), 2.0, 1e-12);
  }
}

TEST(InnerProduct, Errors) {
  EXPECT_THROW(InnerProductScale::custom(0.0), Error);
  EXPECT_THROW(InnerProductScale::custom(-1.0), Error);
  try {
    inner_product(LieElement::zero(2), LieElement::zero(3), InnerProductScale::frobenius());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::rank_mismatch);
  }
  EXPECT_THROW(inner_product(LieElement::zero(2), LieElement::zero(2), InnerProductScale{-1.0, ScaleFlavor::custom}),
               Error);
}

TEST(InnerProduct, SymmetricPositiveDefinite) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    const auto mu = random_element(4, rng);
    const auto nu = random_element(4, rng);
    const auto s = InnerProductScale::killing(4);
    EXPECT_NEAR(inner_product(mu, nu, s), inner_product(nu, mu, s), 1e-12);
    EXPECT_GT(inner_product(mu, mu, s), 0.0);
    // Equals kappa tr(mu nu*).
    EXPECT_NEAR(inner_product(mu, nu, s), 8.0 * (mu.entries() * nu.entries().adjoint()).trace().real(), 1e-10);
  }
  EXPECT_EQ(inner_product(LieElement::zero(4), LieElement::zero(4), InnerProductScale::frobenius()), 0.0);
}

TEST(InnerProduct, AdInvariant) {
  std::mt19937_64 rng(21);
  for (int r = 2; r <= 5; ++r) {
    for (int k = 0; k < 20; ++k) {
      const auto mu = random_element(r, rng);
      const auto nu = random_element(r, rng);
      const auto g = random_special_unitary(r, rng);
      const LieElement gmu(project_to_su(g * mu.entries() * g.adjoint()));
      const LieElement gnu(project_to_su(g * nu.entries() * g.adjoint()));
      const auto s = InnerProductScale::coroot();
      EXPECT_NEAR(inner_product(gmu, gnu, s), inner_product(mu, nu, s), 1e-9);
    }
  }
}

TEST(Coroot, Entries) {
  const auto xi2 = coroot_element(2);
  EXPECT_EQ(xi2.entries()(0, 1), Complex(0, 2 * pi));
  EXPECT_EQ(xi2.entries()(1, 0), Complex(0, 2 * pi));
  EXPECT_EQ(xi2.entries()(0, 0), Complex(0, 0));
  const auto xi3 = coroot_element(3);
  EXPECT_EQ(xi3.entries().row(2).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(xi3.entries().col(2).cwiseAbs().maxCoeff(), 0.0);
  for (int r = 2; r <= 8; ++r) EXPECT_EQ(std::abs(coroot_element(r).entries().trace()), 0.0);
  EXPECT_THROW(coroot_element(1), Error);
}

TEST(UnitaryExp, Examples) {
  EXPECT_LT((unitary_exp(LieElement::zero(3)) - ComplexMatrix::Identity(3, 3)).norm(), 1e-14);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = I * pi;
  d(1, 1) = -I * pi;
  EXPECT_LT((unitary_exp(LieElement(d)) + ComplexMatrix::Identity(2, 2)).norm(), 1e-12);
  // xi = 2 pi i sigma_1 has eigenvalues +-2 pi i, so exp(xi) = Id exactly.
  EXPECT_LT((unitary_exp(coroot_element(2)) - ComplexMatrix::Identity(2, 2)).norm(), 1e-12);
}

TEST(UnitaryExp, CorootEigenvalues) {
  for (int r = 2; r <= 6; ++r) {
    // exp(t xi) = cos(2 pi t) + i sin(2 pi t) sigma_1 on the first two
    // coordinates and the identity elsewhere.
    EXPECT_LT((unitary_exp(coroot_element(r)) - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff(), 1e-9) << r;
    ComplexMatrix half = ComplexMatrix::Identity(r, r);
    half(0, 0) = half(1, 1) = -1.0;
    EXPECT_LT((unitary_exp(0.5 * coroot_element(r).entries()) - half).cwiseAbs().maxCoeff(), 1e-9) << r;
  }
}

TEST(UnitaryExp, SpecialUnitaryAndMatchesTaylor) {
  std::mt19937_64 rng(4);
  for (int r = 2; r <= 5; ++r) {
    const auto mu = random_element(r, rng);
    const auto u = unitary_exp(mu);
    EXPECT_LT((u * u.adjoint() - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT(std::abs(u.determinant() - 1.0), 1e-9);
    // Taylor series with scaling and squaring as an independent oracle.
    ComplexMatrix a = mu.entries() / 1024.0;
    ComplexMatrix term = ComplexMatrix::Identity(r, r), sum = term;
    for (int k = 1; k < 20; ++k) {
      term = term * a / static_cast<double>(k);
      sum += term;
    }
    for (int k = 0; k < 10; ++k) sum = sum * sum;
    EXPECT_LT((u - sum).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(RandomElement, SeededAndValid) {
  std::mt19937_64 a(99), b(99);
  const auto x = random_element(3, a);
  const auto y = random_element(3, b);
  EXPECT_EQ(x.entries(), y.entries());
  EXPECT_TRUE(is_su_matrix(x.entries()));
}
