#include "postorder/channel.hpp"
#include "postorder/error.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

using namespace postorder;
using namespace postorder::testing;

namespace {

Eigen::MatrixXcd random_density(Rng& rng, int d, double weight) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd g(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) g(a, b) = {normal(rng), normal(rng)};
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  return weight * rho / rho.trace().real();
}

}  // namespace

TEST(Superoperator, ConstructionChecks) {
  EXPECT_THROW(Superoperator(2, 2, Eigen::MatrixXcd::Identity(3, 3)), DimensionError);
  // a -> i a is not Hermiticity preserving.
  Eigen::MatrixXcd bad = std::complex<double>(0, 1) * Eigen::MatrixXcd::Identity(4, 4);
  EXPECT_THROW(Superoperator(2, 2, bad), ValidationError);
  EXPECT_NO_THROW(transpose_map(3));
}

TEST(Superoperator, PredualMatchesTracePairing) {
  Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    Superoperator s = random_channel(rng, 2, 3, 2);
    Eigen::MatrixXcd rho = random_density(rng, 3, 1.0);
    Eigen::MatrixXcd a = random_density(rng, 2, 1.0) - random_density(rng, 2, 0.5);
    const std::complex<double> lhs = (rho * s(a)).trace();
    const std::complex<double> rhs = (s.predual()(rho) * a).trace();
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
  }
}

TEST(Choi, Examples) {
  ChoiMatrix c = choi(identity_channel(2));
  Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(4, 4);
  omega(0, 0) = omega(0, 3) = omega(3, 0) = omega(3, 3) = 1.0;
  EXPECT_LT((c.matrix - omega).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(is_cp(identity_channel(2)));
  EXPECT_TRUE(is_unital(identity_channel(2)));

  EXPECT_FALSE(is_cp(transpose_map(2)));
  EXPECT_NEAR(hermitian_eigenvalues(choi(transpose_map(2)).matrix).minCoeff(), -1.0, 1e-12);
  EXPECT_TRUE(is_unital(transpose_map(2)));
}

TEST(Channels, StandardMaps) {
  for (const auto& s : {depolarizing_channel(3, 0.25), dephasing_channel(3), constant_channel(3, 2)}) {
    EXPECT_TRUE(is_cp(s));
    EXPECT_TRUE(is_unital(s));
  }
  Rng rng(83);
  Superoperator k = random_channel(rng, 3, 2, 3);
  EXPECT_EQ(k.dim_in(), 3);
  EXPECT_EQ(k.dim_out(), 2);
  EXPECT_TRUE(is_cp(k));
  EXPECT_TRUE(is_unital(k));
}

TEST(Channels, ComposeAndTensor) {
  EXPECT_LT(max_distance(compose(identity_channel(2), dephasing_channel(2)), dephasing_channel(2)), 1e-15);
  EXPECT_THROW(compose(identity_channel(2), identity_channel(3)), DimensionError);
  Superoperator lifted = tensor_with_identity(dephasing_channel(2), 2);
  EXPECT_EQ(lifted.dim_in(), 4);
  EXPECT_TRUE(is_cp(lifted));
  EXPECT_TRUE(is_unital(lifted));
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(2, 2);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Random(2, 2);
  Eigen::MatrixXcd ab = Eigen::kroneckerProduct(a, b);
  Eigen::MatrixXcd expected = Eigen::kroneckerProduct(dephasing_channel(2)(a), b);
  EXPECT_LT((lifted(ab) - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(max_distance(tensor_with_identity(identity_channel(2), 3), identity_channel(6)), 1e-15);
}

TEST(QcChannel, Examples) {
  QuantumEvm trivial(2, {GaussianMatrix::identity(2)});
  Superoperator g = qc_channel(trivial);
  EXPECT_EQ(g.dim_in(), 1);
  QuantumEvm comp(2, {real_gaussian({{q(1), q(0)}, {q(0), q(0)}}), real_gaussian({{q(0), q(0)}, {q(0), q(1)}})});
  Superoperator gc = qc_channel(comp);
  Eigen::MatrixXcd e00 = Eigen::MatrixXcd::Zero(2, 2);
  e00(0, 0) = 1;
  EXPECT_LT((gc(e00) - e00).cwiseAbs().maxCoeff(), 1e-15);

  Rng rng(89);
  for (int t = 0; t < 10; ++t) {
    Superoperator r = qc_channel(random_povm(rng, uniform_int(rng, 2, 3), 3));
    EXPECT_TRUE(is_cp(r));
    EXPECT_TRUE(is_unital(r));
  }
}

TEST(QcChannel, MarkovWitnessFactorsTheChannels) {
  Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    const int d = uniform_int(rng, 2, 3);
    QuantumEvm n = random_povm(rng, d, 3);
    QuantumEvm m(d, {n.effect(0) + n.effect(2), n.effect(1)});
    auto v = qcompare(m, n);
    ASSERT_NE(v.forward_witness(), nullptr);
    Superoperator phi = markov_channel(*v.forward_witness());
    EXPECT_TRUE(verify_factorization(qc_channel(m), qc_channel(n), phi, 1e-9));
  }
}

TEST(EntangledBasis, Orthonormal) {
  for (int d = 1; d <= 4; ++d) {
    auto basis = entangled_basis(d);
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(d * d));
    Eigen::MatrixXcd gram(d * d, d * d);
    for (int i = 0; i < d * d; ++i) {
      for (int j = 0; j < d * d; ++j) gram(i, j) = basis[static_cast<std::size_t>(i)].dot(basis[static_cast<std::size_t>(j)]);
    }
    EXPECT_LT((gram - Eigen::MatrixXcd::Identity(d * d, d * d)).cwiseAbs().maxCoeff(), 1e-12);
  }
  auto b2 = entangled_basis(2);
  EXPECT_NEAR(b2[0](0).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b2[0](3).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(b2[0](1)) + std::abs(b2[0](2)), 0.0, 1e-15);
  EXPECT_NEAR(entangled_basis(1)[0](0).real(), 1.0, 1e-15);
}

TEST(PhiFromBlocks, BellProjectorsGiveIdentity) {
  for (int d = 2; d <= 3; ++d) {
    std::vector<Eigen::MatrixXcd> mt;
    for (const auto& eta : entangled_basis(d)) mt.push_back(eta * eta.adjoint());
    EXPECT_LT(max_distance(phi_from_blocks(mt, d), identity_channel(d)), 1e-10);
  }
}

TEST(PhiFromBlocks, RecoversRandomChannels) {
  Rng rng(101);
  for (int t = 0; t < 20; ++t) {
    const int d = uniform_int(rng, 2, 3);
    const int dj = uniform_int(rng, 1, 3);
    Superoperator psi = random_channel(rng, d, dj, 2);
    Superoperator phi = phi_from_blocks(blocks_from_channel(psi), d);
    EXPECT_TRUE(is_cp(phi));
    EXPECT_TRUE(is_unital(phi));
    EXPECT_LT(max_distance(phi, psi), 1e-8);
    EXPECT_TRUE(verify_factorization(compose(dephasing_channel(dj), psi), dephasing_channel(dj), phi, 1e-8));
  }
}

TEST(PhiFromBlocks, RandomPovmInputsGiveUnitalCpMaps) {
  Rng rng(103);
  for (int t = 0; t < 20; ++t) {
    const int d = uniform_int(rng, 2, 3);
    const int dj = 2;
    QuantumEvm m = random_povm(rng, dj * d, d * d);
    std::vector<Eigen::MatrixXcd> mt;
    for (const auto& e : m.effects()) mt.push_back(e.to_complex());
    Superoperator phi = phi_from_blocks(mt, d);
    EXPECT_TRUE(is_cp(phi));
    EXPECT_TRUE(is_unital(phi));
  }
}

TEST(PhiFromBlocks, RejectsBadInput) {
  std::vector<Eigen::MatrixXcd> mt(4, Eigen::MatrixXcd::Identity(4, 4) / 8.0);
  EXPECT_THROW(phi_from_blocks(mt, 2), ValidationError);
  EXPECT_THROW(phi_from_blocks(std::vector<Eigen::MatrixXcd>(3, Eigen::MatrixXcd::Identity(4, 4) / 3.0), 2),
               DimensionError);
}

TEST(VerifyFactorization, Examples) {
  EXPECT_TRUE(verify_factorization(identity_channel(2), identity_channel(2), identity_channel(2)));
  Superoperator psi = depolarizing_channel(2, 0.5);
  Superoperator phi = phi_from_blocks(blocks_from_channel(psi), 2);
  EXPECT_TRUE(verify_factorization(psi, identity_channel(2), phi, 1e-9));
  EXPECT_FALSE(verify_factorization(dephasing_channel(2), constant_channel(2, 2), identity_channel(2), 1e-9));
  EXPECT_FALSE(verify_factorization(transpose_map(2), identity_channel(2), transpose_map(2), 1e-9));
}

TEST(Helstrom, SideInformationDeskCheck) {
  Rng rng(107);
  for (int t = 0; t < 50; ++t) {
    const int dk = 2;
    const int dj = uniform_int(rng, 2, 3);
    const int dh = 2;
    Superoperator psi = random_channel(rng, dk, dj, 2);
    Superoperator lambda = random_channel(rng, dj, dh, 2);
    Superoperator gamma = compose(lambda, psi);
    const double w = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Eigen::MatrixXcd r0 = random_density(rng, 2 * dh, w);
    Eigen::MatrixXcd r1 = random_density(rng, 2 * dh, 1.0 - w);
    const double pg_gamma = helstrom_binary(r0, r1, tensor_with_identity(gamma, 2));
    const double pg_lambda = helstrom_binary(r0, r1, tensor_with_identity(lambda, 2));
    EXPECT_LE(pg_gamma, pg_lambda + 1e-8);
  }
}
