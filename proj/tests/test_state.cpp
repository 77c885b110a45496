#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qent/state.hpp"

using namespace qent;

TEST_CASE("random_density") {
  SUBCASE("scalar state") {
    const DensityOperator s = random_density(1, 1, 3);
    CHECK(s.matrix().mat()(0, 0).real() == doctest::Approx(1.0));
  }
  SUBCASE("deterministic per seed") {
    const DensityOperator a = random_density(4, 4, 99);
    const DensityOperator b = random_density(4, 4, 99);
    CHECK((a.matrix().mat() - b.matrix().mat()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("rank control") {
    const DensityOperator r = random_density(4, 2, 100);
    const Spectrum s = eig_hermitian(r.matrix());
    int above = 0;
    for (Index i = 0; i < 4; ++i) {
      if (s.eigenvalues(i) > support_cutoff(s)) ++above;
    }
    CHECK(above == 2);
  }
  SUBCASE("rank > dim rejected") {
    CHECK_THROWS_AS(random_density(2, 3, 0), InvalidInput);
  }
  SUBCASE("all generated states are valid") {
    for (int t = 0; t < 100; ++t) {
      const Index dim = 2 + static_cast<Index>(oracles::mix_seed(1, t) % 5);
      const Index rank =
          1 + static_cast<Index>(oracles::mix_seed(2, t) % dim);
      const DensityOperator rho =
          random_density(dim, rank, oracles::mix_seed(3, t));
      REQUIRE(rho.normalized());
      REQUIRE(rho.trace() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("random_channel") {
  SUBCASE("k = 1 forces a unitary") {
    const QuantumChannel c = random_channel(3, 3, 1, 5);
    REQUIRE(c.kraus().size() == 1);
    const Matrix& k = c.kraus().front();
    CHECK((k * k.adjoint() - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-9);
  }
  SUBCASE("trace one on the maximally mixed input") {
    const QuantumChannel c = random_channel(3, 2, 4, 6);
    const HermitianMatrix out =
        c.apply(HermitianMatrix::identity(3) * (1.0 / 3.0));
    CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("TP across 100 seeds") {
    for (int t = 0; t < 100; ++t) {
      const QuantumChannel c =
          random_channel(2 + t % 3, 2 + (t / 3) % 2, 1 + t % 4,
                         oracles::mix_seed(7, t));
      Matrix acc = Matrix::Zero(c.din(), c.din());
      for (const Matrix& k : c.kraus()) acc += k.adjoint() * k;
      REQUIRE((acc - Matrix::Identity(c.din(), c.din()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("apply_channel") {
  const DensityOperator rho = random_density(6, 6, 8).with_dims({2, 3});
  SUBCASE("identity channel") {
    const QuantumChannel id({Matrix::Identity(3, 3)});
    const DensityOperator out = apply_channel(rho, id, 1);
    CHECK((out.matrix().mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("full trace channel equals partial trace") {
    std::vector<Matrix> kraus;
    for (Index b = 0; b < 3; ++b) {
      Matrix k = Matrix::Zero(1, 3);
      k(0, b) = 1.0;
      kraus.push_back(k);
    }
    const DensityOperator out = apply_channel(rho, QuantumChannel(kraus), 1);
    const HermitianMatrix ref = partial_trace(rho.matrix(), {2, 3}, {0});
    CHECK((out.matrix().mat() - ref.mat()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(out.dims() == std::vector<Index>{2, 1});
  }
  SUBCASE("random channels preserve trace and positivity") {
    for (int t = 0; t < 100; ++t) {
      const QuantumChannel c =
          random_channel(3, 2 + t % 2, 1 + t % 3, oracles::mix_seed(9, t));
      const DensityOperator in =
          random_density(6, 1 + t % 6, oracles::mix_seed(10, t))
              .with_dims({2, 3});
      const DensityOperator out = apply_channel(in, c, 1);
      REQUIRE(out.trace() == doctest::Approx(1.0).epsilon(1e-10));
      REQUIRE(eig_hermitian(out.matrix()).min_eigenvalue() > -1e-10);
    }
  }
  SUBCASE("dimension mismatch") {
    const QuantumChannel c = random_channel(2, 2, 1, 0);
    CHECK_THROWS_AS(apply_channel(rho, c, 1), InvalidInput);
  }
}

TEST_CASE("apply_isometry") {
  const DensityOperator rho = random_density(4, 4, 11).with_dims({2, 2});
  SUBCASE("identity") {
    const Isometry v(Matrix::Identity(2, 2));
    const DensityOperator out = apply_isometry(rho, v, 0);
    CHECK((out.matrix().mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("qubit into qutrit keeps the spectrum") {
    const Isometry v = random_isometry(2, 3, 12);
    const DensityOperator out = apply_isometry(rho, v, 1);
    const RealVector flat = eig_hermitian(rho.matrix()).eigenvalues;
    const RealVector lifted = eig_hermitian(out.matrix()).eigenvalues;
    // lifted spectrum = original spectrum padded with zeros
    CHECK(lifted.tail(4).isApprox(flat, 1e-10));
    CHECK(lifted.head(2).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("spectrum preserved across 50 random isometries") {
    for (int t = 0; t < 50; ++t) {
      const Isometry v = random_isometry(2, 2 + t % 3,
                                         oracles::mix_seed(13, t));
      const DensityOperator out = apply_isometry(rho, v, 0);
      const RealVector a = eig_hermitian(rho.matrix()).eigenvalues;
      const RealVector b = eig_hermitian(out.matrix()).eigenvalues;
      REQUIRE(b.tail(a.size()).isApprox(a, 1e-10));
    }
  }
}

TEST_CASE("embed_classical") {
  SUBCASE("singleton") {
    Eigen::VectorXd p(1);
    p << 1.0;
    CHECK(embed_classical(p).matrix().mat()(0, 0).real() ==
          doctest::Approx(1.0));
  }
  SUBCASE("uniform bit") {
    Eigen::VectorXd p(2);
    p << 0.5, 0.5;
    const DensityOperator rho = embed_classical(p);
    CHECK((rho.matrix().mat() - Matrix::Identity(2, 2) / 2.0)
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  }
  SUBCASE("shannon entropy of (1/2,1/4,1/4)") {
    Eigen::VectorXd p(3);
    p << 0.5, 0.25, 0.25;
    const DensityOperator rho = embed_classical(p);
    const RealVector spec = eig_hermitian(rho.matrix()).eigenvalues;
    CHECK(oracles::shannon_bits(spec) == doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("negative entry") {
    Eigen::VectorXd p(2);
    p << 0.9, -0.1;
    CHECK_THROWS_AS(embed_classical(p), InvalidInput);
  }
}

TEST_CASE("tensor_power") {
  const DensityOperator rho = random_density(4, 3, 20).with_dims({2, 2});
  SUBCASE("n = 1") {
    const DensityOperator out = tensor_power(rho, 1);
    CHECK((out.matrix().mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() ==
          0.0);
  }
  SUBCASE("maximally mixed square") {
    Eigen::VectorXd p(2);
    p << 0.5, 0.5;
    const DensityOperator mm =
        embed_classical(p).with_dims({2});
    const DensityOperator out = tensor_power(mm, 2);
    CHECK((out.matrix().mat() - Matrix::Identity(4, 4) / 4.0)
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  }
  SUBCASE("spectrum is the outer product of spectra") {
    const DensityOperator sq = tensor_power(rho, 2);
    const RealVector base = eig_hermitian(rho.matrix()).eigenvalues;
    std::vector<double> expected;
    for (Index i = 0; i < base.size(); ++i) {
      for (Index j = 0; j < base.size(); ++j) {
        expected.push_back(base(i) * base(j));
      }
    }
    std::sort(expected.begin(), expected.end());
    const RealVector got = eig_hermitian(sq.matrix()).eigenvalues;
    for (Index i = 0; i < got.size(); ++i) {
      REQUIRE(got(i) ==
              doctest::Approx(expected[static_cast<std::size_t>(i)])
                  .epsilon(1e-9));
    }
    CHECK(sq.dims() == std::vector<Index>{2, 2, 2, 2});
  }
  SUBCASE("block order groups the copies per subsystem") {
    // Distinguishable diagonal factors make the reordering visible.
    Eigen::VectorXd pa(2), pb(2);
    pa << 0.9, 0.1;
    pb << 0.7, 0.3;
    const DensityOperator prod =
        DensityOperator(tensor_product(HermitianMatrix::diagonal(pa),
                                       HermitianMatrix::diagonal(pb)),
                        {2, 2});
    const DensityOperator sq = tensor_power(prod, 2);
    // Expected: p_a (x) p_a (x) p_b (x) p_b on the diagonal.
    Index idx = 0;
    for (Index a1 = 0; a1 < 2; ++a1) {
      for (Index a2 = 0; a2 < 2; ++a2) {
        for (Index b1 = 0; b1 < 2; ++b1) {
          for (Index b2 = 0; b2 < 2; ++b2) {
            REQUIRE(sq.matrix().mat()(idx, idx).real() ==
                    doctest::Approx(pa(a1) * pa(a2) * pb(b1) * pb(b2))
                        .epsilon(1e-12));
            ++idx;
          }
        }
      }
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(tensor_power(rho, 7), InvalidInput);
  }
}

TEST_CASE("purify") {
  SUBCASE("pure input stays product") {
    const Vector psi = random_pure_vector(3, 21);
    const DensityOperator rho(
        hermitian_unchecked(psi * psi.adjoint()), {3});
    const DensityOperator pur = purify(rho);
    const Spectrum s = eig_hermitian(pur.matrix());
    CHECK(s.max_eigenvalue() == doctest::Approx(1.0).epsilon(1e-10));
    const HermitianMatrix back =
        partial_trace(pur.matrix(), {3, 3}, {0});
    CHECK((back.mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("maximally mixed qubit gives a maximally entangled pair") {
    Eigen::VectorXd p(2);
    p << 0.5, 0.5;
    const DensityOperator pur = purify(embed_classical(p));
    const HermitianMatrix back = partial_trace(pur.matrix(), {2, 2}, {1});
    CHECK((back.mat() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK(eig_hermitian(pur.matrix()).max_eigenvalue() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("partial trace undoes purification") {
    const DensityOperator rho = random_density(4, 3, 22);
    const DensityOperator pur = purify(rho);
    REQUIRE(pur.dims() == std::vector<Index>{4, 4});
    const HermitianMatrix back = partial_trace(pur.matrix(), {4, 4}, {0});
    REQUIRE((back.mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("round trip across random states") {
    for (int t = 0; t < 50; ++t) {
      const Index d = 2 + static_cast<Index>(oracles::mix_seed(23, t) % 4);
      const Index rank = 1 + static_cast<Index>(oracles::mix_seed(24, t) % d);
      const DensityOperator rho =
          random_density(d, rank, oracles::mix_seed(25, t));
      const DensityOperator pur = purify(rho);
      const HermitianMatrix back =
          partial_trace(pur.matrix(), {d, d}, {0});
      REQUIRE((back.mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() <
              1e-10);
      const Spectrum s = eig_hermitian(pur.matrix());
      int above = 0;
      for (Index i = 0; i < s.eigenvalues.size(); ++i) {
        if (s.eigenvalues(i) > 1e-9) ++above;
      }
      REQUIRE(above == 1);
    }
  }
}

TEST_CASE("DensityOperator invariants") {
  SUBCASE("trace above one rejected") {
    CHECK_THROWS_AS(
        DensityOperator(HermitianMatrix::identity(2), {2}), InvalidInput);
  }
  SUBCASE("dims must factor the matrix") {
    CHECK_THROWS_AS(DensityOperator(HermitianMatrix::identity(6) * (1.0 / 6),
                                    {2, 2}),
                    InvalidInput);
  }
  SUBCASE("negative matrix rejected") {
    Eigen::VectorXd p(2);
    p << 0.9, -0.2;
    CHECK_THROWS_AS(DensityOperator(HermitianMatrix::diagonal(p), {2}),
                    InvalidInput);
  }
}
