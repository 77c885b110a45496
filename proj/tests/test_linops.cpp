#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qent/linops.hpp"
#include "qent/state.hpp"

using namespace qent;

namespace {

Matrix random_hermitian_raw(Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = Complex(nd(rng), nd(rng));
  return m;
}

const Matrix kPauliX = [] {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}();

}  // namespace

TEST_CASE("construction symmetrizes exactly") {
  const Matrix raw = random_hermitian_raw(5, 1);
  const HermitianMatrix h(raw);
  for (Index i = 0; i < 5; ++i) {
    for (Index j = 0; j < 5; ++j) {
      CHECK(h.mat()(i, j) == std::conj(h.mat()(j, i)));
    }
  }
}

TEST_CASE("eig_hermitian basics") {
  SUBCASE("identity") {
    const Spectrum s = eig_hermitian(HermitianMatrix::identity(2));
    CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
  }
  SUBCASE("pauli x") {
    const Spectrum s = eig_hermitian(HermitianMatrix(kPauliX));
    CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
  }
  SUBCASE("random 8x8 reconstruction") {
    const HermitianMatrix h(random_hermitian_raw(8, 2));
    const Spectrum s = eig_hermitian(h);
    const Matrix rec = s.eigenvectors *
                       s.eigenvalues.cast<Complex>().asDiagonal() *
                       s.eigenvectors.adjoint();
    CHECK((rec - h.mat()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("eigendecomposition reconstruction property, dims 2..16") {
  for (int trial = 0; trial < 500; ++trial) {
    const Index d = 2 + static_cast<Index>(oracles::mix_seed(11, trial) % 15);
    const HermitianMatrix h(
        random_hermitian_raw(d, oracles::mix_seed(12, trial)));
    const Spectrum s = eig_hermitian(h);
    const Matrix rec = s.eigenvectors *
                       s.eigenvalues.cast<Complex>().asDiagonal() *
                       s.eigenvectors.adjoint();
    REQUIRE((rec - h.mat()).cwiseAbs().maxCoeff() < 1e-10 * d);
    REQUIRE((s.eigenvectors.adjoint() * s.eigenvectors -
             Matrix::Identity(d, d))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    for (Index i = 0; i + 1 < d; ++i) {
      REQUIRE(s.eigenvalues(i) <= s.eigenvalues(i + 1));
    }
  }
}

TEST_CASE("matrix_function") {
  SUBCASE("sqrt of diag(4,1)") {
    Eigen::VectorXd d(2);
    d << 4, 1;
    const HermitianMatrix r = matrix_function(
        HermitianMatrix::diagonal(d), [](double t) { return std::sqrt(t); },
        false);
    CHECK(r.mat()(0, 0).real() == doctest::Approx(2.0));
    CHECK(r.mat()(1, 1).real() == doctest::Approx(1.0));
  }
  SUBCASE("inverse on support of diag(2,0)") {
    Eigen::VectorXd d(2);
    d << 2, 0;
    const HermitianMatrix r = matrix_function(
        HermitianMatrix::diagonal(d), [](double t) { return 1.0 / t; }, true);
    CHECK(r.mat()(0, 0).real() == doctest::Approx(0.5));
    CHECK(r.mat()(1, 1).real() == doctest::Approx(0.0));
  }
  SUBCASE("power composition t^1.5 then t^(2/3)") {
    const DensityOperator rho = random_density(6, 6, 77);
    const HermitianMatrix a = matrix_function(
        rho.matrix(), [](double t) { return std::pow(t, 1.5); }, true);
    const HermitianMatrix b = matrix_function(
        a, [](double t) { return std::pow(t, 2.0 / 3.0); }, true);
    CHECK((b.mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() < 1e-9);
  }
  SUBCASE("log at 0 without support restriction is a domain error") {
    Eigen::VectorXd d(2);
    d << 1, 0;
    CHECK_THROWS_AS(matrix_function(HermitianMatrix::diagonal(d),
                                    [](double t) { return std::log2(t); },
                                    false),
                    InvalidInput);
  }
}

TEST_CASE("partial_trace") {
  SUBCASE("product state") {
    const DensityOperator rho = random_density(3, 3, 5);
    const DensityOperator sig = random_density(2, 2, 6);
    const HermitianMatrix joint =
        tensor_product(rho.matrix(), sig.matrix());
    const HermitianMatrix red = partial_trace(joint, {3, 2}, {0});
    CHECK((red.mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("maximally entangled marginal") {
    Vector phi(4);
    phi << 1, 0, 0, 1;
    phi /= std::sqrt(2.0);
    const HermitianMatrix bell = hermitian_unchecked(phi * phi.adjoint());
    const HermitianMatrix red = partial_trace(bell, {2, 2}, {0});
    CHECK((red.mat() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("random tripartite vs naive index sum") {
    const DensityOperator rho = random_density(2 * 3 * 2, 7, 8);
    const HermitianMatrix red =
        partial_trace(rho.matrix(), {2, 3, 2}, {0, 2});
    const Matrix ref =
        oracles::ptrace_middle_naive(rho.matrix().mat(), 2, 3, 2);
    CHECK((red.mat() - ref).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("dims mismatch") {
    CHECK_THROWS_AS(
        partial_trace(HermitianMatrix::identity(6), {2, 2}, {0}),
        InvalidInput);
  }
  SUBCASE("trace and positivity preserved") {
    for (int trial = 0; trial < 200; ++trial) {
      const DensityOperator rho =
          random_density(6, 1 + trial % 6, oracles::mix_seed(21, trial));
      const HermitianMatrix red = partial_trace(
          rho.matrix(), {2, 3}, {trial % 2 ? 0u : 1u});
      REQUIRE(red.trace() == doctest::Approx(1.0).epsilon(1e-12));
      REQUIRE(eig_hermitian(red).min_eigenvalue() >= -1e-12);
    }
  }
}

TEST_CASE("tensor_product") {
  SUBCASE("identities") {
    const HermitianMatrix i4 =
        tensor_product(HermitianMatrix::identity(2), HermitianMatrix::identity(2));
    CHECK((i4.mat() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("diagonal order") {
    Eigen::VectorXd a(2), b(2);
    a << 1, 2;
    b << 3, 4;
    const HermitianMatrix t = tensor_product(HermitianMatrix::diagonal(a),
                                             HermitianMatrix::diagonal(b));
    CHECK(t.mat()(0, 0).real() == doctest::Approx(3));
    CHECK(t.mat()(1, 1).real() == doctest::Approx(4));
    CHECK(t.mat()(2, 2).real() == doctest::Approx(6));
    CHECK(t.mat()(3, 3).real() == doctest::Approx(8));
  }
  SUBCASE("trace multiplicativity") {
    for (int trial = 0; trial < 50; ++trial) {
      const HermitianMatrix a(
          random_hermitian_raw(3, oracles::mix_seed(31, trial)));
      const HermitianMatrix b(
          random_hermitian_raw(4, oracles::mix_seed(32, trial)));
      REQUIRE(tensor_product(a, b).trace() ==
              doctest::Approx(a.trace() * b.trace()).epsilon(1e-10));
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(tensor_product(HermitianMatrix::identity(100),
                                   HermitianMatrix::identity(100)),
                    InvalidInput);
  }
}

TEST_CASE("positive_part") {
  Eigen::VectorXd d(2);
  d << 1, -1;
  const HermitianMatrix pp = positive_part(HermitianMatrix::diagonal(d));
  CHECK(pp.mat()(0, 0).real() == doctest::Approx(1.0));
  CHECK(pp.mat()(1, 1).real() == doctest::Approx(0.0));

  const DensityOperator rho = random_density(4, 4, 9);
  CHECK((positive_part(rho.matrix()).mat() - rho.matrix().mat())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(positive_part(rho.matrix() * -1.0).mat().cwiseAbs().maxCoeff() <
        1e-12);

  SUBCASE("dominates and reconstructs") {
    for (int trial = 0; trial < 100; ++trial) {
      const HermitianMatrix h(
          random_hermitian_raw(5, oracles::mix_seed(41, trial)));
      const HermitianMatrix pos = positive_part(h);
      REQUIRE(operator_geq(pos, HermitianMatrix::zero(5), 1e-10));
      REQUIRE(operator_geq(pos, h, 1e-10));
      const HermitianMatrix neg = positive_part(h * -1.0);
      REQUIRE((pos.mat() - neg.mat() - h.mat()).cwiseAbs().maxCoeff() <
              1e-10);
    }
  }
}

TEST_CASE("fidelity") {
  SUBCASE("with itself: trace") {
    const DensityOperator rho = random_density(4, 3, 10);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("pure overlap") {
    const Vector a = random_pure_vector(4, 11);
    const Vector b = random_pure_vector(4, 12);
    const HermitianMatrix pa = hermitian_unchecked(a * a.adjoint());
    const HermitianMatrix pb = hermitian_unchecked(b * b.adjoint());
    CHECK(fidelity(pa, pb) ==
          doctest::Approx(std::abs((a.adjoint() * b)(0, 0))).epsilon(1e-10));
  }
  SUBCASE("commuting diagonals match the classical sum") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    Eigen::VectorXd p(5), q(5);
    for (Index i = 0; i < 5; ++i) {
      p(i) = ud(rng);
      q(i) = ud(rng);
    }
    p /= p.sum();
    q /= q.sum();
    CHECK(fidelity(HermitianMatrix::diagonal(p),
                   HermitianMatrix::diagonal(q)) ==
          doctest::Approx(oracles::bhattacharyya(p, q)).epsilon(1e-10));
  }
  SUBCASE("symmetry and unitary invariance") {
    for (int trial = 0; trial < 50; ++trial) {
      const DensityOperator r =
          random_density(4, 2 + trial % 3, oracles::mix_seed(51, trial));
      const DensityOperator s =
          random_density(4, 1 + trial % 4, oracles::mix_seed(52, trial));
      const double f = fidelity(r, s);
      REQUIRE(std::abs(f - fidelity(s, r)) < 1e-10);
      const Isometry u = random_isometry(4, 4, oracles::mix_seed(53, trial));
      const auto rot = [&](const DensityOperator& x) {
        return apply_isometry(x, u, 0);
      };
      REQUIRE(std::abs(f - fidelity(rot(r), rot(s))) < 1e-9);
      REQUIRE(f >= 0.0);
      REQUIRE(f <= 1.0 + 1e-10);
    }
  }
  SUBCASE("not a state") {
    Eigen::VectorXd bad(2);
    bad << 1.0, -0.5;
    CHECK_THROWS_AS(fidelity(HermitianMatrix::diagonal(bad),
                             HermitianMatrix::identity(2)),
                    InvalidInput);
  }
}

TEST_CASE("purified_distance") {
  const DensityOperator rho = random_density(4, 4, 14);
  CHECK(purified_distance(rho, rho) == doctest::Approx(0.0).epsilon(1e-7));

  const Vector e0 = Vector::Unit(2, 0), e1 = Vector::Unit(2, 1);
  const HermitianMatrix p0 = hermitian_unchecked(e0 * e0.adjoint());
  const HermitianMatrix p1 = hermitian_unchecked(e1 * e1.adjoint());
  CHECK(purified_distance(p0, p1) == doctest::Approx(1.0));

  Eigen::VectorXd pure(2), mixed(2);
  pure << 1, 0;
  mixed << 0.5, 0.5;
  CHECK(purified_distance(HermitianMatrix::diagonal(pure),
                          HermitianMatrix::diagonal(mixed)) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
}

TEST_CASE("operator_geq") {
  CHECK(operator_geq(HermitianMatrix::identity(3), HermitianMatrix::zero(3),
                     1e-9));
  CHECK_FALSE(operator_geq(HermitianMatrix::zero(3),
                           HermitianMatrix::identity(3), 1e-9));
  const HermitianMatrix m(random_hermitian_raw(4, 15));
  const HermitianMatrix bumped =
      m + HermitianMatrix::identity(4) * 1e-12;
  CHECK(operator_geq(bumped, m, 1e-9));
}

TEST_CASE("support_projector") {
  Eigen::VectorXd d(2);
  d << 1.0, 1e-15;
  const HermitianMatrix p =
      support_projector(HermitianMatrix::diagonal(d), 1e-10);
  CHECK(p.mat()(0, 0).real() == doctest::Approx(1.0));
  CHECK(p.mat()(1, 1).real() == doctest::Approx(0.0));

  const DensityOperator full = random_density(4, 4, 16);
  CHECK((support_projector(full.matrix()).mat() - Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-9);

  SUBCASE("rank equals projector trace; idempotent") {
    for (Index rank = 1; rank <= 5; ++rank) {
      const DensityOperator rho = random_density(5, rank, 17 + rank);
      const HermitianMatrix pi = support_projector(rho.matrix());
      REQUIRE(pi.trace() == doctest::Approx(double(rank)).epsilon(1e-9));
      REQUIRE((pi.mat() * pi.mat() - pi.mat()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("permute_subsystems inverts itself") {
  const DensityOperator rho = random_density(2 * 3 * 2, 5, 18);
  const std::vector<Index> dims = {2, 3, 2};
  const std::vector<std::size_t> perm = {2, 0, 1};
  const HermitianMatrix p = permute_subsystems(rho.matrix(), dims, perm);
  // inverse permutation
  const HermitianMatrix back =
      permute_subsystems(p, {2, 2, 3}, {1, 2, 0});
  CHECK((back.mat() - rho.matrix().mat()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(p.trace() == doctest::Approx(1.0));
}
