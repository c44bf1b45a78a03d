#include <doctest.h>

#include <kuiper/linalg.hpp>
#include <kuiper/sampling.hpp>

#include "test_support.hpp"

using namespace kuiper;

TEST_SUITE("linalg") {
  TEST_CASE("numerical rank of a product of known rank") {
    Sampler rng(1);
    const CMatrix m = rng.complex_matrix(12, 4) * rng.complex_matrix(4, 9);
    const RankInfo info = numerical_rank(m);
    CHECK(info.rank == 4);
    CHECK(info.size == 9);
    CHECK(info.nullity() == 5);
    CHECK_FALSE(info.ambiguous);
  }

  TEST_CASE("values near the threshold are flagged") {
    Eigen::VectorXd v(3);
    v << 1.0, 5e-8, 1e-20;  // 5e-8 is within 10x of 1e-8
    const RankInfo info = classify_values(v);
    CHECK(info.rank == 2);
    CHECK(info.ambiguous);

    v << 1.0, 1e-3, 1e-20;
    CHECK_FALSE(classify_values(v).ambiguous);
  }

  TEST_CASE("all-zero input has rank zero") {
    const RankInfo info = numerical_rank(CMatrix::Zero(3, 3));
    CHECK(info.rank == 0);
    CHECK(info.nullity() == 3);
  }

  TEST_CASE("skew-Hermitian exponential agrees with the Taylor series") {
    Sampler rng(2);
    const CMatrix z = rng.complex_matrix(5, 5);
    const CMatrix g = z - z.adjoint();
    const CMatrix u = expm_skew_hermitian(g, 0.7);
    CHECK(test::max_abs(u - test::taylor_exp(g, 0.7)) < 1e-10);
    CHECK(unitarity_defect(u) < 1e-12);
    CHECK(skew_hermitian_defect(g) < 1e-14);
    CHECK(skew_hermitian_defect(z) > 1e-3);
  }

  TEST_CASE("minimum eigenvalue of a Hermitian matrix") {
    Eigen::VectorXcd d(3);
    d << -2.0, 1.0, 4.0;
    Sampler rng(3);
    const CMatrix q = rng.unitary(3);
    CHECK(min_hermitian_eigenvalue(q * d.asDiagonal() * q.adjoint()) == doctest::Approx(-2.0).epsilon(1e-12));
  }
}
