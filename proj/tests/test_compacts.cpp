#include <doctest.h>

#include <kuiper/compacts.hpp>
#include <kuiper/sampling.hpp>

using namespace kuiper;

namespace {

// Largest singular value by power iteration on a^* a.
double power_norm(const CMatrix& a) {
  CVector x = CVector::Ones(a.cols());
  double lambda = 0.0;
  for (int it = 0; it < 2000; ++it) {
    CVector y = a.adjoint() * (a * x);
    lambda = y.norm();
    x = y / lambda;
  }
  return std::sqrt(lambda);
}

}  // namespace

TEST_SUITE("compacts") {
  TEST_CASE("rank-one matrix units and norms") {
    const CompactOp e00 = rank_one(FockVector::basis(4, 0, Side::Primal), FockVector::basis(4, 0, Side::Dual));
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    CHECK((e00.matrix() - expected).norm() == 0.0);

    Sampler rng(5);
    for (int s = 0; s < 100; ++s) {
      const FockVector u = rng.fock(6, Side::Primal);
      const FockVector v = rng.fock(6, Side::Dual);
      CHECK(std::abs(op_norm(rank_one(u, v)) - u.norm() * v.norm()) <= 1e-10 * u.norm() * v.norm());
      const FockVector w = rng.fock(6, Side::Primal);
      CHECK(rank_one(u, v).apply(w).coords().isApprox(v(w) * u.coords(), 1e-12));
    }
    CHECK_THROWS_AS(rank_one(FockVector::zero(3, Side::Dual), FockVector::zero(3, Side::Dual)), StructuralError);
  }

  TEST_CASE("rank-one composition") {
    Sampler rng(6);
    for (int s = 0; s < 50; ++s) {
      const FockVector u = rng.fock(5, Side::Primal);
      const FockVector v = rng.fock(5, Side::Dual);
      const FockVector w = rng.fock(5, Side::Primal);
      const FockVector h = rng.fock(5, Side::Dual);
      const CompactOp lhs = compose(rank_one(u, v), rank_one(w, h));
      CHECK(distance(lhs, v(w) * rank_one(u, h)) < 1e-10);
    }
  }

  TEST_CASE("adjoint of a rank-one map") {
    Sampler rng(8);
    for (int s = 0; s < 50; ++s) {
      const FockVector u = rng.fock(5, Side::Primal);
      const FockVector v = rng.fock(5, Side::Dual);
      CHECK(distance(adjoint(rank_one(u, v)), rank_one(sharp(v), flat(u))) == 0.0);
    }
  }

  TEST_CASE("operator norm") {
    CMatrix d = CMatrix::Zero(6, 6);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    CHECK(op_norm(CompactOp(d)) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(op_norm(CompactOp::zero(6)) == 0.0);

    Sampler rng(9);
    const CompactOp a = rng.compact(6);
    const double norm = op_norm(a);
    CHECK(std::abs(norm - power_norm(a.matrix())) < 1e-8 * norm);
    // random unit vectors only give lower bounds
    double best = 0.0;
    for (int s = 0; s < 10000; ++s) {
      CVector x = rng.complex_vector(6);
      x.normalize();
      best = std::max(best, (a.matrix() * x).norm());
    }
    CHECK(best <= norm * (1.0 + 1e-12));
    CHECK(best >= 0.5 * norm);
  }

  TEST_CASE("C*-identity, involution and submultiplicativity") {
    Sampler rng(10);
    for (int s = 0; s < 100; ++s) {
      const CompactOp a = rng.compact(6);
      const CompactOp b = rng.compact(6);
      const double na = op_norm(a);
      CHECK(std::abs(op_norm(compose(adjoint(a), a)) - na * na) <= 1e-10 * na * na);
      CHECK(distance(adjoint(adjoint(a)), a) == 0.0);
      CHECK(op_norm(compose(a, b)) <= na * op_norm(b) + 1e-10);
    }
  }

  TEST_CASE("dimension checks") {
    CHECK_THROWS_AS(CompactOp(CMatrix::Zero(2, 3)), StructuralError);
    CHECK_THROWS_AS(compose(CompactOp::identity(2), CompactOp::identity(3)), StructuralError);
    CHECK_THROWS_AS(CompactOp::identity(2).apply(FockVector::zero(2, Side::Dual)), StructuralError);
  }
}
