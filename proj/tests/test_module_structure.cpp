#include <doctest.h>

#include <kuiper/linalg.hpp>
#include <kuiper/module_structure.hpp>
#include <kuiper/sampling.hpp>

using namespace kuiper;

namespace {

ModuleElement random_element(Sampler& rng, Index n) {
  ModuleElement x(n);
  for (int k = 0; k <= kTopDegree; ++k) {
    x.set_part(rng.graded(k, n));
  }
  return x;
}

}  // namespace

TEST_SUITE("module_structure") {
  TEST_CASE("identity acts trivially and rank-one action contracts") {
    Sampler rng(1);
    const Index n = 5;
    const ModuleElement x = random_element(rng, n);
    CHECK((act(x, CompactOp::identity(n)) - x).flat_norm() == 0.0);

    const FockVector u = rng.fock(n, Side::Dual);
    const FockVector w = rng.fock(n, Side::Primal);
    const FockVector g = rng.fock(n, Side::Dual);
    const Eigen::VectorXd alpha = rng.real_vector(2);
    const GradedElement lhs = act(GradedElement::tensor(1, alpha, u), rank_one(w, g));
    const GradedElement rhs = u(w) * GradedElement::tensor(1, alpha, g);
    CHECK((lhs - rhs).flat_norm() < 1e-12);
  }

  TEST_CASE("product of unit degree-0 elements is a rank-one projection") {
    Sampler rng(2);
    FockVector f = rng.fock(6, Side::Dual);
    f *= 1.0 / f.norm();
    const GradedElement x = GradedElement::tensor(form_one(), f);
    const CMatrix p = ch_product(x, x).matrix();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
    CHECK(es.eigenvalues()(5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es.eigenvalues().head(5).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("orthogonal wedge parts and mixed degrees give zero") {
    Sampler rng(3);
    const FockVector u = rng.fock(4, Side::Dual);
    const FockVector v = rng.fock(4, Side::Dual);
    CHECK(op_norm(ch_product(GradedElement::tensor(form_eps(0), u), GradedElement::tensor(form_eps(1), v))) == 0.0);
    CHECK(op_norm(ch_product(rng.graded(0, 4), rng.graded(2, 4))) == 0.0);
  }

  TEST_CASE("module axioms on random data") {
    Sampler rng(4);
    const Index n = 6;
    for (int s = 0; s < 200; ++s) {
      const ModuleElement x = random_element(rng, n);
      const ModuleElement y = random_element(rng, n);
      const CompactOp a = rng.compact(n);
      const CompactOp b = rng.compact(n);
      const Complex lambda(rng.normal(), rng.normal());
      CHECK((act(act(x, a), b) - act(x, compose(a, b))).flat_norm() <= 1e-12);
      CHECK((act(x + y, a) - act(x, a) - act(y, a)).flat_norm() <= 1e-12);
      CHECK((act(x, a + b) - act(x, a) - act(x, b)).flat_norm() <= 1e-12);
      const CompactOp xy = ch_product(x, y);
      CHECK(distance(ch_product(x, act(y, a)), compose(xy, a)) <= 1e-10);
      CHECK(distance(adjoint(xy), ch_product(y, x)) <= 1e-10);
      CHECK(distance(ch_product(act(x, a), y), compose(adjoint(a), xy)) <= 1e-10);
      CHECK(distance(ch_product(lambda * x, y), std::conj(lambda) * xy) <= 1e-10);
      CHECK(min_hermitian_eigenvalue(ch_product(x, x).matrix()) >= -1e-10);
    }
  }

  TEST_CASE("module norm of homogeneous tensors") {
    Sampler rng(5);
    CHECK(module_norm(ModuleElement::zero(4)) == 0.0);
    for (int s = 0; s < 100; ++s) {
      const int k = s % 3;
      const Eigen::VectorXd alpha = rng.real_vector(wedge_dim(k));
      const FockVector f = rng.fock(6, Side::Dual);
      const GradedElement x = GradedElement::tensor(k, alpha, f);
      // the flattened coefficient norm is the Hilbert tensor norm
      CHECK(std::abs(module_norm(x) - x.coeffs().norm()) <= 1e-10);
      CHECK(std::abs(module_norm(x) - alpha.norm() * f.norm()) <= 1e-10);
    }
    const FockVector f = rng.fock(6, Side::Dual);
    const GradedElement f0 = GradedElement::tensor(form_one(), f);
    CHECK(std::abs(op_norm(ch_product(f0, f0)) - f.norm() * f.norm()) <= 1e-10);
  }

  TEST_CASE("module norm of a non-homogeneous element can be below the flat norm") {
    // (x, x) = E00 + E11 has norm 1 while the coefficients have norm sqrt 2
    const FockVector e0 = FockVector::basis(3, 0, Side::Dual);
    const ModuleElement x = ModuleElement(GradedElement::tensor(form_one(), e0)) +
                            ModuleElement(GradedElement::tensor(form_eps(0), FockVector::basis(3, 1, Side::Dual)));
    CHECK(module_norm(x) == doctest::Approx(1.0));
    CHECK(x.flat_norm() == doctest::Approx(std::sqrt(2.0)));
  }

  TEST_CASE("generators and pivot coefficients") {
    const Index n = 5;
    const GeneratingSet gens = generators(n);
    REQUIRE(gens.elements.size() == 4);

    const GradedElement target = GradedElement::tensor(form_eps(0), FockVector::basis(n, 2, Side::Dual));
    const auto coeffs = reconstruct(target, gens);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const bool eps1 = gens.labels[i] == form_eps(0);
      CHECK((op_norm(coeffs[i]) > 0.5) == eps1);
    }
    const CompactOp p = pivot_projection(FockVector::basis(n, 2, Side::Dual), FockVector::basis(n, 0, Side::Dual));
    const GradedElement moved = act(GradedElement::tensor(form_eps(0), FockVector::basis(n, 0, Side::Dual)), p);
    CHECK((moved - target).flat_norm() < 1e-14);

    for (const auto& c : reconstruct(ModuleElement::zero(n), gens)) {
      CHECK(op_norm(c) == 0.0);
    }
  }

  TEST_CASE("round trip through the generators for any pivot") {
    Sampler rng(6);
    const Index n = 6;
    const GeneratingSet standard = generators(n);
    const GeneratingSet skewed = generators(rng.fock(n, Side::Dual));
    for (int s = 0; s < 100; ++s) {
      const ModuleElement x = random_element(rng, n);
      CHECK((resum(standard, reconstruct(x, standard)) - x).flat_norm() <= 1e-10);
      CHECK((resum(skewed, reconstruct(x, skewed)) - x).flat_norm() <= 1e-10);
    }
  }

  TEST_CASE("zero pivot is rejected") {
    CHECK_THROWS_AS(generators(FockVector::zero(4, Side::Dual)), PreconditionError);
    CHECK_THROWS_AS(pivot_projection(FockVector::basis(4, 1, Side::Dual), FockVector::zero(4, Side::Dual)),
                    PreconditionError);
    CHECK_THROWS_AS(act(GradedElement::zero(1, 3), CompactOp::identity(4)), StructuralError);
  }
}
