#include "kuiper/metaplectic.hpp"

#include <cmath>
#include <numbers>

#include "kuiper/linalg.hpp"

namespace kuiper {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

CMatrix dual_matrix(const SpGenerator& x, Index levels) {
  return -dsigma_check(x, levels).matrix().transpose();
}

}  // namespace

SpGenerator operator+(const SpGenerator& x, const SpGenerator& y) {
  return {x.k0 + y.k0, x.kplus + y.kplus, x.kminus + y.kminus};
}

SpGenerator operator*(double s, const SpGenerator& x) { return {s * x.k0, s * x.kplus, s * x.kminus}; }

SpGenerator bracket(const SpGenerator& x, const SpGenerator& y) {
  const double c0p = x.k0 * y.kplus - x.kplus * y.k0;     // coefficient of [K0, Kplus]
  const double c0m = x.k0 * y.kminus - x.kminus * y.k0;   // coefficient of [K0, Kminus]
  const double cpm = x.kplus * y.kminus - x.kminus * y.kplus;
  return {-2.0 * cpm, -c0m, c0p};
}

Eigen::Matrix2d covering_image(const SpGenerator& x) {
  Eigen::Matrix2d rotation;
  rotation << 0.0, -1.0, 1.0, 0.0;
  Eigen::Matrix2d s1;
  s1 << 1.0, 0.0, 0.0, -1.0;
  Eigen::Matrix2d s2;
  s2 << 0.0, 1.0, 1.0, 0.0;
  return 0.5 * x.k0 * rotation + kInvSqrt2 * (x.kplus * s1 + x.kminus * s2);
}

CMatrix annihilation(Index levels) {
  CMatrix a = CMatrix::Zero(levels, levels);
  for (Index n = 1; n < levels; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

CMatrix creation(Index levels) { return annihilation(levels).transpose(); }

CMatrix ladder_k0(Index levels) {
  CMatrix k = CMatrix::Zero(levels, levels);
  for (Index n = 0; n < levels; ++n) {
    k(n, n) = 0.5 * (static_cast<double>(n) + 0.5);
  }
  return k;
}

CMatrix ladder_kplus(Index levels) {
  const CMatrix ad = creation(levels);
  return 0.5 * ad * ad;
}

CMatrix ladder_kminus(Index levels) {
  const CMatrix a = annihilation(levels);
  return 0.5 * a * a;
}

CompactOp dsigma_check(const SpGenerator& x, Index levels) {
  if (levels < 1) {
    throw StructuralError("dsigma_check: truncation must be positive");
  }
  const CMatrix kp = ladder_kplus(levels);
  const CMatrix km = ladder_kminus(levels);
  CMatrix m = x.k0 * kI * ladder_k0(levels);
  m += x.kplus * kInvSqrt2 * kI * (kp + km);
  m += x.kminus * kInvSqrt2 * (km - kp);
  return CompactOp(std::move(m));
}

FockVector dsigma_dual(const SpGenerator& x, const FockVector& f) {
  if (f.side() != Side::Dual) {
    throw StructuralError("dsigma_dual expects a dual vector");
  }
  return FockVector(dual_matrix(x, f.levels()) * f.coords(), Side::Dual);
}

Eigen::MatrixXd form_derivation(int degree, const SpGenerator& x) {
  const Eigen::Matrix2d l = covering_image(x);
  switch (degree) {
    case 0: return Eigen::MatrixXd::Zero(1, 1);
    case 1: return -l.transpose();
    case 2: return Eigen::MatrixXd::Constant(1, 1, -l.trace());
    default: throw StructuralError("form_derivation: degree out of range");
  }
}

GradedElement dsigma_graded(const SpGenerator& x, const GradedElement& f) {
  const Eigen::MatrixXd forms = form_derivation(f.degree(), x);
  CMatrix c = dual_matrix(x, f.levels()) * f.coeffs();
  c += f.coeffs() * forms.transpose().cast<Complex>();
  return GradedElement(f.degree(), std::move(c));
}

CMatrix dsigma_graded_matrix(const SpGenerator& x, int degree, Index levels) {
  const Index c = wedge_dim(degree);
  const CMatrix fock = dual_matrix(x, levels);
  const Eigen::MatrixXd forms = form_derivation(degree, x);
  CMatrix g = CMatrix::Zero(c * levels, c * levels);
  for (Index i = 0; i < c; ++i) {
    g.block(i * levels, i * levels, levels, levels) += fock;
    for (Index j = 0; j < c; ++j) {
      g.block(i * levels, j * levels, levels, levels).diagonal().array() += forms(i, j);
    }
  }
  return g;
}

CompactOp drho(const SpGenerator& x, const CompactOp& a) {
  const CMatrix s = dsigma_check(x, a.levels()).matrix();
  return CompactOp(s * a.matrix() - a.matrix() * s);
}

CompactOp exponentiate(const SpGenerator& x, double t, Index levels) {
  return CompactOp(expm_skew_hermitian(dsigma_check(x, levels).matrix(), t));
}

GradedElement graded_flow(const SpGenerator& x, double t, const GradedElement& f) {
  const CMatrix g = dsigma_graded_matrix(x, f.degree(), f.levels());
  if (skew_hermitian_defect(g) > 1e-12) {
    throw PreconditionError("graded_flow: generator is not skew-Hermitian on this degree");
  }
  const CMatrix u = expm_skew_hermitian(g, t);
  const CVector flat_in = f.coeffs().reshaped();
  const CVector flat_out = u * flat_in;
  return GradedElement(f.degree(), flat_out.reshaped(f.levels(), f.coeffs().cols()));
}

double full_turn_parameter() {
  // covering_image(K0) rotates V with angular speed |entry (1,0)|.
  const double speed = std::abs(covering_image(SpGenerator::K0())(1, 0));
  return 2.0 * std::numbers::pi / speed;
}

bool preserves_parity(const CompactOp& a, double tol) {
  const CMatrix& m = a.matrix();
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if ((i + j) % 2 == 1 && std::abs(m(i, j)) > tol) {
        return false;
      }
    }
  }
  return true;
}

double closure_defect(const SpGenerator& x, const SpGenerator& y, const FockVector& f) {
  if (f.side() != Side::Dual) {
    throw StructuralError("closure_defect expects a dual vector");
  }
  const Index n = f.levels();
  const CMatrix ax = dual_matrix(x, n);
  const CMatrix ay = dual_matrix(y, n);
  const CMatrix defect = ax * ay - ay * ax - dual_matrix(bracket(x, y), n);
  return (defect * f.coords()).norm();
}

Complex evaluation_flow_derivative(const SpGenerator& x, const FockVector& f, const FockVector& v,
                                   double step) {
  if (f.side() != Side::Dual || v.side() != Side::Primal) {
    throw StructuralError("evaluation_flow_derivative expects (dual, primal)");
  }
  auto pairing = [&](double t) {
    const CMatrix u = exponentiate(x, t, f.levels()).matrix();
    // sigma(g) f = f o u^{-1}, so its coordinate vector is (u^{-1})^T f.
    const CVector moved_f = u.adjoint().transpose() * f.coords();
    const CVector moved_v = u * v.coords();
    return Complex(moved_f.transpose() * moved_v);
  };
  return (pairing(step) - pairing(-step)) / (2.0 * step);
}

EquivarianceResiduals equivariance_residuals(const SpGenerator& x,
                                             const std::vector<EquivarianceSample>& samples) {
  EquivarianceResiduals out;
  for (const auto& s : samples) {
    const CompactOp rho_a = drho(x, s.a);
    const GradedElement lhs = dsigma_graded(x, act(s.f, s.a));
    const GradedElement rhs = act(dsigma_graded(x, s.f), s.a) + act(s.f, rho_a);
    out.action = std::max(out.action, (lhs - rhs).flat_norm());

    const CompactOp prod = ch_product(s.f, s.h);
    const CompactOp expected = ch_product(dsigma_graded(x, s.f), s.h) + ch_product(s.f, dsigma_graded(x, s.h));
    out.product = std::max(out.product, distance(drho(x, prod), expected));

    const GradedElement moved = graded_flow(SpGenerator::K0(), s.t, s.f);
    out.norm = std::max(out.norm, std::abs(module_norm(moved) - module_norm(s.f)));
  }
  return out;
}

}  // namespace kuiper
