#include "kuiper/linalg.hpp"

#include <algorithm>
#include <limits>

namespace kuiper {

RankInfo classify_values(const Eigen::VectorXd& values, double rel_tol) {
  RankInfo info;
  info.size = values.size();
  if (values.size() == 0) {
    return info;
  }
  info.max_value = values.cwiseAbs().maxCoeff();
  info.threshold = rel_tol * info.max_value;
  info.smallest_nonzero = std::numeric_limits<double>::infinity();
  if (info.max_value == 0.0) {
    info.smallest_nonzero = 0.0;
    return info;
  }
  for (Index i = 0; i < values.size(); ++i) {
    const double v = std::abs(values(i));
    if (v > info.threshold) {
      ++info.rank;
      info.smallest_nonzero = std::min(info.smallest_nonzero, v);
    } else {
      info.largest_zero = std::max(info.largest_zero, v);
    }
    if (v > info.threshold / 10.0 && v < info.threshold * 10.0) {
      info.ambiguous = true;
    }
  }
  return info;
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.size() == 0) {
    return Eigen::VectorXd();
  }
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues();
}

RankInfo numerical_rank(const CMatrix& m, double rel_tol) {
  RankInfo info = classify_values(singular_values(m), rel_tol);
  // singular values only cover min(rows, cols); the kernel also contains the
  // surplus columns.
  info.size = m.cols();
  return info;
}

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  return singular_values(m)(0);
}

double min_hermitian_eigenvalue(const CMatrix& m) {
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

CMatrix expm_skew_hermitian(const CMatrix& generator, double t) {
  // generator = -i H with H Hermitian, so exp(t generator) = V exp(-i t D) V^*.
  const CMatrix h = kI * generator;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()));
  const CVector phases = (-kI * t * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double skew_hermitian_defect(const CMatrix& generator) {
  if (generator.size() == 0) {
    return 0.0;
  }
  return (generator + generator.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& u) {
  if (u.size() == 0) {
    return 0.0;
  }
  return (u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace kuiper
