#ifndef KUIPER_LINALG_HPP
#define KUIPER_LINALG_HPP

#include "kuiper/common.hpp"

namespace kuiper {

/**
 * Outcome of a thresholded rank (or kernel) decision.
 *
 * Values below `threshold = rel_tol * max_value` count as zero. The decision
 * is flagged `ambiguous` when some value lies within a factor of ten of the
 * threshold on either side, i.e. the gap is too small to trust.
 */
struct RankInfo {
  Index rank = 0;        // number of values above threshold
  Index size = 0;        // number of values inspected
  double max_value = 0.0;
  double threshold = 0.0;
  bool ambiguous = false;
  double largest_zero = 0.0;     // biggest value classified as zero
  double smallest_nonzero = 0.0; // smallest value classified as nonzero

  Index nullity() const { return size - rank; }
};

/// Classify nonnegative values (singular values or PSD eigenvalues).
RankInfo classify_values(const Eigen::VectorXd& values, double rel_tol = kRankTolerance);

Eigen::VectorXd singular_values(const CMatrix& m);

/// Numerical rank from singular values; for an m x n matrix `size` is n, so
/// nullity() is the kernel dimension.
RankInfo numerical_rank(const CMatrix& m, double rel_tol = kRankTolerance);

double spectral_norm(const CMatrix& m);

/// Smallest eigenvalue of the Hermitian part of `m`.
double min_hermitian_eigenvalue(const CMatrix& m);

/// exp(t * generator) for a skew-Hermitian generator, through the spectral
/// decomposition of the Hermitian matrix i * generator.
CMatrix expm_skew_hermitian(const CMatrix& generator, double t);

/// Max-abs distance from skew-Hermiticity, ||G + G^*||_max.
double skew_hermitian_defect(const CMatrix& generator);

/// ||U^* U - I||_max.
double unitarity_defect(const CMatrix& u);

}  // namespace kuiper

#endif  // KUIPER_LINALG_HPP
