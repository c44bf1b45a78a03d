#include "kuiper/sampling.hpp"

namespace kuiper {

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double Sampler::normal() { return normal_(engine_); }

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

CVector Sampler::complex_vector(Index n) {
  CVector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = normal();
    v(i) = Complex(re, normal());
  }
  return v;
}

CMatrix Sampler::complex_matrix(Index rows, Index cols) {
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal();
      m(i, j) = Complex(re, normal());
    }
  }
  return m;
}

Eigen::VectorXd Sampler::real_vector(Index n) {
  Eigen::VectorXd v(n);
  for (Index i = 0; i < n; ++i) {
    v(i) = normal();
  }
  return v;
}

CMatrix Sampler::unitary(Index n) {
  const CMatrix z = complex_matrix(n, n);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) {
      q.col(j) *= r(j, j) / mag;
    }
  }
  return q;
}

FockVector Sampler::fock(Index levels, Side side) { return FockVector(complex_vector(levels), side); }

FockVector Sampler::fock_supported(Index levels, Index support, Side side) {
  CVector c = CVector::Zero(levels);
  c.head(support) = complex_vector(support);
  return FockVector(std::move(c), side);
}

CompactOp Sampler::compact(Index levels) { return CompactOp(complex_matrix(levels, levels)); }

GradedElement Sampler::graded(int degree, Index levels) {
  return GradedElement(degree, complex_matrix(levels, wedge_dim(degree)));
}

}  // namespace kuiper
