#ifndef KUIPER_SAMPLING_HPP
#define KUIPER_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "kuiper/common.hpp"
#include "kuiper/compacts.hpp"
#include "kuiper/fock.hpp"

namespace kuiper {

/// Seeded source of random test data. Every stream is fully determined by
/// the seed and the stream tag.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0);

  double normal();
  double uniform(double lo, double hi);

  CVector complex_vector(Index n);
  CMatrix complex_matrix(Index rows, Index cols);
  Eigen::VectorXd real_vector(Index n);

  /// Haar-distributed unitary (QR of a complex Ginibre matrix with the
  /// phases of R's diagonal divided out).
  CMatrix unitary(Index n);

  FockVector fock(Index levels, Side side);
  /// Dual Fock vector supported on levels [0, support).
  FockVector fock_supported(Index levels, Index support, Side side);
  CompactOp compact(Index levels);
  GradedElement graded(int degree, Index levels);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace kuiper

#endif  // KUIPER_SAMPLING_HPP
