#ifndef KUIPER_COMMON_HPP
#define KUIPER_COMMON_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace kuiper {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

/// Relative singular-value cutoff shared by every rank and kernel decision.
inline constexpr double kRankTolerance = 1e-8;

/// Mismatched shapes, degrees or side tags.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input violates an operation's precondition (zero pivot, zero covector,
/// non-unitary gauge, ...).
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace kuiper

#endif  // KUIPER_COMMON_HPP
