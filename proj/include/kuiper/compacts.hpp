#ifndef KUIPER_COMPACTS_HPP
#define KUIPER_COMPACTS_HPP

#include "kuiper/common.hpp"
#include "kuiper/fock.hpp"

namespace kuiper {

/// Element of the truncated compact-operator algebra: an N x N matrix acting
/// on primal Fock vectors.
class CompactOp {
 public:
  explicit CompactOp(CMatrix m);

  static CompactOp identity(Index levels);
  static CompactOp zero(Index levels);

  Index levels() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

  FockVector apply(const FockVector& v) const;

  CompactOp& operator+=(const CompactOp& other);
  CompactOp& operator-=(const CompactOp& other);
  CompactOp& operator*=(Complex s);

 private:
  CMatrix m_;
};

CompactOp operator+(CompactOp lhs, const CompactOp& rhs);
CompactOp operator-(CompactOp lhs, const CompactOp& rhs);
CompactOp operator*(Complex s, CompactOp a);

/// u (x) v : w -> v(w) u, for primal u and dual v.
CompactOp rank_one(const FockVector& u, const FockVector& v);

CompactOp compose(const CompactOp& a, const CompactOp& b);
CompactOp adjoint(const CompactOp& a);
/// Largest singular value.
double op_norm(const CompactOp& a);

/// Frobenius distance, used for residuals.
double distance(const CompactOp& a, const CompactOp& b);

}  // namespace kuiper

#endif  // KUIPER_COMPACTS_HPP
