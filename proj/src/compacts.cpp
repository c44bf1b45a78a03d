#include "kuiper/compacts.hpp"

#include "kuiper/linalg.hpp"

namespace kuiper {

namespace {

void require_same(const CompactOp& a, const CompactOp& b, const char* what) {
  if (a.levels() != b.levels()) {
    throw StructuralError(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

CompactOp::CompactOp(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw StructuralError("CompactOp must be square");
  }
}

CompactOp CompactOp::identity(Index levels) { return CompactOp(CMatrix::Identity(levels, levels)); }
CompactOp CompactOp::zero(Index levels) { return CompactOp(CMatrix::Zero(levels, levels)); }

FockVector CompactOp::apply(const FockVector& v) const {
  if (v.side() != Side::Primal) {
    throw StructuralError("CompactOp::apply expects a primal vector");
  }
  if (v.levels() != levels()) {
    throw StructuralError("CompactOp::apply: dimension mismatch");
  }
  return FockVector(m_ * v.coords(), Side::Primal);
}

CompactOp& CompactOp::operator+=(const CompactOp& other) {
  require_same(*this, other, "CompactOp +=");
  m_ += other.m_;
  return *this;
}

CompactOp& CompactOp::operator-=(const CompactOp& other) {
  require_same(*this, other, "CompactOp -=");
  m_ -= other.m_;
  return *this;
}

CompactOp& CompactOp::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

CompactOp operator+(CompactOp lhs, const CompactOp& rhs) { return lhs += rhs; }
CompactOp operator-(CompactOp lhs, const CompactOp& rhs) { return lhs -= rhs; }
CompactOp operator*(Complex s, CompactOp a) { return a *= s; }

CompactOp rank_one(const FockVector& u, const FockVector& v) {
  if (u.side() != Side::Primal || v.side() != Side::Dual) {
    throw StructuralError("rank_one expects (primal, dual)");
  }
  if (u.levels() != v.levels()) {
    throw StructuralError("rank_one: dimension mismatch");
  }
  return CompactOp(u.coords() * v.coords().transpose());
}

CompactOp compose(const CompactOp& a, const CompactOp& b) {
  require_same(a, b, "compose");
  return CompactOp(a.matrix() * b.matrix());
}

CompactOp adjoint(const CompactOp& a) { return CompactOp(a.matrix().adjoint()); }

double op_norm(const CompactOp& a) { return spectral_norm(a.matrix()); }

double distance(const CompactOp& a, const CompactOp& b) {
  require_same(a, b, "distance");
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace kuiper
