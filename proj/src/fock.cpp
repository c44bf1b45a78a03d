#include "kuiper/fock.hpp"

#include <string>

namespace kuiper {

namespace {

void require_same(const FockVector& a, const FockVector& b, const char* what) {
  if (a.levels() != b.levels()) {
    throw StructuralError(std::string(what) + ": truncation mismatch (" +
                          std::to_string(a.levels()) + " vs " + std::to_string(b.levels()) + ")");
  }
  if (a.side() != b.side()) {
    throw StructuralError(std::string(what) + ": side mismatch");
  }
}

void require_same(const GradedElement& a, const GradedElement& b, const char* what) {
  if (a.degree() != b.degree()) {
    throw StructuralError(std::string(what) + ": degree mismatch");
  }
  if (a.levels() != b.levels()) {
    throw StructuralError(std::string(what) + ": truncation mismatch");
  }
}

}  // namespace

const char* to_string(Side side) { return side == Side::Primal ? "primal" : "dual"; }

FockVector::FockVector(CVector coords, Side side) : coords_(std::move(coords)), side_(side) {}

FockVector FockVector::zero(Index levels, Side side) {
  return FockVector(CVector::Zero(levels), side);
}

FockVector FockVector::basis(Index levels, Index level, Side side) {
  if (level < 0 || level >= levels) {
    throw StructuralError("FockVector::basis: level out of range");
  }
  CVector c = CVector::Zero(levels);
  c(level) = 1.0;
  return FockVector(std::move(c), side);
}

Complex FockVector::operator()(const FockVector& v) const {
  if (side_ != Side::Dual || v.side() != Side::Primal) {
    throw StructuralError("FockVector evaluation needs a dual functional and a primal vector");
  }
  if (levels() != v.levels()) {
    throw StructuralError("FockVector evaluation: truncation mismatch");
  }
  return coords_.transpose() * v.coords();
}

FockVector& FockVector::operator+=(const FockVector& other) {
  require_same(*this, other, "FockVector +=");
  coords_ += other.coords_;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  require_same(*this, other, "FockVector -=");
  coords_ -= other.coords_;
  return *this;
}

FockVector& FockVector::operator*=(Complex s) {
  coords_ *= s;
  return *this;
}

FockVector operator+(FockVector lhs, const FockVector& rhs) { return lhs += rhs; }
FockVector operator-(FockVector lhs, const FockVector& rhs) { return lhs -= rhs; }
FockVector operator*(Complex s, FockVector v) { return v *= s; }

Complex inner_product(const FockVector& f, const FockVector& g) {
  require_same(f, g, "inner_product");
  return f.coords().dot(g.coords());  // Eigen's dot conjugates the left argument
}

FockVector sharp(const FockVector& f) {
  if (f.side() != Side::Dual) {
    throw StructuralError("sharp expects a dual vector");
  }
  return FockVector(f.coords().conjugate(), Side::Primal);
}

FockVector flat(const FockVector& v) {
  if (v.side() != Side::Primal) {
    throw StructuralError("flat expects a primal vector");
  }
  return FockVector(v.coords().conjugate(), Side::Dual);
}

// ---------------------------------------------------------------------------

int wedge_dim(int degree) {
  switch (degree) {
    case 0: return 1;
    case 1: return 2;
    case 2: return 1;
    default: return 0;
  }
}

std::vector<WedgeIndex> wedge_basis(int degree) {
  switch (degree) {
    case 0: return {form_one()};
    case 1: return {form_eps(0), form_eps(1)};
    case 2: return {form_volume()};
    default: return {};
  }
}

int wedge_position(const WedgeIndex& w) {
  if (w.degree == 1) {
    return w.indices[0];
  }
  if (w.degree == 0 || w.degree == 2) {
    return 0;
  }
  throw StructuralError("wedge_position: degree out of range");
}

WedgeIndex form_one() { return WedgeIndex{0, {0, 0}}; }

WedgeIndex form_eps(int i) {
  if (i < 0 || i >= kFormDimension) {
    throw StructuralError("form_eps: index out of range");
  }
  return WedgeIndex{1, {i, 0}};
}

WedgeIndex form_volume() { return WedgeIndex{2, {0, 1}}; }

WedgeProduct wedge_left(int i, const WedgeIndex& j) {
  switch (j.degree) {
    case 0:
      return {1, i};
    case 1: {
      const int other = j.indices[0];
      if (other == i) {
        return {};
      }
      return {i < other ? 1 : -1, 0};
    }
    default:
      return {};
  }
}

// ---------------------------------------------------------------------------

GradedElement::GradedElement(int degree, CMatrix coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || degree > kTopDegree) {
    throw StructuralError("GradedElement: degree out of range");
  }
  if (coeffs_.cols() != wedge_dim(degree)) {
    throw StructuralError("GradedElement: coefficient count does not match the wedge dimension");
  }
}

GradedElement GradedElement::zero(int degree, Index levels) {
  return GradedElement(degree, CMatrix::Zero(levels, wedge_dim(degree)));
}

GradedElement GradedElement::tensor(int degree, const Eigen::VectorXd& alpha, const FockVector& f) {
  if (f.side() != Side::Dual) {
    throw StructuralError("GradedElement::tensor expects a dual Fock coefficient");
  }
  if (alpha.size() != wedge_dim(degree)) {
    throw StructuralError("GradedElement::tensor: form has wrong length");
  }
  return GradedElement(degree, f.coords() * alpha.cast<Complex>().transpose());
}

GradedElement GradedElement::tensor(const WedgeIndex& alpha, const FockVector& f) {
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(wedge_dim(alpha.degree));
  unit(wedge_position(alpha)) = 1.0;
  return tensor(alpha.degree, unit, f);
}

FockVector GradedElement::component(int position) const {
  return FockVector(coeffs_.col(position), Side::Dual);
}

FockVector GradedElement::component(const WedgeIndex& w) const {
  if (w.degree != degree_) {
    throw StructuralError("GradedElement::component: degree mismatch");
  }
  return component(wedge_position(w));
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  require_same(*this, other, "GradedElement +=");
  coeffs_ += other.coeffs_;
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) {
  require_same(*this, other, "GradedElement -=");
  coeffs_ -= other.coeffs_;
  return *this;
}

GradedElement& GradedElement::operator*=(Complex s) {
  coeffs_ *= s;
  return *this;
}

GradedElement operator+(GradedElement lhs, const GradedElement& rhs) { return lhs += rhs; }
GradedElement operator-(GradedElement lhs, const GradedElement& rhs) { return lhs -= rhs; }
GradedElement operator*(Complex s, GradedElement x) { return x *= s; }

Complex graded_inner(const GradedElement& x, const GradedElement& y) {
  require_same(x, y, "graded_inner");
  return (x.coeffs().adjoint() * y.coeffs()).trace();
}

}  // namespace kuiper
