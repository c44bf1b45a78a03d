#include "kuiper/module_structure.hpp"

#include <cmath>

#include "kuiper/linalg.hpp"

namespace kuiper {

ModuleElement::ModuleElement(Index levels)
    : parts_{GradedElement::zero(0, levels), GradedElement::zero(1, levels), GradedElement::zero(2, levels)} {}

ModuleElement::ModuleElement(const GradedElement& part) : ModuleElement(part.levels()) {
  parts_[part.degree()] = part;
}

const GradedElement& ModuleElement::part(int degree) const {
  if (degree < 0 || degree > kTopDegree) {
    throw StructuralError("ModuleElement::part: degree out of range");
  }
  return parts_[degree];
}

void ModuleElement::set_part(const GradedElement& part) {
  if (part.levels() != levels()) {
    throw StructuralError("ModuleElement::set_part: truncation mismatch");
  }
  parts_[part.degree()] = part;
}

double ModuleElement::flat_norm() const {
  double sq = 0.0;
  for (const auto& p : parts_) {
    sq += p.coeffs().squaredNorm();
  }
  return std::sqrt(sq);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  for (int k = 0; k <= kTopDegree; ++k) {
    parts_[k] += other.parts_[k];
  }
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  for (int k = 0; k <= kTopDegree; ++k) {
    parts_[k] -= other.parts_[k];
  }
  return *this;
}

ModuleElement& ModuleElement::operator*=(Complex s) {
  for (auto& p : parts_) {
    p *= s;
  }
  return *this;
}

ModuleElement operator+(ModuleElement lhs, const ModuleElement& rhs) { return lhs += rhs; }
ModuleElement operator-(ModuleElement lhs, const ModuleElement& rhs) { return lhs -= rhs; }
ModuleElement operator*(Complex s, ModuleElement x) { return x *= s; }

GradedElement act(const GradedElement& x, const CompactOp& a) {
  if (x.levels() != a.levels()) {
    throw StructuralError("act: truncation mismatch");
  }
  // (u o a)(w) = u(a w): a functional's coordinate row is multiplied by a.
  return GradedElement(x.degree(), a.matrix().transpose() * x.coeffs());
}

ModuleElement act(const ModuleElement& x, const CompactOp& a) {
  ModuleElement out(x.levels());
  for (int k = 0; k <= kTopDegree; ++k) {
    out.set_part(act(x.part(k), a));
  }
  return out;
}

CompactOp ch_product(const GradedElement& x, const GradedElement& y) {
  if (x.levels() != y.levels()) {
    throw StructuralError("ch_product: truncation mismatch");
  }
  if (x.degree() != y.degree()) {
    return CompactOp::zero(x.levels());
  }
  // sum over the orthonormal wedge basis of conj(x_I) y_I^T
  return CompactOp(x.coeffs().conjugate() * y.coeffs().transpose());
}

CompactOp ch_product(const ModuleElement& x, const ModuleElement& y) {
  if (x.levels() != y.levels()) {
    throw StructuralError("ch_product: truncation mismatch");
  }
  CompactOp sum = CompactOp::zero(x.levels());
  for (int k = 0; k <= kTopDegree; ++k) {
    sum += ch_product(x.part(k), y.part(k));
  }
  return sum;
}

double module_norm(const ModuleElement& x) { return std::sqrt(op_norm(ch_product(x, x))); }

CompactOp pivot_projection(const FockVector& target, const FockVector& pivot) {
  if (pivot.side() != Side::Dual || target.side() != Side::Dual) {
    throw StructuralError("pivot_projection expects dual vectors");
  }
  const double w2 = pivot.coords().squaredNorm();
  if (w2 == 0.0) {
    throw PreconditionError("pivot_projection: pivot vector is zero");
  }
  return Complex(1.0 / w2) * rank_one(sharp(pivot), target);
}

GeneratingSet generators(Index levels) { return generators(FockVector::basis(levels, 0, Side::Dual)); }

GeneratingSet generators(const FockVector& pivot) {
  if (pivot.side() != Side::Dual) {
    throw StructuralError("generators: pivot must be a dual vector");
  }
  if (pivot.coords().squaredNorm() == 0.0) {
    throw PreconditionError("generators: pivot vector is zero");
  }
  GeneratingSet gens{pivot, {}, {}};
  for (int k = 0; k <= kTopDegree; ++k) {
    for (const auto& w : wedge_basis(k)) {
      gens.labels.push_back(w);
      gens.elements.emplace_back(GradedElement::tensor(w, pivot));
    }
  }
  return gens;
}

std::vector<CompactOp> reconstruct(const ModuleElement& x, const GeneratingSet& gens) {
  if (x.levels() != gens.pivot.levels()) {
    throw StructuralError("reconstruct: truncation mismatch");
  }
  std::vector<CompactOp> coefficients;
  coefficients.reserve(gens.labels.size());
  for (const auto& label : gens.labels) {
    const FockVector component = x.part(label.degree).component(label);
    coefficients.push_back(pivot_projection(component, gens.pivot));
  }
  return coefficients;
}

ModuleElement resum(const GeneratingSet& gens, const std::vector<CompactOp>& coefficients) {
  if (coefficients.size() != gens.elements.size()) {
    throw StructuralError("resum: coefficient count does not match generator count");
  }
  ModuleElement out(gens.pivot.levels());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    out += act(gens.elements[i], coefficients[i]);
  }
  return out;
}

}  // namespace kuiper
