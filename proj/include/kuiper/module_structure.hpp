#ifndef KUIPER_MODULE_STRUCTURE_HPP
#define KUIPER_MODULE_STRUCTURE_HPP

#include <array>
#include <vector>

#include "kuiper/compacts.hpp"
#include "kuiper/fock.hpp"

namespace kuiper {

/// Possibly non-homogeneous element of the higher oscillator module: one
/// graded part per degree 0..2.
class ModuleElement {
 public:
  explicit ModuleElement(Index levels);
  ModuleElement(const GradedElement& part);  // NOLINT: homogeneous elements convert implicitly

  static ModuleElement zero(Index levels) { return ModuleElement(levels); }

  Index levels() const { return parts_[0].levels(); }
  const GradedElement& part(int degree) const;
  void set_part(const GradedElement& part);

  double flat_norm() const;

  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  ModuleElement& operator*=(Complex s);

 private:
  std::array<GradedElement, kTopDegree + 1> parts_;
};

ModuleElement operator+(ModuleElement lhs, const ModuleElement& rhs);
ModuleElement operator-(ModuleElement lhs, const ModuleElement& rhs);
ModuleElement operator*(Complex s, ModuleElement x);

/// Right action: (alpha (x) u) . a = alpha (x) (u o a).
GradedElement act(const GradedElement& x, const CompactOp& a);
ModuleElement act(const ModuleElement& x, const CompactOp& a);

/// CH-valued product (alpha (x) u, beta (x) v) = g0(alpha, beta) u^sharp (x) v.
/// Parts of different degree are orthogonal.
CompactOp ch_product(const GradedElement& x, const GradedElement& y);
CompactOp ch_product(const ModuleElement& x, const ModuleElement& y);

/// sqrt(||(x, x)||).
double module_norm(const ModuleElement& x);

/// p_{v',w}: k -> v'(k) / ||w||^2 * w^sharp. Throws PreconditionError for w = 0.
CompactOp pivot_projection(const FockVector& target, const FockVector& pivot);

/// The generating set {a (x) w : a in the wedge basis of Lambda^* V*}.
struct GeneratingSet {
  FockVector pivot;
  std::vector<WedgeIndex> labels;
  std::vector<ModuleElement> elements;
};

/// Generators for truncation `levels` and pivot w (default e_0).
GeneratingSet generators(Index levels);
GeneratingSet generators(const FockVector& pivot);

/// Coefficients a_i with sum_i act(gens[i], a_i) = x.
std::vector<CompactOp> reconstruct(const ModuleElement& x, const GeneratingSet& gens);
ModuleElement resum(const GeneratingSet& gens, const std::vector<CompactOp>& coefficients);

}  // namespace kuiper

#endif  // KUIPER_MODULE_STRUCTURE_HPP
