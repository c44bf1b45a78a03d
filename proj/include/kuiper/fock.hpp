#ifndef KUIPER_FOCK_HPP
#define KUIPER_FOCK_HPP

#include <array>
#include <vector>

#include "kuiper/common.hpp"

namespace kuiper {

/**
 * Which space a Fock-coordinate vector lives in.
 *
 * Primal vectors are elements of the function space (the space the
 * oscillator representation and the compact operators act on). Dual vectors
 * are continuous functionals on it; a dual vector with coordinates f_n acts
 * as w -> sum_n f_n w_n.
 */
enum class Side { Primal, Dual };

const char* to_string(Side side);

/// Element of the truncated fiber, in the orthonormal Fock basis e_0..e_{N-1}.
class FockVector {
 public:
  FockVector(CVector coords, Side side);

  static FockVector zero(Index levels, Side side);
  static FockVector basis(Index levels, Index level, Side side);

  Index levels() const { return coords_.size(); }
  Side side() const { return side_; }
  const CVector& coords() const { return coords_; }
  Complex operator[](Index n) const { return coords_(n); }

  double norm() const { return coords_.norm(); }

  /// Evaluate a dual vector on a primal one.
  Complex operator()(const FockVector& v) const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(Complex s);

 private:
  CVector coords_;
  Side side_;
};

FockVector operator+(FockVector lhs, const FockVector& rhs);
FockVector operator-(FockVector lhs, const FockVector& rhs);
FockVector operator*(Complex s, FockVector v);

/// Hilbert product, anti-linear in the left slot: sum conj(f_n) g_n.
Complex inner_product(const FockVector& f, const FockVector& g);

/// Riesz map from functionals to vectors: f(v) = (sharp(f), v).
FockVector sharp(const FockVector& f);
/// Inverse Riesz map: flat(v)(w) = (v, w).
FockVector flat(const FockVector& v);

// ---------------------------------------------------------------------------
// Exterior algebra of V* with V = R^2 and orthonormal basis {eps^1, eps^2}.

inline constexpr int kFormDimension = 2;
inline constexpr int kTopDegree = kFormDimension;

/// Number of wedge basis elements of degree k (zero outside 0..2).
int wedge_dim(int degree);

struct WedgeIndex {
  int degree = 0;
  std::array<int, kFormDimension> indices{};  // first `degree` entries used

  bool operator==(const WedgeIndex&) const = default;
};

/// Wedge basis of degree k, ordered lexicographically.
std::vector<WedgeIndex> wedge_basis(int degree);
/// Position of `w` inside wedge_basis(w.degree).
int wedge_position(const WedgeIndex& w);

WedgeIndex form_one();
WedgeIndex form_eps(int i);
WedgeIndex form_volume();

/// Result of eps^i ^ eps^J expressed in the basis: sign 0 when it vanishes.
struct WedgeProduct {
  int sign = 0;
  int position = -1;
};
WedgeProduct wedge_left(int i, const WedgeIndex& j);

/**
 * Element of Lambda^k V* (x) H.
 *
 * Stored as an N x dim(Lambda^k) matrix whose column j is the functional
 * coefficient of the j-th wedge basis element.
 */
class GradedElement {
 public:
  GradedElement(int degree, CMatrix coeffs);

  static GradedElement zero(int degree, Index levels);
  /// alpha (x) f where alpha holds real coordinates in the wedge basis.
  static GradedElement tensor(int degree, const Eigen::VectorXd& alpha, const FockVector& f);
  static GradedElement tensor(const WedgeIndex& alpha, const FockVector& f);

  int degree() const { return degree_; }
  Index levels() const { return coeffs_.rows(); }
  const CMatrix& coeffs() const { return coeffs_; }

  FockVector component(int position) const;
  FockVector component(const WedgeIndex& w) const;

  /// Euclidean norm of all coordinates.
  double flat_norm() const { return coeffs_.norm(); }

  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator-=(const GradedElement& other);
  GradedElement& operator*=(Complex s);

 private:
  int degree_;
  CMatrix coeffs_;
};

GradedElement operator+(GradedElement lhs, const GradedElement& rhs);
GradedElement operator-(GradedElement lhs, const GradedElement& rhs);
GradedElement operator*(Complex s, GradedElement x);

/// Hodge-type product with orthonormal wedge basis.
Complex graded_inner(const GradedElement& x, const GradedElement& y);

}  // namespace kuiper

#endif  // KUIPER_FOCK_HPP
