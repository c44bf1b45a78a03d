#ifndef KUIPER_KUIPER_COMPLEX_HPP
#define KUIPER_KUIPER_COMPLEX_HPP

#include <array>
#include <string>
#include <vector>

#include "kuiper/compacts.hpp"
#include "kuiper/fock.hpp"
#include "kuiper/linalg.hpp"

namespace kuiper {

class Sampler;

/// Periodic G x G lattice on the flat torus of side 2 pi.
class TorusGrid {
 public:
  explicit TorusGrid(int resolution);

  int resolution() const { return g_; }
  Index vertices() const { return static_cast<Index>(g_) * g_; }
  double spacing() const;
  /// Quadrature weight per vertex; the weights sum to (2 pi)^2.
  double cell_volume() const;

  Index vertex(int ix, int iy) const;
  int x_of(Index m) const { return static_cast<int>(m % g_); }
  int y_of(Index m) const { return static_cast<int>(m / g_); }
  /// Neighbour m + e_dir (dir 0 = x, dir 1 = y), wrapping around.
  Index shifted(Index m, int dir) const;

  bool operator==(const TorusGrid&) const = default;

 private:
  int g_;
};

/**
 * Section of Lambda^k T*T^2 (x) H_N sampled at the vertices.
 *
 * data() is N x (vertices * wedge_dim(k)); column m * wedge_dim(k) + j is the
 * functional coefficient of the j-th wedge basis form at vertex m. Degree 3
 * is allowed as the zero space past the top degree.
 */
class CochainField {
 public:
  CochainField(TorusGrid grid, int degree, CMatrix data);

  static CochainField zero(TorusGrid grid, int degree, Index levels);

  const TorusGrid& grid() const { return grid_; }
  int degree() const { return degree_; }
  Index levels() const { return data_.rows(); }
  Index wedge_count() const { return wedge_dim(degree_); }
  const CMatrix& data() const { return data_; }
  CMatrix& data() { return data_; }

  Index column(Index vertex, int wedge) const { return vertex * wedge_count() + wedge; }
  FockVector at(Index vertex, int wedge) const;
  GradedElement at(Index vertex) const;

  /// Column-major flattening (Fock index fastest), matching assembled operators.
  CVector flattened() const;
  static CochainField from_flattened(TorusGrid grid, int degree, Index levels, const CVector& v);

  CochainField& operator+=(const CochainField& other);
  CochainField& operator-=(const CochainField& other);

 private:
  TorusGrid grid_;
  int degree_;
  CMatrix data_;
};

CochainField operator+(CochainField lhs, const CochainField& rhs);
CochainField operator-(CochainField lhs, const CochainField& rhs);

/// Scalar form field alpha (a field with one Fock level) tensored with a
/// constant functional h.
CochainField tensor_constant(const CochainField& alpha, const FockVector& h);

/// Pointwise product c . s with a scalar function c given per vertex.
CochainField multiply(const CVector& c, const CochainField& s);

/**
 * Per-vertex unitary u_m modelling a Kuiper trivialisation.
 *
 * On primal vectors the trivialisation is v -> u_m v, on functionals
 * f -> f o u_m^{-1}, and on operators a -> u_m a u_m^{-1}.
 */
class GaugeField {
 public:
  GaugeField(TorusGrid grid, std::vector<CMatrix> unitaries);

  static GaugeField identity(TorusGrid grid, Index levels);
  static GaugeField random(TorusGrid grid, Index levels, Sampler& sampler);

  const TorusGrid& grid() const { return grid_; }
  Index levels() const { return levels_; }
  const CMatrix& at(Index vertex) const { return u_[vertex]; }
  bool is_identity() const { return identity_; }

  /// Coordinates of f o u^{-1} and its inverse f o u.
  CMatrix functional_forward(Index vertex) const { return u_[vertex].conjugate(); }
  CMatrix functional_backward(Index vertex) const { return u_[vertex].transpose(); }

 private:
  TorusGrid grid_;
  Index levels_;
  std::vector<CMatrix> u_;
  bool identity_ = false;
};

/// Section in bundle frame -> trivial frame, and back.
CochainField trivialize(const CochainField& s, const GaugeField& gauge);
CochainField untrivialize(const CochainField& t, const GaugeField& gauge);

/// Forward-difference exterior derivative, sum_i eps^i ^ Delta_i, acting on
/// every Fock coordinate independently. Degree-2 input maps to the zero
/// degree-3 field.
CochainField discrete_d(const CochainField& field);

/// Exterior covariant derivative of the connection pulled back through the
/// gauge: untrivialize(discrete_d(trivialize(s))).
CochainField coupled_d(const CochainField& field, const GaugeField& gauge);

/// Right CH-action on sections in bundle frame; the operator is transported
/// to each fiber first (identity gauge: plain pointwise action).
CochainField act(const CochainField& field, const CompactOp& a, const GaugeField& gauge);

/// max over vertices of ||coupled_d(s.a) - coupled_d(s).a||.
double ch_equivariance_residual(const CochainField& field, const CompactOp& a, const GaugeField& gauge);

/// Scalar forward-difference d_k as a (V c_{k+1}) x (V c_k) matrix.
Eigen::MatrixXd assemble_scalar_d(int degree, const TorusGrid& grid);
/// Full coupled d_k on flattened fields.
CMatrix assemble_coupled_d(int degree, const GaugeField& gauge);

/// Dimension of Lambda^k (x) H_N sections on the grid.
Index cochain_dim(int degree, Index levels, const TorusGrid& grid);

struct CohomologyResult {
  std::array<Index, 3> ranks{};
  std::array<RankInfo, 2> differential_ranks{};  // d_0, d_1
  std::vector<std::string> warnings;
};

/// r_k = dim ker d_k - rank d_{k-1}.
CohomologyResult cohomology_ranks(const GaugeField& gauge);
CohomologyResult cohomology_ranks(Index levels, const TorusGrid& grid);

/// Betti numbers of the 2-torus.
inline constexpr std::array<Index, 3> kTorusBetti{1, 2, 1};

struct HodgeResult {
  int degree = 0;
  Index harmonic_dim = 0;
  CMatrix harmonic_basis;  // orthonormal columns, flattened fields
  double closed_residual = 0.0;
  double coclosed_residual = 0.0;
  RankInfo spectrum;
  std::vector<std::string> warnings;
};

/// Kernel of d_k^* d_k + d_{k-1} d_{k-1}^*. The quadrature weights are equal
/// on every degree, so the adjoint is the matrix adjoint.
HodgeResult hodge_laplacian(int degree, const GaugeField& gauge);

/**
 * Number of elements picked by greedy extraction of a CH-basis of the
 * harmonic space.
 *
 * Candidates are the harmonic basis vectors cut down by the minimal
 * projection onto the first Fock level (in the trivial frame), i.e. elements
 * whose self-product has rank one. A candidate is kept when it is not in the
 * CH-span of the ones already kept (least-squares relative residual above
 * `tol`).
 */
Index ch_generator_count(const HodgeResult& hodge, const GaugeField& gauge, double tol = 1e-8);

/// sin of the largest principal angle between two column spaces.
double subspace_gap(const CMatrix& a, const CMatrix& b);

struct SymbolReport {
  std::array<Index, 2> ranks{};  // ranks of tau^ on degree 0 and degree 1
  bool exact = false;
};

/// Exactness of 0 -> L0 -> L1 -> L2 -> 0 under (tau ^ .) (x) Id_N.
SymbolReport symbol_exactness(const Eigen::Vector2d& tau, Index levels = 1);

/// sum_m vol * (J s_m, J s'_m).
CompactOp section_ch_product(const CochainField& s, const CochainField& t, const GaugeField& gauge);

/// a_m -> u_m a_m u_m^{-1}.
std::vector<CompactOp> gauge_transport_compacts(const std::vector<CompactOp>& field, const GaugeField& gauge);

FockVector transport_vector(const FockVector& v, const GaugeField& gauge, Index vertex);
FockVector transport_functional(const FockVector& f, const GaugeField& gauge, Index vertex);

}  // namespace kuiper

#endif  // KUIPER_KUIPER_COMPLEX_HPP
