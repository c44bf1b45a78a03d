#include "kuiper/kuiper_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kuiper/sampling.hpp"

namespace kuiper {

namespace {

void require_compatible(const CochainField& field, const GaugeField& gauge) {
  if (!(field.grid() == gauge.grid())) {
    throw StructuralError("gauge and field live on different grids");
  }
  if (field.levels() != gauge.levels()) {
    throw StructuralError("gauge and field use different truncations");
  }
}

// Column block of a field belonging to one vertex.
auto vertex_block(CMatrix& data, Index vertex, Index width) {
  return data.middleCols(vertex * width, width);
}

auto vertex_block(const CMatrix& data, Index vertex, Index width) {
  return data.middleCols(vertex * width, width);
}

std::string rank_warning(const char* what, const RankInfo& info) {
  return std::string(what) + ": spectral gap within 10x of the rank threshold (largest zero " +
         std::to_string(info.largest_zero) + ", smallest nonzero " + std::to_string(info.smallest_nonzero) +
         ", threshold " + std::to_string(info.threshold) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------

TorusGrid::TorusGrid(int resolution) : g_(resolution) {
  if (resolution < 2) {
    throw PreconditionError("TorusGrid: resolution must be at least 2");
  }
}

double TorusGrid::spacing() const { return 2.0 * std::numbers::pi / g_; }

double TorusGrid::cell_volume() const { return spacing() * spacing(); }

Index TorusGrid::vertex(int ix, int iy) const {
  const int x = ((ix % g_) + g_) % g_;
  const int y = ((iy % g_) + g_) % g_;
  return static_cast<Index>(y) * g_ + x;
}

Index TorusGrid::shifted(Index m, int dir) const {
  const int x = x_of(m);
  const int y = y_of(m);
  return dir == 0 ? vertex(x + 1, y) : vertex(x, y + 1);
}

// ---------------------------------------------------------------------------

CochainField::CochainField(TorusGrid grid, int degree, CMatrix data)
    : grid_(grid), degree_(degree), data_(std::move(data)) {
  if (degree < 0 || degree > kTopDegree + 1) {
    throw StructuralError("CochainField: degree out of range");
  }
  if (data_.cols() != grid_.vertices() * wedge_dim(degree)) {
    throw StructuralError("CochainField: column count does not match grid and degree");
  }
}

CochainField CochainField::zero(TorusGrid grid, int degree, Index levels) {
  return CochainField(grid, degree, CMatrix::Zero(levels, grid.vertices() * wedge_dim(degree)));
}

FockVector CochainField::at(Index vertex, int wedge) const {
  return FockVector(data_.col(column(vertex, wedge)), Side::Dual);
}

GradedElement CochainField::at(Index vertex) const {
  return GradedElement(degree_, vertex_block(data_, vertex, wedge_count()));
}

CVector CochainField::flattened() const { return data_.reshaped(); }

CochainField CochainField::from_flattened(TorusGrid grid, int degree, Index levels, const CVector& v) {
  const Index cols = grid.vertices() * wedge_dim(degree);
  if (v.size() != levels * cols) {
    throw StructuralError("CochainField::from_flattened: length mismatch");
  }
  return CochainField(grid, degree, v.reshaped(levels, cols));
}

CochainField& CochainField::operator+=(const CochainField& other) {
  if (!(grid_ == other.grid_) || degree_ != other.degree_ || levels() != other.levels()) {
    throw StructuralError("CochainField +=: shape mismatch");
  }
  data_ += other.data_;
  return *this;
}

CochainField& CochainField::operator-=(const CochainField& other) {
  if (!(grid_ == other.grid_) || degree_ != other.degree_ || levels() != other.levels()) {
    throw StructuralError("CochainField -=: shape mismatch");
  }
  data_ -= other.data_;
  return *this;
}

CochainField operator+(CochainField lhs, const CochainField& rhs) { return lhs += rhs; }
CochainField operator-(CochainField lhs, const CochainField& rhs) { return lhs -= rhs; }

CochainField tensor_constant(const CochainField& alpha, const FockVector& h) {
  if (alpha.levels() != 1) {
    throw StructuralError("tensor_constant: form field must have a single Fock level");
  }
  if (h.side() != Side::Dual) {
    throw StructuralError("tensor_constant: expects a dual Fock vector");
  }
  return CochainField(alpha.grid(), alpha.degree(), h.coords() * alpha.data());
}

CochainField multiply(const CVector& c, const CochainField& s) {
  if (c.size() != s.grid().vertices()) {
    throw StructuralError("multiply: scalar function has wrong length");
  }
  CMatrix data = s.data();
  const Index w = s.wedge_count();
  for (Index m = 0; m < c.size(); ++m) {
    vertex_block(data, m, w) *= c(m);
  }
  return CochainField(s.grid(), s.degree(), std::move(data));
}

// ---------------------------------------------------------------------------

GaugeField::GaugeField(TorusGrid grid, std::vector<CMatrix> unitaries)
    : grid_(grid), levels_(unitaries.empty() ? 0 : unitaries.front().rows()), u_(std::move(unitaries)) {
  if (static_cast<Index>(u_.size()) != grid_.vertices()) {
    throw StructuralError("GaugeField: one unitary per vertex required");
  }
  bool identity = true;
  for (const auto& u : u_) {
    if (u.rows() != levels_ || u.cols() != levels_) {
      throw StructuralError("GaugeField: unitaries must share one square shape");
    }
    if (unitarity_defect(u) > 1e-10) {
      throw PreconditionError("GaugeField: vertex matrix is not unitary");
    }
    identity = identity && u.isIdentity(0.0);
  }
  identity_ = identity;
}

GaugeField GaugeField::identity(TorusGrid grid, Index levels) {
  return GaugeField(grid, std::vector<CMatrix>(grid.vertices(), CMatrix::Identity(levels, levels)));
}

GaugeField GaugeField::random(TorusGrid grid, Index levels, Sampler& sampler) {
  std::vector<CMatrix> u;
  u.reserve(grid.vertices());
  for (Index m = 0; m < grid.vertices(); ++m) {
    u.push_back(sampler.unitary(levels));
  }
  return GaugeField(grid, std::move(u));
}

CochainField trivialize(const CochainField& s, const GaugeField& gauge) {
  require_compatible(s, gauge);
  if (gauge.is_identity()) {
    return s;
  }
  CMatrix data = s.data();
  const Index w = s.wedge_count();
  for (Index m = 0; m < s.grid().vertices(); ++m) {
    vertex_block(data, m, w) = gauge.functional_forward(m) * vertex_block(s.data(), m, w);
  }
  return CochainField(s.grid(), s.degree(), std::move(data));
}

CochainField untrivialize(const CochainField& t, const GaugeField& gauge) {
  require_compatible(t, gauge);
  if (gauge.is_identity()) {
    return t;
  }
  CMatrix data = t.data();
  const Index w = t.wedge_count();
  for (Index m = 0; m < t.grid().vertices(); ++m) {
    vertex_block(data, m, w) = gauge.functional_backward(m) * vertex_block(t.data(), m, w);
  }
  return CochainField(t.grid(), t.degree(), std::move(data));
}

// ---------------------------------------------------------------------------

CochainField discrete_d(const CochainField& field) {
  const TorusGrid& grid = field.grid();
  const int k = field.degree();
  if (k > kTopDegree) {
    throw StructuralError("discrete_d: no forms above the top degree");
  }
  CochainField out = CochainField::zero(grid, k + 1, field.levels());
  const auto basis = wedge_basis(k);
  const Index in_w = wedge_dim(k);
  const double inv_h = 1.0 / grid.spacing();
  for (Index m = 0; m < grid.vertices(); ++m) {
    for (int i = 0; i < kFormDimension; ++i) {
      const Index mp = grid.shifted(m, i);
      for (Index j = 0; j < in_w; ++j) {
        const WedgeProduct wp = wedge_left(i, basis[j]);
        if (wp.sign == 0) {
          continue;
        }
        out.data().col(out.column(m, wp.position)) +=
            (wp.sign * inv_h) * (field.data().col(mp * in_w + j) - field.data().col(m * in_w + j));
      }
    }
  }
  return out;
}

CochainField coupled_d(const CochainField& field, const GaugeField& gauge) {
  require_compatible(field, gauge);
  if (field.degree() == kTopDegree) {
    return CochainField::zero(field.grid(), kTopDegree + 1, field.levels());
  }
  return untrivialize(discrete_d(trivialize(field, gauge)), gauge);
}

CochainField act(const CochainField& field, const CompactOp& a, const GaugeField& gauge) {
  require_compatible(field, gauge);
  if (a.levels() != field.levels()) {
    throw StructuralError("act: operator truncation mismatch");
  }
  if (gauge.is_identity()) {
    return CochainField(field.grid(), field.degree(), a.matrix().transpose() * field.data());
  }
  CMatrix data = field.data();
  const Index w = field.wedge_count();
  for (Index m = 0; m < field.grid().vertices(); ++m) {
    const CMatrix& u = gauge.at(m);
    const CMatrix local = u.adjoint() * a.matrix() * u;  // operator seen from the fiber at m
    vertex_block(data, m, w) = local.transpose() * vertex_block(field.data(), m, w);
  }
  return CochainField(field.grid(), field.degree(), std::move(data));
}

double ch_equivariance_residual(const CochainField& field, const CompactOp& a, const GaugeField& gauge) {
  const CochainField lhs = coupled_d(act(field, a, gauge), gauge);
  const CochainField rhs = act(coupled_d(field, gauge), a, gauge);
  const CMatrix diff = lhs.data() - rhs.data();
  const Index w = lhs.wedge_count();
  double worst = 0.0;
  if (w == 0) {
    return worst;
  }
  for (Index m = 0; m < lhs.grid().vertices(); ++m) {
    worst = std::max(worst, vertex_block(diff, m, w).norm());
  }
  return worst;
}

Index cochain_dim(int degree, Index levels, const TorusGrid& grid) {
  return levels * grid.vertices() * wedge_dim(degree);
}

Eigen::MatrixXd assemble_scalar_d(int degree, const TorusGrid& grid) {
  const Index in_w = wedge_dim(degree);
  const Index out_w = wedge_dim(degree + 1);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(grid.vertices() * out_w, grid.vertices() * in_w);
  const auto basis = wedge_basis(degree);
  const double inv_h = 1.0 / grid.spacing();
  for (Index m = 0; m < grid.vertices(); ++m) {
    for (int i = 0; i < kFormDimension; ++i) {
      const Index mp = grid.shifted(m, i);
      for (Index j = 0; j < in_w; ++j) {
        const WedgeProduct wp = wedge_left(i, basis[j]);
        if (wp.sign == 0) {
          continue;
        }
        const Index row = m * out_w + wp.position;
        d(row, mp * in_w + j) += wp.sign * inv_h;
        d(row, m * in_w + j) -= wp.sign * inv_h;
      }
    }
  }
  return d;
}

CMatrix assemble_coupled_d(int degree, const GaugeField& gauge) {
  const TorusGrid& grid = gauge.grid();
  const Index n = gauge.levels();
  const Eigen::MatrixXd scalar = assemble_scalar_d(degree, grid);
  const Index in_w = wedge_dim(degree);
  const Index out_w = wedge_dim(degree + 1);
  CMatrix d = CMatrix::Zero(scalar.rows() * n, scalar.cols() * n);
  for (Index c = 0; c < scalar.cols(); ++c) {
    const Index m = c / in_w;
    for (Index r = 0; r < scalar.rows(); ++r) {
      const double v = scalar(r, c);
      if (v == 0.0) {
        continue;
      }
      if (gauge.is_identity()) {
        d.block(r * n, c * n, n, n).diagonal().setConstant(v);
      } else {
        const Index mr = r / out_w;
        d.block(r * n, c * n, n, n) = v * gauge.functional_backward(mr) * gauge.functional_forward(m);
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

CohomologyResult cohomology_ranks(const GaugeField& gauge) {
  CohomologyResult result;
  const Index n = gauge.levels();
  const TorusGrid& grid = gauge.grid();
  for (int k = 0; k < 2; ++k) {
    result.differential_ranks[k] = numerical_rank(assemble_coupled_d(k, gauge));
    if (result.differential_ranks[k].ambiguous) {
      result.warnings.push_back(rank_warning(k == 0 ? "rank d_0" : "rank d_1", result.differential_ranks[k]));
    }
  }
  const Index rank0 = result.differential_ranks[0].rank;
  const Index rank1 = result.differential_ranks[1].rank;
  result.ranks[0] = cochain_dim(0, n, grid) - rank0;
  result.ranks[1] = (cochain_dim(1, n, grid) - rank1) - rank0;
  result.ranks[2] = cochain_dim(2, n, grid) - rank1;
  return result;
}

CohomologyResult cohomology_ranks(Index levels, const TorusGrid& grid) {
  return cohomology_ranks(GaugeField::identity(grid, levels));
}

HodgeResult hodge_laplacian(int degree, const GaugeField& gauge) {
  if (degree < 0 || degree > kTopDegree) {
    throw StructuralError("hodge_laplacian: degree out of range");
  }
  HodgeResult result;
  result.degree = degree;
  const Index dim = cochain_dim(degree, gauge.levels(), gauge.grid());
  CMatrix up = CMatrix::Zero(0, dim);
  CMatrix down = CMatrix::Zero(dim, 0);
  if (degree < kTopDegree) {
    up = assemble_coupled_d(degree, gauge);
  }
  if (degree > 0) {
    down = assemble_coupled_d(degree - 1, gauge);
  }
  CMatrix laplacian = CMatrix::Zero(dim, dim);
  if (up.rows() > 0) {
    laplacian += up.adjoint() * up;
  }
  if (down.cols() > 0) {
    laplacian += down * down.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(laplacian);
  result.spectrum = classify_values(es.eigenvalues().cwiseMax(0.0));
  result.harmonic_dim = result.spectrum.nullity();
  if (result.spectrum.ambiguous) {
    result.warnings.push_back(rank_warning("Hodge Laplacian kernel", result.spectrum));
  }
  // eigenvalues are sorted ascending, so the kernel comes first
  result.harmonic_basis = es.eigenvectors().leftCols(result.harmonic_dim);
  for (Index j = 0; j < result.harmonic_dim; ++j) {
    const CVector h = result.harmonic_basis.col(j);
    if (up.rows() > 0) {
      result.closed_residual = std::max(result.closed_residual, (up * h).norm());
    }
    if (down.cols() > 0) {
      result.coclosed_residual = std::max(result.coclosed_residual, (down.adjoint() * h).norm());
    }
  }
  return result;
}

Index ch_generator_count(const HodgeResult& hodge, const GaugeField& gauge, double tol) {
  const TorusGrid& grid = gauge.grid();
  const Index n = gauge.levels();
  const Index cols = grid.vertices() * wedge_dim(hodge.degree);
  CMatrix kept(0, cols);  // stacked functional rows of the chosen generators
  Index count = 0;
  for (Index j = 0; j < hodge.harmonic_basis.cols(); ++j) {
    const CochainField field = CochainField::from_flattened(grid, hodge.degree, n, hodge.harmonic_basis.col(j));
    const CMatrix candidate = trivialize(field, gauge).data().topRows(1);
    const double scale = candidate.norm();
    if (scale <= 1e-12) {
      continue;
    }
    double residual = 1.0;
    if (kept.rows() > 0) {
      const CMatrix basis = kept.transpose();
      const CMatrix coeff = basis.completeOrthogonalDecomposition().solve(candidate.transpose());
      residual = (basis * coeff - candidate.transpose()).norm() / scale;
    }
    if (residual > tol) {
      kept.conservativeResize(kept.rows() + 1, Eigen::NoChange);
      kept.row(kept.rows() - 1) = candidate;
      ++count;
    }
  }
  return count;
}

double subspace_gap(const CMatrix& a, const CMatrix& b) {
  const CMatrix qa = a.householderQr().householderQ() * CMatrix::Identity(a.rows(), a.cols());
  const CMatrix qb = b.householderQr().householderQ() * CMatrix::Identity(b.rows(), b.cols());
  const CMatrix residual_b = qb - qa * (qa.adjoint() * qb);
  const CMatrix residual_a = qa - qb * (qb.adjoint() * qa);
  return std::max(spectral_norm(residual_a), spectral_norm(residual_b));
}

SymbolReport symbol_exactness(const Eigen::Vector2d& tau, Index levels) {
  if (tau.isZero(0.0)) {
    throw PreconditionError("symbol_exactness: covector must be nonzero");
  }
  std::array<CMatrix, 2> symbols;
  for (int k = 0; k < 2; ++k) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(wedge_dim(k + 1), wedge_dim(k));
    const auto basis = wedge_basis(k);
    for (int i = 0; i < kFormDimension; ++i) {
      for (Index j = 0; j < s.cols(); ++j) {
        const WedgeProduct wp = wedge_left(i, basis[j]);
        if (wp.sign != 0) {
          s(wp.position, j) += wp.sign * tau(i);
        }
      }
    }
    symbols[k] = CMatrix::Zero(s.rows() * levels, s.cols() * levels);
    for (Index r = 0; r < s.rows(); ++r) {
      for (Index c = 0; c < s.cols(); ++c) {
        symbols[k].block(r * levels, c * levels, levels, levels).diagonal().setConstant(s(r, c));
      }
    }
  }
  SymbolReport report;
  const RankInfo r0 = numerical_rank(symbols[0]);
  const RankInfo r1 = numerical_rank(symbols[1]);
  report.ranks = {r0.rank, r1.rank};
  const double composite = (symbols[1] * symbols[0]).cwiseAbs().maxCoeff();
  const bool injective = r0.rank == wedge_dim(0) * levels;
  const bool middle = r1.nullity() == r0.rank && composite <= kRankTolerance * tau.norm() * tau.norm();
  const bool surjective = r1.rank == wedge_dim(2) * levels;
  report.exact = injective && middle && surjective;
  return report;
}

CompactOp section_ch_product(const CochainField& s, const CochainField& t, const GaugeField& gauge) {
  if (s.degree() != t.degree()) {
    throw StructuralError("section_ch_product: degree mismatch");
  }
  const CMatrix a = trivialize(s, gauge).data();
  const CMatrix b = trivialize(t, gauge).data();
  return CompactOp(s.grid().cell_volume() * (a.conjugate() * b.transpose()));
}

std::vector<CompactOp> gauge_transport_compacts(const std::vector<CompactOp>& field, const GaugeField& gauge) {
  if (static_cast<Index>(field.size()) != gauge.grid().vertices()) {
    throw StructuralError("gauge_transport_compacts: one operator per vertex required");
  }
  std::vector<CompactOp> out;
  out.reserve(field.size());
  for (Index m = 0; m < gauge.grid().vertices(); ++m) {
    const CMatrix& u = gauge.at(m);
    if (field[m].levels() != gauge.levels()) {
      throw StructuralError("gauge_transport_compacts: truncation mismatch");
    }
    out.emplace_back(u * field[m].matrix() * u.adjoint());
  }
  return out;
}

FockVector transport_vector(const FockVector& v, const GaugeField& gauge, Index vertex) {
  if (v.side() != Side::Primal) {
    throw StructuralError("transport_vector expects a primal vector");
  }
  return FockVector(gauge.at(vertex) * v.coords(), Side::Primal);
}

FockVector transport_functional(const FockVector& f, const GaugeField& gauge, Index vertex) {
  if (f.side() != Side::Dual) {
    throw StructuralError("transport_functional expects a dual vector");
  }
  return FockVector(gauge.functional_forward(vertex) * f.coords(), Side::Dual);
}

}  // namespace kuiper
