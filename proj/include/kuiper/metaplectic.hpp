#ifndef KUIPER_METAPLECTIC_HPP
#define KUIPER_METAPLECTIC_HPP

#include <vector>

#include "kuiper/compacts.hpp"
#include "kuiper/fock.hpp"
#include "kuiper/module_structure.hpp"

namespace kuiper {

/**
 * Element of sp(2, R), written in the real basis {K0, Kplus, Kminus} with
 *
 *   [K0, Kplus] = Kminus,  [K0, Kminus] = -Kplus,  [Kplus, Kminus] = -2 K0.
 *
 * K0 is the elliptic (compact) direction; Kplus and Kminus are hyperbolic.
 */
struct SpGenerator {
  double k0 = 0.0;
  double kplus = 0.0;
  double kminus = 0.0;

  static SpGenerator K0() { return {1.0, 0.0, 0.0}; }
  static SpGenerator Kplus() { return {0.0, 1.0, 0.0}; }
  static SpGenerator Kminus() { return {0.0, 0.0, 1.0}; }

  bool is_compact() const { return kplus == 0.0 && kminus == 0.0; }
};

SpGenerator operator+(const SpGenerator& x, const SpGenerator& y);
SpGenerator operator*(double s, const SpGenerator& x);

/// Lie bracket from the structure constants above.
SpGenerator bracket(const SpGenerator& x, const SpGenerator& y);

/// Image in sp(2, R) acting on V = R^2 (the covering map, differentiated).
/// K0 maps to half the rotation generator, so exp(4 pi K0) is the first
/// closed loop in Sp(2, R).
Eigen::Matrix2d covering_image(const SpGenerator& x);

// Truncated ladder matrices on levels 0..N-1.
CMatrix annihilation(Index levels);
CMatrix creation(Index levels);
CMatrix ladder_k0(Index levels);     // (a^dag a + 1/2) / 2
CMatrix ladder_kplus(Index levels);  // (a^dag)^2 / 2
CMatrix ladder_kminus(Index levels); // a^2 / 2

/**
 * Truncated oscillator representation on the primal space.
 *
 *   K0     -> i * ladder_k0
 *   Kplus  -> (i / sqrt 2) (ladder_kplus + ladder_kminus)
 *   Kminus -> (ladder_kminus - ladder_kplus) / sqrt 2
 *
 * Every image is skew-Hermitian and preserves Fock parity.
 */
CompactOp dsigma_check(const SpGenerator& x, Index levels);

/// Dual action on functionals: dsigma(X) f = -f o dsigma_check(X).
FockVector dsigma_dual(const SpGenerator& x, const FockVector& f);

/// Derivation of Lambda^k V* induced by the dual of covering_image(x).
Eigen::MatrixXd form_derivation(int degree, const SpGenerator& x);

/// Infinitesimal higher oscillator representation on Lambda^k V* (x) H.
GradedElement dsigma_graded(const SpGenerator& x, const GradedElement& f);

/// Generator of dsigma_graded as a matrix on column-major coefficients.
CMatrix dsigma_graded_matrix(const SpGenerator& x, int degree, Index levels);

/// Conjugation representation, differentiated: [dsigma_check(X), a].
CompactOp drho(const SpGenerator& x, const CompactOp& a);

/// exp(t dsigma_check(X)).
CompactOp exponentiate(const SpGenerator& x, double t, Index levels);

/// exp(t dsigma^k(X)) applied to f. Requires a skew-Hermitian generator on
/// Lambda^k V* (x) H, which holds for compact X or for degree 0.
GradedElement graded_flow(const SpGenerator& x, double t, const GradedElement& f);

/// Parameter t for which exp(t K0) covers one full rotation of V.
double full_turn_parameter();

/// True when every entry (m, n) with m + n odd vanishes.
bool preserves_parity(const CompactOp& a, double tol = 0.0);

/// ||([dsigma(X), dsigma(Y)] - dsigma([X, Y])) f|| on the dual side: the
/// amount by which truncation breaks the representation property at f.
double closure_defect(const SpGenerator& x, const SpGenerator& y, const FockVector& f);

/// d/dt at t = 0 of (sigma(g_t) f)(sigma_check(g_t) v) by central differences.
Complex evaluation_flow_derivative(const SpGenerator& x, const FockVector& f, const FockVector& v,
                                   double step = 1e-3);

struct EquivarianceSample {
  GradedElement f;
  GradedElement h;
  CompactOp a;
  double t = 0.0;
};

struct EquivarianceResiduals {
  double action = 0.0;   // dsigma^k(X)(f.a) - (dsigma^k(X) f).a - f.drho(X, a)
  double product = 0.0;  // drho(X, (f,h)) - (dsigma^k(X) f, h) - (f, dsigma^k(X) h)
  double norm = 0.0;     // | ||sigma^k(exp t K0) f|| - ||f|| |
};

/// Maxima over the samples. The product and norm identities belong to the
/// compact direction only; callers assert them for K0.
EquivarianceResiduals equivariance_residuals(const SpGenerator& x,
                                             const std::vector<EquivarianceSample>& samples);

}  // namespace kuiper

#endif  // KUIPER_METAPLECTIC_HPP
