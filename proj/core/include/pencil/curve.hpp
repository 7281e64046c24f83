#pragma once

// The curve family f = prod_j (x^p - psi(y, alpha_j)), psi(y, a) = y - a y^p,
// together with its singular pencil parameters and exact checks.

#include <complex>
#include <string>
#include <vector>

#include "pencil/exact.hpp"
#include "pencil/numeric.hpp"

namespace pencil {

enum class AlphaMode { RealDescending, RootsOfUnity };

std::string to_string(AlphaMode mode);
AlphaMode alpha_mode_from_string(const std::string& s);

struct CurveSpec {
  int p = 0;
  int q = 0;
  std::vector<Complex> alphas;
  AlphaMode mode = AlphaMode::RealDescending;

  /// Validated spec with alpha_1 > ... > alpha_q > 0.
  static CurveSpec real_descending(int p, int q, const std::vector<double>& alphas);
  /// alpha_j = zeta^(j-1), zeta = exp(2 pi i / q).
  static CurveSpec roots_of_unity(int p, int q);
  /// alphas (q+1, q, ..., 2).
  static CurveSpec with_default_alphas(int p, int q);
  static std::vector<double> default_alphas(int q);

  int degree() const { return p * q; }
  /// The maximal-contact geometry assumes p > q; smaller p still computes.
  bool p_exceeds_q() const { return p > q; }
  std::vector<double> real_alphas() const;
  /// Throws InvalidSpec on any violated invariant.
  void validate() const;
};

Complex psi_eval(Complex y, Complex alpha, int p);
/// alpha * y * prod_k (gamma xi^k - y), the factored form of psi.
Complex psi_factored(Complex y, Complex alpha, int p);

/// gamma with gamma^(p-1) = 1/alpha (principal branch; real for alpha > 0).
Complex gamma_of(Complex alpha, int p);

/// prod_j (x^p - psi(y0, alpha_j)), monic of degree pq.
UniPoly fiber_polynomial(const CurveSpec& spec, Complex y0);
/// Coefficient-wise derivative in y of fiber_polynomial.
UniPoly fiber_polynomial_dy(const CurveSpec& spec, Complex y0);
PolynomialFamily fiber_family(const CurveSpec& spec);

struct SingularValue {
  Complex value;
  /// 0 for the origin, otherwise the owning component 1..q.
  int component = 0;
  /// Power of xi in gamma_j xi^k; 0 for the origin.
  int k = 0;
};

struct SingularValues {
  /// Origin first, then gamma_j xi^k ordered by j, then k.
  std::vector<SingularValue> values;
  /// False in roots-of-unity mode, where the real picture does not apply.
  bool real_geometry = true;

  std::vector<Complex> points() const;
  double max_modulus() const;
};

/// Throws DegenerateSpec when two values lie within 1e-8 max|Sigma|.
SingularValues singular_values(const CurveSpec& spec);

struct BaseConfiguration {
  double gamma0 = 0.0;
  /// psi(gamma0, alpha_j), strictly increasing and positive.
  std::vector<double> psi_values;
};

/// gamma0 = gamma_1 / 2; throws OrderViolation when the satellite order fails.
BaseConfiguration base_configuration(const CurveSpec& spec);

/// f_j = x^p - psi(y, alpha_j) over Q[y]; real-descending mode only.
BivariateExact component_polynomial_exact(const CurveSpec& spec, int j);
/// ord_{y=0} Res_x(f_i, f_j), components 1-based.
int intersection_multiplicity_origin(const CurveSpec& spec, int i, int j);

struct TorusIdentity {
  int c = 0;
  bool holds = false;
  /// True when decided in Z[zeta_q]; false for the sampled numeric check.
  bool symbolic = true;
};

/// Compares prod_j (zeta^(j-1) y^p - y + x^p) with c ((y^q)^p - (y - x^p)^q).
TorusIdentity torus_form_identity(const CurveSpec& spec);

}  // namespace pencil
