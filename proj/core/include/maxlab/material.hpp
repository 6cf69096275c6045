#ifndef MAXLAB_MATERIAL_HPP
#define MAXLAB_MATERIAL_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxlab/tensor.hpp"

namespace maxlab {

struct MaterialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Newton failed to reach the requested residual.
struct NewtonError : MaterialError {
  NewtonError(const std::string& what, double res) : MaterialError(what), residual(res) {}
  double residual;
};

enum class LawKind { constant_scalar, linear_tensor, kerr_isotropic, cubic_chi };

/// Scalar profile phi with phi(0) = 0 entering Kerr-type laws
/// a(x, xi) = base(x) + a(x) phi(|xi|^2) I.
struct PhiProfile {
  enum class Kind { linear, quadratic, saturating } kind = Kind::linear;
  double c1 = 1.0, c2 = 0.0;

  double value(double s) const {
    switch (kind) {
      case Kind::linear: return c1 * s;
      case Kind::quadratic: return c1 * s + c2 * s * s;
      case Kind::saturating: return c1 * s / (1.0 + s);
    }
    return 0.0;
  }
  double derivative(double s) const {
    switch (kind) {
      case Kind::linear: return c1;
      case Kind::quadratic: return c1 + 2.0 * c2 * s;
      case Kind::saturating: return c1 / ((1.0 + s) * (1.0 + s));
    }
    return 0.0;
  }
};

/// Smooth scalar field over the box, c0 + amp * prod_a cos(pi freq_a x_a / L_a).
struct SpatialScalar {
  double c0 = 1.0;
  double amp = 0.0;
  std::array<double, 3> freq{1.0, 1.0, 1.0};

  double value(const Vec3& x, const std::array<double, 3>& extent) const;
  bool uniform() const { return amp == 0.0; }
};

/// Nonlinear constitutive law a(x, xi) with its exact xi-Jacobian
/// a^D(x, xi) = Jacobian of xi -> a(x, xi) xi.
struct MaterialLaw {
  LawKind kind = LawKind::constant_scalar;
  Mat3 base = Mat3::identity();
  SpatialScalar base_mod;          // scalar spatial modulation of base
  double eta = 0.5;                // positivity floor
  PhiProfile phi;                  // kerr
  SpatialScalar a_coef;            // kerr amplitude a(x)
  std::array<double, 81> chi{};    // cubic coefficients, stored symmetrized
  std::array<double, 3> extent{1.0, 1.0, 1.0};

  static MaterialLaw constant(double value, double eta = 0.5);
  static MaterialLaw linear(const Mat3& tensor, double eta = 0.5);
  static MaterialLaw kerr(const Mat3& base, PhiProfile phi, SpatialScalar a, double eta = 0.5);
  /// chi given as a flat list in lexicographic (i,j,k,l) order; it is
  /// symmetrized on ingestion so the required index symmetries hold by
  /// construction.
  static MaterialLaw cubic(const Mat3& base, const std::array<double, 81>& chi_flat,
                           double eta = 0.5);

  Mat3 eval(const Vec3& x, const Vec3& xi) const;
  Mat3 eval_diff(const Vec3& x, const Vec3& xi) const;

  /// True when a(x, xi) does not depend on xi.
  bool state_independent() const {
    return kind == LawKind::constant_scalar || kind == LawKind::linear_tensor;
  }
  /// True when a(x, xi) is diagonal for diagonal-compatible use (yee backend).
  bool diagonal() const;
  bool spatially_uniform() const { return base_mod.uniform() && a_coef.uniform(); }
};

/// Space-dependent symmetric conductivity, sigma(x) >= eta I.
struct Conductivity {
  Mat3 base = Mat3::scale(0.5);
  SpatialScalar mod;
  double eta = 0.5;
  std::array<double, 3> extent{1.0, 1.0, 1.0};

  Mat3 eval(const Vec3& x) const;
  bool diagonal() const;
  bool spatially_uniform() const { return mod.uniform(); }
};

Mat3 eval(const MaterialLaw& law, const Vec3& x, const Vec3& xi);
Mat3 eval_diff(const MaterialLaw& law, const Vec3& x, const Vec3& xi);

/// Largest sampled radius delta <= 1 such that eval and eval_diff stay
/// >= eta I on every sample with |xi| <= delta; 0 when violated at xi = 0.
/// Throws when a(x,0) fails the 2 eta floor (reports the location).
double positivity_radius(const MaterialLaw& law, double eta, const std::vector<Vec3>& xi_grid,
                         const std::vector<Vec3>& x_samples);

/// Default xi sample set: `dirs` quasi-uniform directions times `radii`
/// radii in (0, 1].
std::vector<Vec3> default_xi_grid(int dirs = 32, int radii = 64);

/// Newton inversion of d = a(x,xi) xi using a^D as the exact Jacobian.
/// Steps are halved when the residual fails to decrease.
Vec3 invert_constitutive(const MaterialLaw& law, const Vec3& x, const Vec3& d, const Vec3& guess,
                         double tol, int max_iter = 25);

/// Directional state-derivative d/ds a^D(x, xi + s v)|_{s=0} by central
/// differencing (the chain-rule building block for the commutator terms).
Mat3 eval_diff_dir(const MaterialLaw& law, const Vec3& x, const Vec3& xi, const Vec3& v);

/// Second directional state-derivative d^2/ds^2 a^D(x, xi + s v)|_{s=0}.
Mat3 eval_diff_dir2(const MaterialLaw& law, const Vec3& x, const Vec3& xi, const Vec3& v);

/// Same differencing applied to eval (used for energy-identity coefficients).
Mat3 eval_dir(const MaterialLaw& law, const Vec3& x, const Vec3& xi, const Vec3& v);

}  // namespace maxlab

#endif
