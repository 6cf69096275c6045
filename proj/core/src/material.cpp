#include "maxlab/material.hpp"

#include <algorithm>
#include <cmath>

namespace maxlab {

namespace {
constexpr double kPi = 3.14159265358979323846;

// all 24 permutations of 4 indices
const int kPerm4[24][4] = {
    {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
    {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
    {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
    {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};

inline int chi_index(int i, int j, int k, int l) { return ((i * 3 + j) * 3 + k) * 3 + l; }

// The two required symmetries (in {j,k,l} and in {i,l}) generate the full
// symmetric group on the four indices, so ingestion symmetrizes over S4.
std::array<double, 81> symmetrize_chi(const std::array<double, 81>& in) {
  std::array<double, 81> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const int idx[4] = {i, j, k, l};
          double s = 0.0;
          for (const auto& p : kPerm4)
            s += in[chi_index(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]])];
          out[chi_index(i, j, k, l)] = s / 24.0;
        }
  return out;
}
}  // namespace

double SpatialScalar::value(const Vec3& x, const std::array<double, 3>& extent) const {
  if (amp == 0.0) return c0;
  double m = amp;
  for (int a = 0; a < 3; ++a) m *= std::cos(kPi * freq[a] * x[a] / extent[a]);
  return c0 + m;
}

MaterialLaw MaterialLaw::constant(double value, double eta) {
  MaterialLaw l;
  l.kind = LawKind::constant_scalar;
  l.base = Mat3::scale(value);
  l.eta = eta;
  return l;
}

MaterialLaw MaterialLaw::linear(const Mat3& tensor, double eta) {
  MaterialLaw l;
  l.kind = LawKind::linear_tensor;
  l.base = symmetrize(tensor);
  l.eta = eta;
  return l;
}

MaterialLaw MaterialLaw::kerr(const Mat3& base, PhiProfile phi, SpatialScalar a, double eta) {
  MaterialLaw l;
  l.kind = LawKind::kerr_isotropic;
  l.base = symmetrize(base);
  l.phi = phi;
  l.a_coef = a;
  l.eta = eta;
  return l;
}

MaterialLaw MaterialLaw::cubic(const Mat3& base, const std::array<double, 81>& chi_flat,
                               double eta) {
  MaterialLaw l;
  l.kind = LawKind::cubic_chi;
  l.base = symmetrize(base);
  l.chi = symmetrize_chi(chi_flat);
  l.eta = eta;
  return l;
}

Mat3 MaterialLaw::eval(const Vec3& x, const Vec3& xi) const {
  Mat3 a = base;
  a *= base_mod.value(x, extent);
  switch (kind) {
    case LawKind::constant_scalar:
    case LawKind::linear_tensor:
      break;
    case LawKind::kerr_isotropic: {
      const double s = dot(xi, xi);
      a += (a_coef.value(x, extent) * phi.value(s)) * Mat3::identity();
      break;
    }
    case LawKind::cubic_chi: {
      for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) {
          double s = 0.0;
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s += chi[chi_index(i, j, k, l)] * xi[j] * xi[k];
          a(i, l) += s;
        }
      break;
    }
  }
  return a;
}

Mat3 MaterialLaw::eval_diff(const Vec3& x, const Vec3& xi) const {
  // a^D_jk = a_jk + sum_l d_{xi_k} a_jl xi_l
  Mat3 a = eval(x, xi);
  switch (kind) {
    case LawKind::constant_scalar:
    case LawKind::linear_tensor:
      break;
    case LawKind::kerr_isotropic: {
      const double s = dot(xi, xi);
      const double c = 2.0 * a_coef.value(x, extent) * phi.derivative(s);
      a += c * outer(xi, xi);
      break;
    }
    case LawKind::cubic_chi: {
      // with the fully symmetric chi, the correction is 2 sum chi_i^{lkm} xi_k xi_m
      for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) {
          double s = 0.0;
          for (int k = 0; k < 3; ++k)
            for (int m = 0; m < 3; ++m) s += chi[chi_index(i, l, k, m)] * xi[k] * xi[m];
          a(i, l) += 2.0 * s;
        }
      break;
    }
  }
  return a;
}

bool MaterialLaw::diagonal() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && base(i, j) != 0.0) return false;
  if (kind == LawKind::cubic_chi) {
    for (double c : chi)
      if (c != 0.0) return false;
  }
  return true;
}

Mat3 Conductivity::eval(const Vec3& x) const {
  Mat3 s = base;
  s *= mod.value(x, extent);
  return s;
}

bool Conductivity::diagonal() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && base(i, j) != 0.0) return false;
  return true;
}

Mat3 eval(const MaterialLaw& law, const Vec3& x, const Vec3& xi) { return law.eval(x, xi); }
Mat3 eval_diff(const MaterialLaw& law, const Vec3& x, const Vec3& xi) {
  return law.eval_diff(x, xi);
}

std::vector<Vec3> default_xi_grid(int dirs, int radii) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(dirs) * radii + 1);
  pts.push_back({0.0, 0.0, 0.0});
  // golden-spiral directions
  const double ga = kPi * (3.0 - std::sqrt(5.0));
  for (int d = 0; d < dirs; ++d) {
    const double zc = 1.0 - 2.0 * (d + 0.5) / dirs;
    const double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double th = ga * d;
    const Vec3 dir{r * std::cos(th), r * std::sin(th), zc};
    for (int q = 1; q <= radii; ++q) {
      const double rad = static_cast<double>(q) / radii;
      pts.push_back(rad * dir);
    }
  }
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) { return dot(a, a) < dot(b, b); });
  return pts;
}

double positivity_radius(const MaterialLaw& law, double eta, const std::vector<Vec3>& xi_grid,
                         const std::vector<Vec3>& x_samples) {
  std::vector<Vec3> xs = x_samples;
  if (xs.empty()) xs.push_back({0.5 * law.extent[0], 0.5 * law.extent[1], 0.5 * law.extent[2]});
  for (const Vec3& x : xs) {
    const double lam0 = min_eigenvalue(law.eval(x, {0, 0, 0}));
    if (lam0 < 2.0 * eta - 1e-14)
      throw MaterialError("positivity: a(x,0) below the 2*eta floor at x=(" +
                          std::to_string(x.x) + "," + std::to_string(x.y) + "," +
                          std::to_string(x.z) + "), min eigenvalue " + std::to_string(lam0));
  }
  std::vector<Vec3> grid = xi_grid;
  std::sort(grid.begin(), grid.end(),
            [](const Vec3& a, const Vec3& b) { return dot(a, a) < dot(b, b); });
  double good = 0.0;
  for (const Vec3& xi : grid) {
    const double r = norm(xi);
    if (r > 1.0) break;
    bool ok = true;
    for (const Vec3& x : xs) {
      if (min_eigenvalue(law.eval(x, xi)) < eta || min_eigenvalue(law.eval_diff(x, xi)) < eta) {
        ok = false;
        break;
      }
    }
    if (!ok) return good;
    good = std::max(good, r);
  }
  return good;
}

Vec3 invert_constitutive(const MaterialLaw& law, const Vec3& x, const Vec3& d, const Vec3& guess,
                         double tol, int max_iter) {
  if (!(tol > 0.0)) throw MaterialError("invert_constitutive: tol must be positive");
  Vec3 xi = guess;
  auto residual = [&](const Vec3& z) { return law.eval(x, z) * z - d; };
  Vec3 r = residual(xi);
  double rn = norm(r);
  for (int it = 0; it < max_iter; ++it) {
    if (rn <= tol) return xi;
    const Mat3 jac = law.eval_diff(x, xi);
    Vec3 step = solve_spd(jac, r);
    // damped update: halve until the residual decreases
    double lambda = 1.0;
    for (int half = 0; half < 12; ++half) {
      const Vec3 trial = xi - lambda * step;
      const Vec3 rt = residual(trial);
      const double rtn = norm(rt);
      if (rtn < rn) {
        xi = trial;
        r = rt;
        rn = rtn;
        break;
      }
      lambda *= 0.5;
      if (half == 11) {
        xi = trial;
        r = rt;
        rn = rtn;
      }
    }
  }
  if (rn <= tol) return xi;
  throw NewtonError("invert_constitutive: no convergence, residual " + std::to_string(rn), rn);
}

namespace {
// central-difference step sizes chosen for ~sqrt/cbrt(machine eps) balance
constexpr double kFdStep1 = 6.0e-6;
constexpr double kFdStep2 = 2.0e-4;
}  // namespace

Mat3 eval_diff_dir(const MaterialLaw& law, const Vec3& x, const Vec3& xi, const Vec3& v) {
  const double vn = norm(v);
  if (vn == 0.0) return Mat3::zero();
  const Vec3 u = (1.0 / vn) * v;
  const double d = kFdStep1;
  Mat3 g = law.eval_diff(x, xi + d * u) - law.eval_diff(x, xi - d * u);
  g *= vn / (2.0 * d);
  return g;
}

Mat3 eval_diff_dir2(const MaterialLaw& law, const Vec3& x, const Vec3& xi, const Vec3& v) {
  const double vn = norm(v);
  if (vn == 0.0) return Mat3::zero();
  const Vec3 u = (1.0 / vn) * v;
  const double d = kFdStep2;
  Mat3 g = law.eval_diff(x, xi + d * u) + law.eval_diff(x, xi - d * u) - 2.0 * law.eval_diff(x, xi);
  g *= vn * vn / (d * d);
  return g;
}

Mat3 eval_dir(const MaterialLaw& law, const Vec3& x, const Vec3& xi, const Vec3& v) {
  const double vn = norm(v);
  if (vn == 0.0) return Mat3::zero();
  const Vec3 u = (1.0 / vn) * v;
  const double d = kFdStep1;
  Mat3 g = law.eval(x, xi + d * u) - law.eval(x, xi - d * u);
  g *= vn / (2.0 * d);
  return g;
}

}  // namespace maxlab
