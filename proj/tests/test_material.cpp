#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxlab/material.hpp"
#include "maxlab/rng.hpp"

using namespace maxlab;

namespace {
Vec3 rand_vec(CounterRng& rng, double scale) {
  return {rng.next_uniform(-scale, scale), rng.next_uniform(-scale, scale),
          rng.next_uniform(-scale, scale)};
}

// central-difference Jacobian of xi -> a(x,xi) xi, the independent oracle for eval_diff
Mat3 fd_jacobian(const MaterialLaw& law, const Vec3& x, const Vec3& xi, double step) {
  Mat3 j;
  for (int c = 0; c < 3; ++c) {
    Vec3 e;
    e[c] = step;
    const Vec3 fp = law.eval(x, xi + e) * (xi + e);
    const Vec3 fm = law.eval(x, xi - e) * (xi - e);
    for (int r = 0; r < 3; ++r) j(r, c) = (fp[r] - fm[r]) / (2.0 * step);
  }
  return j;
}

MaterialLaw unit_kerr() {
  PhiProfile phi;  // phi(s) = s
  return MaterialLaw::kerr(Mat3::identity(), phi, SpatialScalar{1.0, 0.0, {1, 1, 1}});
}
}  // namespace

TEST_CASE("eval: identity, kerr direct value, zero cubic") {
  const Vec3 x{0.3, 0.2, 0.7};
  MaterialLaw one = MaterialLaw::constant(1.0);
  CHECK(max_abs(one.eval(x, {0.4, -0.2, 0.9}) - Mat3::identity()) == 0.0);

  MaterialLaw kerr = unit_kerr();
  const Mat3 v = kerr.eval(x, {0.1, 0.0, 0.0});
  CHECK(max_abs(v - Mat3::scale(1.01)) < 1e-15);

  MaterialLaw cub = MaterialLaw::cubic(Mat3::scale(2.0), {});
  CHECK(max_abs(cub.eval(x, {0.5, 0.1, -0.3}) - Mat3::scale(2.0)) == 0.0);
}

TEST_CASE("eval_diff: reduces to eval at xi = 0 and matches the symbolic kerr form") {
  const Vec3 x{0.5, 0.5, 0.5};
  CounterRng rng(3);
  for (int t = 0; t < 8; ++t) {
    MaterialLaw law = (t % 2 == 0) ? unit_kerr() : MaterialLaw::constant(2.0);
    CHECK(max_abs(law.eval_diff(x, {0, 0, 0}) - law.eval(x, {0, 0, 0})) < 1e-15);
  }
  MaterialLaw kerr = unit_kerr();
  for (int t = 0; t < 32; ++t) {
    const Vec3 xi = rand_vec(rng, 0.4);
    // (1+|xi|^2) I + 2 xi xi^T
    Mat3 exact = Mat3::scale(1.0 + dot(xi, xi)) + 2.0 * outer(xi, xi);
    CHECK(max_abs(kerr.eval_diff(x, xi) - exact) < 1e-14);
  }
}

TEST_CASE("eval_diff equals the finite-difference Jacobian at order >= 1.9") {
  CounterRng rng(5);
  std::array<double, 81> chi{};
  for (auto& c : chi) c = rng.next_uniform(-0.2, 0.2);
  const MaterialLaw laws[] = {unit_kerr(), MaterialLaw::cubic(Mat3::identity(), chi)};
  const Vec3 x{0.25, 0.5, 0.75};
  for (const auto& law : laws) {
    for (int t = 0; t < 16; ++t) {
      const Vec3 xi = rand_vec(rng, 0.3);
      const Mat3 jd = law.eval_diff(x, xi);
      const double e1 = max_abs(fd_jacobian(law, x, xi, 1e-3) - jd);
      const double e2 = max_abs(fd_jacobian(law, x, xi, 5e-4) - jd);
      if (e1 > 1e-12) {  // below that, roundoff dominates the ratio
        const double order = std::log2(e1 / e2);
        CHECK(order >= 1.9);
      }
      CHECK(e2 < 1e-5);
    }
  }
}

TEST_CASE("eval_diff symmetry over 1e3 random samples (kerr and symmetrized cubic)") {
  CounterRng rng(7);
  std::array<double, 81> chi{};
  for (auto& c : chi) c = rng.next_uniform(-0.3, 0.3);
  MaterialLaw cub = MaterialLaw::cubic(Mat3::identity(), chi);
  MaterialLaw kerr = unit_kerr();
  for (int t = 0; t < 1000; ++t) {
    const Vec3 x{rng.next_uniform(), rng.next_uniform(), rng.next_uniform()};
    const Vec3 xi = rand_vec(rng, 0.3);
    CHECK(asymmetry(kerr.eval_diff(x, xi)) <= 1e-12);
    CHECK(asymmetry(cub.eval_diff(x, xi)) <= 1e-12);
    CHECK(asymmetry(kerr.eval(x, xi)) <= 1e-12);
    CHECK(asymmetry(cub.eval(x, xi)) <= 1e-12);
  }
}

TEST_CASE("positivity radius: constant, kerr bisection oracle, zero cubic") {
  const auto grid = default_xi_grid(16, 200);
  const std::vector<Vec3> xs = {{0.5, 0.5, 0.5}};

  MaterialLaw one = MaterialLaw::constant(1.0);
  CHECK(positivity_radius(one, 0.25, grid, xs) == doctest::Approx(1.0));

  MaterialLaw cub = MaterialLaw::cubic(Mat3::scale(2.0), {});
  CHECK(positivity_radius(cub, 1.0, grid, xs) == doctest::Approx(1.0));

  // kerr with phi(s) = -s: eval_diff = (1-|xi|^2) I - 2 xi xi^T, smallest
  // eigenvalue 1 - 3 r^2 along xi; crosses eta = 0.5 at r = sqrt(1/6)
  PhiProfile neg;
  neg.c1 = -1.0;
  MaterialLaw law = MaterialLaw::kerr(Mat3::identity(), neg, SpatialScalar{1.0, 0.0, {1, 1, 1}});
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const Vec3 xi{mid, 0, 0};
    if (min_eigenvalue(law.eval_diff(xs[0], xi)) >= 0.5)
      lo = mid;
    else
      hi = mid;
  }
  const double oracle = 0.5 * (lo + hi);
  CHECK(oracle == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-6));
  const double swept = positivity_radius(law, 0.5, grid, xs);
  CHECK(std::abs(swept - oracle) < 2.0 / 200.0);  // sweep resolution
}

TEST_CASE("positivity radius reports violation at xi = 0") {
  MaterialLaw weak = MaterialLaw::constant(0.6);
  CHECK_THROWS_AS(positivity_radius(weak, 0.5, default_xi_grid(8, 8), {{0.5, 0.5, 0.5}}),
                  MaterialError);
}

TEST_CASE("constitutive inversion: linear one-step, kerr vs 1-D bisection, zero") {
  const Vec3 x{0.5, 0.5, 0.5};
  Mat3 t = Mat3::identity();
  t(0, 1) = t(1, 0) = 0.2;
  t(2, 2) = 3.0;
  MaterialLaw lin = MaterialLaw::linear(t);
  const Vec3 d{0.4, -0.1, 0.7};
  const Vec3 xi = invert_constitutive(lin, x, d, {0, 0, 0}, 1e-13);
  CHECK(norm(t * xi - d) < 1e-13);

  MaterialLaw kerr = unit_kerr();
  const Vec3 dk{0.1, 0.0, 0.0};
  // oracle: solve (1 + s^2) s = 0.1 by bisection
  double lo = 0.0, hi = 0.2;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((1.0 + mid * mid) * mid < 0.1 ? lo : hi) = mid;
  }
  const Vec3 rk = invert_constitutive(kerr, x, dk, dk, 1e-14);
  CHECK(rk.x == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-10));
  CHECK(std::abs(rk.y) < 1e-14);

  const Vec3 rz = invert_constitutive(kerr, x, {0, 0, 0}, {0, 0, 0}, 1e-14);
  CHECK(norm(rz) == 0.0);
}

TEST_CASE("inversion roundtrip on |xi| <= delta/2 and iteration budget") {
  CounterRng rng(19);
  MaterialLaw kerr = unit_kerr();
  const Vec3 x{0.5, 0.5, 0.5};
  for (int t = 0; t < 200; ++t) {
    const Vec3 xi = rand_vec(rng, 0.25);
    const Vec3 d = kerr.eval(x, xi) * xi;
    const Vec3 back = invert_constitutive(kerr, x, d, d, 1e-12, 8);
    CHECK(norm(back - xi) < 1e-10);
    CHECK(norm(kerr.eval(x, back) * back - d) < 1e-12);
  }
}

TEST_CASE("directional state-derivatives of eval_diff match the kerr closed form") {
  MaterialLaw kerr = unit_kerr();
  const Vec3 x{0.5, 0.5, 0.5};
  CounterRng rng(23);
  for (int t = 0; t < 16; ++t) {
    const Vec3 xi = rand_vec(rng, 0.2);
    const Vec3 v = rand_vec(rng, 1.0);
    // d/ds [(1+|xi+sv|^2) I + 2 (xi+sv)(xi+sv)^T] at s=0
    Mat3 exact = (2.0 * dot(xi, v)) * Mat3::identity() + 2.0 * (outer(v, xi) + outer(xi, v));
    CHECK(max_abs(eval_diff_dir(kerr, x, xi, v) - exact) < 1e-8);
    Mat3 exact2 = (2.0 * dot(v, v)) * Mat3::identity() + 4.0 * outer(v, v);
    CHECK(max_abs(eval_diff_dir2(kerr, x, xi, v) - exact2) < 1e-5);
  }
}
