#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxlab/rng.hpp"
#include "maxlab/tensor.hpp"

using namespace maxlab;

namespace {
Mat3 random_spd(CounterRng& rng, double shift) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rng.next_uniform(-1.0, 1.0);
  Mat3 s = transpose(m) * m + Mat3::scale(shift);
  return s;
}
}  // namespace

TEST_CASE("cross product identities") {
  CounterRng rng(7);
  for (int t = 0; t < 50; ++t) {
    Vec3 a{rng.next_uniform(-2, 2), rng.next_uniform(-2, 2), rng.next_uniform(-2, 2)};
    Vec3 b{rng.next_uniform(-2, 2), rng.next_uniform(-2, 2), rng.next_uniform(-2, 2)};
    CHECK(std::abs(dot(cross(a, b), a)) < 1e-13);
    CHECK(std::abs(dot(cross(a, b), b)) < 1e-13);
  }
}

TEST_CASE("symmetric eigendecomposition reconstructs the matrix") {
  CounterRng rng(11);
  for (int t = 0; t < 100; ++t) {
    Mat3 s = random_spd(rng, 0.1);
    SymEigen e = sym_eigen(s);
    Mat3 r = Mat3::zero();
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) += e.vals[k] * e.vecs(i, k) * e.vecs(j, k);
    CHECK(max_abs(r - s) < 1e-12 * (1.0 + max_abs(s)));
    CHECK(e.vals[0] <= e.vals[1]);
    CHECK(e.vals[1] <= e.vals[2]);
  }
}

TEST_CASE("spd sqrt squares back") {
  CounterRng rng(13);
  for (int t = 0; t < 50; ++t) {
    Mat3 s = random_spd(rng, 0.2);
    Mat3 r = spd_sqrt(s);
    CHECK(max_abs(r * r - s) < 1e-11 * (1.0 + max_abs(s)));
    CHECK(asymmetry(r) < 1e-12);
  }
}

TEST_CASE("spd and general solves") {
  CounterRng rng(17);
  for (int t = 0; t < 50; ++t) {
    Mat3 s = random_spd(rng, 0.3);
    Vec3 b{rng.next_uniform(-1, 1), rng.next_uniform(-1, 1), rng.next_uniform(-1, 1)};
    Vec3 x = solve_spd(s, b);
    CHECK(norm(s * x - b) < 1e-11 * (1.0 + norm(b)));
    Vec3 y = solve_general(s, b);
    CHECK(norm(y - x) < 1e-10);
  }
}

TEST_CASE("counter rng is a pure function of (seed, counter)") {
  CounterRng a(42), b(42);
  for (int i = 0; i < 16; ++i) CHECK(a.next_bits() == b.bits(static_cast<std::uint64_t>(i)));
  // distinct seeds decorrelate
  CounterRng c(43);
  int same = 0;
  for (int i = 0; i < 64; ++i) same += (a.bits(i) == c.bits(i));
  CHECK(same == 0);
}
