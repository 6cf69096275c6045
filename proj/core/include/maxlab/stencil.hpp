#ifndef MAXLAB_STENCIL_HPP
#define MAXLAB_STENCIL_HPP

#include "maxlab/array3.hpp"

namespace maxlab {

/// In-place line derivative, order 1..3, 2nd-order accurate everywhere:
/// central stencils in the interior, one-sided closures at the ends.
/// `in` and `out` have length n with stride `stride`.
inline void derivative_line(const double* in, double* out, int n, long stride, double h,
                            int order) {
  auto at = [&](int i) { return in[static_cast<long>(i) * stride]; };
  auto put = [&](int i, double v) { out[static_cast<long>(i) * stride] = v; };
  switch (order) {
    case 1: {
      const double ih = 1.0 / h;
      put(0, (-1.5 * at(0) + 2.0 * at(1) - 0.5 * at(2)) * ih);
      for (int i = 1; i < n - 1; ++i) put(i, 0.5 * (at(i + 1) - at(i - 1)) * ih);
      put(n - 1, (1.5 * at(n - 1) - 2.0 * at(n - 2) + 0.5 * at(n - 3)) * ih);
      break;
    }
    case 2: {
      const double ih2 = 1.0 / (h * h);
      put(0, (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) * ih2);
      for (int i = 1; i < n - 1; ++i) put(i, (at(i - 1) - 2.0 * at(i) + at(i + 1)) * ih2);
      put(n - 1, (2.0 * at(n - 1) - 5.0 * at(n - 2) + 4.0 * at(n - 3) - at(n - 4)) * ih2);
      break;
    }
    case 3: {
      const double ih3 = 1.0 / (h * h * h);
      put(0, (-2.5 * at(0) + 9.0 * at(1) - 12.0 * at(2) + 7.0 * at(3) - 1.5 * at(4)) * ih3);
      put(1, (-1.5 * at(0) + 5.0 * at(1) - 6.0 * at(2) + 3.0 * at(3) - 0.5 * at(4)) * ih3);
      for (int i = 2; i < n - 2; ++i)
        put(i, 0.5 * (-at(i - 2) + 2.0 * at(i - 1) - 2.0 * at(i + 1) + at(i + 2)) * ih3);
      put(n - 2, (1.5 * at(n - 1) - 5.0 * at(n - 2) + 6.0 * at(n - 3) - 3.0 * at(n - 4) +
                  0.5 * at(n - 5)) *
                     ih3);
      put(n - 1, (2.5 * at(n - 1) - 9.0 * at(n - 2) + 12.0 * at(n - 3) - 7.0 * at(n - 4) +
                  1.5 * at(n - 5)) *
                     ih3);
      break;
    }
    default:
      break;
  }
}

/// Apply the 1-D derivative of the given order along `axis` to every line of `in`.
inline Array3 derivative_axis(const Array3& in, int axis, double h, int order) {
  Array3 out(in.n);
  if (order == 0) {
    out = in;
    return out;
  }
  const int n0 = in.n[0], n1 = in.n[1], n2 = in.n[2];
  const long s0 = static_cast<long>(n1) * n2, s1 = n2, s2 = 1;
  const long strides[3] = {s0, s1, s2};
  const long stride = strides[axis];
  const int len = in.n[axis];
  // iterate over all lines perpendicular to axis
  const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
  const int m1 = in.n[a1], m2 = in.n[a2];
  for (int p = 0; p < m1; ++p)
    for (int q = 0; q < m2; ++q) {
      long base = static_cast<long>(p) * strides[a1] + static_cast<long>(q) * strides[a2];
      derivative_line(in.v.data() + base, out.v.data() + base, len, stride, h, order);
    }
  (void)n0;
  return out;
}

/// Mixed partial D^alpha with per-axis orders (a0,a1,a2); axes commute, each
/// axis uses its own direct stencil so the closure accuracy does not degrade
/// under composition.
inline Array3 derivative_multi(const Array3& in, const std::array<int, 3>& alpha,
                               const std::array<double, 3>& h) {
  Array3 cur = in;
  for (int a = 0; a < 3; ++a)
    if (alpha[a] > 0) cur = derivative_axis(cur, a, h[a], alpha[a]);
  return cur;
}

}  // namespace maxlab

#endif
