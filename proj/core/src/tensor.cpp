#include "maxlab/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxlab {

SymEigen sym_eigen(const Mat3& a_in) {
  // Cyclic Jacobi. 3x3 symmetric matrices converge in a handful of sweeps.
  Mat3 a = symmetrize(a_in);
  Mat3 v = Mat3::identity();
  for (int sweep = 0; sweep < 32; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-34) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 r = Mat3::identity();
        r(p, p) = c;
        r(q, q) = c;
        r(p, q) = s;
        r(q, p) = -s;
        a = transpose(r) * a * r;
        a(p, q) = a(q, p) = 0.0;
        v = v * r;
      }
    }
  }
  SymEigen e;
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  for (int k = 0; k < 3; ++k) {
    e.vals[k] = a(order[k], order[k]);
    for (int r = 0; r < 3; ++r) e.vecs(r, k) = v(r, order[k]);
  }
  return e;
}

double min_eigenvalue(const Mat3& a) { return sym_eigen(a).vals[0]; }

Mat3 spd_sqrt(const Mat3& a, double floor_eig) {
  SymEigen e = sym_eigen(a);
  Mat3 r = Mat3::zero();
  for (int k = 0; k < 3; ++k) {
    const double lam = std::max(e.vals[k], floor_eig);
    const double s = std::sqrt(lam);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) += s * e.vecs(i, k) * e.vecs(j, k);
  }
  return r;
}

Vec3 solve_spd(const Mat3& a, const Vec3& b) {
  // LDL^T without pivoting; fine for the uniformly positive material tensors.
  const double d0 = a(0, 0);
  if (d0 <= 0.0) return solve_general(a, b);
  const double l10 = a(1, 0) / d0;
  const double l20 = a(2, 0) / d0;
  const double d1 = a(1, 1) - l10 * l10 * d0;
  if (d1 <= 0.0) return solve_general(a, b);
  const double l21 = (a(2, 1) - l20 * l10 * d0) / d1;
  const double d2 = a(2, 2) - l20 * l20 * d0 - l21 * l21 * d1;
  if (d2 <= 0.0) return solve_general(a, b);
  // forward: L y = b
  const double y0 = b.x;
  const double y1 = b.y - l10 * y0;
  const double y2 = b.z - l20 * y0 - l21 * y1;
  // diag + backward: L^T x = D^{-1} y
  const double w0 = y0 / d0, w1 = y1 / d1, w2 = y2 / d2;
  Vec3 x;
  x.z = w2;
  x.y = w1 - l21 * x.z;
  x.x = w0 - l10 * x.y - l20 * x.z;
  return x;
}

Vec3 solve_general(const Mat3& a_in, const Vec3& b_in) {
  double a[3][4] = {{a_in(0, 0), a_in(0, 1), a_in(0, 2), b_in.x},
                    {a_in(1, 0), a_in(1, 1), a_in(1, 2), b_in.y},
                    {a_in(2, 0), a_in(2, 1), a_in(2, 2), b_in.z}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300) throw std::runtime_error("singular 3x3 system");
    if (piv != col)
      for (int c = 0; c < 4; ++c) std::swap(a[piv][c], a[col][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

double determinant(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace maxlab
