#ifndef MAXLAB_TENSOR_HPP
#define MAXLAB_TENSOR_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace maxlab {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return (&x)[i]; }
  double operator[](int i) const { return (&x)[i]; }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Dense 3x3 matrix, row-major. Used both for general matrices (cross-product
/// matrices J) and for the symmetric material tensors.
struct Mat3 {
  std::array<double, 9> m{};  // m[3*i + j]

  double& operator()(int i, int j) { return m[3 * i + j]; }
  double operator()(int i, int j) const { return m[3 * i + j]; }

  static Mat3 zero() { return {}; }
  static Mat3 identity() {
    Mat3 a;
    a(0, 0) = a(1, 1) = a(2, 2) = 1.0;
    return a;
  }
  static Mat3 scale(double s) {
    Mat3 a;
    a(0, 0) = a(1, 1) = a(2, 2) = s;
    return a;
  }

  Mat3& operator+=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] += o.m[i];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] -= o.m[i];
    return *this;
  }
  Mat3& operator*=(double s) {
    for (int i = 0; i < 9; ++i) m[i] *= s;
    return *this;
  }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
inline Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
inline Mat3 operator*(double s, Mat3 a) { return a *= s; }

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = a(j, i);
  return t;
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = a[i] * b[j];
  return c;
}

inline double max_abs(const Mat3& a) {
  double r = 0.0;
  for (double v : a.m) r = std::max(r, std::abs(v));
  return r;
}

inline double asymmetry(const Mat3& a) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) r = std::max(r, std::abs(a(i, j) - a(j, i)));
  return r;
}

inline Mat3 symmetrize(const Mat3& a) {
  Mat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

/// Eigenvalues and eigenvectors of a symmetric 3x3 matrix via cyclic Jacobi
/// rotations. Eigenvectors are the columns of `vecs`; values ascending.
struct SymEigen {
  std::array<double, 3> vals{};
  Mat3 vecs;  // column j is the eigenvector for vals[j]
};

SymEigen sym_eigen(const Mat3& a);

double min_eigenvalue(const Mat3& a);

/// Symmetric positive square root, eigenvalues floored at `floor_eig`
/// (values below throw if `floor_eig` < 0 semantics are not wanted; here we
/// just clamp and let callers check min_eigenvalue first).
Mat3 spd_sqrt(const Mat3& a, double floor_eig = 0.0);

/// Solve a*x = b for symmetric positive definite a (LDL^T, with partial
/// fallback to full pivoting-free Cramer for tiny systems).
Vec3 solve_spd(const Mat3& a, const Vec3& b);

/// General 3x3 solve by Gaussian elimination with partial pivoting.
Vec3 solve_general(const Mat3& a, const Vec3& b);

double determinant(const Mat3& a);

}  // namespace maxlab

#endif
