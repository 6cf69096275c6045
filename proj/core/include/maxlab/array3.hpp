#ifndef MAXLAB_ARRAY3_HPP
#define MAXLAB_ARRAY3_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace maxlab {

/// Flat 3-D array of doubles, C order (k fastest).
struct Array3 {
  std::array<int, 3> n{0, 0, 0};
  std::vector<double> v;

  Array3() = default;
  Array3(int n0, int n1, int n2) : n{n0, n1, n2}, v(static_cast<std::size_t>(n0) * n1 * n2, 0.0) {}
  explicit Array3(const std::array<int, 3>& dims) : Array3(dims[0], dims[1], dims[2]) {}

  std::size_t size() const { return v.size(); }
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n[1] + j) * n[2] + k;
  }
  double& operator()(int i, int j, int k) { return v[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return v[idx(i, j, k)]; }

  void fill(double s) { std::fill(v.begin(), v.end(), s); }

  Array3& operator+=(const Array3& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  Array3& operator-=(const Array3& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  Array3& operator*=(double s) {
    for (double& x : v) x *= s;
    return *this;
  }
  void axpy(double a, const Array3& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += a * o.v[i];
  }

  double max_abs() const {
    double r = 0.0;
    for (double x : v) r = std::max(r, std::abs(x));
    return r;
  }
  bool all_finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

/// Fixed-order pairwise-tree sum over [lo, hi). Bit-reproducible regardless
/// of how surrounding work is scheduled across workers.
inline double pairwise_sum(const double* a, std::size_t lo, std::size_t hi) {
  const std::size_t len = hi - lo;
  if (len <= 16) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i];
    return s;
  }
  const std::size_t mid = lo + len / 2;
  return pairwise_sum(a, lo, mid) + pairwise_sum(a, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& a) {
  return a.empty() ? 0.0 : pairwise_sum(a.data(), 0, a.size());
}

}  // namespace maxlab

#endif
