#ifndef MAXLAB_GRID_HPP
#define MAXLAB_GRID_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "maxlab/array3.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/tensor.hpp"

namespace maxlab {

enum class Layout { yee, collocated };

/// Where values live on the grid. The yee layout stores E-like fields on
/// edges and H-like fields on faces; the collocated layout keeps all vector
/// components at cell centers. Scalars sit on nodes or cells.
enum class Stagger { edge, face, center, node, cell };

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Axis-aligned box [0,L1]x[0,L2]x[0,L3] with N_i cells per axis.
struct BoxGrid {
  std::array<double, 3> extent{1.0, 1.0, 1.0};
  std::array<int, 3> n{8, 8, 8};
  Layout layout = Layout::yee;

  BoxGrid() = default;
  BoxGrid(std::array<double, 3> L, std::array<int, 3> N, Layout lay);

  double h(int axis) const { return extent[axis] / n[axis]; }
  std::array<double, 3> spacing() const { return {h(0), h(1), h(2)}; }
  double h_min() const { return std::min({h(0), h(1), h(2)}); }
  double cell_volume() const { return h(0) * h(1) * h(2); }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(n[0]) * n[1] * n[2];
  }

  /// Array dims of component `comp` for the given staggering.
  std::array<int, 3> comp_dims(Stagger s, int comp) const;

  /// Physical coordinates of sample (i,j,k) of component `comp`.
  Vec3 comp_coord(Stagger s, int comp, int i, int j, int k) const;

  Vec3 cell_center(int i, int j, int k) const {
    return {(i + 0.5) * h(0), (j + 0.5) * h(1), (k + 0.5) * h(2)};
  }
  Vec3 node_coord(int i, int j, int k) const { return {i * h(0), j * h(1), k * h(2)}; }

  /// Staggering used by E-like (primal) and H-like (dual) fields in this layout.
  Stagger primal_stagger() const { return layout == Layout::yee ? Stagger::edge : Stagger::center; }
  Stagger dual_stagger() const { return layout == Layout::yee ? Stagger::face : Stagger::center; }
};

struct VectorField {
  Stagger stag = Stagger::center;
  std::array<Array3, 3> c;

  static VectorField make(const BoxGrid& g, Stagger s) {
    VectorField f;
    f.stag = s;
    for (int comp = 0; comp < 3; ++comp) f.c[comp] = Array3(g.comp_dims(s, comp));
    return f;
  }

  void fill(double s) {
    for (auto& a : c) a.fill(s);
  }
  VectorField& operator+=(const VectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  VectorField& operator*=(double s) {
    for (auto& a : c) a *= s;
    return *this;
  }
  void axpy(double a, const VectorField& o) {
    for (int i = 0; i < 3; ++i) c[i].axpy(a, o.c[i]);
  }
  double max_abs() const {
    return std::max({c[0].max_abs(), c[1].max_abs(), c[2].max_abs()});
  }
  bool all_finite() const { return c[0].all_finite() && c[1].all_finite() && c[2].all_finite(); }
  std::size_t size() const { return c[0].size() + c[1].size() + c[2].size(); }
};

struct ScalarField {
  Stagger stag = Stagger::cell;
  Array3 a;

  static ScalarField make(const BoxGrid& g, Stagger s) {
    ScalarField f;
    f.stag = s;
    f.a = Array3(g.comp_dims(s, 0));
    return f;
  }
};

/// Cell-centered Vec3 samples (used for center views of yee states and for
/// all stack/diagnostic work).
struct CenterField {
  std::array<int, 3> n{0, 0, 0};
  std::vector<Vec3> v;

  CenterField() = default;
  explicit CenterField(const BoxGrid& g)
      : n(g.n), v(static_cast<std::size_t>(g.n[0]) * g.n[1] * g.n[2]) {}
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n[1] + j) * n[2] + k;
  }
  Vec3& operator()(int i, int j, int k) { return v[idx(i, j, k)]; }
  const Vec3& operator()(int i, int j, int k) const { return v[idx(i, j, k)]; }
};

/// Average a yee edge field to cell centers (4 edges per component).
VectorField edges_to_centers(const BoxGrid& g, const VectorField& e);
/// Average a yee face field to cell centers (2 faces per component).
VectorField faces_to_centers(const BoxGrid& g, const VectorField& f);

/// Center view of any vector field: identity for collocated, averaging for yee.
VectorField to_centers(const BoxGrid& g, const VectorField& u);

/// Smooth random field built from a few low trigonometric modes. With
/// `tangential_zero`, tangential components vanish on the respective
/// boundary planes (PEC-compatible).
VectorField make_random_smooth(const BoxGrid& g, Stagger s, CounterRng& rng, int modes = 2,
                               bool tangential_zero = true);

/// C^inf bump, support strictly inside (margin..1-margin) per axis, peak 1.
double bump3(const Vec3& x, const std::array<double, 3>& extent, double margin = 0.2);

}  // namespace maxlab

#endif
