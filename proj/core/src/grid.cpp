#include "maxlab/grid.hpp"

#include <cmath>

namespace maxlab {

BoxGrid::BoxGrid(std::array<double, 3> L, std::array<int, 3> N, Layout lay)
    : extent(L), n(N), layout(lay) {
  for (int a = 0; a < 3; ++a) {
    if (n[a] < 8) throw GridError("BoxGrid: resolution must be >= 8 cells per axis");
    if (!(extent[a] > 0.0)) throw GridError("BoxGrid: extents must be positive");
  }
}

std::array<int, 3> BoxGrid::comp_dims(Stagger s, int comp) const {
  std::array<int, 3> d = n;
  switch (s) {
    case Stagger::edge:
      for (int a = 0; a < 3; ++a)
        if (a != comp) d[a] += 1;
      break;
    case Stagger::face:
      d[comp] += 1;
      break;
    case Stagger::center:
    case Stagger::cell:
      break;
    case Stagger::node:
      for (int a = 0; a < 3; ++a) d[a] += 1;
      break;
  }
  return d;
}

Vec3 BoxGrid::comp_coord(Stagger s, int comp, int i, int j, int k) const {
  const std::array<int, 3> idx{i, j, k};
  Vec3 x;
  for (int a = 0; a < 3; ++a) {
    double off = 0.5;  // center default
    switch (s) {
      case Stagger::edge:
        off = (a == comp) ? 0.5 : 0.0;
        break;
      case Stagger::face:
        off = (a == comp) ? 0.0 : 0.5;
        break;
      case Stagger::node:
        off = 0.0;
        break;
      case Stagger::center:
      case Stagger::cell:
        off = 0.5;
        break;
    }
    x[a] = (idx[a] + off) * h(a);
  }
  return x;
}

VectorField edges_to_centers(const BoxGrid& g, const VectorField& e) {
  if (e.stag != Stagger::edge) throw GridError("edges_to_centers: edge field expected");
  VectorField out = VectorField::make(g, Stagger::center);
  const auto& N = g.n;
  for (int comp = 0; comp < 3; ++comp) {
    const Array3& in = e.c[comp];
    Array3& oc = out.c[comp];
    const int a1 = (comp + 1) % 3, a2 = (comp + 2) % 3;
    for (int i = 0; i < N[0]; ++i)
      for (int j = 0; j < N[1]; ++j)
        for (int k = 0; k < N[2]; ++k) {
          std::array<int, 3> b{i, j, k};
          std::array<int, 3> p = b;
          double s = 0.0;
          for (int d1 = 0; d1 < 2; ++d1)
            for (int d2 = 0; d2 < 2; ++d2) {
              p = b;
              p[a1] += d1;
              p[a2] += d2;
              s += in(p[0], p[1], p[2]);
            }
          oc(i, j, k) = 0.25 * s;
        }
  }
  return out;
}

VectorField faces_to_centers(const BoxGrid& g, const VectorField& f) {
  if (f.stag != Stagger::face) throw GridError("faces_to_centers: face field expected");
  VectorField out = VectorField::make(g, Stagger::center);
  const auto& N = g.n;
  for (int comp = 0; comp < 3; ++comp) {
    const Array3& in = f.c[comp];
    Array3& oc = out.c[comp];
    for (int i = 0; i < N[0]; ++i)
      for (int j = 0; j < N[1]; ++j)
        for (int k = 0; k < N[2]; ++k) {
          std::array<int, 3> b{i, j, k};
          std::array<int, 3> p = b;
          p[comp] += 1;
          oc(i, j, k) = 0.5 * (in(b[0], b[1], b[2]) + in(p[0], p[1], p[2]));
        }
  }
  return out;
}

VectorField to_centers(const BoxGrid& g, const VectorField& u) {
  switch (u.stag) {
    case Stagger::center:
      return u;
    case Stagger::edge:
      return edges_to_centers(g, u);
    case Stagger::face:
      return faces_to_centers(g, u);
    default:
      throw GridError("to_centers: unsupported staggering");
  }
}

VectorField make_random_smooth(const BoxGrid& g, Stagger s, CounterRng& rng, int modes,
                               bool tangential_zero) {
  VectorField f = VectorField::make(g, s);
  const double pi = 3.14159265358979323846;
  for (int comp = 0; comp < 3; ++comp) {
    const auto dims = g.comp_dims(s, comp);
    for (int m = 0; m < modes; ++m) {
      const double amp = rng.next_uniform(-1.0, 1.0);
      std::array<int, 3> mode;
      std::array<double, 3> phase;
      for (int a = 0; a < 3; ++a) {
        mode[a] = 1 + static_cast<int>(rng.next_uniform() * 2.999);
        phase[a] = rng.next_uniform(0.0, 2.0 * pi);
      }
      for (int i = 0; i < dims[0]; ++i)
        for (int j = 0; j < dims[1]; ++j)
          for (int k = 0; k < dims[2]; ++k) {
            const Vec3 x = g.comp_coord(s, comp, i, j, k);
            double val = amp;
            for (int a = 0; a < 3; ++a) {
              const double arg = pi * mode[a] * x[a] / g.extent[a];
              // sin factors in the transverse axes make tangential
              // components vanish on their boundary planes
              val *= (tangential_zero && a != comp) ? std::sin(arg)
                                                    : std::cos(arg + phase[a]);
            }
            f.c[comp](i, j, k) += val;
          }
    }
  }
  return f;
}

double bump3(const Vec3& x, const std::array<double, 3>& extent, double margin) {
  double val = 1.0;
  for (int a = 0; a < 3; ++a) {
    const double t = x[a] / extent[a];
    const double s = (t - 0.5) / (0.5 - margin);  // support |s| < 1
    if (std::abs(s) >= 1.0) return 0.0;
    val *= std::exp(1.0 - 1.0 / (1.0 - s * s));
  }
  return val;
}

}  // namespace maxlab
