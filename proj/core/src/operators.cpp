#include "maxlab/operators.hpp"

#include <cmath>

#include "maxlab/stencil.hpp"

namespace maxlab {

namespace {

// shift index along axis
inline std::array<int, 3> shifted(std::array<int, 3> p, int axis, int d) {
  p[axis] += d;
  return p;
}

VectorField curl_collocated(const BoxGrid& g, const VectorField& u) {
  VectorField out = VectorField::make(g, Stagger::center);
  const auto h = g.spacing();
  std::array<Array3, 9> d;  // d[3*comp+axis] = D_axis u_comp
  for (int comp = 0; comp < 3; ++comp)
    for (int axis = 0; axis < 3; ++axis)
      if (axis != comp || true) d[3 * comp + axis] = derivative_axis(u.c[comp], axis, h[axis], 1);
  for (int c = 0; c < 3; ++c) {
    const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
    const Array3& dA = d[3 * a2 + a1];  // d u_{c+2} / d x_{c+1}
    const Array3& dB = d[3 * a1 + a2];  // d u_{c+1} / d x_{c+2}
    Array3& oc = out.c[c];
    for (std::size_t i = 0; i < oc.v.size(); ++i) oc.v[i] = dA.v[i] - dB.v[i];
  }
  return out;
}

}  // namespace

VectorField curl_primal(const BoxGrid& g, const VectorField& u) {
  if (g.layout == Layout::collocated) {
    if (u.stag != Stagger::center) throw GridError("curl_primal: center field expected");
    return curl_collocated(g, u);
  }
  if (u.stag != Stagger::edge) throw GridError("curl_primal: edge field expected");
  VectorField out = VectorField::make(g, Stagger::face);
  const auto h = g.spacing();
  for (int c = 0; c < 3; ++c) {
    const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
    Array3& oc = out.c[c];
    const Array3& uA = u.c[a2];  // differentiated along a1
    const Array3& uB = u.c[a1];  // differentiated along a2
    const auto dims = g.comp_dims(Stagger::face, c);
    for (int i = 0; i < dims[0]; ++i)
      for (int j = 0; j < dims[1]; ++j)
        for (int k = 0; k < dims[2]; ++k) {
          const std::array<int, 3> p{i, j, k};
          const auto p1 = shifted(p, a1, 1);
          const auto p2 = shifted(p, a2, 1);
          oc(i, j, k) = (uA(p1[0], p1[1], p1[2]) - uA(p[0], p[1], p[2])) / h[a1] -
                        (uB(p2[0], p2[1], p2[2]) - uB(p[0], p[1], p[2])) / h[a2];
        }
  }
  return out;
}

VectorField curl_dual(const BoxGrid& g, const VectorField& v, bool include_boundary_rows) {
  if (g.layout == Layout::collocated) {
    if (v.stag != Stagger::center) throw GridError("curl_dual: center field expected");
    return curl_collocated(g, v);
  }
  if (v.stag != Stagger::face) throw GridError("curl_dual: face field expected");
  VectorField out = VectorField::make(g, Stagger::edge);
  const auto h = g.spacing();
  for (int c = 0; c < 3; ++c) {
    const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
    Array3& oc = out.c[c];
    const Array3& vA = v.c[a2];
    const Array3& vB = v.c[a1];
    const auto dims = g.comp_dims(Stagger::edge, c);
    for (int i = 0; i < dims[0]; ++i)
      for (int j = 0; j < dims[1]; ++j)
        for (int k = 0; k < dims[2]; ++k) {
          const std::array<int, 3> p{i, j, k};
          const bool bnd1 = (p[a1] == 0 || p[a1] == dims[a1] - 1);
          const bool bnd2 = (p[a2] == 0 || p[a2] == dims[a2] - 1);
          if ((bnd1 || bnd2) && !include_boundary_rows) {
            oc(i, j, k) = 0.0;
            continue;
          }
          // transpose rows: out-of-range face values count as zero
          const auto m1 = shifted(p, a1, -1);
          const auto m2 = shifted(p, a2, -1);
          const double vAp = (p[a1] <= dims[a1] - 2) ? vA(p[0], p[1], p[2]) : 0.0;
          const double vAm = (p[a1] >= 1) ? vA(m1[0], m1[1], m1[2]) : 0.0;
          const double vBp = (p[a2] <= dims[a2] - 2) ? vB(p[0], p[1], p[2]) : 0.0;
          const double vBm = (p[a2] >= 1) ? vB(m2[0], m2[1], m2[2]) : 0.0;
          oc(i, j, k) = (vAp - vAm) / h[a1] - (vBp - vBm) / h[a2];
        }
  }
  return out;
}

ScalarField div_field(const BoxGrid& g, const VectorField& v) {
  const auto h = g.spacing();
  if (g.layout == Layout::collocated) {
    if (v.stag != Stagger::center) throw GridError("div_field: center field expected");
    ScalarField out = ScalarField::make(g, Stagger::cell);
    for (int c = 0; c < 3; ++c) {
      Array3 d = derivative_axis(v.c[c], c, h[c], 1);
      out.a += d;
    }
    return out;
  }
  if (v.stag != Stagger::face) throw GridError("div_field: face field expected");
  ScalarField out = ScalarField::make(g, Stagger::cell);
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        double s = 0.0;
        const std::array<int, 3> p{i, j, k};
        for (int c = 0; c < 3; ++c) {
          const auto p1 = shifted(p, c, 1);
          s += (v.c[c](p1[0], p1[1], p1[2]) - v.c[c](p[0], p[1], p[2])) / h[c];
        }
        out.a(i, j, k) = s;
      }
  return out;
}

ScalarField div_dual(const BoxGrid& g, const VectorField& u) {
  if (g.layout != Layout::yee || u.stag != Stagger::edge)
    throw GridError("div_dual: yee edge field expected");
  ScalarField out = ScalarField::make(g, Stagger::node);
  const auto h = g.spacing();
  const auto nd = g.comp_dims(Stagger::node, 0);
  for (int i = 0; i < nd[0]; ++i)
    for (int j = 0; j < nd[1]; ++j)
      for (int k = 0; k < nd[2]; ++k) {
        const std::array<int, 3> p{i, j, k};
        double s = 0.0;
        for (int c = 0; c < 3; ++c) {
          const auto dims = g.comp_dims(Stagger::edge, c);
          const auto m = shifted(p, c, -1);
          const double up = (p[c] <= dims[c] - 1) ? u.c[c](p[0], p[1], p[2]) : 0.0;
          const double um = (p[c] >= 1) ? u.c[c](m[0], m[1], m[2]) : 0.0;
          s += (up - um) / h[c];
        }
        out.a(i, j, k) = s;
      }
  return out;
}

VectorField grad_scalar(const BoxGrid& g, const ScalarField& p) {
  const auto h = g.spacing();
  if (g.layout == Layout::collocated) {
    if (p.stag != Stagger::cell) throw GridError("grad_scalar: cell field expected");
    VectorField out = VectorField::make(g, Stagger::center);
    for (int c = 0; c < 3; ++c) out.c[c] = derivative_axis(p.a, c, h[c], 1);
    return out;
  }
  if (p.stag != Stagger::node) throw GridError("grad_scalar: node field expected");
  VectorField out = VectorField::make(g, Stagger::edge);
  for (int c = 0; c < 3; ++c) {
    const auto dims = g.comp_dims(Stagger::edge, c);
    for (int i = 0; i < dims[0]; ++i)
      for (int j = 0; j < dims[1]; ++j)
        for (int k = 0; k < dims[2]; ++k) {
          const std::array<int, 3> q{i, j, k};
          const auto q1 = shifted(q, c, 1);
          out.c[c](i, j, k) = (p.a(q1[0], q1[1], q1[2]) - p.a(q[0], q[1], q[2])) / h[c];
        }
  }
  return out;
}

void apply_pec(const BoxGrid& g, VectorField& e) {
  if (g.layout == Layout::yee) {
    if (e.stag != Stagger::edge) throw GridError("apply_pec: edge field expected");
    for (int c = 0; c < 3; ++c) {
      const auto dims = g.comp_dims(Stagger::edge, c);
      Array3& ec = e.c[c];
      for (int i = 0; i < dims[0]; ++i)
        for (int j = 0; j < dims[1]; ++j)
          for (int k = 0; k < dims[2]; ++k) {
            const std::array<int, 3> p{i, j, k};
            bool bnd = false;
            for (int a = 0; a < 3; ++a)
              if (a != c && (p[a] == 0 || p[a] == dims[a] - 1)) bnd = true;
            if (bnd) ec(i, j, k) = 0.0;
          }
    }
    return;
  }
  if (e.stag != Stagger::center) throw GridError("apply_pec: center field expected");
  for (int c = 0; c < 3; ++c) {
    Array3& ec = e.c[c];
    for (int i = 0; i < g.n[0]; ++i)
      for (int j = 0; j < g.n[1]; ++j)
        for (int k = 0; k < g.n[2]; ++k) {
          const std::array<int, 3> p{i, j, k};
          bool bnd = false;
          for (int a = 0; a < 3; ++a)
            if (a != c && (p[a] == 0 || p[a] == g.n[a] - 1)) bnd = true;
          if (bnd) ec(i, j, k) = 0.0;
        }
  }
}

double boundary_tangential_max(const BoxGrid& g, const VectorField& u) {
  double r = 0.0;
  if (u.stag == Stagger::edge) {
    for_each_boundary_tangential_edge(g, [&](int c, int i, int j, int k) {
      r = std::max(r, std::abs(u.c[c](i, j, k)));
    });
    return r;
  }
  // collocated: extrapolate tangential components to each wall
  for (int c = 0; c < 3; ++c) {
    for (int a = 0; a < 3; ++a) {
      if (a == c) continue;
      const int na = g.n[a];
      const int b1 = (a + 1) % 3, b2 = (a + 2) % 3;
      for (int p = 0; p < g.n[b1]; ++p)
        for (int q = 0; q < g.n[b2]; ++q) {
          std::array<int, 3> lo{}, lo2{}, hi{}, hi2{};
          lo[a] = 0;
          lo2[a] = 1;
          hi[a] = na - 1;
          hi2[a] = na - 2;
          lo[b1] = lo2[b1] = hi[b1] = hi2[b1] = p;
          lo[b2] = lo2[b2] = hi[b2] = hi2[b2] = q;
          const double vlo =
              1.5 * u.c[c](lo[0], lo[1], lo[2]) - 0.5 * u.c[c](lo2[0], lo2[1], lo2[2]);
          const double vhi =
              1.5 * u.c[c](hi[0], hi[1], hi[2]) - 0.5 * u.c[c](hi2[0], hi2[1], hi2[2]);
          r = std::max({r, std::abs(vlo), std::abs(vhi)});
        }
    }
  }
  return r;
}

double boundary_normal_max(const BoxGrid& g, const VectorField& u) {
  double r = 0.0;
  if (u.stag == Stagger::face) {
    for (int c = 0; c < 3; ++c) {
      const auto dims = g.comp_dims(Stagger::face, c);
      for (int i = 0; i < dims[0]; ++i)
        for (int j = 0; j < dims[1]; ++j)
          for (int k = 0; k < dims[2]; ++k) {
            const std::array<int, 3> p{i, j, k};
            if (p[c] == 0 || p[c] == dims[c] - 1) r = std::max(r, std::abs(u.c[c](i, j, k)));
          }
    }
    return r;
  }
  for (int c = 0; c < 3; ++c) {
    const int b1 = (c + 1) % 3, b2 = (c + 2) % 3;
    for (int p = 0; p < g.n[b1]; ++p)
      for (int q = 0; q < g.n[b2]; ++q) {
        std::array<int, 3> lo{}, lo2{}, hi{}, hi2{};
        lo[c] = 0;
        lo2[c] = 1;
        hi[c] = g.n[c] - 1;
        hi2[c] = g.n[c] - 2;
        lo[b1] = lo2[b1] = hi[b1] = hi2[b1] = p;
        lo[b2] = lo2[b2] = hi[b2] = hi2[b2] = q;
        const double vlo = 1.5 * u.c[c](lo[0], lo[1], lo[2]) - 0.5 * u.c[c](lo2[0], lo2[1], lo2[2]);
        const double vhi = 1.5 * u.c[c](hi[0], hi[1], hi[2]) - 0.5 * u.c[c](hi2[0], hi2[1], hi2[2]);
        r = std::max({r, std::abs(vlo), std::abs(vhi)});
      }
  }
  return r;
}

double inner(const BoxGrid& g, const VectorField& u, const VectorField& v) {
  if (u.stag != v.stag) throw GridError("inner: staggering mismatch");
  const double vol = g.cell_volume();
  std::vector<double> terms;
  terms.reserve(u.size());
  for (int c = 0; c < 3; ++c) {
    if (u.c[c].n != v.c[c].n) throw GridError("inner: size mismatch");
    for (std::size_t i = 0; i < u.c[c].v.size(); ++i)
      terms.push_back(u.c[c].v[i] * v.c[c].v[i] * vol);
  }
  return pairwise_sum(terms);
}

double inner(const BoxGrid& g, const VectorField& u, const VectorField& v,
             const std::function<Mat3(const Vec3&)>& weight) {
  if (u.stag != v.stag) throw GridError("inner: staggering mismatch");
  const double vol = g.cell_volume();
  std::vector<double> terms;
  if (u.stag == Stagger::center) {
    terms.reserve(g.cell_count());
    for (int i = 0; i < g.n[0]; ++i)
      for (int j = 0; j < g.n[1]; ++j)
        for (int k = 0; k < g.n[2]; ++k) {
          const Mat3 w = weight(g.cell_center(i, j, k));
          Vec3 uu{u.c[0](i, j, k), u.c[1](i, j, k), u.c[2](i, j, k)};
          Vec3 vv{v.c[0](i, j, k), v.c[1](i, j, k), v.c[2](i, j, k)};
          terms.push_back(dot(uu, w * vv) * vol);
        }
    return pairwise_sum(terms);
  }
  // staggered: sample the weight at each component location, diagonal entry
  terms.reserve(u.size());
  for (int c = 0; c < 3; ++c) {
    const auto dims = u.c[c].n;
    for (int i = 0; i < dims[0]; ++i)
      for (int j = 0; j < dims[1]; ++j)
        for (int k = 0; k < dims[2]; ++k) {
          const Vec3 x = g.comp_coord(u.stag, c, i, j, k);
          const double w = weight(x)(c, c);
          terms.push_back(u.c[c](i, j, k) * w * v.c[c](i, j, k) * vol);
        }
  }
  return pairwise_sum(terms);
}

double inner(const BoxGrid& g, const VectorField& u, const VectorField& v,
             const std::vector<Mat3>& cell_weight) {
  if (u.stag != Stagger::center || v.stag != Stagger::center)
    throw GridError("inner: per-cell weights need center fields");
  const double vol = g.cell_volume();
  std::vector<double> terms;
  terms.reserve(g.cell_count());
  std::size_t q = 0;
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k, ++q) {
        Vec3 uu{u.c[0](i, j, k), u.c[1](i, j, k), u.c[2](i, j, k)};
        Vec3 vv{v.c[0](i, j, k), v.c[1](i, j, k), v.c[2](i, j, k)};
        terms.push_back(dot(uu, cell_weight[q] * vv) * vol);
      }
  return pairwise_sum(terms);
}

double inner(const BoxGrid& g, const ScalarField& p, const ScalarField& q) {
  if (p.a.n != q.a.n) throw GridError("inner: scalar size mismatch");
  const double vol = g.cell_volume();
  std::vector<double> terms;
  terms.reserve(p.a.v.size());
  for (std::size_t i = 0; i < p.a.v.size(); ++i) terms.push_back(p.a.v[i] * q.a.v[i] * vol);
  return pairwise_sum(terms);
}

void for_each_boundary_tangential_edge(const BoxGrid& g,
                                       const std::function<void(int, int, int, int)>& fn) {
  for (int c = 0; c < 3; ++c) {
    const auto dims = g.comp_dims(Stagger::edge, c);
    for (int i = 0; i < dims[0]; ++i)
      for (int j = 0; j < dims[1]; ++j)
        for (int k = 0; k < dims[2]; ++k) {
          const std::array<int, 3> p{i, j, k};
          bool bnd = false;
          for (int a = 0; a < 3; ++a)
            if (a != c && (p[a] == 0 || p[a] == dims[a] - 1)) bnd = true;
          if (bnd) fn(c, i, j, k);
        }
  }
}

double boundary_flux(const BoxGrid& g, const VectorField& u_edges, const VectorField& v_faces) {
  if (g.layout != Layout::yee) throw GridError("boundary_flux: yee layout only");
  const VectorField ct = curl_dual(g, v_faces, /*include_boundary_rows=*/true);
  const double vol = g.cell_volume();
  std::vector<double> terms;
  for_each_boundary_tangential_edge(g, [&](int c, int i, int j, int k) {
    terms.push_back(u_edges.c[c](i, j, k) * ct.c[c](i, j, k) * vol);
  });
  return pairwise_sum(terms);
}

}  // namespace maxlab
