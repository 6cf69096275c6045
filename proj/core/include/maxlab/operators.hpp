#ifndef MAXLAB_OPERATORS_HPP
#define MAXLAB_OPERATORS_HPP

#include <functional>
#include <vector>

#include "maxlab/grid.hpp"
#include "maxlab/tensor.hpp"

namespace maxlab {

/// Discrete curl on primal locations. Yee: exact edge->face circulation.
/// Collocated: 2nd-order central differences with one-sided closures,
/// centers->centers.
VectorField curl_primal(const BoxGrid& g, const VectorField& u);

/// Adjoint-placed curl. Yee: face->edge; boundary-tangential edges are set to
/// zero (pass include_boundary_rows to get the exact transpose rows instead,
/// used by the discrete boundary-flux pairing). Collocated: same stencils as
/// curl_primal.
VectorField curl_dual(const BoxGrid& g, const VectorField& v, bool include_boundary_rows = false);

/// Mimetic divergence. Yee: face->cell, div(curl_primal(.)) == 0 exactly.
/// Collocated: center->cell via central stencils.
ScalarField div_field(const BoxGrid& g, const VectorField& v);

/// Divergence adjoint to -grad_scalar. Yee: edge->node (the transpose rows,
/// one-sided at boundary nodes). Only defined for the yee layout.
ScalarField div_dual(const BoxGrid& g, const VectorField& u);

/// Discrete gradient onto primal locations. Yee: node->edge; collocated:
/// cell->center.
VectorField grad_scalar(const BoxGrid& g, const ScalarField& p);

/// Zero the tangential components at boundary locations (E x nu = 0).
void apply_pec(const BoxGrid& g, VectorField& e);

/// Max |tangential component| at the boundary. Yee: boundary-tangential
/// edges; collocated: 2nd-order extrapolation of tangential components to
/// the walls.
double boundary_tangential_max(const BoxGrid& g, const VectorField& u);

/// Max |normal component| at the boundary (face fields read directly,
/// center fields extrapolated).
double boundary_normal_max(const BoxGrid& g, const VectorField& u);

/// L2 pairing with uniform cell-volume weights and a fixed-order pairwise
/// reduction tree (bit-reproducible for any worker count).
double inner(const BoxGrid& g, const VectorField& u, const VectorField& v);

/// Weighted pairing sum u . (W v) vol. For yee fields the weight is sampled
/// at each component location and only its diagonal entry is used (yee runs
/// are restricted to diagonal laws); collocated fields use the full tensor.
double inner(const BoxGrid& g, const VectorField& u, const VectorField& v,
             const std::function<Mat3(const Vec3&)>& weight);

/// Collocated pairing against a per-cell tensor field.
double inner(const BoxGrid& g, const VectorField& u, const VectorField& v,
             const std::vector<Mat3>& cell_weight);

double inner(const BoxGrid& g, const ScalarField& p, const ScalarField& q);

inline double norm_l2(const BoxGrid& g, const VectorField& u) { return std::sqrt(inner(g, u, u)); }
inline double norm_l2(const BoxGrid& g, const ScalarField& p) { return std::sqrt(inner(g, p, p)); }

/// Discrete trace pairing sum_{boundary-tangential edges} u_e (C^T v)_e vol:
/// the exact summation-by-parts remainder <curl_primal u, v> - <u, curl_dual v>
/// on the yee layout. Consistent with the surface integral of
/// (tangential trace of u) . (rotated tangential trace of v).
double boundary_flux(const BoxGrid& g, const VectorField& u_edges, const VectorField& v_faces);

/// Iterate over the boundary-tangential entries of an edge field: calls
/// fn(comp, i, j, k) for every such entry.
void for_each_boundary_tangential_edge(const BoxGrid& g,
                                       const std::function<void(int, int, int, int)>& fn);

}  // namespace maxlab

#endif
