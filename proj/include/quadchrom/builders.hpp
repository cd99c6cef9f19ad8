#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadchrom/complex.hpp"
#include "quadchrom/graph.hpp"

namespace quadchrom {

/// The solid cube [0,1]^d as a complex with one top cell. Cell ids are
/// patterns over {0,1,*}, e.g. "0**" for the x=0 face of the 3-cube.
CubicalComplex solid_cube(int d);

/// Boundary of [0,1]^{d+1}: a cubical d-sphere. Supported for d in {2,3}.
CubicalComplex sphere_cube_boundary(int d);

/// The antipodal involution x -> 1-x on a pattern-labelled complex.
CellInvolution antipodal_involution(const CubicalComplex& cx);

/// Antipodal quotient of sphere_cube_boundary(d): a minimal cubical model
/// of d-dimensional real projective space. d in {2,3}.
CubicalComplex rp_cube_quotient(int d);

/// Product of wrapped paths: the d-torus as a cubical grid. Each dimension
/// must be at least 3 so that no cell wraps onto itself.
CubicalComplex torus_grid(const std::vector<int>& dims);

/// Quadrangulation of the projective plane: a hub joined to alternate
/// vertices of the innermost 2n-ring, m concentric rings with radial quads,
/// outer ring identified antipodally. Non-bipartite exactly when n is odd.
/// Requires m >= 1, n >= 2 and (m, n) != (1, 2).
CubicalComplex projective_grid_rp2(int m, int n);

/// The boundary-plus-annuli construction carrying a large clique into a
/// quadrangulation of 3-dimensional projective space.
struct ScaffoldOutput {
    CubicalComplex boundary_sphere;          // quadrangulated 2-sphere, 6n faces
    std::vector<CubicalComplex> annuli;      // spoke annuli with twists 1..k
    CellInvolution rho;                      // antipodal symmetry of the sphere
    CubicalComplex quotient_two_complex;     // sphere/rho plus relabelled annuli
    Graph quotient_graph;                    // 1-skeleton; contains K_{n+1}
    std::map<std::string, std::string> labels;  // quotient vertex -> role
};

/// n = 2k+1. The quotient graph restricted to the hub and the n primary
/// ring vertices is complete.
ScaffoldOutput rp3_scaffold(int k);

}  // namespace quadchrom
