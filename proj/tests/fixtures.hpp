#pragma once

#include "coxwl2/coxeter.hpp"
#include "coxwl2/simplicial.hpp"

#include <utility>
#include <vector>

namespace fixtures {

using coxwl2::CoxeterMatrix;

/// Matrix with label 2 on every edge of the graph and infinity elsewhere.
CoxeterMatrix right_angled(int n, const std::vector<std::pair<int, int>>& edges);
/// Matrix from a linear diagram s1 - s2 - ... with the given consecutive labels.
CoxeterMatrix linear(const std::vector<int>& labels);
/// Triangle group with m(s1,s2)=a, m(s2,s3)=b, m(s1,s3)=c.
CoxeterMatrix triangle(int a, int b, int c);
CoxeterMatrix dihedral(int m);

std::vector<std::pair<int, int>> icosahedron_edges();
std::vector<std::vector<int>> icosahedron_triangles();
std::vector<std::pair<int, int>> cross_polytope_edges(int pairs);

CoxeterMatrix icosahedral();
CoxeterMatrix octahedral();
CoxeterMatrix sixteen_cell();
/// Equator a,b,c with labels 3 joined to poles n,s (m=inf) by label 2.
CoxeterMatrix suspension_333();
CoxeterMatrix lanner_435();
/// Triangle group (a,b,c) on s1,s2,s3 times D_inf on s4,s5.
CoxeterMatrix triangle_times_dinf(int a, int b, int c);
/// Affine A_3: a 4-cycle with labels 3.
CoxeterMatrix affine_a3();

using coxwl2::SimplicialComplex;

SimplicialComplex complex_of(const std::vector<std::vector<int>>& faces);
SimplicialComplex icosahedron_complex();
/// Boundary of the cross-polytope; antipodes i and i + pairs.
SimplicialComplex cross_polytope_complex(int pairs);
SimplicialComplex tetrahedron_boundary();
/// Suspension of an empty triangle 0,1,2 with poles 3, 4.
SimplicialComplex bipyramid();
SimplicialComplex projective_plane();
SimplicialComplex torus();
SimplicialComplex cycle(int n);

} // namespace fixtures
