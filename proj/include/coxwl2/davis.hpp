#pragma once

#include "coxwl2/coxeter.hpp"
#include "coxwl2/growth.hpp"
#include "coxwl2/simplicial.hpp"

#include <vector>

namespace coxwl2 {

/// Order complex of the spherical poset; vertex i is the barycenter of
/// poset.elements[i]. The face D_T is spanned by the barycenters of U >= T.
struct Chamber {
    SimplicialComplex complex;
    std::vector<Subset> vertex_types;

    SimplicialComplex face(Subset t) const;
};

Chamber build_chamber(const SphericalPoset& poset);

/// Coxeter cell wW_T of type T. `elements` are indices into the ball,
/// sorted; the first is the minimal-length representative.
struct Cell {
    Subset type = 0;
    std::vector<int> elements;
};

/// Cells wW_T, T in S(U), with w in W_U (or in a ball of W_U, then only
/// cosets lying entirely inside the ball are kept and `partial` is set).
struct CellComplexW {
    Subset u = 0;
    CayleyBall ball;
    std::vector<Subset> types;  // S(U) in subset order
    std::vector<Cell> cells;
    bool partial = false;

    /// coset_cell[i][e]: cell of type types[i] containing element e, or -1.
    std::vector<std::vector<int>> coset_cell;

    int type_index(Subset t) const;
    /// Cells of type T + s containing the cell.
    std::vector<int> covers(int cell) const;
    /// Cell c' lies in the closure of cell c.
    bool is_face(int face, int cell) const;
    /// Downward closure of a cell set.
    std::vector<int> closure(const std::vector<int>& cells) const;
    /// Barycentric triangulation of a downward-closed cell set.
    SimplicialComplex order_complex(const std::vector<int>& cells) const;
    std::vector<int> all_cells() const;
};

/// Throws growth.OrderCapExceeded; for infinite W_U pass radius >= 0.
CellComplexW build_sigma(const SubsetClassifier& classifier, Subset u, int radius = -1,
                         const EnumerationOptions& options = {});

/// Proper faces of the top cell of type T in Sigma(T), triangulated.
SimplicialComplex cell_boundary(const SubsetClassifier& classifier, Subset t, const EnumerationOptions& options = {});

struct Ruin {
    Subset u = 0;
    Subset t = 0;
    std::vector<int> omega;     // cell indices, downward closed
    std::vector<int> boundary;  // cells of omega with type not containing T
    SimplicialComplex omega_complex;
    SimplicialComplex boundary_complex;
};

/// (U,T)-ruin inside a built Sigma(U). Throws davis.NotSpherical when T is not in S(U).
Ruin build_ruin(const CellComplexW& sigma, Subset t);

/// Every 2-simplex lies in exactly two 3-simplices.
bool pseudomanifold_check(const SimplicialComplex& l);

} // namespace coxwl2
