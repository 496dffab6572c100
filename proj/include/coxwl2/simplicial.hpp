#pragma once

#include "coxwl2/coxeter.hpp"
#include "coxwl2/rational.hpp"

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace coxwl2 {

inline constexpr long kDefaultFaceCap = 500000;
inline constexpr int kDefaultCircuitLength = 16;

/// Sorted vertex list.
using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Finite abstract simplicial complex. Faces are kept per dimension in
/// lexicographic order, with a hash index for membership.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of `faces`; throws simplicial.ComplexTooLarge past the cap.
    static SimplicialComplex from_faces(const std::vector<Simplex>& faces, long face_cap = kDefaultFaceCap);

    const std::vector<int>& vertices() const { return vertices_; }
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    bool empty() const { return faces_.empty(); }
    const std::vector<Simplex>& faces(int k) const;
    std::vector<Simplex> maximal_faces() const;
    bool contains(const Simplex& s) const { return index_.count(s) != 0; }
    bool has_vertex(int v) const;
    long face_count() const { return static_cast<long>(index_.size()); }
    std::vector<long> f_vector() const;
    bool is_pure() const;

    /// Full subcomplex on the vertices in `a`.
    SimplicialComplex induced(const std::vector<int>& a) const;
    /// Vertices adjacent to v in the 1-skeleton.
    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const;
    /// Image under a vertex map, which must be injective on vertices.
    SimplicialComplex relabeled(const std::vector<int>& map) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.faces_ == b.faces_; }

private:
    std::vector<int> vertices_;
    std::vector<std::vector<Simplex>> faces_;
    std::unordered_set<Simplex, SimplexHash> index_;
};

/// Simplices are the nonempty spherical subsets; vertices are generator indices.
SimplicialComplex nerve(const SphericalPoset& poset);

/// K is a subcomplex of L and every simplex of L spanned by vertices of K lies in K.
bool is_full(const SimplicialComplex& l, const SimplicialComplex& k);
/// Every simplex of K lies in L.
bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k);

SimplicialComplex link(const SimplicialComplex& l, int v);
SimplicialComplex star(const SimplicialComplex& l, int v);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

bool is_flag(const SimplicialComplex& l);
long euler_characteristic(const SimplicialComplex& l);

struct HomologyGroup {
    long rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Integral homology H_0..H_dim via Smith normal form of the boundary maps.
std::vector<HomologyGroup> smith_homology(const SimplicialComplex& l);
/// Relative homology H_*(L, A) for a subcomplex A.
std::vector<HomologyGroup> smith_homology(const SimplicialComplex& l, const SimplicialComplex& a);
/// Torsion-free groups of the given ranks, e.g. {1, 0, 1} for S^2.
std::vector<HomologyGroup> free_homology(const std::vector<long>& ranks);
std::string to_string(const std::vector<HomologyGroup>& h);
/// Drops trailing zero groups.
std::vector<HomologyGroup> trimmed(std::vector<HomologyGroup> h);

enum class TopologyKind { Sphere, Disk, Closed3Manifold, Circle, Arc, Other };

std::string to_string(TopologyKind kind);

struct TopologyVerdict {
    TopologyKind kind = TopologyKind::Other;
    int dim = -1;
    bool certified = false;
    long euler = 0;
    std::vector<HomologyGroup> homology;
    std::vector<std::string> checks;

    bool is_sphere(int d) const {
        return (kind == TopologyKind::Sphere && dim == d) || (d == 1 && kind == TopologyKind::Circle);
    }
    bool is_disk(int d) const {
        return (kind == TopologyKind::Disk && dim == d) || (d == 1 && kind == TopologyKind::Arc);
    }
};

/// Sphere/disk/manifold recognition up to dimension 3. Two-dimensional
/// verdicts are certified; three-dimensional spheres and disks rest on
/// necessary conditions only. Throws simplicial.DimensionTooHigh.
TopologyVerdict recognize(const SimplicialComplex& l);

/// Codimension-one faces lying in exactly one top-dimensional face.
SimplicialComplex boundary_complex(const SimplicialComplex& l);

/// (k+1)-cliques of the 1-skeleton that span no k-simplex.
std::vector<Simplex> empty_simplices(const SimplicialComplex& l, int k);

/// Chordless cycles of the 1-skeleton with 3 to max_length vertices, each
/// listed from its smallest vertex, second vertex smaller than the last.
std::vector<std::vector<int>> induced_cycles(const SimplicialComplex& l, int max_length = kDefaultCircuitLength);

/// The 1-complex of a vertex cycle.
SimplicialComplex cycle_complex(const std::vector<int>& cycle);

struct SeparatingSphere {
    SimplicialComplex m;
    SimplicialComplex l1;
    SimplicialComplex l2;
    std::string source;  // "empty_triangle", "vertex_link" or "induced_cycle"
    std::vector<int> cycle;
};

/// First full circle M splitting the 2-sphere L into two full disks with
/// boundary M. Candidates: empty triangles, then vertex links, then induced
/// cycles. Throws simplicial.PreconditionFailed unless L is a 2-sphere.
std::optional<SeparatingSphere> separating_sphere_search(const SimplicialComplex& l,
                                                         int max_length = kDefaultCircuitLength);

struct EuclideanCircuit {
    std::vector<int> cycle;
    SubgroupType type;
};

/// Induced cycles of the nerve whose special subgroup is Euclidean.
std::vector<EuclideanCircuit> euclidean_circuits(const SimplicialComplex& l, const SubsetClassifier& classifier,
                                                 int max_length = kDefaultCircuitLength);

} // namespace coxwl2
