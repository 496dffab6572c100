#pragma once

#include "coxwl2/cyclotomic.hpp"
#include "coxwl2/label.hpp"
#include "coxwl2/rational.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coxwl2 {

/// Set of generators as a bitmask over generator indices.
using Subset = std::uint64_t;

inline constexpr int kMaxGenerators = 64;
inline constexpr int kDefaultPrecisionBits = 1024;
inline constexpr int kDefaultLatticeCap = 24;

inline int subset_size(Subset t) { return std::popcount(t); }
inline bool subset_contains(Subset t, int s) { return (t >> s) & 1U; }
inline Subset singleton(int s) { return Subset{1} << s; }
std::vector<int> subset_members(Subset t);
Subset subset_of(const std::vector<int>& members);
/// Inclusion-compatible total order: by size, then lexicographic on sorted members.
bool subset_less(Subset a, Subset b);

class CoxeterMatrix {
public:
    CoxeterMatrix() = default;
    /// No validation; use validate_matrix for untrusted input.
    CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<int>> labels);

    int rank() const { return static_cast<int>(generators_.size()); }
    int label(int s, int t) const { return labels_[s][t]; }
    const std::string& name(int s) const { return generators_[s]; }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<std::vector<int>>& labels() const { return labels_; }
    Subset all() const { return rank() == 64 ? ~Subset{0} : (Subset{1} << rank()) - 1; }

    std::optional<int> index_of(std::string_view name) const;
    /// Comma-separated generator names; throws Error("io", "UnknownGenerator").
    Subset parse_subset(std::string_view names) const;
    std::vector<std::string> names_of(Subset t) const;

    /// Special subsystem on T with generators in their original order.
    CoxeterMatrix restrict(Subset t) const;
    /// Distinct off-diagonal labels occurring inside T.
    std::vector<int> labels_in(Subset t) const;

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
    std::vector<std::string> generators_;
    std::vector<std::vector<int>> labels_;
};

/// Checks shape, symmetry, diagonal and label range. Empty generator names
/// default to s1, s2, ...
CoxeterMatrix validate_matrix(std::vector<std::string> generators, const std::vector<std::vector<int>>& raw);

/// Cosine matrix B[s][t] = -cos(pi / m_st) restricted to T, in the
/// smallest cyclotomic field containing its entries.
struct GramMatrix {
    const CyclotomicField* field = nullptr;
    std::vector<int> members;
    std::vector<std::vector<Cyclo>> entries;
};

GramMatrix gram_matrix(const CoxeterMatrix& cm, Subset t);

struct Signature {
    int positive = 0;
    int zero = 0;
    int negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of the Gram form, by exact congruence diagonalization.
Signature signature(const GramMatrix& gram, int max_bits = kDefaultPrecisionBits);

enum class DiagramFamily { Finite, Affine, Unknown };

struct DiagramInfo {
    DiagramFamily family = DiagramFamily::Unknown;
    std::string name;   // "A3", "H3", "I2(7)", "~A2", ...
    Integer order = 0;  // finite family only
};

/// Looks up a connected diagram in the classical finite and affine tables.
DiagramInfo identify_diagram(const CoxeterMatrix& cm, Subset component);

enum class SubgroupKind { Spherical, Euclidean, Lanner, OtherInfinite };

std::string to_string(SubgroupKind kind);

struct SubgroupType {
    SubgroupKind kind = SubgroupKind::Spherical;
    Integer order = 1;                    // Spherical only
    std::vector<std::string> components;  // diagram names per irreducible component
    int rank = 0;
    Signature signature;

    bool spherical() const { return kind == SubgroupKind::Spherical; }
};

/// Irreducible components of T: connected pieces of the graph of labels != 2.
std::vector<Subset> irreducible_components(const CoxeterMatrix& cm, Subset t);

/// Classifies special subgroups, caching results. Thread-safe.
class SubsetClassifier {
public:
    explicit SubsetClassifier(CoxeterMatrix cm, int max_bits = kDefaultPrecisionBits);

    const CoxeterMatrix& matrix() const { return cm_; }
    int precision_bits() const { return max_bits_; }
    SubgroupType classify(Subset t) const;

private:
    SubgroupType compute(Subset t) const;
    CoxeterMatrix cm_;
    int max_bits_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<Subset, SubgroupType> cache_;
};

SubgroupType classify_subset(const CoxeterMatrix& cm, Subset t, int max_bits = kDefaultPrecisionBits);

struct SphericalPoset {
    std::vector<Subset> elements;  // ordered by subset_less
    std::vector<SubgroupType> types;
    std::vector<Subset> minimal_nonspherical;
    std::unordered_map<Subset, int> index;

    bool contains(Subset t) const { return index.count(t) != 0; }
    int index_of(Subset t) const { return index.at(t); }
    /// Elements contained in U.
    std::vector<Subset> restricted_to(Subset u) const;
};

/// Upward search in the subset lattice; a set is examined only when all of
/// its facets are spherical. Throws Error("coxeter", "LatticeCapExceeded")
/// when the rank exceeds max_generators.
SphericalPoset spherical_subsets(const SubsetClassifier& classifier, int max_generators = kDefaultLatticeCap);

struct GeneratorClasses {
    std::vector<int> class_of;   // per generator
    std::vector<Subset> classes; // ordered by smallest member
    int count() const { return static_cast<int>(classes.size()); }
};

/// Connectivity by edges with odd labels.
GeneratorClasses generator_classes(const CoxeterMatrix& cm);

/// Blocks of S pairwise joined only by label-2 edges, ordered by smallest member.
std::vector<Subset> product_decomposition(const CoxeterMatrix& cm);

struct CensusEntry {
    CoxeterMatrix matrix;
    Signature signature;
};

/// Any label of a rank-4 Lanner diagram is at most 5; scanning to 7 shows nothing new appears.
inline constexpr int kDefaultCensusLabel = 7;

/// Rank-4 Lanner diagrams with labels in 2..max_label, one per isomorphism class.
std::vector<CensusEntry> lanner_census(int max_label, int threads = 1, int max_bits = kDefaultPrecisionBits);

/// Minimal relabeling-invariant code of a rank-4 label matrix (pairs 01,02,03,12,13,23).
std::vector<int> canonical_rank4_code(const std::vector<std::vector<int>>& labels);

} // namespace coxwl2
