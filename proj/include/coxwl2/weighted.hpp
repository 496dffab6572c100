#pragma once

#include "coxwl2/coxeter.hpp"
#include "coxwl2/growth.hpp"
#include "coxwl2/simplicial.hpp"
#include "coxwl2/weights.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coxwl2 {

struct AnalysisOptions {
    GrowthOptions growth;
    int circuit_length = kDefaultCircuitLength;
};

/// Per-matrix data shared by the theorem layer: classifier, poset, nerve
/// and its topology, with the growth series computed on first use.
class CoxeterAnalysis {
public:
    explicit CoxeterAnalysis(const CoxeterMatrix& cm, const AnalysisOptions& options = {});

    const CoxeterMatrix& matrix() const { return classifier_->matrix(); }
    const SubsetClassifier& classifier() const { return *classifier_; }
    const SphericalPoset& poset() const { return poset_; }
    const SimplicialComplex& nerve() const { return nerve_; }
    const TopologyVerdict& topology() const { return topology_; }
    const GeneratorClasses& classes() const { return classes_; }
    const AnalysisOptions& options() const { return options_; }
    const GrowthSeries& growth() const;

private:
    AnalysisOptions options_;
    std::unique_ptr<SubsetClassifier> classifier_;
    SphericalPoset poset_;
    SimplicialComplex nerve_;
    TopologyVerdict topology_;
    GeneratorClasses classes_;
    mutable std::unique_ptr<GrowthSeries> growth_;
};

enum class Applies { Yes, No, Conditional };
enum class Geometry { H3, R3, H2xR, ExcludedLanner, Undetermined };
enum class GeometryCase { None, CaseI, CaseII, CaseIII };

std::string to_string(Applies a);
std::string to_string(Geometry g);
std::string to_string(GeometryCase c);

struct AndreevVerdict {
    Geometry geometry = Geometry::Undetermined;
    GeometryCase geometry_case = GeometryCase::None;
    std::optional<Subset> euclidean_witness;    // smallest Euclidean special subset
    std::optional<Subset> empty_triangle;       // T in W = W_T x D_inf
    std::vector<Subset> factors;                // product decomposition of W
    std::vector<std::string> notes;
};

/// Smallest T (by size, then subset order) with W_T Euclidean, found from
/// the affine minimal non-spherical subsets.
std::optional<Subset> smallest_euclidean_subset(const SubsetClassifier& classifier, const SphericalPoset& poset);

/// Geometry of the Davis complex of a 2-sphere nerve. Throws
/// weighted.PreconditionFailed unless the nerve is a 2-sphere.
AndreevVerdict check_andreev(const CoxeterAnalysis& a);

struct TheoremRecord {
    std::string id;
    Applies applies = Applies::No;
    std::string reason;
    std::vector<std::string> witnesses;
    std::vector<std::string> caveats;
};

inline constexpr const char* kLannerExclusion = "dual to hyperbolic 3-simplex";

struct ApplicabilityReport {
    int n = 0;  // dimension of the Davis complex, dim L + 1
    bool flag = false;
    bool pseudomanifold = false;
    bool tetrahedron_boundary = false;
    bool lanner = false;
    std::optional<AndreevVerdict> andreev;
    std::optional<SeparatingSphere> separating;
    std::vector<TheoremRecord> theorems;

    const TheoremRecord* find(const std::string& id) const;
    bool applies(const std::string& id) const;
    /// First theorem with applies != No, or nullptr.
    const TheoremRecord* authorizing() const;
};

/// Theorem ids: low_dim, singer_dim3, singer_dim4_full_link, flag_sphere3,
/// flag_3manifold, disk_nerve.
ApplicabilityReport theorem_applicability(const CoxeterAnalysis& a);

struct RegimeReport {
    int n = 0;
    std::set<int> regimes;
    RegionVerdict at_q;
    RegionVerdict at_inverse;
    std::string authorized_by;
};

/// Concentration bullets whose hypotheses hold at q, for n = 1, 2, 3 (n = 4
/// reports the order flags only). Throws weighted.PreconditionFailed when no
/// theorem applies.
RegimeReport classify_regime(const CoxeterAnalysis& a, const WeightVector& q);

struct BettiReport {
    int n = 0;
    std::set<int> regimes;
    std::vector<std::optional<Rational>> betti;  // nullopt: unresolved
    std::optional<Rational> chi;
    std::string authorized_by;
    std::string derivation;
    bool classified = false;
    std::optional<RegimeReport> regime;  // absent for kunneth products

    bool fully_resolved() const;
};

/// chi_q = 1/W(q) placed in the concentration degree. Errors:
/// weighted.PreconditionFailed, weighted.SignViolation, growth.PoleEvaluation.
BettiReport betti_vector(const CoxeterAnalysis& a, const WeightVector& q);

/// Regimes mirror under k -> n-k between q and 1/q, and so do resolved entries.
bool poincare_dual_check(const CoxeterAnalysis& a, const WeightVector& q);

/// Degree-wise convolution; throws weighted.UnresolvedInput.
BettiReport kunneth(const BettiReport& a, const BettiReport& b);

/// Betti vector assembled by kunneth over the irreducible factors of W.
BettiReport product_betti(const CoxeterAnalysis& a, const WeightVector& q);

/// Weights of the special subsystem on T.
WeightVector restrict_weights(const GeneratorClasses& classes, const WeightVector& q, const CoxeterMatrix& sub,
                              Subset t);

} // namespace coxwl2
