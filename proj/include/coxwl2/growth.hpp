#pragma once

#include "coxwl2/coxeter.hpp"
#include "coxwl2/polynomial.hpp"
#include "coxwl2/sturm.hpp"
#include "coxwl2/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace coxwl2 {

inline constexpr long kDefaultOrderCap = 200000;
inline constexpr int kDefaultBallCap = 14;
inline constexpr long kDefaultBallElementCap = 20000000;

/// Action of W_U on the dual of the reflection representation, tracked at
/// the point f with f(alpha_s) = 1. For an element w the coordinates are
/// c_s = f(w alpha_s); right multiplication by t sends c_s to
/// c_s + 2cos(pi/m_st) c_t (s != t) and c_t to -c_t, and t is an ascent of
/// w iff c_t > 0. Coordinates live in Z[zeta] with int64 entries.
class TitsAction {
public:
    TitsAction(const CoxeterMatrix& cm, Subset generators);

    const CyclotomicField& field() const { return *field_; }
    const std::vector<int>& generators() const { return gens_; }
    int width() const { return static_cast<int>(gens_.size()) * field_->degree(); }

    std::vector<std::int64_t> identity() const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& c, int k) const;
    /// Certified sign test of c_k; throws coxeter.PrecisionFailure.
    bool is_ascent(const std::vector<std::int64_t>& c, int k, int max_bits) const;

private:
    const CyclotomicField* field_;
    std::vector<int> gens_;
    std::vector<std::vector<std::vector<std::int64_t>>> two_cos_;  // per generator pair
};

struct GroupElementRep {
    std::vector<std::int64_t> coords;
    int length = 0;
    std::vector<int> multidegree;  // per generator class
    std::vector<int> word;         // a reduced word in generator indices
};

/// Elements of W_U of length at most `radius`, in BFS order with the
/// identity first; table[i][k] is the index of elements[i] * gens[k], or -1
/// outside the ball.
struct CayleyBall {
    std::vector<int> gens;
    std::vector<GroupElementRep> elements;
    std::vector<std::vector<int>> table;
    int radius = -1;        // -1: unbounded
    bool complete = false;  // true when the whole (finite) group was enumerated
};

struct EnumerationOptions {
    long order_cap = kDefaultOrderCap;
    int max_bits = kDefaultPrecisionBits;
};

/// Ball of W_U by BFS, radius -1 meaning "until exhausted". Every Cayley
/// edge is checked for length parity, ascent sign and multidegree
/// consistency; a mismatch raises growth.MultidegreeMismatch or
/// coxeter.InternalDisagreement.
CayleyBall enumerate_ball(const CoxeterMatrix& cm, const GeneratorClasses& classes, Subset u, int radius,
                          const EnumerationOptions& options = {});

/// All elements of the spherical W_T. Errors: growth.NotSpherical, growth.OrderCapExceeded.
CayleyBall enumerate_finite(const SubsetClassifier& classifier, const GeneratorClasses& classes, Subset t,
                            const EnumerationOptions& options = {});

/// W_T(q) in class variables; a product over irreducible components.
MultiPoly growth_polynomial(const SubsetClassifier& classifier, const GeneratorClasses& classes, Subset t,
                            const EnumerationOptions& options = {});

/// F(q) = sum over the poset of (-1)^|T| / W_T(q); polys[i] belongs to poset.elements[i].
MultiRat steinberg_sum(const SphericalPoset& poset, const std::vector<MultiPoly>& polys);

struct GrowthSeries {
    GeneratorClasses classes;
    bool finite = false;
    MultiRat series;     // W(q)
    MultiRat steinberg;  // F(q)
    std::vector<std::string> variable_names;  // one per class, e.g. "q_s1"
};

struct GrowthOptions {
    EnumerationOptions enumeration;
    int lattice_cap = kDefaultLatticeCap;
};

/// W(q): the enumerated polynomial for finite W, otherwise 1 / F(q^-1).
GrowthSeries full_growth_series(const SubsetClassifier& classifier, const GrowthOptions& options = {});

/// f with every class variable set to one common variable q, reduced.
MultiRat uniform_specialization(const MultiRat& f);

/// Value of f at q; throws growth.PoleEvaluation.
Rational evaluate(const MultiRat& f, const WeightVector& q);

enum class Region { Interior, Boundary, Outside };

std::string to_string(Region r);

struct RegionVerdict {
    Region region = Region::Interior;
    /// Smallest positive pole of s -> W(s q); nullopt when there is none.
    std::optional<RootInterval> s_star;
    UPoly ray_numerator;
    UPoly ray_denominator;
};

/// Position of q relative to the open convergence domain, decided exactly.
RegionVerdict region_membership(const GrowthSeries& w, const WeightVector& q,
                                const Rational& width = Rational(1, 1000000000000L));

struct BallOptions {
    int max_radius = kDefaultBallCap;
    long max_elements = kDefaultBallElementCap;
    int max_bits = kDefaultPrecisionBits;
};

struct BallSums {
    std::vector<Rational> partial_sums;  // index k: sum over l(w) <= k
    std::vector<long> sphere_sizes;      // number of elements of length k
};

/// Layered Tits-cone BFS over all of W. Errors: growth.BallCapExceeded,
/// coxeter.PrecisionFailure, growth.MultidegreeMismatch.
BallSums ball_partial_sums(const CoxeterMatrix& cm, const GeneratorClasses& classes, const WeightVector& q,
                           int radius, const BallOptions& options = {});

} // namespace coxwl2
