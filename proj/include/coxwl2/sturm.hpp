#pragma once

#include "coxwl2/polynomial.hpp"

#include <optional>
#include <vector>

namespace coxwl2 {

/// Sturm chain of the square-free part of a polynomial; counts distinct real roots.
class SturmSequence {
public:
    explicit SturmSequence(const UPoly& p);

    int sign_changes_at(const Rational& x) const;
    /// Sign changes as x -> +infinity (positive) or -infinity.
    int sign_changes_at_infinity(bool positive) const;
    /// Distinct real roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
    /// Distinct real roots in (a, +infinity).
    int count_roots_above(const Rational& a) const;

    const UPoly& squarefree() const { return chain_.front(); }

private:
    std::vector<UPoly> chain_;
};

/// A real root isolated in (lo, hi]; `exact` means the root equals hi.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;

    Rational width() const { return hi - lo; }
    double approx() const;
};

/// Upper bound on the absolute value of every root (Cauchy).
Rational root_bound(const UPoly& p);

/// Smallest real root of p strictly greater than `above`, refined until the
/// isolating interval is narrower than `width`. Returns nullopt when there is none.
std::optional<RootInterval> smallest_root_above(const UPoly& p, const Rational& above, const Rational& width);

} // namespace coxwl2
