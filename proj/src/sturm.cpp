#include "coxwl2/sturm.hpp"

#include "coxwl2/errors.hpp"

namespace coxwl2 {

namespace {

int count_changes(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

} // namespace

SturmSequence::SturmSequence(const UPoly& p) {
    if (p.is_zero()) {
        throw Error("growth", "ZeroPolynomial", "Sturm sequence of the zero polynomial");
    }
    chain_.push_back(squarefree_part(p));
    if (chain_.front().degree() < 1) {
        return;
    }
    chain_.push_back(chain_.front().derivative());
    while (chain_.back().degree() > 0) {
        const UPoly& a = chain_[chain_.size() - 2];
        const UPoly& b = chain_.back();
        UPoly r = divide(a, b).remainder;
        if (r.is_zero()) {
            break;
        }
        chain_.push_back(-r);
    }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        signs.push_back(sgn(p(x)));
    }
    return count_changes(signs);
}

int SturmSequence::sign_changes_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        if (p.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(p.leading());
        if (!positive && (p.degree() % 2 == 1)) {
            s = -s;
        }
        signs.push_back(s);
    }
    return count_changes(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    if (chain_.front().degree() < 1) {
        return 0;
    }
    return sign_changes_at(a) - sign_changes_at(b);
}

int SturmSequence::count_roots_above(const Rational& a) const {
    if (chain_.front().degree() < 1) {
        return 0;
    }
    return sign_changes_at(a) - sign_changes_at_infinity(true);
}

double RootInterval::approx() const {
    if (exact) {
        return hi.get_d();
    }
    return (lo.get_d() + hi.get_d()) / 2.0;
}

Rational root_bound(const UPoly& p) {
    if (p.degree() < 1) {
        return 1;
    }
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / p.leading());
        if (r > m) {
            m = r;
        }
    }
    return m + 1;
}

namespace {

// Rational with the smallest denominator in [lo, hi], by continued fractions.
Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (lo <= 0 && hi >= 0) {
        return 0;
    }
    if (hi < 0) {
        return -simplest_in(-hi, -lo);
    }
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rational fl(f);
    if (fl == lo) {
        return lo;
    }
    if (fl + 1 <= hi) {
        return fl + 1;
    }
    Rational inner = simplest_in(Rational(1 / Rational(hi - fl)), Rational(1 / Rational(lo - fl)));
    return fl + 1 / inner;
}

} // namespace

std::optional<RootInterval> smallest_root_above(const UPoly& p, const Rational& above, const Rational& width) {
    SturmSequence sturm(p);
    if (sturm.count_roots_above(above) == 0) {
        return std::nullopt;
    }
    const UPoly& f = sturm.squarefree();
    Rational lo = above;
    Rational hi = abs(above) + root_bound(f);
    // Invariant: exactly the smallest root above `above` lies in (lo, hi],
    // and (above, lo] holds no root.
    while (true) {
        if (f(hi) == 0 && sturm.count_roots(lo, hi) == 1) {
            // A single root at hi cannot be narrowed further; it is exact.
            return RootInterval{lo, hi, true};
        }
        if (sturm.count_roots(lo, hi) == 1 && hi - lo < width) {
            Rational r = simplest_in(lo, hi);
            if (r != lo && f(r) == 0) {
                return RootInterval{r, r, true};
            }
            return RootInterval{lo, hi, false};
        }
        Rational mid = (lo + hi) / 2;
        if (sturm.count_roots(lo, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

} // namespace coxwl2
