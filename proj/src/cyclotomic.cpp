#include "coxwl2/cyclotomic.hpp"

#include "coxwl2/errors.hpp"
#include "coxwl2/label.hpp"
#include "coxwl2/polynomial.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace coxwl2 {

namespace {

using IntPoly = std::vector<std::int64_t>;

constexpr int kMaxFieldOrder = 5040;

IntPoly exact_int_divide(IntPoly num, const IntPoly& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dn; --i) {
        std::int64_t c = num[i];
        quot[i - dn] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= dn; ++j) {
                num[i - dn + j] -= c * den[j];
            }
        }
        if (i == dn) {
            break;
        }
    }
    return quot;
}

const IntPoly& cyclotomic_polynomial(int n) {
    static std::map<int, IntPoly> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = exact_int_divide(p, cyclotomic_polynomial(d));
        }
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(p)).first->second;
}

template <typename C>
void reduce_mod(std::vector<C>& v, const IntPoly& phi) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > d;) {
        if (v[i] == 0) {
            continue;
        }
        C c = v[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (phi[j] != 0) {
                v[i - d + j] -= c * static_cast<long>(phi[j]);
            }
        }
        v[i] = 0;
    }
    v.resize(d);
}

std::int64_t narrow(__int128 x) {
    if (x > static_cast<__int128>(INT64_MAX) || x < static_cast<__int128>(INT64_MIN)) {
        throw Error("growth", "CoefficientOverflow", "integer coordinate overflow in cyclotomic arithmetic");
    }
    return static_cast<std::int64_t>(x);
}

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
    ~MpfrValue() { mpfr_clear(value_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return value_; }

private:
    mpfr_t value_;
};

// Evaluates sum_j a_j cos(2 pi j / order) at `bits` precision and returns
// {value, radius} with |true - value| <= radius.
template <typename Coeff>
std::pair<double, double> evaluate_mpfr(std::span<const Coeff> a, int order, int bits, int& sign_out) {
    MpfrValue pi(bits + 16);
    MpfrValue arg(bits + 16);
    MpfrValue term(bits + 16);
    MpfrValue acc(bits + 16);
    MpfrValue mass(64);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_set_zero(acc.get(), 1);
    mpfr_set_zero(mass.get(), 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) {
            continue;
        }
        mpfr_mul_ui(arg.get(), pi.get(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
        mpfr_div_ui(arg.get(), arg.get(), static_cast<unsigned long>(order), MPFR_RNDN);
        mpfr_cos(term.get(), arg.get(), MPFR_RNDN);
        if constexpr (std::is_same_v<Coeff, Rational>) {
            mpfr_mul_q(term.get(), term.get(), a[j].get_mpq_t(), MPFR_RNDN);
            mpfr_add_d(mass.get(), mass.get(), std::abs(a[j].get_d()) * 2.0 + 1.0, MPFR_RNDU);
        } else {
            mpfr_mul_si(term.get(), term.get(), static_cast<long>(a[j]), MPFR_RNDN);
            mpfr_add_d(mass.get(), mass.get(), std::abs(static_cast<double>(a[j])) * 2.0 + 1.0, MPFR_RNDU);
        }
        mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    }
    // Each term carries relative error below 2^(8-bits) (argument, cosine,
    // product); summation adds at most one rounding per term.
    double radius = std::ldexp(mpfr_get_d(mass.get(), MPFR_RNDU) * static_cast<double>(a.size() + 8), 8 - bits);
    sign_out = mpfr_sgn(acc.get());
    MpfrValue absval(bits + 16);
    mpfr_abs(absval.get(), acc.get(), MPFR_RNDN);
    // Compare |acc| against radius in MPFR to avoid double underflow issues.
    MpfrValue rad(64);
    mpfr_set_d(rad.get(), radius, MPFR_RNDU);
    if (mpfr_cmp(absval.get(), rad.get()) <= 0) {
        sign_out = 0;
    }
    return {mpfr_get_d(acc.get(), MPFR_RNDN), radius};
}

template <typename Coeff>
int certified_sign(std::span<const Coeff> a, int order, const std::vector<double>& cos_table, int max_bits) {
    bool zero = true;
    double value = 0.0;
    double mass = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) {
            continue;
        }
        zero = false;
        double c;
        if constexpr (std::is_same_v<Coeff, Rational>) {
            c = a[j].get_d();
        } else {
            c = static_cast<double>(a[j]);
        }
        value += c * cos_table[j];
        mass += std::abs(c);
    }
    if (zero) {
        return 0;
    }
    double bound = mass * static_cast<double>(a.size() + 8) * std::ldexp(1.0, -50);
    if (std::isfinite(value) && std::abs(value) > bound && std::isfinite(bound)) {
        return value > 0 ? 1 : -1;
    }
    for (int bits = 128;; bits *= 2) {
        int bits_used = std::min(bits, max_bits);
        int s = 0;
        evaluate_mpfr(a, order, bits_used, s);
        if (s != 0) {
            return s;
        }
        if (bits_used >= max_bits) {
            throw Error("coxeter", "PrecisionFailure",
                        "cannot certify the sign of an algebraic number within " + std::to_string(max_bits) +
                            " bits; raise --precision-bits");
        }
    }
}

} // namespace

CyclotomicField::CyclotomicField(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {
    cos_.resize(phi_.size() - 1);
    for (std::size_t j = 0; j < cos_.size(); ++j) {
        cos_[j] = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / order);
    }
}

const CyclotomicField& CyclotomicField::get(int order) {
    if (order < 1 || order > kMaxFieldOrder) {
        throw Error("coxeter", "FieldTooLarge",
                    "label set requires cyclotomic order " + std::to_string(order) + " beyond the supported range");
    }
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& slot = registry[order];
    if (!slot) {
        slot.reset(new CyclotomicField(order));
    }
    return *slot;
}

const CyclotomicField& CyclotomicField::for_labels(std::span<const int> labels) {
    long order = 1;
    for (int m : labels) {
        if (!is_finite_label(m) || m <= 3) {
            continue;
        }
        order = std::lcm(order, 2L * m);
        if (order > kMaxFieldOrder) {
            throw Error("coxeter", "FieldTooLarge", "label set requires a cyclotomic field beyond the supported range");
        }
    }
    return get(static_cast<int>(order));
}

std::vector<std::int64_t> CyclotomicField::two_cos(int m) const {
    std::vector<std::int64_t> v(static_cast<std::size_t>(degree()), 0);
    if (m == 2) {
        return v;
    }
    if (m == 3) {
        v[0] = 1;
        return v;
    }
    if (!is_finite_label(m)) {
        v[0] = 2;
        return v;
    }
    if (order_ % (2 * m) != 0) {
        throw Error("coxeter", "FieldMismatch", "label " + std::to_string(m) + " not representable in this field");
    }
    const int k = order_ / (2 * m);
    std::vector<std::int64_t> p(static_cast<std::size_t>(order_) + 1, 0);
    p[static_cast<std::size_t>(k)] += 1;
    p[static_cast<std::size_t>(order_ - k)] += 1;
    reduce_mod(p, phi_);
    return p;
}

std::vector<std::int64_t> CyclotomicField::multiply(std::span<const std::int64_t> a,
                                                    std::span<const std::int64_t> b) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    std::vector<__int128> prod(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            prod[i + j] += static_cast<__int128>(a[i]) * b[j];
        }
    }
    for (std::size_t i = prod.size(); i-- > d;) {
        if (prod[i] == 0) {
            continue;
        }
        __int128 c = prod[i];
        for (std::size_t j = 0; j < d; ++j) {
            prod[i - d + j] -= c * phi_[j];
        }
        prod[i] = 0;
    }
    std::vector<std::int64_t> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = narrow(prod[i]);
    }
    return out;
}

std::vector<Rational> CyclotomicField::multiply(std::span<const Rational> a, std::span<const Rational> b) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    if (d == 1) {
        return {a[0] * b[0]};
    }
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] != 0) {
                prod[i + j] += a[i] * b[j];
            }
        }
    }
    reduce_mod(prod, phi_);
    return prod;
}

std::vector<Rational> CyclotomicField::inverse(std::span<const Rational> a) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    if (d == 1) {
        if (a[0] == 0) {
            throw Error("coxeter", "DivisionByZero", "inverse of zero field element");
        }
        return {Rational(1) / a[0]};
    }
    std::vector<Rational> phi_q(phi_.begin(), phi_.end());
    UPoly r0(std::move(phi_q));
    UPoly r1(std::vector<Rational>(a.begin(), a.end()));
    if (r1.is_zero()) {
        throw Error("coxeter", "DivisionByZero", "inverse of zero field element");
    }
    UPoly s0;
    UPoly s1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        UDivision qr = divide(r0, r1);
        UPoly next_s = s0 - qr.quotient * s1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(next_s);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    Rational c = r0.coeff(0);
    std::vector<Rational> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = s0.coeff(static_cast<int>(i)) / c;
    }
    reduce_mod(out, phi_);
    out.resize(d);
    return out;
}

int CyclotomicField::sign(std::span<const Rational> a, int max_bits) const {
    return certified_sign(a, order_, cos_, max_bits);
}

int CyclotomicField::sign(std::span<const std::int64_t> a, int max_bits) const {
    return certified_sign(a, order_, cos_, max_bits);
}

double CyclotomicField::approx(std::span<const Rational> a) const {
    double v = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        v += a[j].get_d() * cos_[j];
    }
    return v;
}

double CyclotomicField::approx(std::span<const std::int64_t> a) const {
    double v = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        v += static_cast<double>(a[j]) * cos_[j];
    }
    return v;
}

// ---------------------------------------------------------------- Cyclo

Cyclo::Cyclo(const CyclotomicField& field)
    : field_(&field), coords_(static_cast<std::size_t>(field.degree())) {}

Cyclo::Cyclo(const CyclotomicField& field, const Rational& value) : Cyclo(field) { coords_[0] = value; }

Cyclo::Cyclo(const CyclotomicField& field, std::vector<Rational> coords) : field_(&field), coords_(std::move(coords)) {
    if (coords_.size() > static_cast<std::size_t>(field.degree())) {
        reduce_mod(coords_, field.modulus());
    }
    coords_.resize(static_cast<std::size_t>(field.degree()));
}

Cyclo Cyclo::two_cos(const CyclotomicField& field, int m) {
    auto ints = field.two_cos(m);
    return Cyclo(field, std::vector<Rational>(ints.begin(), ints.end()));
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> Cyclo::as_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] != 0) {
            return std::nullopt;
        }
    }
    return coords_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo out(*this);
    for (auto& c : out.coords_) {
        c = -c;
    }
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += other.coords_[i];
    }
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= other.coords_[i];
    }
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    return Cyclo(*a.field_, a.field_->multiply(a.coords_, b.coords_));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    return Cyclo(*a.field_, a.field_->multiply(a.coords_, a.field_->inverse(b.coords_)));
}

Cyclo operator*(const Rational& c, const Cyclo& a) {
    Cyclo out(a);
    for (auto& x : out.coords_) {
        x *= c;
    }
    return out;
}

} // namespace coxwl2
