#pragma once

#include "coxwl2/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace coxwl2 {

/// The cyclotomic field Q(zeta) with zeta = exp(2 pi i / order), in the
/// power basis 1, zeta, ..., zeta^(degree-1). Elements are reduced modulo
/// the cyclotomic polynomial, so equality and zero tests are exact. The
/// sign of a real element is taken in the embedding above and certified
/// by error-bounded floating point with escalating precision.
///
/// Fields are interned: `get` returns a reference valid for the program's lifetime.
class CyclotomicField {
public:
    static const CyclotomicField& get(int order);
    /// Smallest field of this family containing cos(pi/m) for every label;
    /// labels 2, 3 and infinity have rational cosines and are ignored.
    static const CyclotomicField& for_labels(std::span<const int> labels);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    /// Monic cyclotomic polynomial, lowest coefficient first.
    const std::vector<std::int64_t>& modulus() const { return phi_; }

    /// 2 cos(pi/m) with integer coordinates; m finite, m >= 2, and either
    /// m in {2, 3} or 2m divides the field order.
    std::vector<std::int64_t> two_cos(int m) const;

    std::vector<std::int64_t> multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;
    std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b) const;
    std::vector<Rational> inverse(std::span<const Rational> a) const;

    /// Certified sign of a real element; throws Error("coxeter", "PrecisionFailure")
    /// when `max_bits` of working precision cannot separate it from zero.
    int sign(std::span<const Rational> a, int max_bits) const;
    int sign(std::span<const std::int64_t> a, int max_bits) const;
    double approx(std::span<const Rational> a) const;
    double approx(std::span<const std::int64_t> a) const;

private:
    explicit CyclotomicField(int order);

    int order_;
    std::vector<std::int64_t> phi_;
    std::vector<double> cos_;
};

/// Element of a cyclotomic field with rational coordinates.
class Cyclo {
public:
    explicit Cyclo(const CyclotomicField& field);
    Cyclo(const CyclotomicField& field, const Rational& value);
    Cyclo(const CyclotomicField& field, std::vector<Rational> coords);

    /// 2 cos(pi/m), with m = kInfinity giving 2.
    static Cyclo two_cos(const CyclotomicField& field, int m);

    const CyclotomicField& field() const { return *field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    int sign(int max_bits) const { return field_->sign(coords_, max_bits); }
    double approx() const { return field_->approx(coords_); }
    std::optional<Rational> as_rational() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& other);
    Cyclo& operator-=(const Cyclo& other);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Rational& c, const Cyclo& a);
    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }

private:
    const CyclotomicField* field_;
    std::vector<Rational> coords_;
};

} // namespace coxwl2
