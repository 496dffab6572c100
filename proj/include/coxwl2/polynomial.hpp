#pragma once

#include "coxwl2/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coxwl2 {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
/// The coefficient vector never carries trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coefficients);

    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;
    double approx(double x) const;

    UPoly derivative() const;
    UPoly monic() const;
    UPoly operator-() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& c, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct UDivision {
    UPoly quotient;
    UPoly remainder;
};

UDivision divide(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
/// First `terms` Taylor coefficients of num/den at 0; requires den(0) != 0.
std::vector<Rational> power_series(const UPoly& num, const UPoly& den, int terms);

/// Exponent vector of a monomial, one entry per variable.
using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over Q. Terms are keyed by exponent
/// vectors under lexicographic order with variable 0 most significant.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(int nvars, const Exponents& e, const Rational& c);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int degree_in(int var) const;   // -1 for zero
    int total_degree() const;       // -1 for zero
    bool involves(int var) const { return degree_in(var) > 0; }

    void add_term(const Exponents& e, const Rational& c);

    const std::pair<const Exponents, Rational>& leading_term() const { return *terms_.rbegin(); }
    const std::pair<const Exponents, Rational>& trailing_term() const { return *terms_.begin(); }

    Rational evaluate(std::span<const Rational> point) const;
    /// The univariate polynomial s -> f(s * direction).
    UPoly along_ray(std::span<const Rational> direction) const;
    /// x^shift * f(1/x), each variable inverted; shift must dominate every exponent.
    MultiPoly invert_variables(const Exponents& shift) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

    MultiPoly pow(int exponent) const;

    /// Human-readable form such as "1 + 2*q + q^2", terms by ascending degree.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

/// Exact quotient a / b; throws Error("growth", "InexactDivision") otherwise.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b);
/// True only when a and b certainly share no nonconstant factor (checked on
/// univariate specializations); false means "unknown or not coprime".
bool certainly_coprime(const MultiPoly& a, const MultiPoly& b);
/// Greatest common divisor normalized to lex-leading coefficient 1.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Reduced ratio of multivariate polynomials. The numerator and
/// denominator are coprime and the denominator's lex-smallest term has
/// coefficient 1 (so growth series read as (1+q)/(1-q)).
class MultiRat {
public:
    MultiRat() = default;
    explicit MultiRat(MultiPoly numerator);
    MultiRat(MultiPoly numerator, MultiPoly denominator);

    static MultiRat constant(int nvars, const Rational& c);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    MultiRat reciprocal() const;
    MultiRat invert_variables() const;

    /// Throws Error("growth", "PoleEvaluation") when the reduced denominator vanishes.
    Rational evaluate(std::span<const Rational> point) const;

    friend MultiRat operator+(const MultiRat& a, const MultiRat& b);
    friend MultiRat operator-(const MultiRat& a, const MultiRat& b);
    friend MultiRat operator*(const MultiRat& a, const MultiRat& b);
    friend MultiRat operator/(const MultiRat& a, const MultiRat& b);
    friend bool operator==(const MultiRat& a, const MultiRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void reduce();
    MultiPoly num_;
    MultiPoly den_;
};

} // namespace coxwl2
