#include "coxwl2/rational.hpp"

#include "coxwl2/errors.hpp"

#include <cctype>

namespace coxwl2 {

namespace {

[[noreturn]] void bad(std::string_view text) {
    throw Error("io", "BadRational", "not an exact rational: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
        body.remove_prefix(1);
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
        body.remove_suffix(1);
    }
    bool negative = false;
    std::string_view digits = body;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    Rational result;
    if (auto slash = digits.find('/'); slash != std::string_view::npos) {
        auto num = digits.substr(0, slash);
        auto den = digits.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            bad(text);
        }
        Integer d(std::string(den), 10);
        if (d == 0) {
            throw Error("io", "BadRational", "zero denominator in '" + std::string(text) + "'");
        }
        result = Rational(Integer(std::string(num), 10), d);
        result.canonicalize();
    } else if (auto dot = digits.find('.'); dot != std::string_view::npos) {
        auto whole = digits.substr(0, dot);
        auto frac = digits.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            bad(text);
        }
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole), 10);
        result = Rational(w * scale + Integer(std::string(frac), 10), scale);
        result.canonicalize();
    } else {
        if (!all_digits(digits)) {
            bad(text);
        }
        result = Rational(Integer(std::string(digits), 10));
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational power(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) {
            throw Error("growth", "PoleEvaluation", "zero raised to a negative power");
        }
        return power(Rational(1) / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        b *= b;
        exponent >>= 1;
    }
    return result;
}

} // namespace coxwl2
