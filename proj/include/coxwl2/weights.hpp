#pragma once

#include "coxwl2/coxeter.hpp"
#include "coxwl2/rational.hpp"

#include <span>
#include <vector>

namespace coxwl2 {

/// Positive rational weight per generator class.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> per_class);

    static WeightVector uniform(const GeneratorClasses& classes, const Rational& q);
    /// Throws Error("weighted", "ClassConstancy") when conjugate generators get different weights.
    static WeightVector from_generators(const GeneratorClasses& classes, std::span<const Rational> per_generator);

    const std::vector<Rational>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    const Rational& operator[](int c) const { return values_[static_cast<std::size_t>(c)]; }

    bool leq_one() const;
    bool geq_one() const;
    bool is_one() const { return leq_one() && geq_one(); }
    WeightVector inverse() const;
    WeightVector scaled(const Rational& s) const;
    std::vector<Rational> per_generator(const GeneratorClasses& classes) const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<Rational> values_;
};

} // namespace coxwl2
