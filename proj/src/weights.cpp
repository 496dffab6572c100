#include "coxwl2/weights.hpp"

#include "coxwl2/errors.hpp"

namespace coxwl2 {

WeightVector::WeightVector(std::vector<Rational> per_class) : values_(std::move(per_class)) {
    for (const auto& v : values_) {
        if (v <= 0) {
            throw Error("weighted", "NonPositiveWeight", "weights must be positive, got " + to_string(v));
        }
    }
}

WeightVector WeightVector::uniform(const GeneratorClasses& classes, const Rational& q) {
    return WeightVector(std::vector<Rational>(static_cast<std::size_t>(classes.count()), q));
}

WeightVector WeightVector::from_generators(const GeneratorClasses& classes, std::span<const Rational> per_generator) {
    if (per_generator.size() != classes.class_of.size()) {
        throw Error("weighted", "WeightShape", "expected one weight per generator");
    }
    std::vector<std::optional<Rational>> seen(static_cast<std::size_t>(classes.count()));
    for (std::size_t s = 0; s < per_generator.size(); ++s) {
        auto& slot = seen[static_cast<std::size_t>(classes.class_of[s])];
        if (slot && *slot != per_generator[s]) {
            throw Error("weighted", "ClassConstancy",
                        "conjugate generators must carry equal weights");
        }
        slot = per_generator[s];
    }
    std::vector<Rational> values;
    for (auto& v : seen) {
        values.push_back(*v);
    }
    return WeightVector(std::move(values));
}

bool WeightVector::leq_one() const {
    for (const auto& v : values_) {
        if (v > 1) {
            return false;
        }
    }
    return true;
}

bool WeightVector::geq_one() const {
    for (const auto& v : values_) {
        if (v < 1) {
            return false;
        }
    }
    return true;
}

WeightVector WeightVector::inverse() const {
    std::vector<Rational> inv;
    for (const auto& v : values_) {
        inv.push_back(Rational(1) / v);
    }
    return WeightVector(std::move(inv));
}

WeightVector WeightVector::scaled(const Rational& s) const {
    std::vector<Rational> out;
    for (const auto& v : values_) {
        out.push_back(v * s);
    }
    return WeightVector(std::move(out));
}

std::vector<Rational> WeightVector::per_generator(const GeneratorClasses& classes) const {
    std::vector<Rational> out;
    for (int c : classes.class_of) {
        out.push_back(values_[static_cast<std::size_t>(c)]);
    }
    return out;
}

} // namespace coxwl2
