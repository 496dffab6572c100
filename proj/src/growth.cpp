#include "coxwl2/growth.hpp"

#include "coxwl2/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace coxwl2 {

namespace {

struct CoordHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::int64_t x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error("growth", "CoefficientOverflow", "Tits cone coordinate overflow; lower the radius");
    }
    return r;
}

} // namespace

// ------------------------------------------------------------ TitsAction

TitsAction::TitsAction(const CoxeterMatrix& cm, Subset generators)
    : field_(&CyclotomicField::for_labels(cm.labels_in(generators))), gens_(subset_members(generators)) {
    const std::size_t n = gens_.size();
    two_cos_.assign(n, std::vector<std::vector<std::int64_t>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                two_cos_[i][j] = field_->two_cos(cm.label(gens_[i], gens_[j]));
            }
        }
    }
}

std::vector<std::int64_t> TitsAction::identity() const {
    const int d = field_->degree();
    std::vector<std::int64_t> c(static_cast<std::size_t>(width()), 0);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        c[i * static_cast<std::size_t>(d)] = 1;
    }
    return c;
}

std::vector<std::int64_t> TitsAction::apply(const std::vector<std::int64_t>& c, int k) const {
    const std::size_t d = static_cast<std::size_t>(field_->degree());
    const std::size_t t = static_cast<std::size_t>(k);
    std::vector<std::int64_t> out = c;
    std::span<const std::int64_t> ct(c.data() + t * d, d);
    for (std::size_t s = 0; s < gens_.size(); ++s) {
        if (s == t) {
            continue;
        }
        const auto& coeff = two_cos_[s][t];
        bool zero = std::all_of(coeff.begin(), coeff.end(), [](std::int64_t x) { return x == 0; });
        if (zero) {
            continue;
        }
        bool rational = std::all_of(coeff.begin() + 1, coeff.end(), [](std::int64_t x) { return x == 0; });
        if (rational) {
            for (std::size_t j = 0; j < d; ++j) {
                std::int64_t prod;
                if (__builtin_mul_overflow(coeff[0], ct[j], &prod)) {
                    throw Error("growth", "CoefficientOverflow", "Tits cone coordinate overflow; lower the radius");
                }
                out[s * d + j] = checked_add(out[s * d + j], prod);
            }
        } else {
            auto prod = field_->multiply(coeff, ct);
            for (std::size_t j = 0; j < d; ++j) {
                out[s * d + j] = checked_add(out[s * d + j], prod[j]);
            }
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        out[t * d + j] = -c[t * d + j];
    }
    return out;
}

bool TitsAction::is_ascent(const std::vector<std::int64_t>& c, int k, int max_bits) const {
    const std::size_t d = static_cast<std::size_t>(field_->degree());
    std::span<const std::int64_t> ct(c.data() + static_cast<std::size_t>(k) * d, d);
    int s = field_->sign(ct, max_bits);
    if (s == 0) {
        throw Error("coxeter", "InternalDisagreement", "Tits cone coordinate vanished");
    }
    return s > 0;
}

// ------------------------------------------------------------ enumeration

CayleyBall enumerate_ball(const CoxeterMatrix& cm, const GeneratorClasses& classes, Subset u, int radius,
                          const EnumerationOptions& options) {
    TitsAction action(cm, u);
    CayleyBall ball;
    ball.gens = action.generators();
    ball.radius = radius;
    const int k_count = static_cast<int>(ball.gens.size());
    std::unordered_map<std::vector<std::int64_t>, int, CoordHash> index;

    GroupElementRep e;
    e.coords = action.identity();
    e.multidegree.assign(static_cast<std::size_t>(classes.count()), 0);
    index.emplace(e.coords, 0);
    ball.elements.push_back(std::move(e));
    bool truncated = false;

    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
        ball.table.emplace_back(static_cast<std::size_t>(k_count), -1);
        for (int k = 0; k < k_count; ++k) {
            const GroupElementRep& w = ball.elements[i];
            const int cls = classes.class_of[static_cast<std::size_t>(ball.gens[static_cast<std::size_t>(k)])];
            auto next = action.apply(w.coords, k);
            const bool ascent = action.is_ascent(w.coords, k, options.max_bits);
            auto it = index.find(next);
            if (it != index.end()) {
                const GroupElementRep& v = ball.elements[static_cast<std::size_t>(it->second)];
                const int delta = ascent ? 1 : -1;
                if (v.length != w.length + delta) {
                    throw Error("coxeter", "InternalDisagreement", "ascent sign contradicts BFS length");
                }
                auto expected = w.multidegree;
                expected[static_cast<std::size_t>(cls)] += delta;
                if (expected != v.multidegree) {
                    throw Error("growth", "MultidegreeMismatch",
                                "two paths to one element give different class multidegrees");
                }
                ball.table[i][static_cast<std::size_t>(k)] = it->second;
                continue;
            }
            if (!ascent) {
                throw Error("coxeter", "InternalDisagreement", "descent leads to an unseen element");
            }
            if (radius >= 0 && w.length + 1 > radius) {
                truncated = true;
                continue;
            }
            if (static_cast<long>(ball.elements.size()) >= options.order_cap) {
                throw Error("growth", "OrderCapExceeded",
                            "more than " + std::to_string(options.order_cap) + " elements; raise --max-order");
            }
            GroupElementRep v;
            v.coords = next;
            v.length = w.length + 1;
            v.multidegree = w.multidegree;
            v.multidegree[static_cast<std::size_t>(cls)] += 1;
            v.word = w.word;
            v.word.push_back(ball.gens[static_cast<std::size_t>(k)]);
            const int id = static_cast<int>(ball.elements.size());
            index.emplace(std::move(next), id);
            ball.table[i][static_cast<std::size_t>(k)] = id;
            ball.elements.push_back(std::move(v));
        }
    }
    ball.complete = !truncated;
    return ball;
}

CayleyBall enumerate_finite(const SubsetClassifier& classifier, const GeneratorClasses& classes, Subset t,
                            const EnumerationOptions& options) {
    SubgroupType type = classifier.classify(t);
    if (!type.spherical()) {
        throw Error("growth", "NotSpherical", "special subgroup is infinite");
    }
    if (type.order > options.order_cap) {
        throw Error("growth", "OrderCapExceeded",
                    "group order " + type.order.get_str() + " exceeds the cap; raise --max-order");
    }
    CayleyBall ball = enumerate_ball(classifier.matrix(), classes, t, -1, options);
    if (ball.elements.size() != type.order.get_ui() || !ball.complete) {
        throw Error("coxeter", "InternalDisagreement", "enumerated order differs from the diagram table");
    }
    return ball;
}

namespace {

MultiPoly polynomial_of(const CayleyBall& ball, int nvars) {
    MultiPoly p(nvars);
    for (const auto& e : ball.elements) {
        p.add_term(e.multidegree, 1);
    }
    return p;
}

class ComponentPolynomials {
public:
    ComponentPolynomials(const SubsetClassifier& classifier, const GeneratorClasses& classes,
                         const EnumerationOptions& options)
        : classifier_(classifier), classes_(classes), options_(options) {}

    const MultiPoly& get(Subset component) {
        auto it = cache_.find(component);
        if (it != cache_.end()) {
            return it->second;
        }
        auto ball = enumerate_finite(classifier_, classes_, component, options_);
        return cache_.emplace(component, polynomial_of(ball, classes_.count())).first->second;
    }

private:
    const SubsetClassifier& classifier_;
    const GeneratorClasses& classes_;
    const EnumerationOptions& options_;
    std::map<Subset, MultiPoly> cache_;
};

struct SteinbergTerm {
    Rational coefficient;
    std::vector<const MultiPoly*> factors;
};

MultiPoly normalized_poly(const MultiPoly& p) { return (Rational(1) / p.leading_term().second) * p; }

// Pairwise coprime, normalized polynomials whose products give every input.
void insert_into_basis(std::vector<MultiPoly>& basis, const MultiPoly& f0) {
    std::vector<MultiPoly> stack{f0};
    while (!stack.empty()) {
        MultiPoly f = std::move(stack.back());
        stack.pop_back();
        if (f.is_constant()) {
            continue;
        }
        f = normalized_poly(f);
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            MultiPoly g = gcd(f, basis[i]);
            if (g.is_constant()) {
                continue;
            }
            MultiPoly b = basis[i];
            if (g == b) {
                stack.push_back(exact_divide(f, b));
            } else if (g == f) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                stack.push_back(f);
                stack.push_back(exact_divide(b, f));
            } else {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                stack.push_back(g);
                stack.push_back(exact_divide(b, g));
                stack.push_back(exact_divide(f, g));
            }
            split = true;
            break;
        }
        if (!split) {
            basis.push_back(std::move(f));
        }
    }
}

MultiRat assemble(const std::vector<SteinbergTerm>& terms, int nvars) {
    std::vector<const MultiPoly*> distinct;
    for (const auto& t : terms) {
        for (const MultiPoly* f : t.factors) {
            if (std::none_of(distinct.begin(), distinct.end(), [&](const MultiPoly* g) { return *g == *f; })) {
                distinct.push_back(f);
            }
        }
    }
    std::vector<MultiPoly> basis;
    for (const MultiPoly* f : distinct) {
        insert_into_basis(basis, *f);
    }
    std::sort(basis.begin(), basis.end());
    const std::size_t nb = basis.size();

    struct Factored {
        Rational unit;
        std::vector<int> exps;
    };
    std::vector<Factored> factored;
    for (const MultiPoly* f : distinct) {
        Factored fa{1, std::vector<int>(nb, 0)};
        MultiPoly rest = *f;
        for (std::size_t i = 0; i < nb; ++i) {
            while (auto q = try_exact_divide(rest, basis[i])) {
                rest = std::move(*q);
                ++fa.exps[i];
            }
        }
        if (!rest.is_constant()) {
            throw Error("growth", "InternalDisagreement", "coprime basis does not factor a growth polynomial");
        }
        fa.unit = rest.constant_term();
        factored.push_back(std::move(fa));
    }
    auto factored_of = [&](const MultiPoly* f) -> const Factored& {
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            if (*distinct[i] == *f) {
                return factored[i];
            }
        }
        throw Error("growth", "InternalDisagreement", "missing factor");
    };

    std::map<std::vector<int>, Rational> grouped;
    for (const auto& t : terms) {
        std::vector<int> exps(nb, 0);
        Rational unit = 1;
        for (const MultiPoly* f : t.factors) {
            const Factored& fa = factored_of(f);
            unit *= fa.unit;
            for (std::size_t i = 0; i < nb; ++i) {
                exps[i] += fa.exps[i];
            }
        }
        grouped[exps] += t.coefficient / unit;
    }
    std::vector<int> emax(nb, 0);
    for (const auto& [exps, c] : grouped) {
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i < nb; ++i) {
            emax[i] = std::max(emax[i], exps[i]);
        }
    }
    MultiPoly num(nvars);
    for (const auto& [exps, c] : grouped) {
        if (c == 0) {
            continue;
        }
        MultiPoly term = MultiPoly::constant(nvars, c);
        for (std::size_t i = 0; i < nb; ++i) {
            for (int k = exps[i]; k < emax[i]; ++k) {
                term = term * basis[i];
            }
        }
        num += term;
    }
    for (std::size_t i = 0; i < nb && !num.is_zero(); ++i) {
        while (emax[i] > 0) {
            auto q = try_exact_divide(num, basis[i]);
            if (!q) {
                break;
            }
            num = std::move(*q);
            --emax[i];
        }
    }
    MultiPoly den = MultiPoly::constant(nvars, 1);
    for (std::size_t i = 0; i < nb; ++i) {
        for (int k = 0; k < emax[i]; ++k) {
            den = den * basis[i];
        }
    }
    return MultiRat(std::move(num), std::move(den));
}

} // namespace

MultiPoly growth_polynomial(const SubsetClassifier& classifier, const GeneratorClasses& classes, Subset t,
                            const EnumerationOptions& options) {
    MultiPoly p = MultiPoly::constant(classes.count(), 1);
    for (Subset comp : irreducible_components(classifier.matrix(), t)) {
        p = p * polynomial_of(enumerate_finite(classifier, classes, comp, options), classes.count());
    }
    return p;
}

MultiRat steinberg_sum(const SphericalPoset& poset, const std::vector<MultiPoly>& polys) {
    if (polys.size() != poset.elements.size() || polys.empty()) {
        throw Error("growth", "ShapeMismatch", "one polynomial per poset element is required");
    }
    std::vector<SteinbergTerm> terms;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        Rational sign = subset_size(poset.elements[i]) % 2 == 0 ? 1 : -1;
        terms.push_back({sign, {&polys[i]}});
    }
    return assemble(terms, polys.front().nvars());
}

GrowthSeries full_growth_series(const SubsetClassifier& classifier, const GrowthOptions& options) {
    const CoxeterMatrix& cm = classifier.matrix();
    GrowthSeries out;
    out.classes = generator_classes(cm);
    const int nvars = out.classes.count();
    for (Subset cls : out.classes.classes) {
        out.variable_names.push_back(nvars == 1 ? "q" : "q_" + cm.name(std::countr_zero(cls)));
    }
    ComponentPolynomials components(classifier, out.classes, options.enumeration);
    SphericalPoset poset = spherical_subsets(classifier, options.lattice_cap);

    std::vector<std::vector<Subset>> comps_of(poset.elements.size());
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        comps_of[i] = irreducible_components(cm, poset.elements[i]);
        for (Subset c : comps_of[i]) {
            components.get(c);
        }
    }
    std::vector<SteinbergTerm> terms;
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        SteinbergTerm t{subset_size(poset.elements[i]) % 2 == 0 ? Rational(1) : Rational(-1), {}};
        for (Subset c : comps_of[i]) {
            t.factors.push_back(&components.get(c));
        }
        terms.push_back(std::move(t));
    }
    out.steinberg = assemble(terms, nvars);
    out.finite = poset.contains(cm.all());
    if (out.finite) {
        MultiPoly w = MultiPoly::constant(nvars, 1);
        for (Subset c : irreducible_components(cm, cm.all())) {
            w = w * components.get(c);
        }
        out.series = MultiRat(std::move(w));
    } else {
        out.series = out.steinberg.invert_variables().reciprocal();
    }
    return out;
}

MultiRat uniform_specialization(const MultiRat& f) {
    std::vector<Rational> ones(static_cast<std::size_t>(f.nvars()), Rational(1));
    auto lift = [](const UPoly& u) {
        MultiPoly p(1);
        for (int k = 0; k <= u.degree(); ++k) {
            p.add_term({k}, u.coeff(k));
        }
        return p;
    };
    return MultiRat(lift(f.num().along_ray(ones)), lift(f.den().along_ray(ones)));
}

Rational evaluate(const MultiRat& f, const WeightVector& q) {
    if (q.size() != f.nvars()) {
        throw Error("growth", "ShapeMismatch", "weight vector and rational function disagree on variables");
    }
    return f.evaluate(q.values());
}

std::string to_string(Region r) {
    switch (r) {
    case Region::Interior:
        return "Interior";
    case Region::Boundary:
        return "Boundary";
    case Region::Outside:
        return "Outside";
    }
    return "Outside";
}

RegionVerdict region_membership(const GrowthSeries& w, const WeightVector& q, const Rational& width) {
    if (q.size() != w.series.nvars()) {
        throw Error("growth", "ShapeMismatch", "weight vector and growth series disagree on variables");
    }
    RegionVerdict verdict;
    UPoly num = w.series.num().along_ray(q.values());
    UPoly den = w.series.den().along_ray(q.values());
    UPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = divide(num, g).quotient;
        den = divide(den, g).quotient;
    }
    verdict.ray_numerator = num;
    verdict.ray_denominator = den;
    if (den.degree() <= 0) {
        verdict.region = Region::Interior;
        return verdict;
    }
    if (den(0) == 0) {
        throw Error("growth", "PoleAtZero", "growth series has a pole at the origin");
    }
    SturmSequence sturm(den);
    const int up_to_one = sturm.count_roots(0, 1);
    const bool pole_at_one = den(1) == 0;
    verdict.s_star = smallest_root_above(den, 0, width);
    if (up_to_one == 0) {
        verdict.region = Region::Interior;
    } else if (up_to_one == 1 && pole_at_one) {
        verdict.region = Region::Boundary;
    } else {
        verdict.region = Region::Outside;
    }
    return verdict;
}

BallSums ball_partial_sums(const CoxeterMatrix& cm, const GeneratorClasses& classes, const WeightVector& q,
                           int radius, const BallOptions& options) {
    if (radius < 0 || radius > options.max_radius) {
        throw Error("growth", "BallCapExceeded",
                    "radius " + std::to_string(radius) + " exceeds the cap " + std::to_string(options.max_radius));
    }
    if (q.size() != classes.count()) {
        throw Error("growth", "ShapeMismatch", "one weight per generator class is required");
    }
    TitsAction action(cm, cm.all());
    using Layer = std::unordered_map<std::vector<std::int64_t>, std::vector<int>, CoordHash>;
    Layer layer;
    layer.emplace(action.identity(), std::vector<int>(static_cast<std::size_t>(classes.count()), 0));
    BallSums out;
    Rational partial = 0;
    long total = 1;
    for (int k = 0;; ++k) {
        std::map<std::vector<int>, long> by_degree;
        for (const auto& [coords, md] : layer) {
            ++by_degree[md];
        }
        for (const auto& [md, count] : by_degree) {
            Rational weight = count;
            for (std::size_t c = 0; c < md.size(); ++c) {
                if (md[c] != 0) {
                    weight *= power(q[static_cast<int>(c)], md[c]);
                }
            }
            partial += weight;
        }
        out.partial_sums.push_back(partial);
        out.sphere_sizes.push_back(static_cast<long>(layer.size()));
        if (k == radius) {
            break;
        }
        Layer next;
        for (const auto& [coords, md] : layer) {
            for (int t = 0; t < cm.rank(); ++t) {
                if (!action.is_ascent(coords, t, options.max_bits)) {
                    continue;
                }
                auto md2 = md;
                md2[static_cast<std::size_t>(classes.class_of[static_cast<std::size_t>(t)])] += 1;
                auto [it, fresh] = next.emplace(action.apply(coords, t), md2);
                if (!fresh && it->second != md2) {
                    throw Error("growth", "MultidegreeMismatch",
                                "two paths to one element give different class multidegrees");
                }
            }
        }
        total += static_cast<long>(next.size());
        if (total > options.max_elements) {
            throw Error("growth", "BallCapExceeded",
                        "ball exceeds " + std::to_string(options.max_elements) + " elements; lower the radius");
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace coxwl2
