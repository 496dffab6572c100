#include "coxwl2/coxeter.hpp"

#include "coxwl2/errors.hpp"
#include "coxwl2/parallel.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace coxwl2 {

std::vector<int> subset_members(Subset t) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(subset_size(t)));
    while (t != 0) {
        int s = std::countr_zero(t);
        out.push_back(s);
        t &= t - 1;
    }
    return out;
}

Subset subset_of(const std::vector<int>& members) {
    Subset t = 0;
    for (int s : members) {
        t |= singleton(s);
    }
    return t;
}

bool subset_less(Subset a, Subset b) {
    int sa = subset_size(a);
    int sb = subset_size(b);
    if (sa != sb) {
        return sa < sb;
    }
    return subset_members(a) < subset_members(b);
}

// ------------------------------------------------------------ CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<int>> labels)
    : generators_(std::move(generators)), labels_(std::move(labels)) {}

std::optional<int> CoxeterMatrix::index_of(std::string_view name) const {
    for (int s = 0; s < rank(); ++s) {
        if (generators_[s] == name) {
            return s;
        }
    }
    return std::nullopt;
}

Subset CoxeterMatrix::parse_subset(std::string_view names) const {
    Subset t = 0;
    std::size_t start = 0;
    while (start <= names.size()) {
        std::size_t end = names.find(',', start);
        if (end == std::string_view::npos) {
            end = names.size();
        }
        std::string_view item = names.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        if (!item.empty()) {
            auto s = index_of(item);
            if (!s) {
                throw Error("io", "UnknownGenerator", "unknown generator '" + std::string(item) + "'");
            }
            t |= singleton(*s);
        }
        start = end + 1;
    }
    return t;
}

std::vector<std::string> CoxeterMatrix::names_of(Subset t) const {
    std::vector<std::string> out;
    for (int s : subset_members(t)) {
        out.push_back(generators_[s]);
    }
    return out;
}

CoxeterMatrix CoxeterMatrix::restrict(Subset t) const {
    auto members = subset_members(t);
    std::vector<std::string> names;
    std::vector<std::vector<int>> labels(members.size(), std::vector<int>(members.size(), 1));
    for (std::size_t i = 0; i < members.size(); ++i) {
        names.push_back(generators_[members[i]]);
        for (std::size_t j = 0; j < members.size(); ++j) {
            labels[i][j] = labels_[members[i]][members[j]];
        }
    }
    return CoxeterMatrix(std::move(names), std::move(labels));
}

std::vector<int> CoxeterMatrix::labels_in(Subset t) const {
    std::set<int> seen;
    auto members = subset_members(t);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            seen.insert(labels_[members[i]][members[j]]);
        }
    }
    return {seen.begin(), seen.end()};
}

CoxeterMatrix validate_matrix(std::vector<std::string> generators, const std::vector<std::vector<int>>& raw) {
    const std::size_t n = raw.size();
    if (n == 0) {
        throw Error("coxeter", "NotSquare", "empty Coxeter matrix");
    }
    if (n > static_cast<std::size_t>(kMaxGenerators)) {
        throw Error("coxeter", "TooManyGenerators", "at most 64 generators are supported");
    }
    for (const auto& row : raw) {
        if (row.size() != n) {
            throw Error("coxeter", "NotSquare", "Coxeter matrix is not square");
        }
    }
    if (generators.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            generators.push_back("s" + std::to_string(i + 1));
        }
    }
    if (generators.size() != n) {
        throw Error("coxeter", "NotSquare", "generator list and matrix size differ");
    }
    std::set<std::string> names(generators.begin(), generators.end());
    if (names.size() != n) {
        throw Error("coxeter", "DuplicateGenerator", "generator names must be unique");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (raw[i][i] != 1) {
            throw Error("coxeter", "BadDiagonal",
                        "diagonal entry for " + generators[i] + " must be 1");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            if (raw[i][j] < 2) {
                throw Error("coxeter", "LabelOutOfRange",
                            "label for (" + generators[i] + "," + generators[j] + ") must be >= 2 or inf");
            }
            if (raw[i][j] != raw[j][i]) {
                throw Error("coxeter", "NonSymmetric",
                            "labels for (" + generators[i] + "," + generators[j] + ") differ");
            }
        }
    }
    return CoxeterMatrix(std::move(generators), raw);
}

// ------------------------------------------------------------ Gram form

GramMatrix gram_matrix(const CoxeterMatrix& cm, Subset t) {
    GramMatrix g;
    g.members = subset_members(t);
    auto labels = cm.labels_in(t);
    g.field = &CyclotomicField::for_labels(labels);
    const Rational minus_half(-1, 2);
    const std::size_t n = g.members.size();
    g.entries.assign(n, std::vector<Cyclo>(n, Cyclo(*g.field)));
    for (std::size_t i = 0; i < n; ++i) {
        g.entries[i][i] = Cyclo(*g.field, Rational(1));
        for (std::size_t j = i + 1; j < n; ++j) {
            Cyclo b = minus_half * Cyclo::two_cos(*g.field, cm.label(g.members[i], g.members[j]));
            g.entries[i][j] = b;
            g.entries[j][i] = b;
        }
    }
    return g;
}

Signature signature(const GramMatrix& gram, int max_bits) {
    auto a = gram.entries;
    const std::size_t n = a.size();
    Signature sig;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = n;
        for (std::size_t j = i; j < n; ++j) {
            if (!a[j][j].is_zero()) {
                p = j;
                break;
            }
        }
        if (p == n) {
            std::size_t r = n;
            std::size_t c = n;
            for (std::size_t x = i; x < n && r == n; ++x) {
                for (std::size_t y = x + 1; y < n; ++y) {
                    if (!a[x][y].is_zero()) {
                        r = x;
                        c = y;
                        break;
                    }
                }
            }
            if (r == n) {
                sig.zero += static_cast<int>(n - i);
                break;
            }
            for (std::size_t k = i; k < n; ++k) {
                a[r][k] += a[c][k];
            }
            for (std::size_t k = i; k < n; ++k) {
                a[k][r] += a[k][c];
            }
            p = r;
        }
        if (p != i) {
            std::swap(a[p], a[i]);
            for (auto& row : a) {
                std::swap(row[p], row[i]);
            }
        }
        const Cyclo pivot = a[i][i];
        int s = pivot.sign(max_bits);
        if (s > 0) {
            ++sig.positive;
        } else if (s < 0) {
            ++sig.negative;
        } else {
            throw Error("coxeter", "InternalDisagreement", "nonzero pivot with zero sign");
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a[r][i].is_zero()) {
                continue;
            }
            Cyclo f = a[r][i] / pivot;
            for (std::size_t c = i + 1; c < n; ++c) {
                if (!a[i][c].is_zero()) {
                    a[r][c] -= f * a[i][c];
                }
            }
            a[r][i] = Cyclo(pivot.field());
        }
        for (std::size_t c = i + 1; c < n; ++c) {
            a[i][c] = Cyclo(pivot.field());
        }
    }
    return sig;
}

// ------------------------------------------------------------ diagram table

namespace {

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Integer pow2(int n) {
    Integer r = 1;
    r <<= static_cast<mp_bitcnt_t>(n);
    return r;
}

struct Arm {
    int length = 0;
    std::vector<int> labels;  // from the branch vertex outward
};

DiagramInfo finite(std::string name, Integer order) {
    return {DiagramFamily::Finite, std::move(name), std::move(order)};
}

DiagramInfo affine(std::string name) { return {DiagramFamily::Affine, std::move(name), 0}; }

DiagramInfo unknown(int n) { return {DiagramFamily::Unknown, "X" + std::to_string(n), 0}; }

} // namespace

DiagramInfo identify_diagram(const CoxeterMatrix& cm, Subset component) {
    const auto v = subset_members(component);
    const int n = static_cast<int>(v.size());
    if (n == 1) {
        return finite("A1", 2);
    }
    if (n == 2) {
        int m = cm.label(v[0], v[1]);
        if (!is_finite_label(m)) {
            return affine("~A1");
        }
        if (m == 3) {
            return finite("A2", 6);
        }
        if (m == 4) {
            return finite("B2", 8);
        }
        if (m == 6) {
            return finite("G2", 12);
        }
        return finite("I2(" + std::to_string(m) + ")", 2 * m);
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    int edges = 0;
    std::vector<int> big;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int m = cm.label(v[i], v[j]);
            if (m == 2) {
                continue;
            }
            if (!is_finite_label(m)) {
                return unknown(n);
            }
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
            if (m != 3) {
                big.push_back(m);
            }
        }
    }
    auto lab = [&](int i, int j) { return cm.label(v[i], v[j]); };
    std::vector<int> degree(static_cast<std::size_t>(n));
    int max_degree = 0;
    for (int i = 0; i < n; ++i) {
        degree[i] = static_cast<int>(adj[i].size());
        max_degree = std::max(max_degree, degree[i]);
    }
    if (edges == n) {
        bool cycle = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
        if (cycle && big.empty()) {
            return affine("~A" + std::to_string(n - 1));
        }
        return unknown(n);
    }
    if (edges != n - 1) {
        return unknown(n);
    }
    std::sort(big.begin(), big.end());

    if (max_degree <= 2) {
        int start = 0;
        while (degree[start] != 1) {
            ++start;
        }
        std::vector<int> seq;
        int prev = -1;
        int cur = start;
        for (int k = 0; k < n - 1; ++k) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            seq.push_back(lab(cur, next));
            prev = cur;
            cur = next;
        }
        if (seq.front() != 3 && seq.back() == 3) {
            std::reverse(seq.begin(), seq.end());
        }
        // now any single exceptional label at an end sits at the back
        auto count = [&](int m) { return static_cast<int>(std::count(seq.begin(), seq.end(), m)); };
        if (big.empty()) {
            return finite("A" + std::to_string(n), factorial(n + 1));
        }
        if (big.size() == 1) {
            const int m = big[0];
            const bool at_end = seq.back() == m;
            if (m == 4) {
                if (at_end) {
                    return finite("B" + std::to_string(n), pow2(n) * factorial(n));
                }
                if (n == 4 && seq[1] == 4) {
                    return finite("F4", 1152);
                }
                if (n == 5 && (seq[1] == 4 || seq[2] == 4)) {
                    return affine("~F4");
                }
                return unknown(n);
            }
            if (m == 5 && at_end && n == 3) {
                return finite("H3", 120);
            }
            if (m == 5 && at_end && n == 4) {
                return finite("H4", 14400);
            }
            if (m == 6 && at_end && n == 3) {
                return affine("~G2");
            }
            return unknown(n);
        }
        if (big.size() == 2 && count(4) == 2 && seq.front() == 4 && seq.back() == 4) {
            return affine("~C" + std::to_string(n - 1));
        }
        return unknown(n);
    }

    std::vector<int> branch;
    for (int i = 0; i < n; ++i) {
        if (degree[i] >= 3) {
            branch.push_back(i);
        }
    }
    auto arms_of = [&](int c) {
        std::vector<Arm> arms;
        for (int nb : adj[c]) {
            Arm arm;
            int prev = c;
            int cur = nb;
            arm.labels.push_back(lab(c, nb));
            arm.length = 1;
            while (degree[cur] == 2) {
                int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                arm.labels.push_back(lab(cur, next));
                ++arm.length;
                prev = cur;
                cur = next;
            }
            if (degree[cur] != 1) {
                arm.length = -1;  // reaches another branch vertex
            }
            arms.push_back(std::move(arm));
        }
        std::sort(arms.begin(), arms.end(), [](const Arm& a, const Arm& b) { return a.length < b.length; });
        return arms;
    };

    if (branch.size() == 1 && degree[branch[0]] == 4) {
        auto arms = arms_of(branch[0]);
        bool short_arms = std::all_of(arms.begin(), arms.end(), [](const Arm& a) { return a.length == 1; });
        if (n == 5 && short_arms && big.empty()) {
            return affine("~D4");
        }
        return unknown(n);
    }
    if (branch.size() == 1 && degree[branch[0]] == 3) {
        auto arms = arms_of(branch[0]);
        const int a = arms[0].length;
        const int b = arms[1].length;
        const int c = arms[2].length;
        if (big.empty()) {
            if (a == 1 && b == 1) {
                return finite("D" + std::to_string(n), pow2(n - 1) * factorial(n));
            }
            if (a == 1 && b == 2 && c == 2) {
                return finite("E6", 51840);
            }
            if (a == 1 && b == 2 && c == 3) {
                return finite("E7", 2903040);
            }
            if (a == 1 && b == 2 && c == 4) {
                return finite("E8", 696729600);
            }
            if (a == 2 && b == 2 && c == 2) {
                return affine("~E6");
            }
            if (a == 1 && b == 3 && c == 3) {
                return affine("~E7");
            }
            if (a == 1 && b == 2 && c == 5) {
                return affine("~E8");
            }
            return unknown(n);
        }
        if (big.size() == 1 && big[0] == 4 && a == 1 && b == 1) {
            // the 4 must be the outermost edge of the longest arm
            for (const Arm& arm : arms) {
                if (arm.length == c && arm.labels.back() == 4 &&
                    std::count(arm.labels.begin(), arm.labels.end(), 4) == 1) {
                    return affine("~B" + std::to_string(n - 1));
                }
            }
        }
        return unknown(n);
    }
    if (branch.size() == 2 && big.empty() && n >= 6) {
        for (int c : branch) {
            if (degree[c] != 3) {
                return unknown(n);
            }
            int leaves = 0;
            for (int nb : adj[c]) {
                leaves += degree[nb] == 1 ? 1 : 0;
            }
            if (leaves != 2) {
                return unknown(n);
            }
        }
        return affine("~D" + std::to_string(n - 1));
    }
    return unknown(n);
}

// ------------------------------------------------------------ classification

std::string to_string(SubgroupKind kind) {
    switch (kind) {
    case SubgroupKind::Spherical:
        return "Spherical";
    case SubgroupKind::Euclidean:
        return "Euclidean";
    case SubgroupKind::Lanner:
        return "Lanner";
    case SubgroupKind::OtherInfinite:
        return "OtherInfinite";
    }
    return "OtherInfinite";
}

std::vector<Subset> irreducible_components(const CoxeterMatrix& cm, Subset t) {
    std::vector<Subset> comps;
    Subset rest = t;
    while (rest != 0) {
        Subset comp = singleton(std::countr_zero(rest));
        Subset frontier = comp;
        while (frontier != 0) {
            int s = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (int u : subset_members(rest & ~comp)) {
                if (cm.label(s, u) != 2) {
                    comp |= singleton(u);
                    frontier |= singleton(u);
                }
            }
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;
}

SubsetClassifier::SubsetClassifier(CoxeterMatrix cm, int max_bits) : cm_(std::move(cm)), max_bits_(max_bits) {}

SubgroupType SubsetClassifier::classify(Subset t) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(t); it != cache_.end()) {
            return it->second;
        }
    }
    SubgroupType type = compute(t);
    std::lock_guard lock(mutex_);
    return cache_.emplace(t, std::move(type)).first->second;
}

SubgroupType SubsetClassifier::compute(Subset t) const {
    SubgroupType type;
    type.rank = subset_size(t);
    if (t == 0) {
        return type;
    }
    bool all_finite = true;
    bool all_affine = true;
    const auto comps = irreducible_components(cm_, t);
    for (Subset comp : comps) {
        Signature sig = signature(gram_matrix(cm_, comp), max_bits_);
        type.signature.positive += sig.positive;
        type.signature.zero += sig.zero;
        type.signature.negative += sig.negative;
        const bool gram_finite = sig.zero == 0 && sig.negative == 0;
        const bool gram_affine = sig.negative == 0 && sig.zero == 1;
        if (sig.negative == 0 && sig.zero > 1) {
            throw Error("coxeter", "InternalDisagreement", "irreducible semidefinite form with corank > 1");
        }
        DiagramInfo info = identify_diagram(cm_, comp);
        const bool table_finite = info.family == DiagramFamily::Finite;
        const bool table_affine = info.family == DiagramFamily::Affine;
        if (gram_finite != table_finite || gram_affine != table_affine) {
            throw Error("coxeter", "InternalDisagreement",
                        "Gram signature and diagram table disagree on component {" +
                            [&] {
                                std::string s;
                                for (auto& name : cm_.names_of(comp)) {
                                    s += (s.empty() ? "" : ",") + name;
                                }
                                return s;
                            }() +
                            "}");
        }
        all_finite = all_finite && table_finite;
        all_affine = all_affine && table_affine;
        type.components.push_back(info.name);
        if (table_finite) {
            type.order *= info.order;
        }
    }
    if (all_finite) {
        type.kind = SubgroupKind::Spherical;
        return type;
    }
    type.order = 0;
    if (all_affine && type.rank >= 3) {
        type.kind = SubgroupKind::Euclidean;
        return type;
    }
    if (comps.size() == 1 && type.rank >= 3 && type.signature.negative > 0) {
        bool facets_spherical = true;
        for (int s : subset_members(t)) {
            if (!classify(t & ~singleton(s)).spherical()) {
                facets_spherical = false;
                break;
            }
        }
        if (facets_spherical) {
            type.kind = SubgroupKind::Lanner;
            return type;
        }
    }
    type.kind = SubgroupKind::OtherInfinite;
    return type;
}

SubgroupType classify_subset(const CoxeterMatrix& cm, Subset t, int max_bits) {
    return SubsetClassifier(cm, max_bits).classify(t);
}

// ------------------------------------------------------------ spherical poset

std::vector<Subset> SphericalPoset::restricted_to(Subset u) const {
    std::vector<Subset> out;
    for (Subset t : elements) {
        if ((t & ~u) == 0) {
            out.push_back(t);
        }
    }
    return out;
}

SphericalPoset spherical_subsets(const SubsetClassifier& classifier, int max_generators) {
    const CoxeterMatrix& cm = classifier.matrix();
    if (cm.rank() > max_generators) {
        throw Error("coxeter", "LatticeCapExceeded",
                    "rank " + std::to_string(cm.rank()) + " exceeds the subset lattice cap " +
                        std::to_string(max_generators));
    }
    SphericalPoset poset;
    std::vector<Subset> level{0};
    std::vector<SubgroupType> level_types{classifier.classify(0)};
    std::unordered_map<Subset, bool> spherical{{0, true}};
    while (!level.empty()) {
        for (std::size_t i = 0; i < level.size(); ++i) {
            poset.index.emplace(level[i], static_cast<int>(poset.elements.size()));
            poset.elements.push_back(level[i]);
            poset.types.push_back(level_types[i]);
        }
        std::vector<Subset> candidates;
        for (Subset t : level) {
            const int top = t == 0 ? -1 : 63 - std::countl_zero(t);
            for (int s = top + 1; s < cm.rank(); ++s) {
                Subset u = t | singleton(s);
                bool facets_ok = true;
                for (int r : subset_members(u)) {
                    if (!spherical.count(u & ~singleton(r))) {
                        facets_ok = false;
                        break;
                    }
                }
                if (facets_ok) {
                    candidates.push_back(u);
                }
            }
        }
        std::sort(candidates.begin(), candidates.end(), subset_less);
        std::vector<Subset> next;
        std::vector<SubgroupType> next_types;
        for (Subset u : candidates) {
            SubgroupType type = classifier.classify(u);
            if (type.spherical()) {
                spherical.emplace(u, true);
                next.push_back(u);
                next_types.push_back(std::move(type));
            } else {
                poset.minimal_nonspherical.push_back(u);
            }
        }
        level = std::move(next);
        level_types = std::move(next_types);
    }
    return poset;
}

// ------------------------------------------------------------ classes, products

GeneratorClasses generator_classes(const CoxeterMatrix& cm) {
    const int n = cm.rank();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            int m = cm.label(s, t);
            if (is_finite_label(m) && m % 2 == 1) {
                int a = find(s);
                int b = find(t);
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
    }
    GeneratorClasses gc;
    gc.class_of.assign(static_cast<std::size_t>(n), -1);
    std::unordered_map<int, int> root_to_class;
    for (int s = 0; s < n; ++s) {
        int r = find(s);
        auto [it, fresh] = root_to_class.emplace(r, gc.count());
        if (fresh) {
            gc.classes.push_back(0);
        }
        gc.class_of[s] = it->second;
        gc.classes[it->second] |= singleton(s);
    }
    return gc;
}

std::vector<Subset> product_decomposition(const CoxeterMatrix& cm) {
    return irreducible_components(cm, cm.all());
}

// ------------------------------------------------------------ census

std::vector<int> canonical_rank4_code(const std::vector<std::vector<int>>& labels) {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::vector<int> best;
    do {
        std::vector<int> code;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                code.push_back(labels[perm[i]][perm[j]]);
            }
        }
        if (best.empty() || code < best) {
            best = std::move(code);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

std::vector<std::vector<int>> rank4_labels(const std::vector<int>& code) {
    std::vector<std::vector<int>> m(4, std::vector<int>(4, 1));
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            m[i][j] = m[j][i] = code[k++];
        }
    }
    return m;
}

// A triangle group (a,b,c) is finite iff 1/a + 1/b + 1/c > 1, i.e. bc + ac + ab > abc.
bool facets_spherical(const std::vector<std::vector<int>>& m) {
    for (int drop = 0; drop < 4; ++drop) {
        std::vector<int> f;
        for (int i = 0; i < 4; ++i) {
            if (i != drop) {
                f.push_back(i);
            }
        }
        const long a = m[f[0]][f[1]], b = m[f[1]][f[2]], c = m[f[0]][f[2]];
        if (b * c + a * c + a * b <= a * b * c) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<CensusEntry> lanner_census(int max_label, int threads, int max_bits) {
    if (max_label < 2) {
        throw Error("coxeter", "LabelOutOfRange", "census needs max_label >= 2");
    }
    std::vector<std::vector<int>> codes;
    std::vector<int> code(6, 2);
    while (true) {
        if (canonical_rank4_code(rank4_labels(code)) == code && facets_spherical(rank4_labels(code))) {
            codes.push_back(code);
        }
        int k = 5;
        while (k >= 0 && code[k] == max_label) {
            code[k] = 2;
            --k;
        }
        if (k < 0) {
            break;
        }
        ++code[k];
    }
    std::vector<std::optional<CensusEntry>> found(codes.size());
    const std::vector<std::string> names{"s1", "s2", "s3", "s4"};
    parallel_for(codes.size(), threads, [&](std::size_t i) {
        CoxeterMatrix cm(names, rank4_labels(codes[i]));
        SubsetClassifier classifier(cm, max_bits);
        SubgroupType whole = classifier.classify(cm.all());
        if (whole.kind == SubgroupKind::Lanner) {
            found[i] = CensusEntry{cm, whole.signature};
        }
    });
    std::vector<CensusEntry> out;
    for (auto& f : found) {
        if (f) {
            out.push_back(std::move(*f));
        }
    }
    return out;
}

} // namespace coxwl2
