#include "coxwl2/davis.hpp"

#include "coxwl2/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace coxwl2 {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// Saturated upward chains from `start`, stepping through `up`.
void extend_chains(int start, const std::function<std::vector<int>(int)>& up, std::vector<int>& chain,
                   std::vector<Simplex>& out) {
    chain.push_back(start);
    auto next = up(start);
    if (next.empty()) {
        Simplex s = chain;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    for (int n : next) extend_chains(n, up, chain, out);
    chain.pop_back();
}

} // namespace

SimplicialComplex Chamber::face(Subset t) const {
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(vertex_types.size()); ++i)
        if ((vertex_types[i] & t) == t) keep.push_back(i);
    return complex.induced(keep);
}

Chamber build_chamber(const SphericalPoset& poset) {
    Chamber ch;
    ch.vertex_types = poset.elements;
    const int n = static_cast<int>(poset.elements.size());
    std::vector<std::vector<int>> up(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Subset a = poset.elements[i], b = poset.elements[j];
            if ((a & b) == a && subset_size(b) == subset_size(a) + 1) up[i].push_back(j);
        }
    std::vector<Simplex> chains;
    std::vector<int> chain;
    std::function<std::vector<int>(int)> step = [&](int i) { return up[i]; };
    extend_chains(poset.index_of(0), step, chain, chains);
    ch.complex = SimplicialComplex::from_faces(chains);
    return ch;
}

int CellComplexW::type_index(Subset t) const {
    auto it = std::lower_bound(types.begin(), types.end(), t, subset_less);
    if (it == types.end() || *it != t) return -1;
    return static_cast<int>(it - types.begin());
}

std::vector<int> CellComplexW::covers(int cell) const {
    std::vector<int> out;
    const Cell& c = cells[cell];
    const int rep = c.elements.front();
    for (int s : subset_members(u & ~c.type)) {
        int ti = type_index(c.type | singleton(s));
        if (ti < 0) continue;
        int up = coset_cell[ti][rep];
        if (up >= 0) out.push_back(up);
    }
    return out;
}

bool CellComplexW::is_face(int face, int cell) const {
    const Cell& f = cells[face];
    const Cell& c = cells[cell];
    if ((f.type & c.type) != f.type) return false;
    return coset_cell[type_index(c.type)][f.elements.front()] == cell;
}

std::vector<int> CellComplexW::closure(const std::vector<int>& seed) const {
    std::vector<bool> in(cells.size(), false);
    for (int c : seed) {
        const Cell& cell = cells[c];
        for (Subset sub : types) {
            if ((sub & cell.type) != sub) continue;
            int ti = type_index(sub);
            for (int e : cell.elements) {
                int f = coset_cell[ti][e];
                if (f >= 0) in[f] = true;
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

SimplicialComplex CellComplexW::order_complex(const std::vector<int>& subset) const {
    std::vector<bool> in(cells.size(), false);
    for (int c : subset) in[c] = true;
    std::function<std::vector<int>(int)> step = [&](int c) {
        std::vector<int> out;
        for (int up : covers(c))
            if (in[up]) out.push_back(up);
        return out;
    };
    std::vector<Simplex> chains;
    std::vector<int> chain;
    for (int c : subset)
        if (cells[c].type == 0) extend_chains(c, step, chain, chains);
    return SimplicialComplex::from_faces(chains);
}

std::vector<int> CellComplexW::all_cells() const {
    std::vector<int> out(cells.size());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

CellComplexW build_sigma(const SubsetClassifier& classifier, Subset u, int radius, const EnumerationOptions& options) {
    const CoxeterMatrix& cm = classifier.matrix();
    const GeneratorClasses classes = generator_classes(cm);
    CellComplexW sigma;
    sigma.u = u;
    if (classifier.classify(u).kind == SubgroupKind::Spherical && radius < 0) {
        sigma.ball = enumerate_finite(classifier, classes, u, options);
    } else {
        if (radius < 0) throw Error("davis", "NotSpherical", "infinite W_U needs a ball radius");
        sigma.ball = enumerate_ball(cm, classes, u, radius, options);
    }
    sigma.partial = !sigma.ball.complete;

    SphericalPoset poset = spherical_subsets(classifier);
    sigma.types = poset.restricted_to(u);
    std::sort(sigma.types.begin(), sigma.types.end(), subset_less);

    const int ne = static_cast<int>(sigma.ball.elements.size());
    std::map<int, int> column;
    for (int k = 0; k < static_cast<int>(sigma.ball.gens.size()); ++k) column[sigma.ball.gens[k]] = k;

    sigma.coset_cell.assign(sigma.types.size(), std::vector<int>(ne, -1));
    for (int ti = 0; ti < static_cast<int>(sigma.types.size()); ++ti) {
        const Subset t = sigma.types[ti];
        std::vector<int> parent(ne);
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<bool> open(ne, false);  // coset leaves the ball
        for (int e = 0; e < ne; ++e)
            for (int s : subset_members(t)) {
                int f = sigma.ball.table[e][column.at(s)];
                if (f < 0) {
                    open[e] = true;
                    continue;
                }
                int a = find_root(parent, e), b = find_root(parent, f);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        std::map<int, std::vector<int>> groups;
        for (int e = 0; e < ne; ++e) groups[find_root(parent, e)].push_back(e);
        for (auto& [root, members] : groups) {
            bool closed = std::none_of(members.begin(), members.end(), [&](int e) { return open[e]; });
            if (!closed) continue;
            const int id = static_cast<int>(sigma.cells.size());
            for (int e : members) sigma.coset_cell[ti][e] = id;
            sigma.cells.push_back(Cell{t, members});
        }
    }
    return sigma;
}

SimplicialComplex cell_boundary(const SubsetClassifier& classifier, Subset t, const EnumerationOptions& options) {
    CellComplexW sigma = build_sigma(classifier, t, -1, options);
    std::vector<int> proper;
    for (int c = 0; c < static_cast<int>(sigma.cells.size()); ++c)
        if (sigma.cells[c].type != t) proper.push_back(c);
    return sigma.order_complex(proper);
}

Ruin build_ruin(const CellComplexW& sigma, Subset t) {
    if ((t & sigma.u) != t || sigma.type_index(t) < 0)
        throw Error("davis", "NotSpherical", "T must be a spherical subset of U");
    Ruin r;
    r.u = sigma.u;
    r.t = t;
    std::vector<int> seed;
    for (int c = 0; c < static_cast<int>(sigma.cells.size()); ++c)
        if ((sigma.cells[c].type & t) == t) seed.push_back(c);
    r.omega = sigma.closure(seed);
    for (int c : r.omega)
        if ((sigma.cells[c].type & t) != t) r.boundary.push_back(c);
    r.omega_complex = sigma.order_complex(r.omega);
    r.boundary_complex = sigma.order_complex(r.boundary);
    return r;
}

bool pseudomanifold_check(const SimplicialComplex& l) {
    std::map<Simplex, int> count;
    for (const Simplex& s : l.faces(2)) count[s] = 0;
    for (const Simplex& s : l.faces(3))
        for (int drop = 0; drop < 4; ++drop) {
            Simplex f;
            for (int i = 0; i < 4; ++i)
                if (i != drop) f.push_back(s[i]);
            ++count[f];
        }
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

} // namespace coxwl2
