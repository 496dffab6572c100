#include "coxwl2/simplicial.hpp"

#include "coxwl2/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace coxwl2 {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : s) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ------------------------------------------------------------ SimplicialComplex

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Simplex>& faces, long face_cap) {
    SimplicialComplex c;
    auto add = [&](Simplex s) {
        if (c.index_.insert(s).second) {
            if (static_cast<long>(c.index_.size()) > face_cap) {
                throw Error("simplicial", "ComplexTooLarge",
                            "more than " + std::to_string(face_cap) + " faces");
            }
            const std::size_t k = s.size() - 1;
            if (c.faces_.size() <= k) {
                c.faces_.resize(k + 1);
            }
            c.faces_[k].push_back(std::move(s));
        }
    };
    for (Simplex f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) {
            continue;
        }
        if (c.index_.count(f) != 0) {
            continue;
        }
        if (f.size() > 30) {
            throw Error("simplicial", "ComplexTooLarge", "simplex of dimension above 29");
        }
        const std::uint32_t n = static_cast<std::uint32_t>(f.size());
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            Simplex sub;
            for (std::uint32_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1U) {
                    sub.push_back(f[i]);
                }
            }
            add(std::move(sub));
        }
    }
    for (auto& layer : c.faces_) {
        std::sort(layer.begin(), layer.end());
    }
    if (!c.faces_.empty()) {
        for (const auto& v : c.faces_[0]) {
            c.vertices_.push_back(v[0]);
        }
    }
    return c;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dimension()) {
        return none;
    }
    return faces_[static_cast<std::size_t>(k)];
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
    std::vector<Simplex> out;
    std::unordered_set<Simplex, SimplexHash> covered;
    for (int k = dimension(); k >= 0; --k) {
        for (const auto& s : faces(k)) {
            if (covered.count(s) == 0) {
                out.push_back(s);
            }
            if (k > 0) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex f = s;
                    f.erase(f.begin() + static_cast<long>(i));
                    covered.insert(std::move(f));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::has_vertex(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f;
    for (const auto& layer : faces_) {
        f.push_back(static_cast<long>(layer.size()));
    }
    return f;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& s : maximal_faces()) {
        if (static_cast<int>(s.size()) - 1 != dimension()) {
            return false;
        }
    }
    return true;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& a) const {
    std::vector<int> keep = a;
    std::sort(keep.begin(), keep.end());
    std::vector<Simplex> kept;
    for (auto layer = faces_.rbegin(); layer != faces_.rend(); ++layer) {
        for (const auto& s : *layer) {
            if (std::includes(keep.begin(), keep.end(), s.begin(), s.end())) {
                kept.push_back(s);
            }
        }
    }
    return from_faces(kept);
}

std::vector<int> SimplicialComplex::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : faces(1)) {
        if (e[0] == v) {
            out.push_back(e[1]);
        } else if (e[1] == v) {
            out.push_back(e[0]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::adjacent(int u, int v) const {
    if (u == v) {
        return false;
    }
    return contains(u < v ? Simplex{u, v} : Simplex{v, u});
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& map) const {
    std::vector<Simplex> out;
    for (const auto& s : maximal_faces()) {
        Simplex t;
        for (int v : s) {
            t.push_back(map.at(static_cast<std::size_t>(v)));
        }
        out.push_back(std::move(t));
    }
    return from_faces(out);
}

// ------------------------------------------------------------ constructions

SimplicialComplex nerve(const SphericalPoset& poset) {
    std::vector<Simplex> faces;
    for (Subset t : poset.elements) {
        if (t != 0) {
            faces.push_back(subset_members(t));
        }
    }
    return SimplicialComplex::from_faces(faces);
}

bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k) {
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.faces(d)) {
            if (!l.contains(s)) {
                return false;
            }
        }
    }
    return true;
}

bool is_full(const SimplicialComplex& l, const SimplicialComplex& k) {
    return is_subcomplex(l, k) && l.induced(k.vertices()) == k;
}

SimplicialComplex link(const SimplicialComplex& l, int v) {
    std::vector<Simplex> out;
    for (int d = 1; d <= l.dimension(); ++d) {
        for (const auto& s : l.faces(d)) {
            if (std::binary_search(s.begin(), s.end(), v)) {
                Simplex t;
                std::copy_if(s.begin(), s.end(), std::back_inserter(t), [v](int x) { return x != v; });
                out.push_back(std::move(t));
            }
        }
    }
    return SimplicialComplex::from_faces(out);
}

SimplicialComplex star(const SimplicialComplex& l, int v) {
    std::vector<Simplex> out;
    for (int d = 0; d <= l.dimension(); ++d) {
        for (const auto& s : l.faces(d)) {
            if (std::binary_search(s.begin(), s.end(), v)) {
                out.push_back(s);
            }
        }
    }
    return SimplicialComplex::from_faces(out);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto faces = a.maximal_faces();
    auto more = b.maximal_faces();
    faces.insert(faces.end(), more.begin(), more.end());
    return SimplicialComplex::from_faces(faces);
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> faces;
    for (int d = 0; d <= a.dimension(); ++d) {
        for (const auto& s : a.faces(d)) {
            if (b.contains(s)) {
                faces.push_back(s);
            }
        }
    }
    return SimplicialComplex::from_faces(faces);
}

bool is_flag(const SimplicialComplex& l) {
    // every clique is a face iff adding a vertex adjacent to all of a face gives a face
    for (int d = 1; d <= l.dimension(); ++d) {
        for (const auto& s : l.faces(d)) {
            for (int w : l.neighbors(s[0])) {
                if (std::binary_search(s.begin(), s.end(), w)) {
                    continue;
                }
                bool all = std::all_of(s.begin() + 1, s.end(), [&](int x) { return l.adjacent(x, w); });
                if (!all) {
                    continue;
                }
                Simplex t = s;
                t.insert(std::upper_bound(t.begin(), t.end(), w), w);
                if (!l.contains(t)) {
                    return false;
                }
            }
        }
    }
    return true;
}

long euler_characteristic(const SimplicialComplex& l) {
    long chi = 0;
    auto f = l.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) {
        chi += (k % 2 == 0) ? f[k] : -f[k];
    }
    return chi;
}

SimplicialComplex boundary_complex(const SimplicialComplex& l) {
    const int d = l.dimension();
    if (d < 1) {
        return {};
    }
    std::map<Simplex, int> count;
    for (const auto& s : l.faces(d)) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(i));
            ++count[f];
        }
    }
    std::vector<Simplex> out;
    for (const auto& [f, n] : count) {
        if (n == 1) {
            out.push_back(f);
        }
    }
    return SimplicialComplex::from_faces(out);
}

// ------------------------------------------------------------ recognition

std::string to_string(TopologyKind kind) {
    switch (kind) {
    case TopologyKind::Sphere:
        return "Sphere";
    case TopologyKind::Disk:
        return "Disk";
    case TopologyKind::Closed3Manifold:
        return "Closed3Manifold";
    case TopologyKind::Circle:
        return "Circle";
    case TopologyKind::Arc:
        return "Arc";
    case TopologyKind::Other:
        return "Other";
    }
    return "Other";
}

namespace {

// Number of top faces containing each codimension-one face.
std::map<Simplex, int> ridge_degrees(const SimplicialComplex& l) {
    const int d = l.dimension();
    std::map<Simplex, int> count;
    for (const auto& r : l.faces(d - 1)) {
        count[r] = 0;
    }
    for (const auto& s : l.faces(d)) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(i));
            ++count[f];
        }
    }
    return count;
}

TopologyVerdict verdict(TopologyKind kind, int dim, bool certified, TopologyVerdict base) {
    base.kind = kind;
    base.dim = dim;
    base.certified = certified;
    return base;
}

} // namespace

TopologyVerdict recognize(const SimplicialComplex& l) {
    const int d = l.dimension();
    if (d > 3) {
        throw Error("simplicial", "DimensionTooHigh", "recognition is limited to dimension 3");
    }
    TopologyVerdict v;
    v.dim = d;
    if (l.empty()) {
        v.checks.push_back("empty complex");
        return v;
    }
    v.euler = euler_characteristic(l);
    v.homology = smith_homology(l);
    v.checks.push_back("euler " + std::to_string(v.euler));
    v.checks.push_back("homology " + to_string(v.homology));
    const bool connected = v.homology[0].rank == 1;
    if (d == 0) {
        if (l.vertices().size() == 1) {
            return verdict(TopologyKind::Disk, 0, true, v);
        }
        if (l.vertices().size() == 2) {
            return verdict(TopologyKind::Sphere, 0, true, v);
        }
        return v;
    }
    if (!l.is_pure()) {
        v.checks.push_back("not pure");
        return v;
    }
    v.checks.push_back("pure");
    if (!connected) {
        v.checks.push_back("disconnected");
        return v;
    }
    v.checks.push_back("connected");
    auto ridges = ridge_degrees(l);
    bool closed = true;
    for (const auto& [r, n] : ridges) {
        if (n < 1 || n > 2) {
            v.checks.push_back("a codimension-one face lies in " + std::to_string(n) + " top faces");
            return v;
        }
        closed = closed && n == 2;
    }
    v.checks.push_back(closed ? "every ridge in two top faces" : "every ridge in one or two top faces");
    if (d == 1) {
        if (closed) {
            return verdict(TopologyKind::Circle, 1, true, v);
        }
        long ends = std::count_if(ridges.begin(), ridges.end(), [](const auto& p) { return p.second == 1; });
        if (ends == 2) {
            return verdict(TopologyKind::Arc, 1, true, v);
        }
        return v;
    }
    auto boundary = boundary_complex(l);
    for (int x : l.vertices()) {
        TopologyVerdict lk = recognize(link(l, x));
        const bool on_boundary = boundary.has_vertex(x);
        const bool ok = on_boundary ? lk.is_disk(d - 1) : lk.is_sphere(d - 1);
        if (!ok) {
            v.checks.push_back("link of vertex " + std::to_string(x) + " is not a " +
                               (on_boundary ? "disk" : "sphere"));
            return v;
        }
    }
    v.checks.push_back("vertex links are spheres or disks");
    if (d == 2) {
        if (closed) {
            if (v.euler == 2) {
                return verdict(TopologyKind::Sphere, 2, true, v);
            }
            return v;
        }
        TopologyVerdict b = recognize(boundary);
        v.checks.push_back("boundary " + to_string(b.kind));
        if (b.kind == TopologyKind::Circle && v.euler == 1) {
            return verdict(TopologyKind::Disk, 2, true, v);
        }
        return v;
    }
    // d == 3: only necessary conditions are available for spheres and disks
    if (closed) {
        if (trimmed(v.homology) == free_homology({1, 0, 0, 1})) {
            v.checks.push_back("homology of S^3; not certified");
            return verdict(TopologyKind::Sphere, 3, false, v);
        }
        return verdict(TopologyKind::Closed3Manifold, 3, true, v);
    }
    TopologyVerdict b = recognize(boundary);
    v.checks.push_back("boundary " + to_string(b.kind));
    if (b.is_sphere(2) && trimmed(v.homology) == free_homology({1})) {
        v.checks.push_back("homology of a point; not certified");
        return verdict(TopologyKind::Disk, 3, false, v);
    }
    return v;
}

// ------------------------------------------------------------ cliques and cycles

std::vector<Simplex> empty_simplices(const SimplicialComplex& l, int k) {
    std::vector<Simplex> out;
    if (k < 1) {
        return out;
    }
    const auto& verts = l.vertices();
    Simplex clique;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        if (static_cast<int>(clique.size()) == k + 1) {
            if (!l.contains(clique)) {
                out.push_back(clique);
            }
            return;
        }
        for (std::size_t i = from; i < verts.size(); ++i) {
            int w = verts[i];
            if (std::all_of(clique.begin(), clique.end(), [&](int x) { return l.adjacent(x, w); })) {
                clique.push_back(w);
                grow(i + 1);
                clique.pop_back();
            }
        }
    };
    grow(0);
    return out;
}

std::vector<std::vector<int>> induced_cycles(const SimplicialComplex& l, int max_length) {
    const auto& verts = l.vertices();
    const std::size_t n = verts.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::size_t>> nbr(n);
    for (const auto& e : l.faces(1)) {
        auto a = static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), e[0]) - verts.begin());
        auto b = static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), e[1]) - verts.begin());
        adj[a][b] = adj[b][a] = true;
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (auto& x : nbr) {
        std::sort(x.begin(), x.end());
    }
    std::vector<std::vector<int>> out;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(n, false);
    std::function<void()> extend = [&]() {
        const std::size_t s = path.front();
        const std::size_t last = path.back();
        for (std::size_t w : nbr[last]) {
            if (w <= s || on_path[w]) {
                continue;
            }
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (adj[w][path[i]]) {
                    chord = true;
                    break;
                }
            }
            if (chord) {
                continue;
            }
            if (path.size() >= 2 && adj[w][s]) {
                if (path[1] < w) {
                    std::vector<int> cyc;
                    for (std::size_t p : path) {
                        cyc.push_back(verts[p]);
                    }
                    cyc.push_back(verts[w]);
                    out.push_back(std::move(cyc));
                }
                continue;
            }
            if (static_cast<int>(path.size()) + 1 < max_length) {
                path.push_back(w);
                on_path[w] = true;
                extend();
                on_path[w] = false;
                path.pop_back();
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = true;
        extend();
        on_path[s] = false;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

SimplicialComplex cycle_complex(const std::vector<int>& cycle) {
    std::vector<Simplex> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        edges.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
    }
    return SimplicialComplex::from_faces(edges);
}

namespace {

// Vertex order of a circle, starting at its smallest vertex.
std::vector<int> cycle_order(const SimplicialComplex& circle) {
    std::vector<int> order;
    if (circle.vertices().empty()) {
        return order;
    }
    const int start = circle.vertices().front();
    order.push_back(start);
    int prev = start;
    int cur = circle.neighbors(start).front();
    while (cur != start) {
        order.push_back(cur);
        auto nb = circle.neighbors(cur);
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    if (order.size() > 2 && order[1] > order.back()) {
        std::reverse(order.begin() + 1, order.end());
    }
    return order;
}

std::optional<SeparatingSphere> try_split(const SimplicialComplex& l, const SimplicialComplex& m) {
    if (!is_full(l, m) || recognize(m).kind != TopologyKind::Circle) {
        return std::nullopt;
    }
    const auto& tris = l.faces(2);
    std::vector<std::size_t> parent(tris.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::map<Simplex, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Simplex e = tris[i];
            e.erase(e.begin() + static_cast<long>(j));
            by_edge[e].push_back(i);
        }
    }
    for (const auto& [e, ts] : by_edge) {
        if (m.contains(e)) {
            continue;
        }
        for (std::size_t i = 1; i < ts.size(); ++i) {
            parent[find(ts[i])] = find(ts[0]);
        }
    }
    std::map<std::size_t, std::vector<Simplex>> parts;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        parts[find(i)].push_back(tris[i]);
    }
    if (parts.size() != 2) {
        return std::nullopt;
    }
    std::vector<std::vector<Simplex>> regions;
    for (auto& [root, f] : parts) {
        regions.push_back(std::move(f));
    }
    if (regions[1].size() < regions[0].size()) {
        std::swap(regions[0], regions[1]);
    }
    SeparatingSphere out;
    out.m = m;
    out.l1 = SimplicialComplex::from_faces(regions[0]);
    out.l2 = SimplicialComplex::from_faces(regions[1]);
    for (const auto* part : {&out.l1, &out.l2}) {
        if (!is_full(l, *part) || !recognize(*part).is_disk(2) || !(boundary_complex(*part) == m)) {
            return std::nullopt;
        }
    }
    if (!(complex_union(out.l1, out.l2) == l) || !(complex_intersection(out.l1, out.l2) == m)) {
        return std::nullopt;
    }
    out.cycle = cycle_order(m);
    return out;
}

} // namespace

std::optional<SeparatingSphere> separating_sphere_search(const SimplicialComplex& l, int max_length) {
    if (!recognize(l).is_sphere(2)) {
        throw Error("simplicial", "PreconditionFailed", "separating sphere search needs a triangulated 2-sphere");
    }
    for (const auto& t : empty_simplices(l, 2)) {
        if (auto r = try_split(l, cycle_complex(t))) {
            r->source = "empty_triangle";
            return r;
        }
    }
    for (int v : l.vertices()) {
        if (auto r = try_split(l, link(l, v))) {
            r->source = "vertex_link";
            return r;
        }
    }
    for (const auto& c : induced_cycles(l, max_length)) {
        if (c.size() < 4) {
            continue;
        }
        if (auto r = try_split(l, cycle_complex(c))) {
            r->source = "induced_cycle";
            return r;
        }
    }
    return std::nullopt;
}

std::vector<EuclideanCircuit> euclidean_circuits(const SimplicialComplex& l, const SubsetClassifier& classifier,
                                                 int max_length) {
    std::vector<EuclideanCircuit> out;
    for (const auto& c : induced_cycles(l, max_length)) {
        SubgroupType type = classifier.classify(subset_of(c));
        if (type.kind == SubgroupKind::Euclidean) {
            out.push_back(EuclideanCircuit{c, type});
        }
    }
    return out;
}

} // namespace coxwl2
