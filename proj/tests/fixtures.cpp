#include "fixtures.hpp"

#include "coxwl2/label.hpp"

#include <string>

namespace fixtures {

using coxwl2::kInfinity;

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        names.push_back("s" + std::to_string(i + 1));
    }
    return names;
}

CoxeterMatrix from_labels(std::vector<std::vector<int>> m) {
    int n = static_cast<int>(m.size());
    return coxwl2::validate_matrix(default_names(n), m);
}

} // namespace

CoxeterMatrix right_angled(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, kInfinity));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    for (auto [a, b] : edges) {
        m[a][b] = m[b][a] = 2;
    }
    return from_labels(m);
}

CoxeterMatrix linear(const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size()) + 1;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    for (int i = 0; i + 1 < n; ++i) {
        m[i][i + 1] = m[i + 1][i] = labels[i];
    }
    return from_labels(m);
}

CoxeterMatrix triangle(int a, int b, int c) {
    return from_labels({{1, a, c}, {a, 1, b}, {c, b, 1}});
}

CoxeterMatrix dihedral(int m) { return from_labels({{1, m}, {m, 1}}); }

std::vector<std::pair<int, int>> icosahedron_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i) {
        int next = i % 5 + 1;
        e.emplace_back(0, i);
        e.emplace_back(i, next);
        e.emplace_back(i, 5 + i);
        e.emplace_back(i, 5 + next);
        e.emplace_back(5 + i, 5 + next);
        e.emplace_back(5 + i, 11);
    }
    return e;
}

std::vector<std::vector<int>> icosahedron_triangles() {
    std::vector<std::vector<int>> t;
    for (int i = 1; i <= 5; ++i) {
        int next = i % 5 + 1;
        t.push_back({0, i, next});
        t.push_back({i, 5 + i, 5 + next});
        t.push_back({i, next, 5 + next});
        t.push_back({5 + i, 5 + next, 11});
    }
    return t;
}

std::vector<std::pair<int, int>> cross_polytope_edges(int pairs) {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < 2 * pairs; ++a) {
        for (int b = a + 1; b < 2 * pairs; ++b) {
            if (b != a + pairs) {
                e.emplace_back(a, b);
            }
        }
    }
    return e;
}

CoxeterMatrix icosahedral() { return right_angled(12, icosahedron_edges()); }
CoxeterMatrix octahedral() { return right_angled(6, cross_polytope_edges(3)); }
CoxeterMatrix sixteen_cell() { return right_angled(8, cross_polytope_edges(4)); }

CoxeterMatrix suspension_333() {
    std::vector<std::vector<int>> m{{1, 3, 3, 2, 2},
                                    {3, 1, 3, 2, 2},
                                    {3, 3, 1, 2, 2},
                                    {2, 2, 2, 1, kInfinity},
                                    {2, 2, 2, kInfinity, 1}};
    return from_labels(m);
}

CoxeterMatrix lanner_435() { return linear({4, 3, 5}); }

CoxeterMatrix triangle_times_dinf(int a, int b, int c) {
    std::vector<std::vector<int>> m{{1, a, c, 2, 2},
                                    {a, 1, b, 2, 2},
                                    {c, b, 1, 2, 2},
                                    {2, 2, 2, 1, kInfinity},
                                    {2, 2, 2, kInfinity, 1}};
    return from_labels(m);
}

CoxeterMatrix affine_a3() { return from_labels({{1, 3, 2, 3}, {3, 1, 3, 2}, {2, 3, 1, 3}, {3, 2, 3, 1}}); }

SimplicialComplex complex_of(const std::vector<std::vector<int>>& faces) {
    return SimplicialComplex::from_faces(faces);
}

SimplicialComplex icosahedron_complex() { return complex_of(icosahedron_triangles()); }

SimplicialComplex cross_polytope_complex(int pairs) {
    std::vector<std::vector<int>> facets;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
        std::vector<int> f;
        for (int i = 0; i < pairs; ++i) {
            f.push_back(((mask >> i) & 1) ? i + pairs : i);
        }
        facets.push_back(f);
    }
    return complex_of(facets);
}

SimplicialComplex tetrahedron_boundary() { return complex_of({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

SimplicialComplex bipyramid() {
    return complex_of({{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
}

SimplicialComplex projective_plane() {
    return complex_of({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                       {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

SimplicialComplex torus() {
    std::vector<std::vector<int>> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return complex_of(t);
}

SimplicialComplex cycle(int n) {
    std::vector<std::vector<int>> e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
    }
    return complex_of(e);
}

} // namespace fixtures
