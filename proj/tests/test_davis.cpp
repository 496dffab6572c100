#include "doctest.h"
#include "fixtures.hpp"

#include "coxwl2/davis.hpp"
#include "coxwl2/errors.hpp"
#include "coxwl2/label.hpp"

#include <map>
#include <numeric>
#include <set>

using namespace coxwl2;

namespace {

HomologyGroup z(int rank) { return HomologyGroup{rank, {}}; }

std::vector<HomologyGroup> point() { return {z(1)}; }

std::vector<HomologyGroup> sphere(int k) {
    std::vector<HomologyGroup> h(static_cast<std::size_t>(k + 1), z(0));
    if (k == 0) {
        h[0] = z(2);
    } else {
        h[0] = z(1);
        h[static_cast<std::size_t>(k)] = z(1);
    }
    return h;
}

long cells_of_type(const CellComplexW& s, Subset t) {
    return std::count_if(s.cells.begin(), s.cells.end(), [&](const Cell& c) { return c.type == t; });
}

long order_of(const SubsetClassifier& c, Subset t) { return c.classify(t).order.get_si(); }

std::vector<CoxeterMatrix> finite_examples() {
    return {fixtures::dihedral(3), fixtures::dihedral(4), fixtures::dihedral(5), fixtures::linear({3, 3}),
            fixtures::linear({4, 3}), fixtures::linear({5, 3}), fixtures::linear({2, 2})};
}

// Length of the longest element over spherical T containing t.
int longest_through(const SubsetClassifier& c, int t) {
    GeneratorClasses classes = generator_classes(c.matrix());
    int best = 0;
    for (Subset u : spherical_subsets(c).elements) {
        if (subset_contains(u, t)) {
            best = std::max(best, enumerate_finite(c, classes, u).elements.back().length);
        }
    }
    return best;
}

} // namespace

TEST_CASE("chamber is a cone over the spherical poset") {
    SubsetClassifier dinf(fixtures::dihedral(kInfinity));
    Chamber d = build_chamber(spherical_subsets(dinf));
    CHECK(d.complex.f_vector() == std::vector<long>{3, 2});

    SubsetClassifier a2(fixtures::dihedral(3));
    Chamber c = build_chamber(spherical_subsets(a2));
    CHECK(c.complex.f_vector() == std::vector<long>{4, 5, 2});

    for (const auto& cm : {fixtures::dihedral(kInfinity), fixtures::linear({3, 3}), fixtures::icosahedral(),
                           fixtures::suspension_333(), fixtures::lanner_435()}) {
        SubsetClassifier cl(cm);
        SphericalPoset p = spherical_subsets(cl);
        Chamber ch = build_chamber(p);
        CHECK(trimmed(smith_homology(ch.complex)) == point());
        for (Subset t : p.elements) {
            CHECK(trimmed(smith_homology(ch.face(t))) == point());
        }
        CHECK(ch.face(0) == ch.complex);
    }
}

TEST_CASE("sigma of small finite groups") {
    SubsetClassifier a2(fixtures::dihedral(3));
    CellComplexW edge = build_sigma(a2, singleton(0));
    CHECK(cells_of_type(edge, 0) == 2);
    CHECK(cells_of_type(edge, singleton(0)) == 1);
    CHECK(edge.cells.size() == 3);

    CellComplexW hex = build_sigma(a2, a2.matrix().all());
    CHECK_FALSE(hex.partial);
    CHECK(cells_of_type(hex, 0) == 6);
    CHECK(cells_of_type(hex, singleton(0)) + cells_of_type(hex, singleton(1)) == 6);
    CHECK(cells_of_type(hex, 3) == 1);
    CHECK(euler_characteristic(hex.order_complex(hex.all_cells())) == 1);

    SubsetClassifier b2(fixtures::dihedral(4));
    SimplicialComplex octagon = cell_boundary(b2, b2.matrix().all());
    CHECK(octagon.f_vector() == std::vector<long>{16, 16});
    CHECK(trimmed(smith_homology(octagon)) == sphere(1));
}

TEST_CASE("sigma of a finite group has the homology of a point") {
    for (const auto& cm : finite_examples()) {
        SubsetClassifier c(cm);
        CellComplexW s = build_sigma(c, cm.all());
        CHECK(trimmed(smith_homology(s.order_complex(s.all_cells()))) == point());
    }
}

TEST_CASE("cell counts are subgroup indices") {
    for (const auto& cm : finite_examples()) {
        SubsetClassifier c(cm);
        CellComplexW s = build_sigma(c, cm.all());
        const long n = order_of(c, cm.all());
        CHECK(static_cast<long>(s.ball.elements.size()) == n);
        for (Subset t : s.types) {
            CHECK(cells_of_type(s, t) == n / order_of(c, t));
        }
    }
}

TEST_CASE("boundary of a Coxeter cell is a sphere") {
    std::vector<CoxeterMatrix> cases = finite_examples();
    cases.push_back(fixtures::icosahedral());
    cases.push_back(fixtures::lanner_435());
    for (const auto& cm : cases) {
        SubsetClassifier c(cm);
        for (Subset t : spherical_subsets(c).elements) {
            if (t == 0 || subset_size(t) > 3) {
                continue;
            }
            CHECK(trimmed(smith_homology(cell_boundary(c, t))) == sphere(subset_size(t) - 1));
        }
    }
}

TEST_CASE("cell faces are the cosets of smaller types inside") {
    SubsetClassifier a3(fixtures::linear({3, 3}));
    CellComplexW s = build_sigma(a3, a3.matrix().all());
    for (int c = 0; c < static_cast<int>(s.cells.size()); ++c) {
        const std::set<int> mine(s.cells[c].elements.begin(), s.cells[c].elements.end());
        for (int f : s.closure({c})) {
            CHECK(s.is_face(f, c));
            CHECK((s.cells[f].type & s.cells[c].type) == s.cells[f].type);
            for (int e : s.cells[f].elements) {
                CHECK(mine.count(e) == 1);
            }
        }
        for (int up : s.covers(c)) {
            CHECK(subset_size(s.cells[up].type) == subset_size(s.cells[c].type) + 1);
            CHECK(s.is_face(c, up));
        }
    }
}

TEST_CASE("ruin invariants") {
    for (const auto& cm : finite_examples()) {
        SubsetClassifier c(cm);
        CellComplexW s = build_sigma(c, cm.all());
        for (Subset t : s.types) {
            Ruin r = build_ruin(s, t);
            std::set<int> omega(r.omega.begin(), r.omega.end());
            for (int b : r.boundary) {
                CHECK(omega.count(b) == 1);
            }
            for (int x : r.omega) {
                bool above = (s.cells[x].type & t) == t;
                bool in_boundary = std::binary_search(r.boundary.begin(), r.boundary.end(), x);
                CHECK(above != in_boundary);
            }
            CHECK(is_subcomplex(r.omega_complex, r.boundary_complex));
            auto rel = smith_homology(r.omega_complex, r.boundary_complex);
            long alt = 0;
            for (std::size_t k = 0; k < rel.size(); ++k) {
                alt += (k % 2 == 0 ? 1 : -1) * rel[k].rank;
            }
            CHECK(alt == euler_characteristic(r.omega_complex) - euler_characteristic(r.boundary_complex));
            if (t == 0) {
                CHECK(r.omega == s.all_cells());
                CHECK(r.boundary.empty());
            }
            if (t == cm.all()) {
                // the top cell relative to its boundary sphere
                auto h = trimmed(rel);
                REQUIRE(static_cast<int>(h.size()) == subset_size(t) + 1);
                CHECK(h.back() == z(1));
            }
        }
    }
}

TEST_CASE("ruin of the hexagon at one generator") {
    SubsetClassifier a2(fixtures::dihedral(3));
    CellComplexW s = build_sigma(a2, a2.matrix().all());
    Ruin r = build_ruin(s, singleton(0));
    CHECK(r.omega.size() == 13);
    CHECK(r.boundary.size() == 9);
    std::map<Subset, int> boundary_types;
    for (int b : r.boundary) {
        ++boundary_types[s.cells[b].type];
    }
    CHECK(boundary_types == std::map<Subset, int>{{0, 6}, {singleton(1), 3}});
    // three disjoint arcs in a disk
    CHECK(trimmed(smith_homology(r.omega_complex, r.boundary_complex)) ==
          std::vector<HomologyGroup>{z(0), z(2)});

    try {
        SubsetClassifier dinf(fixtures::dihedral(kInfinity));
        CellComplexW line = build_sigma(dinf, dinf.matrix().all(), 3);
        build_ruin(line, 3);
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.qualified_code() == "davis.NotSpherical");
    }
}

TEST_CASE("star identity on truncated balls") {
    struct Case {
        CoxeterMatrix cm;
        int t;
        int radius;
    };
    std::vector<Case> cases{{fixtures::triangle(3, 3, kInfinity), 0, 9},
                            {fixtures::triangle_times_dinf(2, 3, 7), 3, 11},
                            {fixtures::icosahedral(), 0, 5}};
    for (const auto& [cm, t, radius] : cases) {
        SubsetClassifier c(cm);
        Subset star = 0;
        for (int s = 0; s < cm.rank(); ++s) {
            if (is_finite_label(cm.label(s, t))) {
                star |= singleton(s);
            }
        }
        REQUIRE(star != cm.all());
        const int inner = radius - longest_through(c, t);
        REQUIRE(inner >= 2);

        CellComplexW whole = build_sigma(c, cm.all(), radius);
        CHECK(whole.partial);
        Ruin big = build_ruin(whole, singleton(t));

        // component of the identity vertex, joined through shared vertices
        std::vector<int> parent(whole.ball.elements.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                x = parent[x] = parent[parent[x]];
            }
            return x;
        };
        for (int x : big.omega) {
            const auto& el = whole.cells[x].elements;
            for (int e : el) {
                parent[find(e)] = find(el.front());
            }
        }
        auto inside = [&](const Cell& cell) {
            return std::all_of(cell.elements.begin(), cell.elements.end(),
                               [&](int e) { return whole.ball.elements[e].length <= inner; });
        };
        std::set<std::pair<Subset, std::vector<int>>> from_whole;
        for (int x : big.omega) {
            const Cell& cell = whole.cells[x];
            if (inside(cell) && find(cell.elements.front()) == find(0)) {
                from_whole.emplace(cell.type, cell.elements);
            }
        }

        CellComplexW local = build_sigma(c, star, radius);
        Ruin small = build_ruin(local, singleton(t));
        std::map<int, int> column;
        for (int k = 0; k < static_cast<int>(whole.ball.gens.size()); ++k) {
            column[whole.ball.gens[k]] = k;
        }
        std::vector<int> image(local.ball.elements.size());
        for (std::size_t e = 0; e < image.size(); ++e) {
            int at = 0;
            for (int g : local.ball.elements[e].word) {
                at = whole.ball.table[at][column.at(g)];
            }
            image[e] = at;
        }
        std::set<std::pair<Subset, std::vector<int>>> from_star;
        for (int x : small.omega) {
            Cell cell = local.cells[x];
            for (int& e : cell.elements) {
                e = image[e];
            }
            std::sort(cell.elements.begin(), cell.elements.end());
            if (inside(cell)) {
                from_star.emplace(cell.type, cell.elements);
            }
        }
        CHECK(!from_star.empty());
        CHECK(from_whole == from_star);
    }
}

TEST_CASE("pseudomanifold check") {
    SimplicialComplex sixteen = fixtures::cross_polytope_complex(4);
    CHECK(pseudomanifold_check(sixteen));
    CHECK_FALSE(pseudomanifold_check(fixtures::complex_of({{0, 1, 2, 3}})));
    std::vector<Simplex> two;
    for (const Simplex& f : sixteen.maximal_faces()) {
        two.push_back(f);
        Simplex g = f;
        for (int& v : g) {
            v += 8;
        }
        two.push_back(g);
    }
    CHECK(pseudomanifold_check(SimplicialComplex::from_faces(two)));
    SubsetClassifier c(fixtures::sixteen_cell());
    CHECK(pseudomanifold_check(nerve(spherical_subsets(c))));
}
