// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 when any criterion fails.

#include "fixtures.hpp"

#include "coxwl2/davis.hpp"
#include "coxwl2/errors.hpp"
#include "coxwl2/json_io.hpp"
#include "coxwl2/label.hpp"
#include "coxwl2/weighted.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace coxwl2;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no runtime bound
    std::function<void(Verdict&)> body;
};

struct CliRun {
    int exit = -1;
    std::string out;
};

CliRun cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + COXWL2_BINARY + std::string(" ") + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        r.out.append(buf, n);
    }
    int status = pclose(p);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(COXWL2_DATA) + "/" + name; }

std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(4) << x;
    return os.str();
}

Rational r(const char* t) { return parse_rational(t); }

// Block-diagonal matrix of irreducible pieces, label 2 between blocks.
CoxeterMatrix product(const std::vector<CoxeterMatrix>& pieces) {
    int n = 0;
    for (const auto& p : pieces) {
        n += p.rank();
    }
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
    int at = 0;
    for (const auto& p : pieces) {
        for (int i = 0; i < p.rank(); ++i) {
            for (int j = 0; j < p.rank(); ++j) {
                m[static_cast<std::size_t>(at + i)][static_cast<std::size_t>(at + j)] = p.label(i, j);
            }
        }
        at += p.rank();
    }
    return validate_matrix({}, m);
}

CoxeterMatrix d4() {
    return validate_matrix({}, {{1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}});
}

// Every finite Coxeter type of rank <= 4: products of irreducibles, with I2(m) sampled for m <= 12.
std::vector<CoxeterMatrix> finite_types_rank4() {
    std::vector<std::vector<CoxeterMatrix>> by_rank(5);
    by_rank[1].push_back(fixtures::right_angled(1, {}));
    for (int m = 3; m <= 12; ++m) {
        by_rank[2].push_back(fixtures::dihedral(m));
    }
    for (const auto& l : std::vector<std::vector<int>>{{3, 3}, {4, 3}, {5, 3}}) {
        by_rank[3].push_back(fixtures::linear(l));
    }
    for (const auto& l : std::vector<std::vector<int>>{{3, 3, 3}, {4, 3, 3}, {3, 4, 3}, {5, 3, 3}}) {
        by_rank[4].push_back(fixtures::linear(l));
    }
    by_rank[4].push_back(d4());
    std::vector<CoxeterMatrix> out;
    // multisets of irreducibles ordered by (rank, index) to avoid repeats
    std::function<void(std::vector<CoxeterMatrix>&, int, int, int)> grow = [&](std::vector<CoxeterMatrix>& acc,
                                                                               int rank_left, int min_rank,
                                                                               int min_index) {
        if (!acc.empty()) {
            out.push_back(product(acc));
        }
        for (int k = min_rank; k <= rank_left; ++k) {
            for (int i = k == min_rank ? min_index : 0; i < static_cast<int>(by_rank[k].size()); ++i) {
                acc.push_back(by_rank[k][static_cast<std::size_t>(i)]);
                grow(acc, rank_left - k, k, i);
                acc.pop_back();
            }
        }
    };
    std::vector<CoxeterMatrix> acc;
    grow(acc, 4, 1, 0);
    return out;
}

void lanner_census_check(Verdict& v) {
    CliRun one = cli("census", "COXWL2_THREADS=1");
    CliRun four = cli("census", "COXWL2_THREADS=4");
    v.require(one.exit == 0, "coxwl2 census exits 0");
    v.require(one.out == four.out, "output identical for 1 and 4 threads");
    Json doc = parse_json(one.out).at("result");
    v.require(doc.at("count") == 9, "count == 9");
    int ok = 0;
    for (const auto& d : doc.at("diagrams")) {
        CoxeterMatrix cm = matrix_from_json(d);
        SubsetClassifier c(cm);
        bool proper = true;
        for (Subset t = 1; t < cm.all(); ++t) {
            proper = proper && c.classify(t).spherical();
        }
        Signature s = c.classify(cm.all()).signature;
        if (proper && s.positive == 3 && s.negative == 1 && s.zero == 0) {
            ++ok;
        }
    }
    v.require(ok == 9, "every diagram has all proper subsets spherical and signature (3,1)");
    v.note("count " + doc.at("count").dump() + ", max label " + doc.at("max_label").dump());
}

void finite_orders_check(Verdict& v) {
    const std::vector<std::pair<CoxeterMatrix, long>> orders{{fixtures::linear({3, 3}), 24},
                                                             {fixtures::linear({4, 3}), 48},
                                                             {fixtures::linear({5, 3}), 120},
                                                             {fixtures::linear({5, 3, 3}), 14400}};
    for (const auto& [cm, n] : orders) {
        SubsetClassifier c(cm);
        auto ball = enumerate_finite(c, generator_classes(cm), cm.all());
        v.require(static_cast<long>(ball.elements.size()) == n, "|W| = " + std::to_string(n));
    }
    int checked = 0;
    for (const auto& cm : finite_types_rank4()) {
        SubsetClassifier c(cm);
        auto classes = generator_classes(cm);
        auto ball = enumerate_finite(c, classes, cm.all());
        auto p = growth_polynomial(c, classes, cm.all());
        v.require(p.invert_variables(ball.elements.back().multidegree) == p, "palindromic growth polynomial");
        ++checked;
    }
    v.note("orders 24, 48, 120, 14400; " + std::to_string(checked) + " finite types palindromic");
}

void growth_forms_check(Verdict& v) {
    auto q = MultiPoly::variable(1, 0);
    auto one = MultiPoly::constant(1, 1);
    auto wd = full_growth_series(SubsetClassifier(fixtures::dihedral(kInfinity)));
    v.require(uniform_specialization(wd.series) == MultiRat(one + q, one - q), "D_inf: (1+q)/(1-q)");
    auto wa = full_growth_series(SubsetClassifier(fixtures::dihedral(3)));
    v.require(wa.series == MultiRat(one + Rational(2) * q + Rational(2) * q * q + q * q * q), "A2: 1+2q+2q^2+q^3");
    auto wb = full_growth_series(SubsetClassifier(fixtures::dihedral(4)));
    auto s = MultiPoly::variable(2, 0);
    auto t = MultiPoly::variable(2, 1);
    auto one2 = MultiPoly::constant(2, 1);
    v.require(wb.series == MultiRat(one2 + s + t + Rational(2) * s * t + s * s * t + s * t * t + s * s * t * t),
              "B2: 1 + q_s + q_t + 2q_sq_t + q_s^2q_t + q_sq_t^2 + q_s^2q_t^2");

    const double tol = 1e-6;
    for (const auto& [name, cm] : std::vector<std::pair<std::string, CoxeterMatrix>>{
             {"D_inf", fixtures::dihedral(kInfinity)}, {"(2,3,7)", fixtures::triangle(2, 3, 7)}}) {
        SubsetClassifier c(cm);
        auto classes = generator_classes(cm);
        WeightVector w = WeightVector::uniform(classes, r("1/4"));
        Rational exact = evaluate(full_growth_series(c).series, w);
        BallSums b = ball_partial_sums(cm, classes, w, 14);
        const double gap12 = Rational(exact - b.partial_sums[12]).get_d();
        int first = -1;
        for (int k = 0; k <= 14 && first < 0; ++k) {
            if (Rational(exact - b.partial_sums[static_cast<std::size_t>(k)]).get_d() < tol) {
                first = k;
            }
        }
        // head of the power series of W along the ray must equal the ball sum S_12
        std::vector<Rational> ones(static_cast<std::size_t>(classes.count()), Rational(1));
        auto wf = full_growth_series(c).series;
        auto coeffs = power_series(wf.num().along_ray(ones), wf.den().along_ray(ones), 13);
        Rational head = 0, qk = 1;
        for (int k = 0; k <= 12; ++k) {
            head += coeffs[static_cast<std::size_t>(k)] * qk;
            qk /= 4;
        }
        v.require(head == b.partial_sums[12], name + " ball sum equals the power-series head");
        v.note(name + ": W(1/4) - S_12 = " + sci(gap12) + " (tolerance " + sci(tol) + "), first radius below " +
               std::to_string(first));
        v.require(gap12 < tol, name + " partial sum within 1e-6 by radius 12");
    }
}

void orbifold_check(Verdict& v) {
    CoxeterMatrix cm = fixtures::triangle(2, 3, 7);
    auto w = full_growth_series(SubsetClassifier(cm));
    WeightVector one = WeightVector::uniform(generator_classes(cm), r("1"));
    Rational chi = evaluate(MultiRat(w.series.den(), w.series.num()), one);
    // independent: F(1) = 1 - 3/2 + (1/4 + 1/6 + 1/14)
    Rational hand = r("1") - r("3/2") + r("1/4") + r("1/6") + r("1/14");
    v.require(chi == r("-1/84"), "1/W(1) = -1/84");
    v.require(hand == chi, "agrees with the hand sum");
    v.note("1/W(1) = " + to_string(chi));
}

void icosahedral_check(Verdict& v) {
    CoxeterAnalysis a(fixtures::icosahedral());
    v.require(a.topology().is_sphere(2) && a.topology().certified, "recognize = Sphere{2}");
    v.require(is_flag(a.nerve()), "flag");
    v.require(check_andreev(a).geometry == Geometry::H3, "Andreev verdict H3");

    WeightVector one = WeightVector::uniform(a.classes(), r("1"));
    RegionVerdict reg = region_membership(a.growth(), one);
    bool located = false;
    double width = 1;
    if (reg.s_star) {
        // 4 - sqrt(15) is the smaller root of t^2 - 8t + 1
        auto f = [](const Rational& t) { return Rational(t * t - 8 * t + 1); };
        const Rational lo = reg.s_star->lo, hi = reg.s_star->hi;
        width = Rational(hi - lo).get_d();
        located = f(lo) >= 0 && f(hi) <= 0 && hi < 1;
    }
    v.require(located, "smallest pole isolated around 4 - sqrt(15)");
    v.require(width < 1e-9, "interval width < 1e-9");
    v.note("pole interval width " + sci(width));

    BettiReport at1 = betti_vector(a, one);
    v.require(at1.chi && *at1.chi == 0, "chi_q(1) = 0");
    BettiReport half = betti_vector(a, WeightVector::uniform(a.classes(), r("1/2")));
    std::vector<std::optional<Rational>> want{Rational(0), r("11/27"), Rational(0), Rational(0)};
    v.require(half.betti == want, "betti(1/2) = (0, 11/27, 0, 0)");
    for (const char* q : {"1/3", "1/2", "2/3", "1", "3/2", "2", "3"}) {
        v.require(poincare_dual_check(a, WeightVector::uniform(a.classes(), r(q))),
                  std::string("duality at ") + q);
    }
}

void boundary_check(Verdict& v) {
    CoxeterAnalysis d(fixtures::dihedral(kInfinity));
    BettiReport bd = betti_vector(d, WeightVector::uniform(d.classes(), r("1")));
    v.require(bd.regimes == std::set<int>{0, 1}, "D_inf at 1: regimes {dim0, dim1}");
    v.require(bd.chi && *bd.chi == 0, "D_inf at 1: chi = 0");
    CoxeterAnalysis a(fixtures::icosahedral());
    BettiReport bi = betti_vector(a, WeightVector::uniform(a.classes(), r("1")));
    v.require(bi.regimes == std::set<int>{1, 2}, "icosahedral at 1: regimes {dim1, dim2}");
    bool zeros = bi.fully_resolved() && std::all_of(bi.betti.begin(), bi.betti.end(),
                                                    [](const auto& x) { return *x == 0; });
    v.require(zeros, "icosahedral at 1: all entries 0");
}

void kunneth_check(Verdict& v) {
    CoxeterAnalysis a(fixtures::octahedral());
    WeightVector q = WeightVector::uniform(a.classes(), r("1/2"));
    BettiReport direct = betti_vector(a, q);
    BettiReport product = product_betti(a, q);
    std::vector<std::optional<Rational>> want{r("1/27"), Rational(0), Rational(0), Rational(0)};
    v.require(direct.betti == want, "direct = (1/27, 0, 0, 0)");
    v.require(product.betti == want, "threefold kunneth = (1/27, 0, 0, 0)");
    v.note("factors: " + std::to_string(product_decomposition(a.matrix()).size()) + " copies of D_inf");
}

void gates_check(Verdict& v) {
    CoxeterAnalysis a(fixtures::sixteen_cell());
    ApplicabilityReport app = theorem_applicability(a);
    v.require(app.applies("flag_sphere3"), "16-cell passes the flag-S^3 gate");
    v.require(pseudomanifold_check(a.nerve()), "16-cell pseudomanifold_check");
    for (const char* q : {"1/10", "1/3", "1/2", "9/10"}) {
        BettiReport b = betti_vector(a, WeightVector::uniform(a.classes(), r(q)));
        bool vanish = b.betti.size() == 5 && b.betti[3] == Rational(0) && b.betti[4] == Rational(0);
        bool open = !b.betti[0] && !b.betti[1] && !b.betti[2];
        v.require(vanish, std::string("b3 = b4 = 0 at q = ") + q);
        v.require(open, std::string("dims 0-2 unresolved at q = ") + q);
    }
    BettiReport b1 = betti_vector(a, WeightVector::uniform(a.classes(), r("1")));
    v.require(b1.betti[3] == Rational(0) && b1.betti[4] == Rational(0) && !b1.betti[2], "q = 1: b3 = b4 = 0");
    v.note("at q = 1 the dual half also resolves b0 = b1 = 0");

    CliRun l = cli("verify -i " + data("lanner435.json"));
    v.require(l.exit == 2, "[4,3,5] verify exits 2");
    std::string reason = l.exit == 2 ? parse_json(l.out).at("result").at("reason").get<std::string>() : "";
    v.require(reason == "dual to hyperbolic 3-simplex", "reason \"dual to hyperbolic 3-simplex\"");
}

void davis_check(Verdict& v) {
    const std::vector<HomologyGroup> point{HomologyGroup{1, {}}};
    for (const auto& cm : {fixtures::dihedral(3), fixtures::dihedral(4), fixtures::linear({3, 3})}) {
        SubsetClassifier c(cm);
        CellComplexW s = build_sigma(c, cm.all());
        v.require(trimmed(smith_homology(s.order_complex(s.all_cells()))) == point, "Sigma(W) point homology");
    }
    int spheres = 0;
    int ruins = 0;
    for (const auto& cm : finite_types_rank4()) {
        if (cm.rank() > 3) {
            continue;
        }
        SubsetClassifier c(cm);
        for (Subset t : spherical_subsets(c).elements) {
            if (t == 0) {
                continue;
            }
            auto h = trimmed(smith_homology(cell_boundary(c, t)));
            const int k = subset_size(t) - 1;
            bool sphere = static_cast<int>(h.size()) == k + 1 && h[static_cast<std::size_t>(k)] == HomologyGroup{k == 0 ? 2 : 1, {}};
            for (int d = 1; d < k; ++d) {
                sphere = sphere && h[static_cast<std::size_t>(d)] == HomologyGroup{0, {}};
            }
            if (k > 0) {
                sphere = sphere && h[0] == HomologyGroup{1, {}};
            }
            v.require(sphere, "boundary of c_T is a homology sphere");
            ++spheres;
        }
        CellComplexW s = build_sigma(c, cm.all());
        for (Subset t : s.types) {
            Ruin ru = build_ruin(s, t);
            bool partition = true;
            for (int x : ru.omega) {
                bool above = (s.cells[static_cast<std::size_t>(x)].type & t) == t;
                bool below = std::binary_search(ru.boundary.begin(), ru.boundary.end(), x);
                partition = partition && above != below;
            }
            v.require(partition, "ruin cell partition");
            if (t == 0) {
                v.require(ru.omega == s.all_cells() && ru.boundary.empty(), "T = empty gives (Sigma(U), empty)");
            }
            ++ruins;
        }
    }
    v.note(std::to_string(spheres) + " cell boundaries, " + std::to_string(ruins) + " ruins");
}

void property_check(Verdict& v) {
    std::vector<SimplicialComplex> complexes{fixtures::icosahedron_complex(), fixtures::bipyramid(),
                                             fixtures::cross_polytope_complex(3), fixtures::cross_polytope_complex(4),
                                             fixtures::torus(), fixtures::projective_plane()};
    std::mt19937 rng(2026);
    for (const auto& l : complexes) {
        TopologyVerdict base = recognize(l);
        const int n = l.vertices().back() + 1;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            TopologyVerdict x = recognize(l.relabeled(perm));
            v.require(x.kind == base.kind && x.dim == base.dim && x.certified == base.certified &&
                          x.euler == base.euler && x.homology == base.homology,
                      "recognize invariant under relabeling");
        }
    }
    for (const auto& l : {fixtures::icosahedron_complex(), fixtures::bipyramid()}) {
        auto s = separating_sphere_search(l);
        bool ok = s && is_full(l, s->m) && recognize(s->m).kind == TopologyKind::Circle && is_full(l, s->l1) &&
                  is_full(l, s->l2) && recognize(s->l1).is_disk(2) && recognize(s->l2).is_disk(2) &&
                  boundary_complex(s->l1) == s->m && boundary_complex(s->l2) == s->m &&
                  complex_union(s->l1, s->l2) == l && complex_intersection(s->l1, s->l2) == s->m;
        v.require(ok, "separating_sphere_search postconditions");
    }
    long elements = 0;
    for (const auto& cm : {fixtures::icosahedral(), fixtures::triangle(2, 3, 7), fixtures::suspension_333(),
                           fixtures::lanner_435(), fixtures::linear({5, 3, 3}), fixtures::dihedral(kInfinity)}) {
        auto classes = generator_classes(cm);
        CayleyBall b = SubsetClassifier(cm).classify(cm.all()).spherical()
                           ? enumerate_finite(SubsetClassifier(cm), classes, cm.all())
                           : enumerate_ball(cm, classes, cm.all(), cm.rank() > 6 ? 4 : 8);
        for (const auto& e : b.elements) {
            std::vector<int> from_word(static_cast<std::size_t>(classes.count()), 0);
            for (int g : e.word) {
                ++from_word[static_cast<std::size_t>(classes.class_of[static_cast<std::size_t>(g)])];
            }
            v.require(from_word == e.multidegree && static_cast<int>(e.word.size()) == e.length,
                      "multidegree equals the class count of a reduced word");
        }
        elements += static_cast<long>(b.elements.size());
    }
    v.note(std::to_string(elements) + " enumerated elements checked");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Lanner census", 60, lanner_census_check},
        {2, "finite orders and palindromic growth", 120, finite_orders_check},
        {3, "growth closed forms and ball sums at q = 1/4", 0, growth_forms_check},
        {4, "(2,3,7) orbifold Euler characteristic", 0, orbifold_check},
        {5, "icosahedral suite", 0, icosahedral_check},
        {6, "regime boundary coherence", 0, boundary_check},
        {7, "Kunneth cross-check", 0, kunneth_check},
        {8, "four-dimensional and Lanner gates", 0, gates_check},
        {9, "Davis-complex validation", 0, davis_check},
        {10, "property suites", 0, property_check}};
    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(v);
        } catch (const Error& e) {
            v.require(false, "threw " + e.qualified_code() + ": " + e.what());
        } catch (const std::exception& e) {
            v.require(false, std::string("threw ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            v.require(false, "runtime within " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        }
        std::ostringstream line;
        line << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << std::fixed
             << std::setprecision(2) << secs << " s";
        if (c.limit_seconds > 0) {
            line << " < " << static_cast<int>(c.limit_seconds) << " s";
        }
        line << "]";
        // repeated notes collapse to one
        std::vector<std::string> shown;
        for (const auto& n : v.notes) {
            if (std::find(shown.begin(), shown.end(), n) == shown.end()) {
                shown.push_back(n);
            }
        }
        for (const auto& n : shown) {
            line << "; " << n;
        }
        std::cout << line.str() << std::endl;
        failed += v.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " criterion(s) FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
