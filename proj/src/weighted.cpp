#include "coxwl2/weighted.hpp"

#include "coxwl2/davis.hpp"
#include "coxwl2/errors.hpp"
#include "coxwl2/label.hpp"

#include <algorithm>

namespace coxwl2 {

namespace {

std::string join_names(const CoxeterMatrix& cm, Subset t) {
    std::string out;
    for (const auto& n : cm.names_of(t)) {
        out += (out.empty() ? "" : ",") + n;
    }
    return out;
}

bool commute(const CoxeterMatrix& cm, Subset a, Subset b) {
    for (int s : subset_members(a)) {
        for (int t : subset_members(b)) {
            if (cm.label(s, t) != 2) {
                return false;
            }
        }
    }
    return true;
}

bool is_tetrahedron_boundary(const SimplicialComplex& l) { return l.f_vector() == std::vector<long>{4, 6, 4}; }

} // namespace

// ------------------------------------------------------------ CoxeterAnalysis

CoxeterAnalysis::CoxeterAnalysis(const CoxeterMatrix& cm, const AnalysisOptions& options)
    : options_(options),
      classifier_(std::make_unique<SubsetClassifier>(cm, options.growth.enumeration.max_bits)),
      poset_(spherical_subsets(*classifier_, options.growth.lattice_cap)),
      nerve_(coxwl2::nerve(poset_)),
      classes_(generator_classes(cm)) {
    if (nerve_.dimension() <= 3) {
        topology_ = recognize(nerve_);
    } else {
        topology_.dim = nerve_.dimension();
        topology_.euler = euler_characteristic(nerve_);
        topology_.checks.push_back("dimension above 3; not recognized");
    }
}

const GrowthSeries& CoxeterAnalysis::growth() const {
    if (!growth_) {
        growth_ = std::make_unique<GrowthSeries>(full_growth_series(*classifier_, options_.growth));
    }
    return *growth_;
}

std::string to_string(Applies a) {
    switch (a) {
    case Applies::Yes:
        return "yes";
    case Applies::No:
        return "no";
    case Applies::Conditional:
        return "conditional";
    }
    return "no";
}

std::string to_string(Geometry g) {
    switch (g) {
    case Geometry::H3:
        return "H3";
    case Geometry::R3:
        return "R3";
    case Geometry::H2xR:
        return "H2xR";
    case Geometry::ExcludedLanner:
        return "excluded-Lanner";
    case Geometry::Undetermined:
        return "undetermined";
    }
    return "undetermined";
}

std::string to_string(GeometryCase c) {
    switch (c) {
    case GeometryCase::None:
        return "none";
    case GeometryCase::CaseI:
        return "I";
    case GeometryCase::CaseII:
        return "II";
    case GeometryCase::CaseIII:
        return "III";
    }
    return "none";
}

// ------------------------------------------------------------ Andreev

std::optional<Subset> smallest_euclidean_subset(const SubsetClassifier& classifier, const SphericalPoset& poset) {
    const CoxeterMatrix& cm = classifier.matrix();
    // irreducible affine subsets are exactly the affine minimal non-spherical ones
    std::vector<Subset> pieces;
    for (Subset t : poset.minimal_nonspherical) {
        if (subset_size(t) == 2) {
            auto m = subset_members(t);
            if (cm.label(m[0], m[1]) == kInfinity) {
                pieces.push_back(t);
            }
        } else if (classifier.classify(t).kind == SubgroupKind::Euclidean) {
            pieces.push_back(t);
        }
    }
    std::optional<Subset> best;
    auto offer = [&](Subset t) {
        if (!best || subset_size(t) < subset_size(*best) ||
            (subset_size(t) == subset_size(*best) && subset_less(t, *best))) {
            best = t;
        }
    };
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (subset_size(pieces[i]) >= 3) {
            offer(pieces[i]);
        }
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            if ((pieces[i] & pieces[j]) == 0 && commute(cm, pieces[i], pieces[j])) {
                offer(pieces[i] | pieces[j]);
            }
        }
    }
    return best;
}

AndreevVerdict check_andreev(const CoxeterAnalysis& a) {
    if (!a.topology().is_sphere(2)) {
        throw Error("weighted", "PreconditionFailed", "Andreev check needs a 2-sphere nerve");
    }
    const CoxeterMatrix& cm = a.matrix();
    AndreevVerdict v;
    v.factors = product_decomposition(cm);
    const SubgroupType whole = a.classifier().classify(cm.all());
    if (is_tetrahedron_boundary(a.nerve())) {
        v.geometry_case = GeometryCase::CaseIII;
        if (whole.kind == SubgroupKind::Lanner) {
            v.geometry = Geometry::ExcludedLanner;
            v.notes.push_back(kLannerExclusion);
        } else {
            v.geometry = Geometry::R3;
            v.notes.push_back("nerve is the boundary of a 3-simplex and W is Euclidean");
        }
        return v;
    }
    v.euclidean_witness = smallest_euclidean_subset(a.classifier(), a.poset());
    if (v.euclidean_witness) {
        v.geometry_case = GeometryCase::CaseI;
        v.notes.push_back("Euclidean special subgroup on " + join_names(cm, *v.euclidean_witness));
        v.geometry = whole.kind == SubgroupKind::Euclidean ? Geometry::R3 : Geometry::Undetermined;
        return v;
    }
    if (v.factors.size() == 2) {
        for (int i = 0; i < 2; ++i) {
            Subset t = v.factors[static_cast<std::size_t>(i)];
            Subset d = v.factors[static_cast<std::size_t>(1 - i)];
            if (subset_size(t) != 3 || subset_size(d) != 2) {
                continue;
            }
            auto dm = subset_members(d);
            auto tm = subset_members(t);
            bool dinf = cm.label(dm[0], dm[1]) == kInfinity;
            bool empty = !a.nerve().contains(tm) && a.nerve().adjacent(tm[0], tm[1]) &&
                         a.nerve().adjacent(tm[1], tm[2]) && a.nerve().adjacent(tm[0], tm[2]);
            if (dinf && empty) {
                v.geometry_case = GeometryCase::CaseII;
                v.empty_triangle = t;
                v.geometry = Geometry::H2xR;
                v.notes.push_back("W = W_T x D_inf with T = " + join_names(cm, t) + " a hyperbolic triangle group");
                return v;
            }
        }
    }
    v.geometry = Geometry::H3;
    return v;
}

// ------------------------------------------------------------ applicability

const TheoremRecord* ApplicabilityReport::find(const std::string& id) const {
    for (const auto& t : theorems) {
        if (t.id == id) {
            return &t;
        }
    }
    return nullptr;
}

bool ApplicabilityReport::applies(const std::string& id) const {
    const TheoremRecord* t = find(id);
    return t != nullptr && t->applies != Applies::No;
}

const TheoremRecord* ApplicabilityReport::authorizing() const {
    for (const auto& t : theorems) {
        if (t.applies != Applies::No) {
            return &t;
        }
    }
    return nullptr;
}

ApplicabilityReport theorem_applicability(const CoxeterAnalysis& a) {
    const CoxeterMatrix& cm = a.matrix();
    const SimplicialComplex& l = a.nerve();
    const TopologyVerdict& top = a.topology();
    ApplicabilityReport r;
    r.n = l.dimension() + 1;
    r.flag = is_flag(l);
    r.tetrahedron_boundary = is_tetrahedron_boundary(l);
    r.lanner = a.classifier().classify(cm.all()).kind == SubgroupKind::Lanner;
    r.pseudomanifold = l.dimension() == 3 && pseudomanifold_check(l);
    const std::string uncertified = "3-sphere recognition rests on necessary conditions (manifold links, homology)";

    TheoremRecord low{"low_dim", Applies::No, "", {}, {}};
    if (top.is_sphere(0)) {
        low.applies = Applies::Yes;
        low.reason = "nerve is S^0";
    } else if (top.is_sphere(1)) {
        low.applies = Applies::Yes;
        low.reason = "nerve is a circle";
    } else {
        low.reason = "nerve is not S^0 or S^1";
    }
    r.theorems.push_back(low);

    TheoremRecord t1{"singer_dim3", Applies::No, "", {}, {}};
    if (!top.is_sphere(2)) {
        t1.reason = "nerve is not a triangulated 2-sphere";
    } else if (r.tetrahedron_boundary && r.lanner) {
        t1.reason = kLannerExclusion;
    } else {
        t1.applies = Applies::Yes;
        t1.reason = "nerve is a 2-sphere not dual to a hyperbolic 3-simplex";
        r.andreev = check_andreev(a);
        t1.witnesses.push_back("geometry " + to_string(r.andreev->geometry) + ", case " +
                               to_string(r.andreev->geometry_case));
        r.separating = separating_sphere_search(l, a.options().circuit_length);
        if (r.separating) {
            std::string c;
            for (int v : r.separating->cycle) {
                c += (c.empty() ? "" : ",") + cm.name(v);
            }
            t1.witnesses.push_back("separating circle " + c + " (" + r.separating->source + ")");
        }
    }
    r.theorems.push_back(t1);

    TheoremRecord t2{"singer_dim4_full_link", Applies::No, "", {}, {}};
    if (!top.is_sphere(3)) {
        t2.reason = "nerve is not a 3-sphere";
    } else {
        for (int v : l.vertices()) {
            SimplicialComplex lk = link(l, v);
            if (!is_full(l, lk)) {
                continue;
            }
            bool lanner_dual = is_tetrahedron_boundary(lk) &&
                               a.classifier().classify(subset_of(lk.vertices())).kind == SubgroupKind::Lanner;
            if (lanner_dual) {
                continue;
            }
            t2.applies = Applies::Yes;
            t2.reason = "a vertex link is full and not dual to a hyperbolic 3-simplex";
            t2.witnesses.push_back("link of " + cm.name(v) +
                                   ": full subcomplex of L and not dual to a hyperbolic 3-simplex");
            t2.caveats.push_back(uncertified);
            break;
        }
        if (t2.applies == Applies::No) {
            t2.reason = "no vertex link is full and not dual to a hyperbolic 3-simplex";
        }
    }
    r.theorems.push_back(t2);

    TheoremRecord cor{"flag_sphere3", Applies::No, "", {}, {}};
    if (top.is_sphere(3) && r.flag) {
        cor.applies = Applies::Yes;
        cor.reason = "flag triangulation of S^3";
        cor.witnesses.push_back("flag complex");
        cor.witnesses.push_back("every vertex link is full and not the boundary of a 3-simplex");
        cor.caveats.push_back(uncertified);
    } else {
        cor.reason = top.is_sphere(3) ? "nerve is not flag" : "nerve is not a 3-sphere";
    }
    r.theorems.push_back(cor);

    TheoremRecord t3{"flag_3manifold", Applies::No, "", {}, {}};
    const bool manifold3 = top.is_sphere(3) || top.kind == TopologyKind::Closed3Manifold;
    if (manifold3 && r.flag) {
        t3.applies = Applies::Yes;
        t3.reason = "flag triangulation of a closed 3-manifold";
        t3.witnesses.push_back(r.pseudomanifold ? "pseudomanifold check passed" : "pseudomanifold check failed");
    } else {
        t3.reason = manifold3 ? "nerve is not flag" : "nerve is not a closed 3-manifold";
    }
    r.theorems.push_back(t3);

    TheoremRecord disk{"disk_nerve", Applies::No, "", {}, {}};
    if (top.is_disk(2) || top.is_disk(3)) {
        disk.applies = Applies::Yes;
        disk.reason = "nerve is a " + std::to_string(top.dim) + "-disk";
        if (!top.certified) {
            disk.caveats.push_back("3-disk recognition rests on necessary conditions (boundary sphere, homology)");
        }
    } else {
        disk.reason = "nerve is not a 2- or 3-disk";
    }
    r.theorems.push_back(disk);
    return r;
}

// ------------------------------------------------------------ regimes

namespace {

bool in_closure(const RegionVerdict& v) { return v.region != Region::Outside; }

} // namespace

RegimeReport classify_regime(const CoxeterAnalysis& a, const WeightVector& q) {
    if (q.size() != a.classes().count()) {
        throw Error("weighted", "WeightShape",
                    "expected " + std::to_string(a.classes().count()) + " class weights, got " +
                        std::to_string(q.size()));
    }
    ApplicabilityReport app = theorem_applicability(a);
    const TheoremRecord* auth = app.authorizing();
    if (auth == nullptr) {
        const TheoremRecord* t1 = app.find("singer_dim3");
        std::string why = (app.tetrahedron_boundary && app.lanner) ? t1->reason : "no theorem applies to this nerve";
        throw Error("weighted", "PreconditionFailed", why);
    }
    RegimeReport r;
    r.n = app.n;
    r.authorized_by = auth->id;
    const GrowthSeries& w = a.growth();
    r.at_q = region_membership(w, q);
    r.at_inverse = region_membership(w, q.inverse());
    const bool le = q.leq_one();
    const bool ge = q.geq_one();
    if (auth->id == "low_dim" || auth->id == "singer_dim3") {
        const int n = r.n;
        if (in_closure(r.at_q)) {
            r.regimes.insert(0);
        }
        if (in_closure(r.at_inverse)) {
            r.regimes.insert(n);
        }
        if (n == 2) {
            if ((r.at_q.region == Region::Outside && le) || (r.at_inverse.region == Region::Outside && ge)) {
                r.regimes.insert(1);
            }
        } else if (n == 3) {
            if (r.at_q.region == Region::Outside && le) {
                r.regimes.insert(1);
            }
            if (r.at_inverse.region == Region::Outside && ge) {
                r.regimes.insert(2);
            }
        }
    }
    return r;
}

bool BettiReport::fully_resolved() const {
    return std::all_of(betti.begin(), betti.end(), [](const auto& b) { return b.has_value(); });
}

BettiReport betti_vector(const CoxeterAnalysis& a, const WeightVector& q) {
    RegimeReport rr = classify_regime(a, q);
    BettiReport b;
    b.n = rr.n;
    b.authorized_by = rr.authorized_by;
    b.regimes = rr.regimes;
    const GrowthSeries& w = a.growth();
    b.chi = evaluate(MultiRat(w.series.den(), w.series.num()), q);
    b.betti.assign(static_cast<std::size_t>(b.n + 1), std::nullopt);
    const Rational& chi = *b.chi;
    if (rr.authorized_by == "low_dim" || rr.authorized_by == "singer_dim3") {
        b.derivation = "b_k = (-1)^k chi_q in the concentration degree k, chi_q = 1/W(q)";
        if (rr.regimes.size() == 1) {
            const int k = *rr.regimes.begin();
            Rational value = (k % 2 == 0) ? chi : Rational(-chi);
            if (value < 0) {
                throw Error("weighted", "SignViolation",
                            "(-1)^k chi_q is negative in regime dim" + std::to_string(k));
            }
            for (int d = 0; d <= b.n; ++d) {
                b.betti[static_cast<std::size_t>(d)] = d == k ? value : Rational(0);
            }
            b.classified = true;
        } else if (rr.regimes.size() > 1) {
            if (chi != 0) {
                throw Error("weighted", "BoundaryIncoherence", "several regimes hold but chi_q is nonzero");
            }
            for (auto& x : b.betti) {
                x = Rational(0);
            }
            b.classified = true;
        }
    } else if (rr.authorized_by == "disk_nerve") {
        b.derivation = "vanishing for k > dim L / 2 when q <= 1";
        if (q.leq_one()) {
            const int d = b.n - 1;
            for (int k = 0; k <= b.n; ++k) {
                if (2 * k > d) {
                    b.betti[static_cast<std::size_t>(k)] = Rational(0);
                }
            }
            b.classified = true;
        }
    } else {
        // four-dimensional theorems: vanishing above 2 for q <= 1, dual statement for q >= 1
        b.derivation = "vanishing for k > 2 when q <= 1, and for k < 2 when q >= 1 by duality";
        if (q.leq_one()) {
            b.betti[3] = Rational(0);
            b.betti[4] = Rational(0);
        }
        if (q.geq_one()) {
            b.betti[0] = Rational(0);
            b.betti[1] = Rational(0);
        }
        b.classified = q.leq_one() || q.geq_one();
    }
    b.regime = rr;
    return b;
}

bool poincare_dual_check(const CoxeterAnalysis& a, const WeightVector& q) {
    BettiReport x = betti_vector(a, q);
    BettiReport y = betti_vector(a, q.inverse());
    if (x.n != y.n) {
        return false;
    }
    std::set<int> mirrored;
    for (int k : x.regimes) {
        mirrored.insert(x.n - k);
    }
    if (mirrored != y.regimes) {
        return false;
    }
    for (int k = 0; k <= x.n; ++k) {
        const auto& u = x.betti[static_cast<std::size_t>(k)];
        const auto& v = y.betti[static_cast<std::size_t>(x.n - k)];
        if (u && v && *u != *v) {
            return false;
        }
    }
    return true;
}

BettiReport kunneth(const BettiReport& a, const BettiReport& b) {
    if (!a.fully_resolved() || !b.fully_resolved() || !a.chi || !b.chi) {
        throw Error("weighted", "UnresolvedInput", "Kunneth convolution needs fully resolved Betti vectors");
    }
    BettiReport out;
    out.n = a.n + b.n;
    out.betti.assign(static_cast<std::size_t>(out.n + 1), Rational(0));
    for (int i = 0; i <= a.n; ++i) {
        for (int j = 0; j <= b.n; ++j) {
            *out.betti[static_cast<std::size_t>(i + j)] +=
                *a.betti[static_cast<std::size_t>(i)] * *b.betti[static_cast<std::size_t>(j)];
        }
    }
    for (int i : a.regimes) {
        for (int j : b.regimes) {
            out.regimes.insert(i + j);
        }
    }
    out.chi = *a.chi * *b.chi;
    out.authorized_by = "kunneth(" + a.authorized_by + ", " + b.authorized_by + ")";
    out.derivation = "degree-wise convolution of the factor vectors";
    out.classified = a.classified && b.classified;
    return out;
}

WeightVector restrict_weights(const GeneratorClasses& classes, const WeightVector& q, const CoxeterMatrix& sub,
                              Subset t) {
    auto per_gen = q.per_generator(classes);
    std::vector<Rational> picked;
    for (int s : subset_members(t)) {
        picked.push_back(per_gen[static_cast<std::size_t>(s)]);
    }
    return WeightVector::from_generators(generator_classes(sub), picked);
}

BettiReport product_betti(const CoxeterAnalysis& a, const WeightVector& q) {
    auto factors = product_decomposition(a.matrix());
    if (factors.size() < 2) {
        return betti_vector(a, q);
    }
    std::optional<BettiReport> acc;
    for (Subset t : factors) {
        CoxeterMatrix sub = a.matrix().restrict(t);
        CoxeterAnalysis fa(sub, a.options());
        BettiReport fb = betti_vector(fa, restrict_weights(a.classes(), q, sub, t));
        acc = acc ? kunneth(*acc, fb) : fb;
    }
    return *acc;
}

} // namespace coxwl2
