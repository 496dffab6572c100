#include "coxwl2/davis.hpp"
#include "coxwl2/errors.hpp"
#include "coxwl2/json_io.hpp"
#include "coxwl2/weighted.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace coxwl2;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNotApplicable = 2;

struct RunConfig {
    std::string command;
    std::string input;
    std::string weights;
    std::string output;
    std::string at;
    std::string subset;
    std::string u;
    std::string t;
    std::string relative;
    long max_order = kDefaultOrderCap;
    int max_ball = -1;
    int precision_bits = kDefaultPrecisionBits;
    int max_label = kDefaultCensusLabel;
    bool homology = false;
    bool kunneth = false;
    bool json = true;
};

struct Outcome {
    int code = kOk;
    Json result;
};

int env_threads() {
    const char* v = std::getenv("COXWL2_THREADS");
    if (v == nullptr) {
        return 1;
    }
    int n = std::atoi(v);
    return n > 0 ? n : 1;
}

AnalysisOptions analysis_options(const RunConfig& c) {
    AnalysisOptions o;
    o.growth.enumeration.order_cap = c.max_order;
    o.growth.enumeration.max_bits = c.precision_bits;
    return o;
}

CoxeterMatrix load_matrix(const RunConfig& c) {
    if (c.input.empty()) {
        throw Error("io", "MissingInput", "this command needs -i/--input");
    }
    return matrix_from_json(read_json_file(c.input));
}

WeightVector load_weights(const std::string& path, const CoxeterAnalysis& a) {
    if (path.empty()) {
        throw Error("io", "MissingInput", "this command needs a weight file");
    }
    return weights_from_json(read_json_file(path), a.matrix(), a.classes());
}

Json classes_json(const CoxeterAnalysis& a) {
    Json out = Json::array();
    for (Subset c : a.classes().classes) {
        out.push_back(a.matrix().names_of(c));
    }
    return out;
}

Json subsets_json(const CoxeterMatrix& cm, const std::vector<Subset>& list) {
    Json out = Json::array();
    for (Subset t : list) {
        out.push_back(cm.names_of(t));
    }
    return out;
}

Json weights_json(const WeightVector& q) {
    Json out = Json::array();
    for (const auto& v : q.values()) {
        out.push_back(rational_json(v));
    }
    return out;
}

Outcome run_classify(const RunConfig& c) {
    CoxeterAnalysis a(load_matrix(c), analysis_options(c));
    const CoxeterMatrix& cm = a.matrix();
    Subset t = c.subset.empty() ? cm.all() : cm.parse_subset(c.subset);
    Json r{{"subset", cm.names_of(t)},
           {"subgroup", subgroup_json(a.classifier().classify(t))},
           {"classes", classes_json(a)}};
    std::vector<Subset> spherical = a.poset().restricted_to(t);
    std::vector<Subset> minimal;
    for (Subset m : a.poset().minimal_nonspherical) {
        if ((m & t) == m) {
            minimal.push_back(m);
        }
    }
    r["spherical_subsets"] = subsets_json(cm, spherical);
    r["minimal_nonspherical"] = subsets_json(cm, minimal);
    r["trail"] = Json::array({"Gram signature by exact congruence diagonalization, cross-checked with the "
                              "finite and affine diagram tables"});
    return {kOk, r};
}

Outcome run_nerve(const RunConfig& c) {
    CoxeterAnalysis a(load_matrix(c), analysis_options(c));
    Json r{{"nerve", complex_json(a.nerve(), a.matrix().generators())},
           {"flag", is_flag(a.nerve())},
           {"topology", topology_json(a.topology())}};
    r["trail"] = Json::array({"nerve spanned by the nonempty spherical subsets"});
    return {kOk, r};
}

Outcome run_growth(const RunConfig& c) {
    CoxeterAnalysis a(load_matrix(c), analysis_options(c));
    const GrowthSeries& w = a.growth();
    Json r{{"classes", classes_json(a)},
           {"variables", w.variable_names},
           {"finite", w.finite},
           {"series", multirat_json(w.series, w.variable_names)},
           {"steinberg", multirat_json(w.steinberg, w.variable_names)},
           {"uniform", multirat_json(uniform_specialization(w.series), {"q"})}};
    r["trail"] = Json::array({w.finite ? "finite group: the enumerated length polynomial"
                                       : "W(q) = 1/F(q^-1), F the alternating sum over spherical subsets"});
    if (!c.at.empty()) {
        WeightVector q = load_weights(c.at, a);
        Json at{{"q", weights_json(q)}, {"region", region_json(region_membership(w, q))}};
        try {
            at["value"] = rational_json(evaluate(w.series, q));
        } catch (const Error& e) {
            at["value"] = nullptr;
            at["value_error"] = e.qualified_code();
        }
        if (c.max_ball >= 0) {
            BallSums b = ball_partial_sums(a.matrix(), a.classes(), q, c.max_ball);
            Json sums = Json::array();
            for (const auto& s : b.partial_sums) {
                sums.push_back(rational_json(s));
            }
            at["ball"] = Json{{"radius", c.max_ball}, {"partial_sums", sums}, {"sphere_sizes", b.sphere_sizes}};
        }
        r["at"] = at;
    }
    return {kOk, r};
}

Outcome run_region(const RunConfig& c) {
    CoxeterAnalysis a(load_matrix(c), analysis_options(c));
    WeightVector q = load_weights(c.weights, a);
    const GrowthSeries& w = a.growth();
    Json r{{"q", weights_json(q)},
           {"at_q", region_json(region_membership(w, q))},
           {"at_inverse", region_json(region_membership(w, q.inverse()))}};
    r["trail"] = Json::array({"smallest positive root of the ray denominator, isolated by Sturm sequences"});
    return {kOk, r};
}

Outcome run_betti(const RunConfig& c) {
    CoxeterAnalysis a(load_matrix(c), analysis_options(c));
    WeightVector q = load_weights(c.weights, a);
    ApplicabilityReport app = theorem_applicability(a);
    Json r{{"q", weights_json(q)}};
    try {
        BettiReport b = c.kunneth ? product_betti(a, q) : betti_vector(a, q);
        r["report"] = betti_json(b);
        const TheoremRecord* auth = app.authorizing();
        r["trail"] = Json::array({"authorized by " + b.authorized_by + ": " + (auth ? auth->reason : ""),
                                  b.derivation});
        if (!b.classified) {
            r["status"] = "unclassified";
            r["reason"] = "no concentration bullet holds at q";
            return {kNotApplicable, r};
        }
        r["status"] = "computed";
        return {kOk, r};
    } catch (const Error& e) {
        if (e.qualified_code() != "weighted.PreconditionFailed") {
            throw;
        }
        r["status"] = "not_applicable";
        r["reason"] = e.what();
        r["applicability"] = applicability_json(app, a.matrix());
        return {kNotApplicable, r};
    }
}

Outcome run_verify(const RunConfig& c) {
    CoxeterAnalysis a(load_matrix(c), analysis_options(c));
    ApplicabilityReport app = theorem_applicability(a);
    Json r{{"applicability", applicability_json(app, a.matrix())},
           {"topology", topology_json(a.topology())}};
    if (app.authorizing() == nullptr) {
        r["status"] = "not_applicable";
        r["reason"] = app.tetrahedron_boundary && app.lanner ? std::string(kLannerExclusion)
                                                            : std::string("no theorem applies to this nerve");
        return {kNotApplicable, r};
    }
    r["status"] = "applies";
    r["reason"] = app.authorizing()->reason;
    return {kOk, r};
}

Outcome run_census(const RunConfig& c) {
    auto entries = lanner_census(c.max_label, env_threads(), c.precision_bits);
    Json diagrams = Json::array();
    for (const auto& e : entries) {
        SubsetClassifier cl(e.matrix, c.precision_bits);
        bool proper_spherical = true;
        for (int s = 0; s < 4; ++s) {
            proper_spherical = proper_spherical && cl.classify(e.matrix.all() & ~singleton(s)).spherical();
        }
        Json d = matrix_to_json(e.matrix);
        d["signature"] = Json{{"positive", e.signature.positive},
                              {"zero", e.signature.zero},
                              {"negative", e.signature.negative}};
        d["proper_subsets_spherical"] = proper_spherical;
        diagrams.push_back(d);
    }
    Json r{{"count", entries.size()}, {"diagrams", diagrams}, {"max_label", c.max_label}};
    r["trail"] = Json::array({"rank-4 label matrices up to relabeling, kept when every proper subset is "
                              "spherical and the Gram form has a negative direction"});
    return {kOk, r};
}

Outcome run_ruin(const RunConfig& c) {
    CoxeterMatrix cm = load_matrix(c);
    SubsetClassifier cl(cm, c.precision_bits);
    Subset u = c.u.empty() ? cm.all() : cm.parse_subset(c.u);
    Subset t = c.t.empty() ? 0 : cm.parse_subset(c.t);
    EnumerationOptions eo{c.max_order, c.precision_bits};
    CellComplexW sigma = build_sigma(cl, u, cl.classify(u).spherical() ? -1 : c.max_ball, eo);
    Ruin ruin = build_ruin(sigma, t);
    Json r{{"U", cm.names_of(u)},
           {"T", cm.names_of(t)},
           {"partial", sigma.partial},
           {"sigma_cells", sigma.cells.size()},
           {"omega", cell_complex_json(cm, sigma, ruin.omega, ruin.omega_complex)},
           {"boundary", cell_complex_json(cm, sigma, ruin.boundary, ruin.boundary_complex)}};
    if (c.homology) {
        r["homology"] = Json{{"omega", homology_json(smith_homology(ruin.omega_complex))},
                             {"boundary", homology_json(smith_homology(ruin.boundary_complex))},
                             {"relative", homology_json(smith_homology(ruin.omega_complex, ruin.boundary_complex))}};
    }
    r["trail"] = Json::array({"Coxeter cells as cosets, triangulated by the order complex of the cell poset"});
    return {kOk, r};
}

Outcome run_homology(const RunConfig& c) {
    if (c.input.empty()) {
        throw Error("io", "MissingInput", "this command needs -i/--input");
    }
    Json in = read_json_file(c.input);
    SimplicialComplex l;
    Json r;
    if (in.contains("matrix")) {
        CoxeterMatrix cm = matrix_from_json(in);
        SubsetClassifier cl(cm, c.precision_bits);
        if (c.u.empty()) {
            l = nerve(spherical_subsets(cl));
            r["source"] = "nerve";
        } else {
            Subset u = cm.parse_subset(c.u);
            CellComplexW sigma = build_sigma(cl, u, cl.classify(u).spherical() ? -1 : c.max_ball,
                                             EnumerationOptions{c.max_order, c.precision_bits});
            l = sigma.order_complex(sigma.all_cells());
            r["source"] = "sigma";
            r["partial"] = sigma.partial;
        }
    } else {
        l = complex_from_json(in);
        r["source"] = "complex";
    }
    r["f_vector"] = l.f_vector();
    r["euler"] = euler_characteristic(l);
    if (!c.relative.empty()) {
        SimplicialComplex a = complex_from_json(read_json_file(c.relative));
        r["relative"] = homology_json(smith_homology(l, a));
    }
    r["homology"] = homology_json(smith_homology(l));
    r["trail"] = Json::array({"Smith normal form of the integral boundary maps"});
    return {kOk, r};
}

Outcome dispatch(const RunConfig& c) {
    if (c.command == "classify") return run_classify(c);
    if (c.command == "nerve") return run_nerve(c);
    if (c.command == "growth") return run_growth(c);
    if (c.command == "region") return run_region(c);
    if (c.command == "betti") return run_betti(c);
    if (c.command == "verify") return run_verify(c);
    if (c.command == "census") return run_census(c);
    if (c.command == "ruin") return run_ruin(c);
    return run_homology(c);
}

void emit(const RunConfig& c, const Json& doc) {
    const std::string text = dump(doc);
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out) {
        throw Error("io", "Unwritable", "cannot write " + c.output);
    }
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coxwl2: Coxeter groups, nerves, growth series and weighted L2-Betti numbers"};
    app.require_subcommand(1);
    RunConfig c;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"classify", "classify W or a special subgroup"},
        {"nerve", "nerve of the Coxeter system and its topology"},
        {"growth", "growth series W(q) as a rational function"},
        {"region", "position of q relative to the convergence domain"},
        {"betti", "weighted L2-Betti numbers where a theorem applies"},
        {"verify", "hypotheses of the vanishing theorems"},
        {"census", "rank-4 Lanner diagrams"},
        {"ruin", "(U,T)-ruin of the Coxeter-cell complex"},
        {"homology", "integral homology of a complex, a nerve or Sigma(U)"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("-i,--input", c.input, "Coxeter matrix or complex JSON");
        sub->add_option("-o,--output", c.output, "write the JSON document here");
        sub->add_option("--max-order", c.max_order, "cap on enumerated group orders")->check(CLI::PositiveNumber);
        sub->add_option("--max-ball", c.max_ball, "ball radius for truncated computations")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--precision-bits", c.precision_bits, "MPFR precision cap for sign certification")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", c.json, "JSON output (the default and only format)");
        if (name == "region" || name == "betti") {
            sub->add_option("-q,--weights", c.weights, "weight JSON")->required();
        }
        if (name == "betti") {
            sub->add_flag("--kunneth", c.kunneth, "assemble from the irreducible product factors");
        }
        if (name == "growth") {
            sub->add_option("--at", c.at, "weight JSON to evaluate at");
        }
        if (name == "classify") {
            sub->add_option("--subset", c.subset, "comma-separated generators");
        }
        if (name == "census") {
            sub->add_option("--max-label", c.max_label, "largest label scanned")->check(CLI::Range(2, 64));
        }
        if (name == "ruin" || name == "homology") {
            sub->add_option("-U", c.u, "comma-separated generators of U");
        }
        if (name == "ruin") {
            sub->add_option("-T", c.t, "comma-separated generators of T");
            sub->add_flag("--homology", c.homology, "attach integral and relative homology");
        }
        if (name == "homology") {
            sub->add_option("--relative", c.relative, "subcomplex JSON for relative homology");
        }
        sub->callback([&c, name = name] { c.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kError;
    }

    Json doc{{"schema", kSchema}, {"command", c.command}};
    int code = kOk;
    try {
        Outcome o = dispatch(c);
        doc["result"] = o.result;
        code = o.code;
    } catch (const Error& e) {
        doc["error"] = Json{{"code", e.qualified_code()}, {"message", e.what()}};
        std::cerr << "coxwl2: " << e.qualified_code() << ": " << e.what() << "\n";
        code = kError;
    } catch (const std::exception& e) {
        doc["error"] = Json{{"code", "internal.Unexpected"}, {"message", e.what()}};
        std::cerr << "coxwl2: internal.Unexpected: " << e.what() << "\n";
        code = kError;
    }
    try {
        emit(c, doc);
    } catch (const Error& e) {
        std::cerr << "coxwl2: " << e.qualified_code() << ": " << e.what() << "\n";
        return kError;
    }
    return code;
}
