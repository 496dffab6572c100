#include "coxwl2/json_io.hpp"

#include "coxwl2/errors.hpp"
#include "coxwl2/label.hpp"

#include <fstream>
#include <sstream>

namespace coxwl2 {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error("io", "Schema", what); }

Rational rational_from_json(const Json& v, const std::string& where) {
    if (v.is_number_integer()) {
        return Rational(Integer(v.dump()));
    }
    if (v.is_number_float()) {
        throw Error("weighted", "IrrationalWeight",
                    where + ": floating-point weights are not exact; write them as \"p/q\" strings");
    }
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    schema_error(where + ": expected a rational");
}

Json names_json(const CoxeterMatrix& cm, Subset t) { return Json(cm.names_of(t)); }

std::string monomial_key(const Exponents& e, const std::vector<std::string>& names) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!key.empty()) {
            key += "*";
        }
        key += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (e[i] > 1) {
            key += "^" + std::to_string(e[i]);
        }
    }
    return key.empty() ? "1" : key;
}

Json interval_json(const RootInterval& r) {
    return Json{{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"exact", r.exact}, {"approx", r.approx()}};
}

} // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error("io", "BadJson", e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("io", "Unreadable", "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

CoxeterMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j.at("matrix").is_array()) {
        schema_error("expected an object with a \"matrix\" array");
    }
    std::vector<std::string> names;
    if (j.contains("generators")) {
        if (!j.at("generators").is_array()) {
            schema_error("\"generators\" must be an array of strings");
        }
        for (const auto& g : j.at("generators")) {
            if (!g.is_string()) {
                schema_error("\"generators\" must be an array of strings");
            }
            names.push_back(g.get<std::string>());
        }
    }
    std::vector<std::vector<int>> raw;
    for (const auto& row : j.at("matrix")) {
        if (!row.is_array()) {
            schema_error("matrix rows must be arrays");
        }
        std::vector<int> r;
        for (const auto& x : row) {
            if (x.is_string() && (x == "inf" || x == "infinity")) {
                r.push_back(kInfinity);
            } else if (x.is_number_integer()) {
                long long v = x.get<long long>();
                if (v <= 0 || v >= kInfinity) {
                    throw Error("coxeter", "InvalidLabel", "label " + std::to_string(v) + " out of range");
                }
                r.push_back(static_cast<int>(v));
            } else {
                schema_error("labels must be positive integers or \"inf\"");
            }
        }
        raw.push_back(std::move(r));
    }
    return validate_matrix(std::move(names), raw);
}

Json matrix_to_json(const CoxeterMatrix& cm) {
    Json rows = Json::array();
    for (int s = 0; s < cm.rank(); ++s) {
        Json row = Json::array();
        for (int t = 0; t < cm.rank(); ++t) {
            int m = cm.label(s, t);
            row.push_back(is_finite_label(m) ? Json(m) : Json("inf"));
        }
        rows.push_back(row);
    }
    return Json{{"generators", cm.generators()}, {"matrix", rows}};
}

WeightVector weights_from_json(const Json& j, const CoxeterMatrix& cm, const GeneratorClasses& classes) {
    if (!j.is_object() || !j.contains("q")) {
        schema_error("expected an object with a \"q\" entry");
    }
    const Json& q = j.at("q");
    if (q.is_object()) {
        std::vector<Rational> per_gen(static_cast<std::size_t>(cm.rank()));
        std::vector<bool> seen(per_gen.size(), false);
        for (const auto& [name, value] : q.items()) {
            auto idx = cm.index_of(name);
            if (!idx) {
                throw Error("io", "UnknownGenerator", "unknown generator " + name);
            }
            per_gen[static_cast<std::size_t>(*idx)] = rational_from_json(value, "q." + name);
            seen[static_cast<std::size_t>(*idx)] = true;
        }
        for (int s = 0; s < cm.rank(); ++s) {
            if (!seen[static_cast<std::size_t>(s)]) {
                // a class may be named through any one of its members
                bool covered = false;
                for (int t : subset_members(classes.classes[static_cast<std::size_t>(classes.class_of[s])])) {
                    if (seen[static_cast<std::size_t>(t)]) {
                        per_gen[static_cast<std::size_t>(s)] = per_gen[static_cast<std::size_t>(t)];
                        covered = true;
                        break;
                    }
                }
                if (!covered) {
                    throw Error("weighted", "WeightShape", "no weight for generator " + cm.name(s));
                }
            }
        }
        return WeightVector::from_generators(classes, per_gen);
    }
    if (q.is_array()) {
        std::vector<Rational> values;
        for (std::size_t i = 0; i < q.size(); ++i) {
            values.push_back(rational_from_json(q[i], "q[" + std::to_string(i) + "]"));
        }
        if (static_cast<int>(values.size()) == classes.count()) {
            return WeightVector(values);
        }
        if (static_cast<int>(values.size()) == cm.rank()) {
            return WeightVector::from_generators(classes, values);
        }
        throw Error("weighted", "WeightShape",
                    "expected " + std::to_string(classes.count()) + " class weights or " +
                        std::to_string(cm.rank()) + " generator weights");
    }
    return WeightVector::uniform(classes, rational_from_json(q, "q"));
}

Json rational_json(const Rational& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) {
        return Json(x.get_num().get_si());
    }
    return Json(to_string(x));
}

Json multipoly_json(const MultiPoly& p, const std::vector<std::string>& names) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) {
        out[monomial_key(e, names)] = to_string(c);
    }
    return out;
}

Json multirat_json(const MultiRat& f, const std::vector<std::string>& names) {
    return Json{{"num", multipoly_json(f.num(), names)},
                {"den", multipoly_json(f.den(), names)},
                {"text", "(" + f.num().to_string(names) + ") / (" + f.den().to_string(names) + ")"}};
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("maximal_faces") || !j.at("maximal_faces").is_array()) {
        schema_error("expected an object with a \"maximal_faces\" array");
    }
    std::map<std::string, int> index;
    std::vector<Simplex> faces;
    auto vertex = [&](const Json& v) {
        std::string key = v.is_string() ? v.get<std::string>() : v.dump();
        if (!v.is_string() && !v.is_number_integer()) {
            schema_error("vertices must be integers or strings");
        }
        if (j.contains("vertices") && !index.count(key)) {
            schema_error("face vertex " + key + " is not listed in \"vertices\"");
        }
        auto [it, fresh] = index.emplace(key, static_cast<int>(index.size()));
        return it->second;
    };
    if (j.contains("vertices")) {
        for (const auto& v : j.at("vertices")) {
            std::string key = v.is_string() ? v.get<std::string>() : v.dump();
            index.emplace(key, static_cast<int>(index.size()));
        }
    }
    for (const auto& f : j.at("maximal_faces")) {
        if (!f.is_array() || f.empty()) {
            schema_error("faces must be nonempty arrays");
        }
        Simplex s;
        for (const auto& v : f) {
            s.push_back(vertex(v));
        }
        std::sort(s.begin(), s.end());
        faces.push_back(std::move(s));
    }
    return SimplicialComplex::from_faces(faces);
}

Json complex_json(const SimplicialComplex& l, const std::vector<std::string>& names) {
    auto label = [&](int v) { return names.empty() ? Json(v) : Json(names[static_cast<std::size_t>(v)]); };
    Json vertices = Json::array();
    for (int v : l.vertices()) {
        vertices.push_back(label(v));
    }
    Json faces = Json::array();
    for (const auto& f : l.maximal_faces()) {
        Json face = Json::array();
        for (int v : f) {
            face.push_back(label(v));
        }
        faces.push_back(face);
    }
    return Json{{"vertices", vertices}, {"maximal_faces", faces}, {"f_vector", l.f_vector()}};
}

Json homology_json(const std::vector<HomologyGroup>& h) {
    Json groups = Json::array();
    for (const auto& g : h) {
        Json torsion = Json::array();
        for (const auto& t : g.torsion) {
            torsion.push_back(rational_json(Rational(t)));
        }
        groups.push_back(Json{{"rank", g.rank}, {"torsion", torsion}});
    }
    return Json{{"groups", groups}, {"text", to_string(h)}};
}

Json topology_json(const TopologyVerdict& v) {
    return Json{{"kind", to_string(v.kind)},
                {"dim", v.dim},
                {"certified", v.certified},
                {"euler", v.euler},
                {"homology", homology_json(v.homology)},
                {"checks", v.checks}};
}

Json subgroup_json(const SubgroupType& t) {
    Json out{{"kind", to_string(t.kind)},
             {"rank", t.rank},
             {"components", t.components},
             {"signature", Json{{"positive", t.signature.positive},
                                {"zero", t.signature.zero},
                                {"negative", t.signature.negative}}}};
    if (t.kind == SubgroupKind::Spherical) {
        out["order"] = rational_json(Rational(t.order));
    }
    return out;
}

Json region_json(const RegionVerdict& v) {
    Json out{{"region", to_string(v.region)},
             {"ray_numerator", v.ray_numerator.to_string("s")},
             {"ray_denominator", v.ray_denominator.to_string("s")}};
    out["s_star"] = v.s_star ? interval_json(*v.s_star) : Json(nullptr);
    return out;
}

Json andreev_json(const AndreevVerdict& v, const CoxeterMatrix& cm) {
    Json factors = Json::array();
    for (Subset f : v.factors) {
        factors.push_back(names_json(cm, f));
    }
    Json out{{"geometry", to_string(v.geometry)},
             {"case", to_string(v.geometry_case)},
             {"factors", factors},
             {"notes", v.notes}};
    out["euclidean_witness"] = v.euclidean_witness ? names_json(cm, *v.euclidean_witness) : Json(nullptr);
    out["empty_triangle"] = v.empty_triangle ? names_json(cm, *v.empty_triangle) : Json(nullptr);
    return out;
}

Json applicability_json(const ApplicabilityReport& r, const CoxeterMatrix& cm) {
    Json theorems = Json::array();
    for (const auto& t : r.theorems) {
        theorems.push_back(Json{{"id", t.id},
                                {"applies", to_string(t.applies)},
                                {"reason", t.reason},
                                {"witnesses", t.witnesses},
                                {"caveats", t.caveats}});
    }
    Json out{{"n", r.n},
             {"flag", r.flag},
             {"pseudomanifold", r.pseudomanifold},
             {"tetrahedron_boundary", r.tetrahedron_boundary},
             {"lanner", r.lanner},
             {"theorems", theorems}};
    out["andreev"] = r.andreev ? andreev_json(*r.andreev, cm) : Json(nullptr);
    if (r.separating) {
        Json cycle = Json::array();
        for (int v : r.separating->cycle) {
            cycle.push_back(cm.name(v));
        }
        out["separating_sphere"] = Json{{"source", r.separating->source},
                                        {"cycle", cycle},
                                        {"disk_sizes", {r.separating->l1.vertices().size(),
                                                        r.separating->l2.vertices().size()}}};
    } else {
        out["separating_sphere"] = nullptr;
    }
    const TheoremRecord* auth = r.authorizing();
    out["authorized_by"] = auth ? Json(auth->id) : Json(nullptr);
    return out;
}

Json regime_json(const RegimeReport& r) {
    Json regimes = Json::array();
    for (int k : r.regimes) {
        regimes.push_back("dim" + std::to_string(k));
    }
    return Json{{"n", r.n},
                {"regimes", regimes},
                {"at_q", region_json(r.at_q)},
                {"at_inverse", region_json(r.at_inverse)},
                {"authorized_by", r.authorized_by}};
}

Json betti_json(const BettiReport& b) {
    Json betti = Json::array();
    for (const auto& x : b.betti) {
        betti.push_back(x ? rational_json(*x) : Json("unresolved"));
    }
    Json regimes = Json::array();
    for (int k : b.regimes) {
        regimes.push_back("dim" + std::to_string(k));
    }
    Json out{{"n", b.n},
             {"betti", betti},
             {"regimes", regimes},
             {"classified", b.classified},
             {"authorized_by", b.authorized_by},
             {"derivation", b.derivation}};
    out["chi_q"] = b.chi ? rational_json(*b.chi) : Json(nullptr);
    if (b.regime) {
        out["region"] = Json{{"at_q", region_json(b.regime->at_q)}, {"at_inverse", region_json(b.regime->at_inverse)}};
    }
    return out;
}

Json cell_complex_json(const CoxeterMatrix& cm, const CellComplexW& sigma, const std::vector<int>& cells,
                       const SimplicialComplex& triangulated) {
    Json types = Json::object();
    for (int c : cells) {
        const Cell& cell = sigma.cells[static_cast<std::size_t>(c)];
        Json word = Json::array();
        for (int g : sigma.ball.elements[static_cast<std::size_t>(cell.elements.front())].word) {
            word.push_back(cm.name(g));
        }
        types[std::to_string(c)] = Json{{"type", names_json(cm, cell.type)}, {"representative", word}};
    }
    Json out = complex_json(triangulated);
    out["cells"] = types;
    out["cell_count"] = cells.size();
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace coxwl2
