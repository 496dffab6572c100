#pragma once

#include "coxwl2/coxeter.hpp"
#include "coxwl2/davis.hpp"
#include "coxwl2/growth.hpp"
#include "coxwl2/simplicial.hpp"
#include "coxwl2/weighted.hpp"
#include "coxwl2/weights.hpp"

#include <json.hpp>

#include <string>

namespace coxwl2 {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "coxwl2/1";

/// Parses a JSON document; throws io.BadJson.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// {"generators": [...], "matrix": [[...]]} with "inf" for infinity. Errors: io.Schema and the
/// validation errors of coxeter-core.
CoxeterMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const CoxeterMatrix& cm);

/// {"q": "1/2"}, {"q": {"s1": "1/2", ...}} or {"q": [...]} (per class, or per generator when the
/// length is the rank). JSON floats raise weighted.IrrationalWeight.
WeightVector weights_from_json(const Json& j, const CoxeterMatrix& cm, const GeneratorClasses& classes);

/// Integers as numbers when they fit, everything else as "p/q".
Json rational_json(const Rational& x);
Json multipoly_json(const MultiPoly& p, const std::vector<std::string>& names);
Json multirat_json(const MultiRat& f, const std::vector<std::string>& names);

SimplicialComplex complex_from_json(const Json& j);
/// Vertices named by `names` when given, else by index.
Json complex_json(const SimplicialComplex& l, const std::vector<std::string>& names = {});
Json homology_json(const std::vector<HomologyGroup>& h);
Json topology_json(const TopologyVerdict& v);
Json subgroup_json(const SubgroupType& t);
Json region_json(const RegionVerdict& v);
Json andreev_json(const AndreevVerdict& v, const CoxeterMatrix& cm);
Json applicability_json(const ApplicabilityReport& r, const CoxeterMatrix& cm);
Json regime_json(const RegimeReport& r);
Json betti_json(const BettiReport& b);
/// Triangulated cell set; each vertex of the order complex is a cell with its type and a word.
Json cell_complex_json(const CoxeterMatrix& cm, const CellComplexW& sigma, const std::vector<int>& cells,
                       const SimplicialComplex& triangulated);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace coxwl2
