#include "doctest.h"
#include "fixtures.hpp"

#include "coxwl2/errors.hpp"
#include "coxwl2/json_io.hpp"
#include "coxwl2/label.hpp"

using namespace coxwl2;

namespace {

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.qualified_code();
    }
    return "";
}

} // namespace

TEST_CASE("matrix round trip") {
    for (const auto& cm : {fixtures::icosahedral(), fixtures::lanner_435(), fixtures::suspension_333()}) {
        Json j = matrix_to_json(cm);
        CHECK(matrix_from_json(parse_json(dump(j))) == cm);
    }
    Json dinf = parse_json(R"({"generators": ["s", "t"], "matrix": [[1, "inf"], ["inf", 1]]})");
    CHECK(matrix_from_json(dinf).label(0, 1) == kInfinity);
}

TEST_CASE("malformed matrices") {
    CHECK(error_code([] { matrix_from_json(parse_json(R"({"matrix": [[1, 2.5], [2.5, 1]]})")); }) == "io.Schema");
    CHECK(error_code([] { matrix_from_json(parse_json(R"({"generators": ["a"]})")); }) == "io.Schema");
    CHECK(error_code([] { parse_json("{"); }) == "io.BadJson");
    CHECK_FALSE(error_code([] { matrix_from_json(parse_json(R"({"matrix": [[1, 3], [2, 1]]})")); }).empty());
}

TEST_CASE("weight documents") {
    CoxeterMatrix a2 = fixtures::dihedral(3);
    GeneratorClasses c2 = generator_classes(a2);
    CoxeterMatrix b2 = fixtures::dihedral(4);
    GeneratorClasses cb = generator_classes(b2);

    CHECK(weights_from_json(parse_json(R"({"q": "1/2"})"), a2, c2) == WeightVector({Rational(1, 2)}));
    CHECK(weights_from_json(parse_json(R"({"q": 2})"), a2, c2) == WeightVector({Rational(2)}));
    CHECK(weights_from_json(parse_json(R"({"q": "0.25"})"), a2, c2) == WeightVector({Rational(1, 4)}));
    CHECK(weights_from_json(parse_json(R"({"q": {"s1": "1/3"}})"), a2, c2) == WeightVector({Rational(1, 3)}));
    CHECK(weights_from_json(parse_json(R"({"q": ["1/2", "1/3"]})"), b2, cb) ==
          WeightVector({Rational(1, 2), Rational(1, 3)}));
    CHECK(weights_from_json(parse_json(R"({"q": {"s1": "1/2", "s2": "1/5"}})"), b2, cb) ==
          WeightVector({Rational(1, 2), Rational(1, 5)}));

    CHECK(error_code([&] { weights_from_json(parse_json(R"({"q": 0.5})"), a2, c2); }) ==
          "weighted.IrrationalWeight");
    CHECK(error_code([&] { weights_from_json(parse_json(R"({"q": "-1"})"), a2, c2); }) ==
          "weighted.NonPositiveWeight");
    CHECK(error_code([&] { weights_from_json(parse_json(R"({"q": {"s1": "1/2", "s2": "1/3"}})"), a2, c2); }) ==
          "weighted.ClassConstancy");
    CHECK(error_code([&] { weights_from_json(parse_json(R"({"q": ["1", "1", "1"]})"), b2, cb); }) ==
          "weighted.WeightShape");
    CHECK(error_code([&] { weights_from_json(parse_json(R"({"q": {"x": "1"}})"), a2, c2); }) ==
          "io.UnknownGenerator");
    CHECK(error_code([&] { weights_from_json(parse_json(R"({"q": {"s1": "1"}})"), b2, cb); }) ==
          "weighted.WeightShape");
}

TEST_CASE("rationals and rational functions") {
    CHECK(rational_json(Rational(3)) == Json(3));
    CHECK(rational_json(Rational(-11, 27)) == Json("-11/27"));
    CHECK(rational_json(Rational(Integer("123456789012345678901234567890"))) ==
          Json("123456789012345678901234567890"));

    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly one = MultiPoly::constant(2, Rational(1));
    Json j = multirat_json(MultiRat(one + x, one - x * y), {"a", "b"});
    CHECK(j.at("num") == Json{{"1", "1"}, {"a", "1"}});
    CHECK(j.at("den") == Json{{"1", "1"}, {"a*b", "-1"}});
}

TEST_CASE("complex documents") {
    SimplicialComplex ico = fixtures::icosahedron_complex();
    Json j = complex_json(ico);
    CHECK(j.at("f_vector") == Json{12, 30, 20});
    CHECK(complex_from_json(parse_json(dump(j))) == ico);

    Json named = parse_json(R"({"vertices": ["a", "b", "c"], "maximal_faces": [["a", "b"], ["b", "c"], ["c", "a"]]})");
    SimplicialComplex c = complex_from_json(named);
    CHECK(c.f_vector() == std::vector<long>{3, 3});
    CHECK(error_code([] { complex_from_json(parse_json(R"({"vertices": [0], "maximal_faces": [[0, 1]]})")); }) ==
          "io.Schema");
}

TEST_CASE("dump is stable") {
    Json a = parse_json(R"({"b": 1, "a": {"d": [1, 2], "c": "x"}})");
    CHECK(dump(a) == "{\n  \"a\": {\n    \"c\": \"x\",\n    \"d\": [\n      1,\n      2\n    ]\n  },\n  \"b\": 1\n}\n");
}
