#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "orb/error.hpp"
#include "orb/group.hpp"
#include "orb/groupspec.hpp"

using orb::CycNum;
using orb::Rational;

namespace {

std::string error_of(const std::string& text) {
    try {
        orb::parse_group_spec(text);
    } catch (const orb::usage_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("full parse with mixed entry forms") {
    std::string text = R"({
        "name": "demo",
        "cyclotomic_order": 4,
        "dimension": 2,
        "generators": [
            [["z^1", 0], [0, "z^3"]],
            [[0, "1/2"], [-2, 0]]
        ]
    })";
    orb::GroupSpec spec = orb::parse_group_spec(text);
    CHECK(spec.name == "demo");
    CHECK(spec.cyclotomic_order == 4);
    CHECK(spec.dimension == 2);
    REQUIRE(spec.generators.size() == 2);
    CHECK(spec.generators[0].at(0, 0) == CycNum::zeta(4));
    CHECK(spec.generators[0].at(1, 1) == CycNum::zeta(4).inverse());
    CHECK(spec.generators[1].at(0, 1) == CycNum(Rational(1, 2)));
    CHECK(spec.generators[1].at(1, 0) == CycNum(Rational(-2)));
}

TEST_CASE("negated roots and coefficient vectors") {
    std::string text = R"({
        "cyclotomic_order": 3,
        "dimension": 1,
        "generators": [[["-z^2"]], [[["-1/3", "2"]]]]
    })";
    orb::GroupSpec spec = orb::parse_group_spec(text);
    CycNum z = CycNum::zeta(3);
    CHECK(spec.generators[0].at(0, 0) == -(z * z));
    // coefficient vector [a0, a1] means a0 + a1 z
    CHECK(spec.generators[1].at(0, 0) ==
          CycNum(Rational(-1, 3)) + CycNum(Rational(2)) * z);
}

TEST_CASE("parsed generators build a usable group") {
    std::string text = R"({
        "cyclotomic_order": 1,
        "dimension": 2,
        "generators": [[[0, -1], [1, -1]]]
    })";
    orb::GroupSpec spec = orb::parse_group_spec(text);
    orb::Group g = orb::Group::generate(spec.generators);
    CHECK(g.size() == 3);
}

TEST_CASE("syntax errors carry line and column") {
    std::string msg = error_of("{\n  \"dimension\": 2,\n  oops\n}");
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("semantic diagnostics") {
    // missing dimension
    CHECK(error_of(R"({"cyclotomic_order": 2, "generators": []})") != "");
    // ragged matrix
    std::string ragged = R"({
        "cyclotomic_order": 1,
        "dimension": 2,
        "generators": [[[1, 0], [0]]]
    })";
    CHECK(error_of(ragged) != "");
    // root exponent with no cyclotomic order to read it in
    std::string badroot = R"({
        "cyclotomic_order": 1,
        "dimension": 1,
        "generators": [[["q^2"]]]
    })";
    CHECK(error_of(badroot) != "");
    // malformed rational
    std::string badq = R"({
        "cyclotomic_order": 1,
        "dimension": 1,
        "generators": [[["1/0"]]]
    })";
    CHECK(error_of(badq) != "");
}
