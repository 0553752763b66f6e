#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/presets.hpp"

using orb::Group;
using orb::Rational;

namespace {

Group preset_group(const std::string& name) {
    auto p = orb::find_preset(name);
    REQUIRE(p.has_value());
    return Group::generate(p->generators);
}

}  // namespace

TEST_CASE("sign flip on the line") {
    Group g = preset_group("z2-c1");
    auto sectors = orb::all_sectors(g);
    CHECK(sectors[0].ell == 0);
    CHECK(sectors[0].age == 0);
    CHECK(sectors[1].ell == 2);
    CHECK(sectors[1].age == Rational(1, 2));
    REQUIRE(sectors[1].angles.size() == 1);
    CHECK(sectors[1].angles[0].first == Rational(1, 2));
    CHECK(sectors[1].angles[0].second == 1);
}

TEST_CASE("third roots on the line") {
    Group g = preset_group("z3-c1");
    auto sectors = orb::all_sectors(g);
    // elements are ordered 1, z, z^2
    CHECK(sectors[1].age + sectors[2].age == 1);
    for (size_t i = 1; i < 3; ++i) {
        CHECK(sectors[i].ell == 2);
        CHECK(sectors[i].fixed_basis.empty());
    }
    CHECK((sectors[1].age == Rational(1, 3) || sectors[1].age == Rational(2, 3)));
}

TEST_CASE("reflections in the plane") {
    Group g = preset_group("z2xz2-c2");
    auto sectors = orb::all_sectors(g);
    size_t full = 0, half = 0;
    for (size_t i = 1; i < g.size(); ++i) {
        if (sectors[i].ell == 4) ++full;
        if (sectors[i].ell == 2) ++half;
    }
    CHECK(full == 1);  // -I
    CHECK(half == 2);  // the two reflections
}

TEST_CASE("age identities on every preset") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Group g = Group::generate(p.generators);
        auto sectors = orb::all_sectors(g);
        for (size_t i = 0; i < g.size(); ++i) {
            // age(g) + age(g^-1) = ell(g)/2
            CHECK(sectors[i].age + sectors[g.inv(i)].age ==
                  Rational(static_cast<long>(sectors[i].ell), 2));
            CHECK(sectors[i].ell == sectors[g.inv(i)].ell);
            // conjugation invariance
            for (size_t h = 0; h < g.size(); ++h) {
                size_t conj = g.mul(g.mul(h, i), g.inv(h));
                CHECK(sectors[conj].age == sectors[i].age);
                CHECK(sectors[conj].ell == sectors[i].ell);
            }
            // angle multiplicities account for the whole normal space
            size_t total = 0;
            for (const auto& [theta, mult] : sectors[i].angles) total += mult;
            CHECK(2 * total == sectors[i].ell);
        }
    }
}

TEST_CASE("codimension criterion equivalence on every preset") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Group g = Group::generate(p.generators);
        auto sectors = orb::all_sectors(g);
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) {
                auto v = orb::codim_lemma_check(sectors, g, i, j);
                CHECK(v.l_additive == v.geometric);
            }
    }
}

TEST_CASE("fixed and normal spaces are complementary") {
    for (const auto& p : orb::complex_presets()) {
        Group g = Group::generate(p.generators);
        auto sectors = orb::all_sectors(g);
        for (size_t i = 0; i < g.size(); ++i) {
            const auto& s = sectors[i];
            std::vector<orb::CycVec> all = s.fixed_basis;
            all.insert(all.end(), s.normal_basis.begin(), s.normal_basis.end());
            CHECK(orb::span_rank(all, g.dim()) == g.dim());
        }
    }
}

TEST_CASE("length additivity helper") {
    Group g = preset_group("z2xz2-c2");
    auto sectors = orb::all_sectors(g);
    // find the two reflections
    std::vector<size_t> refl;
    for (size_t i = 1; i < g.size(); ++i)
        if (sectors[i].ell == 2) refl.push_back(i);
    REQUIRE(refl.size() == 2);
    CHECK(orb::l_additive(sectors, g, refl[0], refl[1]));
    CHECK(!orb::l_additive(sectors, g, refl[0], refl[0]));
}
