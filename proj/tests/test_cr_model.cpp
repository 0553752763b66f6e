#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "orb/cr_model.hpp"
#include "orb/deformed_ring.hpp"
#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/presets.hpp"

using orb::CRModel;
using orb::GradedTElement;
using orb::GradingMode;
using orb::Group;
using orb::Rational;
using orb::TPoly;

namespace {

// the model keeps pointers into the group and sector data, so both live on
// the heap with the model alongside
struct Setup {
    std::shared_ptr<Group> group_owner;
    std::shared_ptr<std::vector<orb::SectorData>> sector_owner;
    CRModel model;
    const Group& group;
    const std::vector<orb::SectorData>& sectors;
};

Setup make(const std::string& name) {
    auto p = orb::find_preset(name);
    REQUIRE(p.has_value());
    auto g = std::make_shared<Group>(Group::generate(p->generators));
    auto sec = std::make_shared<std::vector<orb::SectorData>>(orb::all_sectors(*g));
    return {g, sec, CRModel(*g, *sec), *g, *sec};
}

TPoly tp(const Rational& e) { return TPoly::t_power(e); }

}  // namespace

TEST_CASE("t exponents on the line") {
    Setup s = make("z2-c1");
    // e_g * e_g = t^2 e_1 in both gradings: ell drops by 4, ages sum to 1
    GradedTElement ht = s.model.ht_product(s.model.e(1, GradingMode::HT),
                                           s.model.e(1, GradingMode::HT));
    CHECK(ht == tp(Rational(2)) * s.model.e(0, GradingMode::HT));
    GradedTElement cr = s.model.cr_product(s.model.e(1, GradingMode::CR),
                                           s.model.e(1, GradingMode::CR));
    CHECK(cr == tp(Rational(1)) * s.model.e(0, GradingMode::CR));
}

TEST_CASE("t exponents for the plane involution") {
    Setup s = make("z2-c2");
    GradedTElement ht = s.model.ht_product(s.model.e(1, GradingMode::HT),
                                           s.model.e(1, GradingMode::HT));
    CHECK(ht == tp(Rational(4)) * s.model.e(0, GradingMode::HT));
    GradedTElement cr = s.model.cr_product(s.model.e(1, GradingMode::CR),
                                           s.model.e(1, GradingMode::CR));
    CHECK(cr == tp(Rational(2)) * s.model.e(0, GradingMode::CR));
    CHECK(s.model.obstruction_rank(1, 1) == Rational(0));
}

TEST_CASE("obstruction rank is a nonnegative integer") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Setup s = make(p.name);
        for (size_t i = 0; i < s.group.size(); ++i)
            for (size_t j = 0; j < s.group.size(); ++j) {
                Rational r = s.model.obstruction_rank(i, j);
                CHECK(r >= 0);
                CHECK(orb::is_integer(r));
            }
    }
}

TEST_CASE("the rescaling intertwines the two products") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Setup s = make(p.name);
        for (size_t i = 0; i < s.group.size(); ++i) {
            GradedTElement ci = s.model.e(i, GradingMode::CR);
            CHECK(s.model.j_inverse(s.model.j_map(ci)) == ci);
            for (size_t j = 0; j < s.group.size(); ++j) {
                GradedTElement cj = s.model.e(j, GradingMode::CR);
                // J(x *_cr y) = J(x) *_ht J(y)
                GradedTElement lhs = s.model.j_map(s.model.cr_product(ci, cj));
                GradedTElement rhs =
                    s.model.ht_product(s.model.j_map(ci), s.model.j_map(cj));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("degrees add under both products") {
    for (const char* name : {"z3-c1", "z2xz2-c2", "s3-perm", "q8-c2"}) {
        CAPTURE(name);
        Setup s = make(name);
        for (auto mode : {GradingMode::HT, GradingMode::CR}) {
            for (size_t i = 0; i < s.group.size(); ++i)
                for (size_t j = 0; j < s.group.size(); ++j) {
                    GradedTElement x = s.model.e(i, mode);
                    GradedTElement y = s.model.e(j, mode);
                    GradedTElement prod = mode == GradingMode::HT
                                              ? s.model.ht_product(x, y)
                                              : s.model.cr_product(x, y);
                    if (prod.is_zero()) continue;
                    CHECK(s.model.degree(prod) ==
                          s.model.degree(x) + s.model.degree(y));
                }
        }
    }
}

TEST_CASE("both products are associative and unital") {
    for (const char* name : {"z4-c1", "z2xz2-c2", "s3-perm"}) {
        CAPTURE(name);
        Setup s = make(name);
        for (auto mode : {GradingMode::HT, GradingMode::CR}) {
            auto mul = [&](const GradedTElement& a, const GradedTElement& b) {
                return mode == GradingMode::HT ? s.model.ht_product(a, b)
                                               : s.model.cr_product(a, b);
            };
            GradedTElement unit = s.model.e(0, mode);
            for (size_t i = 0; i < s.group.size(); ++i) {
                GradedTElement x = s.model.e(i, mode);
                CHECK(mul(unit, x) == x);
                CHECK(mul(x, unit) == x);
                for (size_t j = 0; j < s.group.size(); ++j)
                    for (size_t k = 0; k < s.group.size(); ++k) {
                        GradedTElement y = s.model.e(j, mode);
                        GradedTElement z = s.model.e(k, mode);
                        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
                    }
            }
        }
    }
}

TEST_CASE("filtration levels in the rescaled image") {
    Setup s = make("z2-c2");
    // J(e_g) = t^{-age(g^-1)} e_g; for the involution age(g^-1) = 1, so the
    // image sits at filtration level -2
    GradedTElement jg = s.model.j_map(s.model.e(1, GradingMode::CR));
    auto lvl = s.model.filtration_level(jg);
    REQUIRE(lvl.has_value());
    CHECK(*lvl == Rational(-2));
    CHECK(!s.model.filtration_level(GradedTElement{}).has_value());
}

TEST_CASE("leading terms reproduce the convolution table") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Setup s = make(p.name);
        orb::DeformedRing dr(s.group, s.sectors);
        auto table = dr.hh_table(false);
        auto gr = s.model.associated_graded(dr, false);
        CHECK(gr.entries == table.entries);
        CHECK(gr.class_degree == table.class_degree);
        // and the parallel path agrees
        auto gr_par = s.model.associated_graded(dr, true);
        CHECK(gr_par.entries == table.entries);
    }
}
