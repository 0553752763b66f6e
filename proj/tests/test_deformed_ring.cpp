#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "orb/deformed_ring.hpp"
#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/presets.hpp"

using orb::ClassFunctionElement;
using orb::DeformedRing;
using orb::Group;
using orb::Integer;
using orb::TPoly;

namespace {

// the ring keeps pointers into the group and sector data, so both live on
// the heap with the ring alongside
struct Setup {
    std::shared_ptr<Group> group_owner;
    std::shared_ptr<std::vector<orb::SectorData>> sector_owner;
    DeformedRing ring;
    const Group& group;
    const std::vector<orb::SectorData>& sectors;
};

Setup make(const std::string& name) {
    auto p = orb::find_preset(name);
    REQUIRE(p.has_value());
    auto g = std::make_shared<Group>(Group::generate(p->generators));
    auto sec = std::make_shared<std::vector<orb::SectorData>>(orb::all_sectors(*g));
    return {g, sec, DeformedRing(*g, *sec), *g, *sec};
}

}  // namespace

TEST_CASE("identity class is the unit") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Setup s = make(p.name);
        ClassFunctionElement unit = s.ring.class_sum(s.group.class_of(0));
        for (size_t c = 0; c < s.group.classes().size(); ++c) {
            ClassFunctionElement e = s.ring.class_sum(c);
            CHECK(s.ring.hh_product(unit, e) == e);
            CHECK(s.ring.hh_product(e, unit) == e);
        }
    }
}

TEST_CASE("sign involution on the plane squares to zero") {
    Setup s = make("z2-c2");
    // the nontrivial class: ell = 4, and 4 + 4 != 0
    ClassFunctionElement e = s.ring.class_sum(s.group.class_of(1));
    CHECK(s.ring.hh_product(e, e).is_zero());
}

TEST_CASE("reflection classes multiply across") {
    Setup s = make("z2xz2-c2");
    const Group& g = s.group;
    // identify a = diag(-1,1), b = diag(1,-1) by their sector lengths
    std::vector<size_t> refl;
    size_t minus_id = 0;
    for (size_t i = 1; i < g.size(); ++i) {
        if (s.sectors[i].ell == 2) refl.push_back(i);
        if (s.sectors[i].ell == 4) minus_id = i;
    }
    REQUIRE(refl.size() == 2);
    ClassFunctionElement ea = s.ring.class_sum(g.class_of(refl[0]));
    ClassFunctionElement eb = s.ring.class_sum(g.class_of(refl[1]));
    ClassFunctionElement eab = s.ring.class_sum(g.class_of(minus_id));
    CHECK(s.ring.hh_product(ea, eb) == eab);
    CHECK(s.ring.hh_product(ea, ea).is_zero());
    CHECK(s.ring.hh_product(eb, eb).is_zero());
}

TEST_CASE("permutation action brute force") {
    Setup s = make("s3-perm");
    const Group& g = s.group;
    // locate the transposition and 3-cycle classes by element order
    size_t cls2 = 0, cls3 = 0;
    for (size_t i = 1; i < g.size(); ++i) {
        if (g.element_order(i) == 2) cls2 = g.class_of(i);
        if (g.element_order(i) == 3) cls3 = g.class_of(i);
    }
    ClassFunctionElement prod =
        s.ring.hh_product(s.ring.class_sum(cls2), s.ring.class_sum(cls3));
    // oracle by direct pair enumeration
    ClassFunctionElement expect;
    for (size_t g1 : g.classes()[cls2])
        for (size_t g2 : g.classes()[cls3])
            if (orb::l_additive(s.sectors, g, g1, g2)) {
                ClassFunctionElement t;
                t.coeffs[g.mul(g1, g2)] = TPoly::one();
                expect += t;
            }
    CHECK(prod == expect);
}

TEST_CASE("table agrees in serial and parallel and is associative") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Setup s = make(p.name);
        auto serial = s.ring.hh_table(false);
        auto parallel = s.ring.hh_table(true);
        CHECK(serial.entries == parallel.entries);
        CHECK(serial.class_degree == parallel.class_degree);

        size_t nc = s.group.classes().size();
        // associativity and commutativity on the class basis
        for (size_t a = 0; a < nc; ++a)
            for (size_t b = 0; b < nc; ++b) {
                ClassFunctionElement ea = s.ring.class_sum(a);
                ClassFunctionElement eb = s.ring.class_sum(b);
                CHECK(s.ring.hh_product(ea, eb) == s.ring.hh_product(eb, ea));
                for (size_t c = 0; c < nc; ++c) {
                    ClassFunctionElement ec = s.ring.class_sum(c);
                    CHECK(s.ring.hh_product(s.ring.hh_product(ea, eb), ec) ==
                          s.ring.hh_product(ea, s.ring.hh_product(eb, ec)));
                }
            }
    }
}

TEST_CASE("degreewise dimensions count classes by length") {
    for (const auto& p : orb::complex_presets()) {
        CAPTURE(p.name);
        Setup s = make(p.name);
        auto table = s.ring.hh_table(false);
        for (size_t d = 0; d <= 2 * s.group.dim(); ++d) {
            size_t count = 0;
            for (size_t c = 0; c < table.class_degree.size(); ++c)
                if (table.class_degree[c] == d) ++count;
            // the degree-d slice has one basis vector per class of length d
            size_t by_sector = 0;
            for (const auto& cls : s.group.classes())
                if (s.sectors[cls[0]].ell == d) ++by_sector;
            CHECK(count == by_sector);
        }
    }
}

TEST_CASE("products preserve invariance and grading") {
    Setup s = make("q8-c2");
    size_t nc = s.group.classes().size();
    for (size_t a = 0; a < nc; ++a)
        for (size_t b = 0; b < nc; ++b) {
            auto prod =
                s.ring.hh_product(s.ring.class_sum(a), s.ring.class_sum(b));
            CHECK(s.ring.is_invariant(prod));
            // support only on classes with additive length
            size_t la = s.sectors[s.group.classes()[a][0]].ell;
            size_t lb = s.sectors[s.group.classes()[b][0]].ell;
            for (const auto& [g, c] : prod.coeffs)
                if (!c.is_zero()) CHECK(s.sectors[g].ell == la + lb);
        }
}
