#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "orb/classical_ring.hpp"
#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/presets.hpp"

using orb::ClassicalRing;
using orb::CycNum;
using orb::CycVec;
using orb::Group;
using orb::Matrix;
using orb::Multivector;
using orb::Rational;
using orb::SectorClass;

namespace {

CycNum q(long n, long d = 1) { return CycNum(Rational(n, d)); }

// the ring keeps pointers into the group and sector data, so both live on
// the heap with the ring alongside
struct Setup {
    std::shared_ptr<Group> group_owner;
    std::shared_ptr<std::vector<orb::SectorData>> sector_owner;
    ClassicalRing ring;
    const Group& group;
    const std::vector<orb::SectorData>& sectors;
};

Setup make(const std::string& name) {
    auto p = orb::find_preset(name);
    REQUIRE(p.has_value());
    auto g = std::make_shared<Group>(Group::generate(p->generators));
    auto sec = std::make_shared<std::vector<orb::SectorData>>(orb::all_sectors(*g));
    return {g, sec, ClassicalRing(*g, *sec), *g, *sec};
}

// trace of the transport-averaging projector on the adapted sector basis;
// for a projector the trace equals the rank, giving a count of invariants
// independent of the pivot extraction in invariant_basis
Rational reynolds_trace(const Setup& s, size_t degree) {
    const Group& g = s.group;
    size_t dim2n = 2 * g.dim();
    // adapted basis of the degree-d sector space
    std::vector<SectorClass> basis;
    for (size_t idx = 0; idx < g.size(); ++idx) {
        const auto& sec = s.sectors[idx];
        if (sec.ell > degree || degree - sec.ell > 2 * sec.fixed_basis.size())
            continue;
        size_t tdeg = degree - sec.ell;
        Matrix frame = orb::adapted_frame(sec.fixed_basis, sec.normal_basis);
        size_t tangential = 2 * sec.fixed_basis.size();
        Multivector top = s.ring.top_normal_class(idx);
        std::vector<size_t> sel;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (sel.size() == tdeg) {
                Multivector t = Multivector::scalar(dim2n, q(1));
                for (size_t c : sel) {
                    Multivector gen(dim2n);
                    for (size_t r = 0; r < dim2n; ++r) gen.add_term({r}, frame.at(r, c));
                    t = wedge(t, gen);
                }
                Multivector full = wedge(t, top);
                if (!full.is_zero()) {
                    SectorClass x;
                    x.degree = degree;
                    x.components.emplace(idx, std::move(full));
                    basis.push_back(std::move(x));
                }
                return;
            }
            for (size_t c = start; c < tangential; ++c) {
                sel.push_back(c);
                self(self, c + 1);
                sel.pop_back();
            }
        };
        rec(rec, 0);
    }
    if (basis.empty()) return Rational(0);

    // express each averaged basis vector in the basis again
    Rational trace(0);
    for (size_t i = 0; i < basis.size(); ++i) {
        SectorClass avg = s.ring.reynolds(basis[i]);
        auto coords = s.ring.coordinates(avg, basis);
        REQUIRE(coords.has_value());
        const CycNum& diag = (*coords)[i];
        REQUIRE(diag.is_rational());
        trace += diag.rational_value();
        // projector property: averaging twice changes nothing
        CHECK(s.ring.reynolds(avg) == avg);
    }
    return trace;
}

}  // namespace

TEST_CASE("unit and invariance") {
    for (const char* name : {"z2-c1", "z3-c1", "z2xz2-c2", "s3-perm"}) {
        CAPTURE(name);
        Setup s = make(name);
        SectorClass unit = s.ring.unit();
        CHECK(s.ring.reynolds(unit) == unit);
        auto basis0 = s.ring.invariant_basis(0);
        CHECK(basis0.size() == 1);
        for (size_t d = 0; d <= 2 * s.group.dim(); ++d)
            for (const auto& b : s.ring.invariant_basis(d))
                CHECK(s.ring.reynolds(b) == b);
    }
}

TEST_CASE("sign sector on the line") {
    Setup s = make("z2-c1");
    // degrees 0..2: invariants are 1, dzbar^dz-type pairs, and the twisted
    // top class
    CHECK(s.ring.invariant_basis(0).size() == 1);
    CHECK(s.ring.invariant_basis(2).size() == 2);
    // unit multiplies trivially
    auto basis2 = s.ring.invariant_basis(2);
    for (const auto& b : basis2) CHECK(s.ring.cup(s.ring.unit(), b) == b);
}

TEST_CASE("dimension equals the projector trace") {
    for (const char* name : {"z2-c1", "z3-c1", "z4-c1", "z2-c2", "z2xz2-c2", "s3-perm"}) {
        CAPTURE(name);
        Setup s = make(name);
        for (size_t d = 0; d <= 2 * s.group.dim(); ++d) {
            Rational tr = reynolds_trace(s, d);
            CHECK(tr == Rational(static_cast<long>(s.ring.invariant_basis(d).size())));
        }
    }
}

TEST_CASE("ring laws on the invariant basis") {
    for (const char* name : {"z2-c1", "z3-c1", "z2-c2", "z2xz2-c2", "s3-perm"}) {
        CAPTURE(name);
        Setup s = make(name);
        size_t maxdeg = 2 * s.group.dim();
        std::vector<std::vector<SectorClass>> bases;
        for (size_t d = 0; d <= maxdeg; ++d) bases.push_back(s.ring.invariant_basis(d));

        std::vector<std::pair<size_t, SectorClass>> all;
        for (size_t d = 0; d <= maxdeg; ++d)
            for (const auto& b : bases[d]) all.push_back({d, b});

        for (const auto& [d1, x] : all)
            for (const auto& [d2, y] : all) {
                if (d1 + d2 > maxdeg) continue;
                SectorClass xy = s.ring.cup(x, y);
                // graded commutativity
                SectorClass yx = s.ring.cup(y, x);
                if (d1 * d2 % 2 == 1)
                    CHECK(xy == CycNum(Rational(-1)) * yx);
                else
                    CHECK(xy == yx);
                // unitality
                CHECK(s.ring.cup(s.ring.unit(), x) == x);
                // products stay invariant
                if (d1 + d2 <= maxdeg)
                    CHECK(s.ring.coordinates(xy, bases[d1 + d2]).has_value());
                // associativity
                for (const auto& [d3, z] : all) {
                    if (d1 + d2 + d3 > maxdeg) continue;
                    CHECK(s.ring.cup(xy, z) == s.ring.cup(x, s.ring.cup(y, z)));
                }
            }
    }
}

TEST_CASE("structure constants are consistent and thread-safe") {
    Setup s = make("z2xz2-c2");
    auto serial = s.ring.structure_constants(false);
    auto parallel = s.ring.structure_constants(true);
    REQUIRE(serial.entries.size() == parallel.entries.size());
    for (const auto& [k, v] : serial.entries) {
        auto it = parallel.entries.find(k);
        REQUIRE(it != parallel.entries.end());
        CHECK(v == it->second);
    }
    // spot check one entry against a direct product
    for (const auto& [k, v] : serial.entries) {
        auto [d1, i, d2, j] = k;
        SectorClass prod = s.ring.cup(serial.bases[d1][i], serial.bases[d2][j]);
        auto coords = s.ring.coordinates(prod, serial.bases[d1 + d2]);
        REQUIRE(coords.has_value());
        CHECK(*coords == v);
    }
}
