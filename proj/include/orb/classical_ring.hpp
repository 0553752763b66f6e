#pragma once

#include <map>

#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/multivector.hpp"

namespace orb {

// A constant-coefficient class on the inertia sectors: one multivector per
// group element, all of the same total degree, with the component at gamma
// confined to Lambda^{deg-l}(V^gamma) (x) Lambda^top(N^gamma).
struct SectorClass {
    size_t degree = 0;
    std::map<size_t, Multivector> components;  // element index -> multivector

    bool is_zero() const;
    SectorClass& operator+=(const SectorClass& o);
    SectorClass& operator-=(const SectorClass& o);
    friend SectorClass operator+(SectorClass a, const SectorClass& b) { return a += b; }
    friend SectorClass operator-(SectorClass a, const SectorClass& b) { return a -= b; }
    friend SectorClass operator*(const CycNum& s, const SectorClass& a);
    bool operator==(const SectorClass& o) const;
};

// Classical Hochschild sector ring: invariant multivectors with the
// l-filtered wedge cup product.
class ClassicalRing {
public:
    ClassicalRing(const Group& g, const std::vector<SectorData>& sectors);

    const Group& group() const { return *group_; }
    const std::vector<SectorData>& sectors() const { return *sectors_; }

    // The wedge of all adapted normal frame generators at gamma.
    Multivector top_normal_class(size_t idx) const;

    // Exact basis of the Gamma-invariant classes of the given degree,
    // produced by Reynolds averaging of a sector-wise spanning set.
    std::vector<SectorClass> invariant_basis(size_t degree) const;

    // Sum of Reynolds projections, i.e. the transport average.
    SectorClass reynolds(const SectorClass& x) const;

    SectorClass cup(const SectorClass& x, const SectorClass& y) const;

    SectorClass unit() const;

    // Full multiplication table of the invariant ring: entry (i,j) lists
    // the coefficients of basis[i] cup basis[j] in the degree-(di+dj)
    // invariant basis.
    struct Table {
        std::vector<std::vector<SectorClass>> bases;  // by degree 0..2n
        // c[d1][i][d2][j] -> coefficient vector
        std::map<std::tuple<size_t, size_t, size_t, size_t>, CycVec> entries;
    };
    Table structure_constants(bool parallel = true) const;

    // Express x in the given basis (all of matching degree); nullopt when
    // x lies outside the span.
    std::optional<CycVec> coordinates(const SectorClass& x,
                                      const std::vector<SectorClass>& basis) const;

private:
    std::vector<std::pair<size_t, std::vector<size_t>>> flat_index(
        const std::vector<SectorClass>& xs) const;
    CycVec flatten(const SectorClass& x,
                   const std::vector<std::pair<size_t, std::vector<size_t>>>& keys) const;

    const Group* group_;
    const std::vector<SectorData>* sectors_;
};

}  // namespace orb
