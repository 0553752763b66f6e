#pragma once

#include <map>

#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/tpoly.hpp"

namespace orb {

// Element of the deformed sector ring: one formal coefficient per group
// element.  Ring elements proper are the conjugation-invariant ones; the
// element basis is kept to state the product rule and to cross-check the
// class-sum table.
struct ClassFunctionElement {
    std::map<size_t, TPoly> coeffs;

    bool is_zero() const;
    ClassFunctionElement& operator+=(const ClassFunctionElement& o);
    ClassFunctionElement& operator-=(const ClassFunctionElement& o);
    friend ClassFunctionElement operator+(ClassFunctionElement a,
                                          const ClassFunctionElement& b) {
        return a += b;
    }
    friend ClassFunctionElement operator-(ClassFunctionElement a,
                                          const ClassFunctionElement& b) {
        return a -= b;
    }
    friend ClassFunctionElement operator*(const TPoly& s,
                                          const ClassFunctionElement& a);
    bool operator==(const ClassFunctionElement& o) const;
};

// Sector convolution ring with the length-additive support condition:
// e_{g1} e_{g2} = e_{g1 g2} when ell(g1) + ell(g2) = ell(g1 g2), else 0.
// Degree of e_g is ell(g).
class DeformedRing {
public:
    DeformedRing(const Group& g, const std::vector<SectorData>& sectors);

    const Group& group() const { return *group_; }

    ClassFunctionElement e(size_t idx) const;
    // E_{(gamma)} = sum of e_g over the conjugacy class (class index).
    ClassFunctionElement class_sum(size_t cls) const;
    bool is_invariant(const ClassFunctionElement& x) const;

    ClassFunctionElement hh_product(const ClassFunctionElement& x,
                                    const ClassFunctionElement& y) const;

    // Integer structure constants of the class-sum basis:
    // entries[a][b][c] is the coefficient of E_c in E_a * E_b, computed by
    // pair enumeration and verified against the element-level product.
    struct Table {
        std::vector<std::vector<std::vector<Integer>>> entries;
        // ell(class representative), i.e. the degree of E_c.
        std::vector<size_t> class_degree;
    };
    Table hh_table(bool parallel = true) const;

private:
    const Group* group_;
    const std::vector<SectorData>* sectors_;
};

}  // namespace orb
