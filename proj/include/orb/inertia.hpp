#pragma once

#include <vector>

#include "orb/group.hpp"
#include "orb/rational.hpp"

namespace orb {

// Per-element sector geometry of a finite group acting on C^n.
// ell is the REAL codimension of the fixed space (twice the complex one);
// ages and angles are exact rationals.
struct SectorData {
    size_t element = 0;
    // Exact complex bases of V^gamma = ker(gamma - 1) and
    // N^gamma = im(gamma - 1); each vector is an n-dim column over Q(zeta).
    std::vector<CycVec> fixed_basis;
    std::vector<CycVec> normal_basis;
    size_t ell = 0;  // real codimension = 2 * normal_basis.size()
    // Multiset of angles theta in (0,1) with multiplicities: the
    // eigenvalues of gamma on N^gamma are exp(2*pi*i*theta).
    std::vector<std::pair<Rational, size_t>> angles;
    Rational age;  // sum of theta_i with multiplicity
};

// Sector geometry of element idx.
SectorData sector(const Group& g, size_t idx);

// All sectors of the group (index-aligned with elements).
std::vector<SectorData> all_sectors(const Group& g);

// true iff ell(i) + ell(j) = ell(i*j).
bool l_additive(const std::vector<SectorData>& sectors, const Group& g,
                size_t i, size_t j);

struct CodimLemmaVerdict {
    bool l_additive;     // ell(g1) + ell(g2) == ell(g1 g2)
    bool geometric;      // V^{g1} + V^{g2} = V  and  V^{g1} ∩ V^{g2} = V^{g1 g2}
};

// Both sides of the codimension criterion, computed independently by
// exact linear algebra; they are returned, not forced equal.
CodimLemmaVerdict codim_lemma_check(const std::vector<SectorData>& sectors,
                                    const Group& g, size_t i, size_t j);

// Basis of the intersection of two spans (columns over C^n).
std::vector<CycVec> intersect_spans(const std::vector<CycVec>& a,
                                    const std::vector<CycVec>& b, size_t dim);

// Do two sets of vectors span the same subspace?
bool same_span(const std::vector<CycVec>& a, const std::vector<CycVec>& b,
               size_t dim);

}  // namespace orb
