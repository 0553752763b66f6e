#pragma once

#include "orb/deformed_ring.hpp"
#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/tpoly.hpp"

namespace orb {

// Grading convention for the t-graded sector models: in HT mode the basis
// vector e_g sits in degree ell(g), in CR mode in degree 2*age(g); t has
// degree 2 in both.
enum class GradingMode { HT, CR };

struct GradedTElement {
    GradingMode mode = GradingMode::HT;
    std::map<size_t, TPoly> coeffs;

    bool is_zero() const;
    GradedTElement& operator+=(const GradedTElement& o);
    GradedTElement& operator-=(const GradedTElement& o);
    friend GradedTElement operator+(GradedTElement a, const GradedTElement& b) {
        return a += b;
    }
    friend GradedTElement operator-(GradedTElement a, const GradedTElement& b) {
        return a -= b;
    }
    friend GradedTElement operator*(const TPoly& s, const GradedTElement& a);
    bool operator==(const GradedTElement& o) const;
};

// The two t-deformed sector products and the intertwiner between them.
// Structure constants are pure t-powers determined by the sector lengths
// (HT) or the ages (CR); every CR product re-derives its exponent from the
// obstruction rank plus a codimension term and insists the two agree.
class CRModel {
public:
    CRModel(const Group& g, const std::vector<SectorData>& sectors);

    const Group& group() const { return *group_; }
    const std::vector<SectorData>& sectors() const { return *sectors_; }

    GradedTElement e(size_t idx, GradingMode mode) const;

    // Degree of a homogeneous element; throws usage_error on mixed input.
    Rational degree(const GradedTElement& x) const;

    GradedTElement ht_product(const GradedTElement& x, const GradedTElement& y) const;
    GradedTElement cr_product(const GradedTElement& x, const GradedTElement& y) const;

    // rank of the obstruction term for the pair (i, j):
    //   dim_C(V^i /\ V^j) - n + age(i) + age(j) + age((ij)^-1)
    // guaranteed to come out a nonnegative integer.
    Rational obstruction_rank(size_t i, size_t j) const;

    // J sends the CR model to the HT model: e_g -> t^{-age(g^-1)} e_g.
    GradedTElement j_map(const GradedTElement& x) const;
    GradedTElement j_inverse(const GradedTElement& x) const;

    // Filtration level in HT mode: min over terms of (deg - ell(g)).
    // Returns nullopt for 0.
    std::optional<Rational> filtration_level(const GradedTElement& x) const;

    // t^0 part of the HT class-sum table; checked entrywise against the
    // given convolution table and returned.  Mismatch throws.
    DeformedRing::Table associated_graded(const DeformedRing& dr,
                                          bool parallel = true) const;

private:
    size_t dim_fixed_intersection(size_t i, size_t j) const;

    const Group* group_;
    const std::vector<SectorData>* sectors_;
};

}  // namespace orb
