#pragma once

#include <compare>
#include <string>
#include <vector>

#include "orb/rational.hpp"

namespace orb {

// Element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} of Q[x]/Phi_N(x).  Values are kept fully
// reduced modulo Phi_N, so equality of equal-order values is coordinatewise.
// Different orders compare after promotion into Q(zeta_lcm).
class CycNum {
public:
    CycNum() : order_(1), coeffs_(1) {}
    explicit CycNum(Rational r) : order_(1), coeffs_{std::move(r)} {}
    CycNum(unsigned order, std::vector<Rational> coeffs);

    // zeta_N^k
    static CycNum zeta(unsigned order, long k = 1);
    static CycNum from_rational(unsigned order, const Rational& r);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    // Embed into Q(zeta_N) for order_ | N.
    CycNum promoted(unsigned n) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

    // Field inverse; throws domain_error on zero.
    CycNum inverse() const;
    // The automorphism zeta -> zeta^{-1} (complex conjugation).
    CycNum conj() const;
    // The automorphism zeta -> zeta^m, gcd(m, N) = 1.
    CycNum galois(long m) const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    // Total order (promotes to common field, then lexicographic on
    // coordinates).  Used for deterministic element ordering, not for
    // any analytic meaning.
    std::strong_ordering operator<=>(const CycNum& o) const;

    std::string str() const;

    // phi(N) and the cyclotomic polynomial Phi_N as a monic coefficient
    // vector (constant term first).
    static unsigned phi(unsigned n);
    static const std::vector<Rational>& cyclotomic_poly(unsigned n);

private:
    unsigned order_;
    std::vector<Rational> coeffs_;  // length phi(order_)
};

CycNum operator*(const Rational& r, const CycNum& a);

unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

}  // namespace orb
