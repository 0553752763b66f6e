#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orb/matrix.hpp"
#include "orb/rational.hpp"

namespace orb {

// Polynomial in the real coordinates y_1..y_2n and the formal parameter
// h (the deformation variable), rational coefficients.  Weight of a
// monomial is its polynomial degree plus twice the h power; the star
// product below is weight-additive.
class WeylPoly {
public:
    // (exponent vector of length 2n, h power)
    using Key = std::pair<std::vector<unsigned>, unsigned>;

    WeylPoly() : n2_(0) {}
    explicit WeylPoly(size_t dim2n) : n2_(dim2n) {}

    static WeylPoly constant(size_t dim2n, const Rational& c);
    static WeylPoly one(size_t dim2n) { return constant(dim2n, Rational(1)); }
    static WeylPoly variable(size_t dim2n, size_t i);
    static WeylPoly hbar(size_t dim2n, unsigned power = 1);

    size_t dim() const { return n2_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Key k, const Rational& c);

    // Weight of a homogeneous value; throws usage_error on mixed input.
    unsigned weight() const;
    bool is_weight_homogeneous() const;

    WeylPoly operator-() const;
    WeylPoly& operator+=(const WeylPoly& o);
    WeylPoly& operator-=(const WeylPoly& o);
    friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
    friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }
    // Commutative polynomial product.
    friend WeylPoly operator*(const WeylPoly& a, const WeylPoly& b);
    friend WeylPoly operator*(const Rational& s, const WeylPoly& a);

    bool operator==(const WeylPoly& o) const;
    bool operator!=(const WeylPoly& o) const { return !(*this == o); }

    WeylPoly derivative(size_t i) const;

    std::string str() const;

private:
    size_t n2_;
    std::map<Key, Rational> terms_;
};

// The Poisson tensor inverse to the Darboux form with omega(y_i, y_{i+n}) = 1:
// pi(i, i+n) = -1, pi(i+n, i) = 1, zero otherwise (0-based, i < n).
Rational poisson_entry(size_t dim2n, size_t i, size_t j);

// Moyal star product: sum_k h^k/k! pi^{i1 j1}..pi^{ik jk} d_I a d_J b.
WeylPoly moyal(const WeylPoly& a, const WeylPoly& b);

// Linear substitution y_i -> sum_j m(j, i) y_j.  m must have rational
// entries (cyclotomic order 1).
WeylPoly apply_linear(const Matrix& m, const WeylPoly& a);

// Element of Lambda^p(R^2n) (x) W: sorted index tuples with WeylPoly
// coefficients.
struct KoszulChain {
    size_t dim2n = 0;
    std::map<std::vector<size_t>, WeylPoly> terms;

    static KoszulChain unit(size_t dim2n);

    bool is_zero() const;
    void add_term(std::vector<size_t> idx, const WeylPoly& c);
    KoszulChain& operator+=(const KoszulChain& o);
    KoszulChain& operator-=(const KoszulChain& o);
    friend KoszulChain operator+(KoszulChain a, const KoszulChain& b) { return a += b; }
    friend KoszulChain operator-(KoszulChain a, const KoszulChain& b) { return a -= b; }
    friend KoszulChain operator*(const Rational& s, const KoszulChain& a);
    bool operator==(const KoszulChain& o) const;
    std::string str() const;
};

// Twisted Koszul differential
//   d(a (x) y_I) = sum_j (-1)^j (y_j * a - a * (gamma y_j)) (x) y_j ^ y_I.
KoszulChain koszul_d(const Matrix& gamma, const KoszulChain& c);

// gamma applied to both the Weyl coefficient and the wedge part.
KoszulChain chain_apply(const Matrix& gamma, const KoszulChain& c);

// (a1 (x) y_I) cup (a2 (x) y_J) = (a1 * gamma1(a2)) (x) y_I ^ gamma1(y_J).
KoszulChain twisted_cup(const Matrix& gamma1, const KoszulChain& a,
                        const KoszulChain& b);

// The canonical degree-l(gamma) cocycle: the (l/2)-th divided wedge power
// of the transverse Poisson bivector (coefficient 1).  gamma = identity
// gives the unit chain.
KoszulChain psi_generator(const Matrix& gamma);

// dim H^k at weight w of the gamma-twisted complex, by exact ranks on the
// finite weight slices.  Requires w < wmax (guard band).
size_t koszul_cohomology_dim(const Matrix& gamma, size_t k, unsigned w,
                             unsigned wmax);

// Is a - b an exact chain?  Decided weight slice by weight slice with
// exact linear solves.
bool class_equal_mod_exact(const Matrix& gamma, const KoszulChain& a,
                           const KoszulChain& b);

// Rank of a sparse rational matrix given as columns (row -> value).
size_t sparse_rank(std::vector<std::map<size_t, Rational>> cols);

}  // namespace orb
