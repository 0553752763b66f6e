#pragma once

#include <map>
#include <vector>

#include "orb/matrix.hpp"

namespace orb {

// Element of the exterior algebra on 2n generators: the complexified
// ambient frame d/dz_1..d/dz_n, d/dzbar_1..d/dzbar_n.  Keys are strictly
// increasing generator index tuples.
class Multivector {
public:
    Multivector() : dim_(0) {}
    explicit Multivector(size_t dim2n) : dim_(dim2n) {}

    static Multivector scalar(size_t dim2n, const CycNum& c);
    static Multivector generator(size_t dim2n, size_t i);
    // A single wedge monomial; indices need not be sorted, the sign of the
    // sorting permutation is absorbed into the coefficient.
    static Multivector monomial(size_t dim2n, std::vector<size_t> idx,
                                const CycNum& c);

    size_t dim() const { return dim_; }
    const std::map<std::vector<size_t>, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of a homogeneous value; throws for mixed degrees.
    size_t degree() const;
    bool is_homogeneous() const;

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const CycNum& s, const Multivector& a);

    bool operator==(const Multivector& o) const;
    bool operator!=(const Multivector& o) const { return !(*this == o); }

    std::string str() const;

    void add_term(std::vector<size_t> idx, const CycNum& c);

private:
    size_t dim_;
    std::map<std::vector<size_t>, CycNum> terms_;
};

Multivector wedge(const Multivector& a, const Multivector& b);

// Algebra endomorphism sending generator i to sum_j m[j][i] * generator j
// (column convention, so substitute(A) o substitute(B) = substitute(A*B)).
Multivector substitute(const Multivector& x, const Matrix& m);

// Induced action of a group element g in GL(n,C) on the complexified
// frame: conj(g) on the d/dz block and g on the d/dzbar block.  This is
// the pushforward convention that leaves dz_i ^ dzbar_i invariant under
// unitary scalars.
Multivector act(const Matrix& g, const Multivector& x);

// Express x in the adapted frame built from complex bases of the fixed
// and normal spaces, keep the components with exactly p normal factors,
// and convert back to ambient coordinates.  The two bases together must
// span C^n.
Multivector project_adapted(const Multivector& x,
                            const std::vector<CycVec>& fixed_basis,
                            const std::vector<CycVec>& normal_basis, size_t p);

// The adapted 2n x 2n frame matrix whose columns are, in order, the
// complexified fixed generators (holomorphic then antiholomorphic) and
// then the complexified normal generators.
Matrix adapted_frame(const std::vector<CycVec>& fixed_basis,
                     const std::vector<CycVec>& normal_basis);

}  // namespace orb
