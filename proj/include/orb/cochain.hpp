#pragma once

#include <functional>
#include <map>
#include <vector>

#include "orb/group.hpp"
#include "orb/multivector.hpp"

namespace orb {

// Polynomial in nvars commuting coordinates with Q(zeta) coefficients.
// The coordinates are complexified eigencoordinates of a fixed group
// element, so linear substitutions are diagonal scalings.
class PolyFun {
public:
    using Key = std::vector<unsigned>;

    PolyFun() : nvars_(0) {}
    explicit PolyFun(size_t nvars) : nvars_(nvars) {}

    static PolyFun constant(size_t nvars, const CycNum& c);
    static PolyFun one(size_t nvars) { return constant(nvars, CycNum(Rational(1))); }
    static PolyFun coordinate(size_t nvars, size_t i);

    size_t nvars() const { return nvars_; }
    const std::map<Key, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Key k, const CycNum& c);
    // Coefficient of the constant monomial (value at the origin).
    CycNum constant_term() const;

    PolyFun operator-() const;
    PolyFun& operator+=(const PolyFun& o);
    PolyFun& operator-=(const PolyFun& o);
    friend PolyFun operator+(PolyFun a, const PolyFun& b) { return a += b; }
    friend PolyFun operator-(PolyFun a, const PolyFun& b) { return a -= b; }
    friend PolyFun operator*(const PolyFun& a, const PolyFun& b);
    friend PolyFun operator*(const CycNum& s, const PolyFun& a);
    bool operator==(const PolyFun& o) const;
    bool operator!=(const PolyFun& o) const { return !(*this == o); }

    PolyFun derivative(size_t i) const;
    // u_i -> lambda * u_i.
    PolyFun scale_var(size_t i, const CycNum& lambda) const;

    std::string str() const;

private:
    size_t nvars_;
    std::map<Key, CycNum> terms_;
};

// Diagonalized sector data: coordinate i is scaled by lambdas[i] under the
// group element.  Normal coordinates are those with eigenvalue != 1.
struct SectorFrame {
    size_t nvars = 0;
    std::vector<CycNum> lambdas;

    std::vector<size_t> normal_indices() const;
    std::vector<size_t> tangential_indices() const;
    // Full twist of a function by the element.
    PolyFun twist(const PolyFun& f) const;
};

// Complexified eigenframe of element idx: 2n coordinates, the first n
// carrying the eigenvalues of the element and the last n their conjugates.
SectorFrame frame_from_element(const Group& g, size_t idx);

// A k-multilinear polynomial-valued cochain, represented operationally.
struct PolyCochain {
    size_t arity = 0;
    std::function<PolyFun(const std::vector<PolyFun>&)> eval;
};

// Twisted divided difference in coordinate i: the monomial c u_i^d R maps
// to c (1 + lambda + .. + lambda^{d-1}) u_i^{d-1} R, i.e. the exact
// quotient (f - f with u_i scaled) / ((1 - lambda) u_i).
PolyFun ddiff(const PolyFun& f, size_t i, const CycNum& lambda);

// The normal divided-difference cocycle: the signed average over orderings
// of the normal coordinates of the telescoping divided differences.
PolyFun omega(const SectorFrame& frame, const std::vector<PolyFun>& inputs);
PolyCochain omega_cochain(const SectorFrame& frame);

// Hochschild coboundary with the module structure twisted on the right:
// (bF)(f_1..f_{k+1}) = f_1 F(f_2..) + sum (-1)^i F(.., f_i f_{i+1}, ..)
//                      + (-1)^{k+1} F(f_1..f_k) * twist(f_{k+1}).
PolyFun twisted_coboundary(const SectorFrame& frame, const PolyCochain& F,
                           const std::vector<PolyFun>& inputs);

// Does the coboundary of omega vanish on the given l+1 inputs?
bool verify_twisted_cocycle(const SectorFrame& frame,
                            const std::vector<PolyFun>& inputs);

// The cochain Y * (X # omega): the first (arity - l) arguments feed X as
// derivations, the rest feed omega.  X is a multivector on the frame
// coordinates (constant coefficients, tangential directions).
PolyCochain t1(const SectorFrame& frame, const Multivector& x, const CycNum& y);

// Extraction of the multivector underlying a cochain: for each sorted
// k-subset S, the signed sum over orderings of F evaluated on the
// coordinate functions of S, taken at the origin.
Multivector l2_extract(const SectorFrame& frame, const PolyCochain& F);

// Sector projection: keep the terms carrying every normal direction.
Multivector l3_project(const SectorFrame& frame, const Multivector& m);

// l3(l2(t1(term))) == xi termwise, for a homogeneous sector class xi in
// frame coordinates (every term contains the full normal wedge).
bool roundtrip_check(const SectorFrame& frame, const Multivector& xi);

// Crossed-product cochain layer: inputs tagged by group elements, output
// tagged by their product.
struct CrossedArg {
    PolyFun f;
    size_t elem = 0;
};
struct CrossedCochain {
    size_t arity = 0;
    std::function<std::pair<PolyFun, size_t>(const std::vector<CrossedArg>&)> eval;
};

// action(g, f) is the group action on functions.
CrossedCochain t2_extend(const Group& g, const PolyCochain& F,
                         std::function<PolyFun(size_t, const PolyFun&)> action);
PolyCochain l1_restrict(const CrossedCochain& F);

}  // namespace orb
