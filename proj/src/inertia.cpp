#include "orb/inertia.hpp"

#include <numeric>

#include "orb/error.hpp"

namespace orb {

SectorData sector(const Group& g, size_t idx) {
    if (idx >= g.size()) throw usage_error("element index out of range");
    const Matrix& gamma = g.element(idx);
    size_t n = g.dim();
    Matrix shifted = gamma - Matrix::identity(n);

    SectorData s;
    s.element = idx;
    s.fixed_basis = shifted.kernel_basis();
    s.normal_basis = shifted.image_basis();
    if (s.fixed_basis.size() + s.normal_basis.size() != n)
        throw invariant_violation("ker + im dimension mismatch for finite-order element");
    s.ell = 2 * s.normal_basis.size();

    // eigen-angles on the normal space: for each k coprime-or-not in
    // 1..m-1, the multiplicity of the eigenvalue zeta_m^k is
    // dim ker(gamma - zeta_m^k I); all eigenvalues != 1 live on N^gamma
    size_t m = g.element_order(idx);
    size_t total = 0;
    for (size_t k = 1; k < m; ++k) {
        CycNum ev = CycNum::zeta(static_cast<unsigned>(m), static_cast<long>(k));
        Matrix shifted_k = gamma - Matrix::diagonal(CycVec(n, ev));
        size_t mult = shifted_k.kernel_basis().size();
        if (mult == 0) continue;
        Rational theta(static_cast<long>(k), static_cast<long>(m));
        s.angles.emplace_back(theta, mult);
        s.age += theta * Rational(static_cast<long>(mult));
        total += mult;
    }
    if (total != s.normal_basis.size())
        throw invariant_violation("eigen-angle multiplicities do not fill the normal space");
    return s;
}

std::vector<SectorData> all_sectors(const Group& g) {
    std::vector<SectorData> v;
    v.reserve(g.size());
    for (size_t i = 0; i < g.size(); ++i) v.push_back(sector(g, i));
    return v;
}

bool l_additive(const std::vector<SectorData>& sectors, const Group& g,
                size_t i, size_t j) {
    return sectors[i].ell + sectors[j].ell == sectors[g.mul(i, j)].ell;
}

std::vector<CycVec> intersect_spans(const std::vector<CycVec>& a,
                                    const std::vector<CycVec>& b, size_t dim) {
    if (a.empty() || b.empty()) return {};
    // kernel of [A | -B]: a solution gives a vector A x = B y in both spans
    Matrix m(dim, a.size() + b.size());
    for (size_t c = 0; c < a.size(); ++c)
        for (size_t r = 0; r < dim; ++r) m.at(r, c) = a[c][r];
    for (size_t c = 0; c < b.size(); ++c)
        for (size_t r = 0; r < dim; ++r) m.at(r, a.size() + c) = -b[c][r];
    std::vector<CycVec> inter;
    for (const auto& k : m.kernel_basis()) {
        CycVec v(dim);
        for (size_t c = 0; c < a.size(); ++c)
            for (size_t r = 0; r < dim; ++r) v[r] += k[c] * a[c][r];
        inter.push_back(std::move(v));
    }
    // independent by construction from independent kernel vectors; still
    // reduce to a basis of the span for a canonical answer
    if (span_rank(inter, dim) != inter.size())
        throw invariant_violation("intersection basis is dependent");
    return inter;
}

bool same_span(const std::vector<CycVec>& a, const std::vector<CycVec>& b,
               size_t dim) {
    size_t ra = span_rank(a, dim), rb = span_rank(b, dim);
    if (ra != rb) return false;
    std::vector<CycVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_rank(both, dim) == ra;
}

CodimLemmaVerdict codim_lemma_check(const std::vector<SectorData>& sectors,
                                    const Group& g, size_t i, size_t j) {
    size_t n = g.dim();
    const SectorData& si = sectors[i];
    const SectorData& sj = sectors[j];
    const SectorData& sij = sectors[g.mul(i, j)];

    CodimLemmaVerdict v{};
    v.l_additive = l_additive(sectors, g, i, j);

    std::vector<CycVec> stacked = si.fixed_basis;
    stacked.insert(stacked.end(), sj.fixed_basis.begin(), sj.fixed_basis.end());
    bool spans = span_rank(stacked, n) == n;
    bool inter_matches =
        same_span(intersect_spans(si.fixed_basis, sj.fixed_basis, n),
                  sij.fixed_basis, n);
    v.geometric = spans && inter_matches;
    return v;
}

}  // namespace orb
