#include "orb/classical_ring.hpp"

#include <algorithm>

#include "orb/error.hpp"
#include "orb/parallel.hpp"

namespace orb {

bool SectorClass::is_zero() const {
    for (const auto& [g, m] : components)
        if (!m.is_zero()) return false;
    return true;
}

SectorClass& SectorClass::operator+=(const SectorClass& o) {
    for (const auto& [g, m] : o.components) {
        auto [it, inserted] = components.try_emplace(g, m);
        if (!inserted) it->second += m;
        if (it->second.is_zero()) components.erase(it);
    }
    return *this;
}

SectorClass& SectorClass::operator-=(const SectorClass& o) {
    SectorClass neg = o;
    for (auto& [g, m] : neg.components) m = -m;
    return *this += neg;
}

SectorClass operator*(const CycNum& s, const SectorClass& a) {
    SectorClass r;
    r.degree = a.degree;
    for (const auto& [g, m] : a.components) {
        Multivector sm = s * m;
        if (!sm.is_zero()) r.components.emplace(g, std::move(sm));
    }
    return r;
}

bool SectorClass::operator==(const SectorClass& o) const {
    SectorClass diff = *this;
    diff -= o;
    return diff.is_zero();
}

ClassicalRing::ClassicalRing(const Group& g, const std::vector<SectorData>& sectors)
    : group_(&g), sectors_(&sectors) {}

Multivector ClassicalRing::top_normal_class(size_t idx) const {
    const SectorData& s = (*sectors_)[idx];
    size_t dim2n = 2 * group_->dim();
    Matrix frame = adapted_frame(s.fixed_basis, s.normal_basis);
    size_t tangential = 2 * s.fixed_basis.size();
    Multivector top = Multivector::scalar(dim2n, CycNum(Rational(1)));
    for (size_t c = tangential; c < frame.cols(); ++c) {
        Multivector gen(dim2n);
        for (size_t r = 0; r < dim2n; ++r) gen.add_term({r}, frame.at(r, c));
        top = wedge(top, gen);
    }
    return top;
}

SectorClass ClassicalRing::reynolds(const SectorClass& x) const {
    const Group& g = *group_;
    SectorClass sum;
    sum.degree = x.degree;
    for (size_t h = 0; h < g.size(); ++h) {
        for (const auto& [gamma, m] : x.components) {
            size_t target = g.mul(g.mul(h, gamma), g.inv(h));
            Multivector moved = act(g.element(h), m);
            SectorClass t;
            t.degree = x.degree;
            if (!moved.is_zero()) t.components.emplace(target, std::move(moved));
            sum += t;
        }
    }
    CycNum scale = CycNum(Rational(1, static_cast<long>(g.size())));
    return scale * sum;
}

std::vector<std::pair<size_t, std::vector<size_t>>> ClassicalRing::flat_index(
    const std::vector<SectorClass>& xs) const {
    std::map<std::pair<size_t, std::vector<size_t>>, bool> seen;
    for (const auto& x : xs)
        for (const auto& [g, m] : x.components)
            for (const auto& [k, c] : m.terms()) seen[{g, k}] = true;
    std::vector<std::pair<size_t, std::vector<size_t>>> keys;
    for (const auto& [k, _] : seen) keys.push_back(k);
    return keys;
}

CycVec ClassicalRing::flatten(
    const SectorClass& x,
    const std::vector<std::pair<size_t, std::vector<size_t>>>& keys) const {
    CycVec v(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) {
        auto it = x.components.find(keys[i].first);
        if (it == x.components.end()) continue;
        auto jt = it->second.terms().find(keys[i].second);
        if (jt != it->second.terms().end()) v[i] = jt->second;
    }
    return v;
}

std::vector<SectorClass> ClassicalRing::invariant_basis(size_t degree) const {
    const Group& g = *group_;
    size_t dim2n = 2 * g.dim();

    // sector-wise spanning set: tangential wedges times the top normal wedge
    std::vector<SectorClass> averaged;
    for (size_t idx = 0; idx < g.size(); ++idx) {
        const SectorData& s = (*sectors_)[idx];
        if (s.ell > degree || degree - s.ell > 2 * s.fixed_basis.size()) continue;
        size_t tdeg = degree - s.ell;
        Matrix frame = adapted_frame(s.fixed_basis, s.normal_basis);
        size_t tangential = 2 * s.fixed_basis.size();
        Multivector top = top_normal_class(idx);

        // all tdeg-subsets of the tangential adapted generators
        std::vector<size_t> subset(tdeg);
        auto emit = [&](const std::vector<size_t>& sel) {
            Multivector tpart = Multivector::scalar(dim2n, CycNum(Rational(1)));
            for (size_t c : sel) {
                Multivector gen(dim2n);
                for (size_t r = 0; r < dim2n; ++r) gen.add_term({r}, frame.at(r, c));
                tpart = wedge(tpart, gen);
            }
            SectorClass x;
            x.degree = degree;
            Multivector full = wedge(tpart, top);
            if (full.is_zero()) return;
            x.components.emplace(idx, std::move(full));
            SectorClass avg = reynolds(x);
            if (!avg.is_zero()) averaged.push_back(std::move(avg));
        };
        // iterate strictly increasing tuples in 0..tangential-1
        std::vector<size_t> sel;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (sel.size() == tdeg) {
                emit(sel);
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

    // extract an exact basis from the averaged spanning set
    auto keys = flat_index(averaged);
    if (averaged.empty()) return {};
    Matrix m(keys.size(), averaged.size());
    for (size_t c = 0; c < averaged.size(); ++c) {
        CycVec v = flatten(averaged[c], keys);
        for (size_t r = 0; r < keys.size(); ++r) m.at(r, c) = v[r];
    }
    std::vector<SectorClass> basis;
    for (size_t c : m.rref().pivots) basis.push_back(averaged[c]);
    return basis;
}

SectorClass ClassicalRing::cup(const SectorClass& x, const SectorClass& y) const {
    const Group& g = *group_;
    SectorClass r;
    r.degree = x.degree + y.degree;
    for (const auto& [a, xa] : x.components)
        for (const auto& [b, yb] : y.components) {
            size_t c = g.mul(a, b);
            const SectorData& sa = (*sectors_)[a];
            const SectorData& sb = (*sectors_)[b];
            const SectorData& sc = (*sectors_)[c];
            if (sa.ell + sb.ell != sc.ell) continue;
            Multivector w = wedge(xa, yb);
            if (w.is_zero()) continue;
            Multivector proj =
                project_adapted(w, sc.fixed_basis, sc.normal_basis, sc.ell);
            if (proj.is_zero()) continue;
            SectorClass t;
            t.degree = r.degree;
            t.components.emplace(c, std::move(proj));
            r += t;
        }
    return r;
}

SectorClass ClassicalRing::unit() const {
    SectorClass u;
    u.degree = 0;
    u.components.emplace(0, Multivector::scalar(2 * group_->dim(), CycNum(Rational(1))));
    return u;
}

std::optional<CycVec> ClassicalRing::coordinates(
    const SectorClass& x, const std::vector<SectorClass>& basis) const {
    std::vector<SectorClass> all = basis;
    all.push_back(x);
    auto keys = flat_index(all);
    Matrix m(keys.size(), basis.size());
    for (size_t c = 0; c < basis.size(); ++c) {
        CycVec v = flatten(basis[c], keys);
        for (size_t r = 0; r < keys.size(); ++r) m.at(r, c) = v[r];
    }
    return m.solve(flatten(x, keys));
}

ClassicalRing::Table ClassicalRing::structure_constants(bool parallel) const {
    Table t;
    size_t maxdeg = 2 * group_->dim();
    for (size_t d = 0; d <= maxdeg; ++d) t.bases.push_back(invariant_basis(d));

    struct Job {
        size_t d1, i, d2, j;
    };
    std::vector<Job> jobs;
    for (size_t d1 = 0; d1 <= maxdeg; ++d1)
        for (size_t d2 = 0; d1 + d2 <= maxdeg; ++d2)
            for (size_t i = 0; i < t.bases[d1].size(); ++i)
                for (size_t j = 0; j < t.bases[d2].size(); ++j)
                    jobs.push_back({d1, i, d2, j});

    std::vector<CycVec> results(jobs.size());
    parallel_for(jobs.size(), parallel, [&](size_t k) {
        const Job& jb = jobs[k];
        SectorClass prod = cup(t.bases[jb.d1][jb.i], t.bases[jb.d2][jb.j]);
        auto coords = coordinates(prod, t.bases[jb.d1 + jb.d2]);
        if (!coords)
            throw invariant_violation("cup product escaped the invariant ring");
        results[k] = std::move(*coords);
    });
    for (size_t k = 0; k < jobs.size(); ++k)
        t.entries[{jobs[k].d1, jobs[k].i, jobs[k].d2, jobs[k].j}] = std::move(results[k]);
    return t;
}

}  // namespace orb
