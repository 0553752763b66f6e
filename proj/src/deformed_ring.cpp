#include "orb/deformed_ring.hpp"

#include "orb/error.hpp"
#include "orb/parallel.hpp"

namespace orb {

bool ClassFunctionElement::is_zero() const {
    for (const auto& [g, p] : coeffs)
        if (!p.is_zero()) return false;
    return true;
}

ClassFunctionElement& ClassFunctionElement::operator+=(const ClassFunctionElement& o) {
    for (const auto& [g, p] : o.coeffs) {
        auto [it, inserted] = coeffs.try_emplace(g, p);
        if (!inserted) it->second += p;
        if (it->second.is_zero()) coeffs.erase(it);
    }
    return *this;
}

ClassFunctionElement& ClassFunctionElement::operator-=(const ClassFunctionElement& o) {
    ClassFunctionElement neg;
    for (const auto& [g, p] : o.coeffs) neg.coeffs[g] = TPoly::zero() - p;
    return *this += neg;
}

ClassFunctionElement operator*(const TPoly& s, const ClassFunctionElement& a) {
    ClassFunctionElement r;
    for (const auto& [g, p] : a.coeffs) {
        TPoly sp = s * p;
        if (!sp.is_zero()) r.coeffs.emplace(g, std::move(sp));
    }
    return r;
}

bool ClassFunctionElement::operator==(const ClassFunctionElement& o) const {
    ClassFunctionElement diff = *this;
    diff -= o;
    return diff.is_zero();
}

DeformedRing::DeformedRing(const Group& g, const std::vector<SectorData>& sectors)
    : group_(&g), sectors_(&sectors) {}

ClassFunctionElement DeformedRing::e(size_t idx) const {
    ClassFunctionElement x;
    x.coeffs[idx] = TPoly::one();
    return x;
}

ClassFunctionElement DeformedRing::class_sum(size_t cls) const {
    ClassFunctionElement x;
    for (size_t g : group_->classes()[cls]) x.coeffs[g] = TPoly::one();
    return x;
}

bool DeformedRing::is_invariant(const ClassFunctionElement& x) const {
    for (const auto& cls : group_->classes()) {
        TPoly first;
        bool have = false;
        for (size_t g : cls) {
            auto it = x.coeffs.find(g);
            TPoly p = it == x.coeffs.end() ? TPoly::zero() : it->second;
            if (!have) {
                first = p;
                have = true;
            } else if (p != first) {
                return false;
            }
        }
    }
    return true;
}

ClassFunctionElement DeformedRing::hh_product(const ClassFunctionElement& x,
                                              const ClassFunctionElement& y) const {
    ClassFunctionElement r;
    for (const auto& [a, pa] : x.coeffs)
        for (const auto& [b, pb] : y.coeffs) {
            if (!l_additive(*sectors_, *group_, a, b)) continue;
            ClassFunctionElement t;
            TPoly prod = pa * pb;
            if (prod.is_zero()) continue;
            t.coeffs.emplace(group_->mul(a, b), std::move(prod));
            r += t;
        }
    return r;
}

DeformedRing::Table DeformedRing::hh_table(bool parallel) const {
    const Group& g = *group_;
    size_t nc = g.classes().size();
    Table t;
    t.entries.assign(nc, std::vector<std::vector<Integer>>(
                             nc, std::vector<Integer>(nc, Integer(0))));
    t.class_degree.resize(nc);
    for (size_t c = 0; c < nc; ++c)
        t.class_degree[c] = (*sectors_)[g.classes()[c][0]].ell;

    std::vector<std::pair<size_t, size_t>> jobs;
    for (size_t a = 0; a < nc; ++a)
        for (size_t b = 0; b < nc; ++b) jobs.push_back({a, b});

    std::vector<std::vector<Integer>> rows(jobs.size());
    parallel_for(jobs.size(), parallel, [&](size_t k) {
        auto [a, b] = jobs[k];
        std::vector<Integer> row(nc, Integer(0));
        // pair enumeration over the two classes
        for (size_t g1 : g.classes()[a])
            for (size_t g2 : g.classes()[b]) {
                if (!l_additive(*sectors_, g, g1, g2)) continue;
                row[g.class_of(g.mul(g1, g2))] += 1;
            }
        // the count above sums over the whole target class; normalize to
        // the per-element coefficient
        for (size_t c = 0; c < nc; ++c) {
            Integer size = Integer(g.classes()[c].size());
            if (row[c] % size != 0)
                throw invariant_violation("class product is not a class function");
            row[c] /= size;
        }
        // cross-check against the element-level product
        ClassFunctionElement prod = hh_product(class_sum(a), class_sum(b));
        if (!is_invariant(prod))
            throw invariant_violation("class-sum product is not invariant");
        ClassFunctionElement expect;
        for (size_t c = 0; c < nc; ++c) {
            long cnt = static_cast<long>(row[c]);
            if (cnt == 0) continue;
            TPoly coeff = TPoly::monomial(Rational(0), CycNum(Rational(cnt)));
            expect += coeff * class_sum(c);
        }
        if (!(prod == expect))
            throw invariant_violation("class table disagrees with element product");
        rows[k] = std::move(row);
    });
    for (size_t k = 0; k < jobs.size(); ++k)
        t.entries[jobs[k].first][jobs[k].second] = std::move(rows[k]);
    return t;
}

}  // namespace orb
