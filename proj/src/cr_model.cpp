#include "orb/cr_model.hpp"

#include "orb/error.hpp"
#include "orb/parallel.hpp"

namespace orb {

bool GradedTElement::is_zero() const {
    for (const auto& [g, p] : coeffs)
        if (!p.is_zero()) return false;
    return true;
}

GradedTElement& GradedTElement::operator+=(const GradedTElement& o) {
    if (mode != o.mode && !o.coeffs.empty() && !coeffs.empty())
        throw usage_error("grading mode mismatch");
    if (coeffs.empty()) mode = o.mode;
    for (const auto& [g, p] : o.coeffs) {
        auto [it, inserted] = coeffs.try_emplace(g, p);
        if (!inserted) it->second += p;
        if (it->second.is_zero()) coeffs.erase(it);
    }
    return *this;
}

GradedTElement& GradedTElement::operator-=(const GradedTElement& o) {
    GradedTElement neg;
    neg.mode = o.mode;
    for (const auto& [g, p] : o.coeffs) neg.coeffs[g] = TPoly::zero() - p;
    return *this += neg;
}

GradedTElement operator*(const TPoly& s, const GradedTElement& a) {
    GradedTElement r;
    r.mode = a.mode;
    for (const auto& [g, p] : a.coeffs) {
        TPoly sp = s * p;
        if (!sp.is_zero()) r.coeffs.emplace(g, std::move(sp));
    }
    return r;
}

bool GradedTElement::operator==(const GradedTElement& o) const {
    if (mode != o.mode) return false;
    GradedTElement diff = *this;
    diff -= o;
    return diff.is_zero();
}

CRModel::CRModel(const Group& g, const std::vector<SectorData>& sectors)
    : group_(&g), sectors_(&sectors) {}

GradedTElement CRModel::e(size_t idx, GradingMode mode) const {
    GradedTElement x;
    x.mode = mode;
    x.coeffs[idx] = TPoly::one();
    return x;
}

Rational CRModel::degree(const GradedTElement& x) const {
    std::optional<Rational> deg;
    for (const auto& [g, p] : x.coeffs) {
        Rational base = x.mode == GradingMode::HT
                            ? Rational(static_cast<long>((*sectors_)[g].ell))
                            : 2 * (*sectors_)[g].age;
        for (const auto& [q, c] : p.terms()) {
            Rational d = base + 2 * q;
            if (!deg)
                deg = d;
            else if (*deg != d)
                throw usage_error("degree of a mixed element");
        }
    }
    return deg.value_or(Rational(0));
}

size_t CRModel::dim_fixed_intersection(size_t i, size_t j) const {
    return intersect_spans((*sectors_)[i].fixed_basis, (*sectors_)[j].fixed_basis,
                           group_->dim())
        .size();
}

GradedTElement CRModel::ht_product(const GradedTElement& x,
                                   const GradedTElement& y) const {
    if (x.mode != GradingMode::HT || y.mode != GradingMode::HT)
        throw usage_error("ht_product expects HT-graded inputs");
    GradedTElement r;
    r.mode = GradingMode::HT;
    for (const auto& [a, pa] : x.coeffs)
        for (const auto& [b, pb] : y.coeffs) {
            size_t c = group_->mul(a, b);
            long num = static_cast<long>((*sectors_)[a].ell) +
                       static_cast<long>((*sectors_)[b].ell) -
                       static_cast<long>((*sectors_)[c].ell);
            Rational exp = Rational(num, 2);
            if (exp < 0 || !is_integer(exp))
                throw invariant_violation("length defect is not an even codimension");
            GradedTElement t;
            t.mode = GradingMode::HT;
            TPoly prod = pa * pb * TPoly::t_power(exp);
            if (prod.is_zero()) continue;
            t.coeffs.emplace(c, std::move(prod));
            r += t;
        }
    return r;
}

Rational CRModel::obstruction_rank(size_t i, size_t j) const {
    size_t g3 = group_->inv(group_->mul(i, j));
    Rational r = Rational(static_cast<long>(dim_fixed_intersection(i, j))) -
                 Rational(static_cast<long>(group_->dim())) + (*sectors_)[i].age +
                 (*sectors_)[j].age + (*sectors_)[g3].age;
    if (r < 0 || !is_integer(r))
        throw invariant_violation("obstruction rank is not a nonnegative integer");
    return r;
}

GradedTElement CRModel::cr_product(const GradedTElement& x,
                                   const GradedTElement& y) const {
    if (x.mode != GradingMode::CR || y.mode != GradingMode::CR)
        throw usage_error("cr_product expects CR-graded inputs");
    GradedTElement r;
    r.mode = GradingMode::CR;
    for (const auto& [a, pa] : x.coeffs)
        for (const auto& [b, pb] : y.coeffs) {
            size_t c = group_->mul(a, b);
            Rational exp =
                (*sectors_)[a].age + (*sectors_)[b].age - (*sectors_)[c].age;
            // independent route: obstruction rank plus the codimension of
            // the pair intersection inside the product fixed space
            Rational codim =
                Rational(static_cast<long>((*sectors_)[c].fixed_basis.size())) -
                Rational(static_cast<long>(dim_fixed_intersection(a, b)));
            Rational exp2 = obstruction_rank(a, b) + codim;
            if (exp != exp2)
                throw invariant_violation("age and codimension exponents disagree");
            if (exp < 0 || !is_integer(exp))
                throw invariant_violation("product exponent is not a nonnegative integer");
            GradedTElement t;
            t.mode = GradingMode::CR;
            TPoly prod = pa * pb * TPoly::t_power(exp);
            if (prod.is_zero()) continue;
            t.coeffs.emplace(c, std::move(prod));
            r += t;
        }
    return r;
}

GradedTElement CRModel::j_map(const GradedTElement& x) const {
    if (x.mode != GradingMode::CR) throw usage_error("j_map expects a CR element");
    GradedTElement r;
    r.mode = GradingMode::HT;
    for (const auto& [g, p] : x.coeffs) {
        Rational shift = -(*sectors_)[group_->inv(g)].age;
        r.coeffs[g] = p * TPoly::t_power(shift);
    }
    return r;
}

GradedTElement CRModel::j_inverse(const GradedTElement& x) const {
    if (x.mode != GradingMode::HT)
        throw usage_error("j_inverse expects an HT element");
    GradedTElement r;
    r.mode = GradingMode::CR;
    for (const auto& [g, p] : x.coeffs) {
        Rational shift = (*sectors_)[group_->inv(g)].age;
        r.coeffs[g] = p * TPoly::t_power(shift);
    }
    return r;
}

std::optional<Rational> CRModel::filtration_level(const GradedTElement& x) const {
    if (x.mode != GradingMode::HT)
        throw usage_error("filtration is defined on HT elements");
    std::optional<Rational> level;
    for (const auto& [g, p] : x.coeffs)
        for (const auto& [q, c] : p.terms()) {
            Rational lv = 2 * q;  // deg - ell(g) for the term t^q e_g
            if (!level || lv < *level) level = lv;
        }
    return level;
}

DeformedRing::Table CRModel::associated_graded(const DeformedRing& dr,
                                               bool parallel) const {
    const Group& g = *group_;
    size_t nc = g.classes().size();
    DeformedRing::Table expect = dr.hh_table(parallel);
    DeformedRing::Table got;
    got.entries.assign(nc, std::vector<std::vector<Integer>>(
                               nc, std::vector<Integer>(nc, Integer(0))));
    got.class_degree = expect.class_degree;

    auto class_sum = [&](size_t cls) {
        GradedTElement x;
        x.mode = GradingMode::HT;
        for (size_t h : g.classes()[cls]) x.coeffs[h] = TPoly::one();
        return x;
    };

    std::vector<std::pair<size_t, size_t>> jobs;
    for (size_t a = 0; a < nc; ++a)
        for (size_t b = 0; b < nc; ++b) jobs.push_back({a, b});
    std::vector<std::vector<Integer>> rows(jobs.size());
    parallel_for(jobs.size(), parallel, [&](size_t k) {
        auto [a, b] = jobs[k];
        GradedTElement prod = ht_product(class_sum(a), class_sum(b));
        std::vector<Integer> row(nc, Integer(0));
        std::vector<bool> seen(nc, false);
        for (const auto& [h, p] : prod.coeffs) {
            // keep only the filtration-preserving (t^0) part
            CycNum c0 = p.coeff(Rational(0));
            if (c0.is_zero()) continue;
            Rational rc = c0.rational_value();
            if (!is_integer(rc))
                throw invariant_violation("graded coefficient is not an integer");
            size_t cls = g.class_of(h);
            Integer v = num(rc);
            if (seen[cls] && row[cls] != v)
                throw invariant_violation("graded product is not a class function");
            row[cls] = v;
            seen[cls] = true;
        }
        rows[k] = std::move(row);
    });
    for (size_t k = 0; k < jobs.size(); ++k) {
        auto [a, b] = jobs[k];
        got.entries[a][b] = std::move(rows[k]);
        if (got.entries[a][b] != expect.entries[a][b])
            throw invariant_violation("graded table differs from the convolution table");
    }
    return got;
}

}  // namespace orb
