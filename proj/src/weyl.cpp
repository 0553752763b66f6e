#include "orb/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "orb/error.hpp"

namespace orb {

WeylPoly WeylPoly::constant(size_t dim2n, const Rational& c) {
    WeylPoly p(dim2n);
    p.add_term({std::vector<unsigned>(dim2n, 0), 0}, c);
    return p;
}

WeylPoly WeylPoly::variable(size_t dim2n, size_t i) {
    if (i >= dim2n) throw usage_error("variable index out of range");
    std::vector<unsigned> e(dim2n, 0);
    e[i] = 1;
    WeylPoly p(dim2n);
    p.add_term({std::move(e), 0}, Rational(1));
    return p;
}

WeylPoly WeylPoly::hbar(size_t dim2n, unsigned power) {
    WeylPoly p(dim2n);
    p.add_term({std::vector<unsigned>(dim2n, 0), power}, Rational(1));
    return p;
}

void WeylPoly::add_term(Key k, const Rational& c) {
    if (c == 0) return;
    if (k.first.size() != n2_) throw usage_error("exponent vector length mismatch");
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

unsigned key_weight(const WeylPoly::Key& k) {
    unsigned w = 2 * k.second;
    for (unsigned e : k.first) w += e;
    return w;
}

}  // namespace

unsigned WeylPoly::weight() const {
    if (!is_weight_homogeneous()) throw usage_error("weight of a mixed polynomial");
    return terms_.empty() ? 0 : key_weight(terms_.begin()->first);
}

bool WeylPoly::is_weight_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned w = key_weight(terms_.begin()->first);
    for (const auto& [k, c] : terms_)
        if (key_weight(k) != w) return false;
    return true;
}

WeylPoly WeylPoly::operator-() const {
    WeylPoly p(n2_);
    for (const auto& [k, c] : terms_) p.terms_[k] = -c;
    return p;
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& o) {
    if (n2_ == 0 && terms_.empty()) n2_ = o.n2_;
    if (n2_ != o.n2_) throw usage_error("variable count mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& o) { return *this += -o; }

WeylPoly operator*(const WeylPoly& a, const WeylPoly& b) {
    if (a.n2_ != b.n2_) throw usage_error("variable count mismatch");
    WeylPoly r(a.n2_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            WeylPoly::Key k = ka;
            for (size_t i = 0; i < k.first.size(); ++i) k.first[i] += kb.first[i];
            k.second += kb.second;
            r.add_term(std::move(k), ca * cb);
        }
    return r;
}

WeylPoly operator*(const Rational& s, const WeylPoly& a) {
    WeylPoly r(a.n2_);
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
}

bool WeylPoly::operator==(const WeylPoly& o) const {
    return n2_ == o.n2_ && terms_ == o.terms_;
}

WeylPoly WeylPoly::derivative(size_t i) const {
    WeylPoly r(n2_);
    for (const auto& [k, c] : terms_) {
        if (k.first[i] == 0) continue;
        Key k2 = k;
        --k2.first[i];
        r.add_term(std::move(k2), c * Rational(k.first[i]));
    }
    return r;
}

std::string WeylPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        for (size_t i = 0; i < k.first.size(); ++i)
            if (k.first[i]) {
                os << "*y" << i + 1;
                if (k.first[i] > 1) os << "^" << k.first[i];
            }
        if (k.second) {
            os << "*h";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

Rational poisson_entry(size_t dim2n, size_t i, size_t j) {
    size_t n = dim2n / 2;
    if (j == i + n && i < n) return Rational(-1);
    if (i == j + n && j < n) return Rational(1);
    return Rational(0);
}

namespace {

using TensorKey = std::pair<WeylPoly::Key, WeylPoly::Key>;
using Tensor = std::map<TensorKey, Rational>;

void tensor_add(Tensor& t, TensorKey k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

// partial derivative applied to one factor key; false when it vanishes
bool key_derive(WeylPoly::Key& k, size_t i, Rational& scale) {
    if (k.first[i] == 0) return false;
    scale *= Rational(k.first[i]);
    --k.first[i];
    return true;
}

}  // namespace

WeylPoly moyal(const WeylPoly& a, const WeylPoly& b) {
    if (a.dim() != b.dim()) throw usage_error("variable count mismatch");
    size_t dim2n = a.dim();
    size_t n = dim2n / 2;

    Tensor cur;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) tensor_add(cur, {ka, kb}, ca * cb);

    WeylPoly result(dim2n);
    Rational factorial(1);
    for (unsigned k = 0; !cur.empty(); ++k) {
        if (k > 0) factorial *= Rational(k);
        Rational inv_fact = Rational(1) / factorial;
        for (const auto& [key, c] : cur) {
            WeylPoly::Key prod = key.first;
            for (size_t i = 0; i < dim2n; ++i) prod.first[i] += key.second.first[i];
            prod.second += key.second.second + k;  // h^k from this order
            result.add_term(std::move(prod), c * inv_fact);
        }
        // one application of the Poisson bidifferential operator
        Tensor next;
        for (const auto& [key, c] : cur)
            for (size_t i = 0; i < n; ++i) {
                // the two nonzero entries pi(i, i+n) = -1, pi(i+n, i) = 1
                auto apply = [&](size_t di, size_t dj, const Rational& piv) {
                    TensorKey k2 = key;
                    Rational scale = c * piv;
                    if (!key_derive(k2.first, di, scale)) return;
                    if (!key_derive(k2.second, dj, scale)) return;
                    tensor_add(next, std::move(k2), scale);
                };
                apply(i, i + n, Rational(-1));
                apply(i + n, i, Rational(1));
            }
        cur = std::move(next);
    }
    return result;
}

namespace {

Rational rational_entry(const Matrix& m, size_t r, size_t c) {
    const CycNum& e = m.at(r, c);
    if (!e.is_rational()) throw usage_error("matrix entry is not rational");
    return e.rational_value();
}

}  // namespace

WeylPoly apply_linear(const Matrix& m, const WeylPoly& a) {
    size_t dim2n = a.dim();
    if (m.rows() != dim2n || m.cols() != dim2n)
        throw usage_error("substitution matrix shape mismatch");
    std::vector<WeylPoly> images;
    for (size_t i = 0; i < dim2n; ++i) {
        WeylPoly img(dim2n);
        for (size_t j = 0; j < dim2n; ++j) {
            Rational v = rational_entry(m, j, i);
            if (v != 0) img += v * WeylPoly::variable(dim2n, j);
        }
        images.push_back(std::move(img));
    }
    WeylPoly r(dim2n);
    for (const auto& [k, c] : a.terms()) {
        WeylPoly term = c * WeylPoly::hbar(dim2n, k.second);
        for (size_t i = 0; i < dim2n; ++i)
            for (unsigned p = 0; p < k.first[i]; ++p) term = term * images[i];
        r += term;
    }
    return r;
}

KoszulChain KoszulChain::unit(size_t dim2n) {
    KoszulChain c;
    c.dim2n = dim2n;
    c.terms[{}] = WeylPoly::one(dim2n);
    return c;
}

bool KoszulChain::is_zero() const {
    for (const auto& [k, p] : terms)
        if (!p.is_zero()) return false;
    return true;
}

void KoszulChain::add_term(std::vector<size_t> idx, const WeylPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(std::move(idx), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

KoszulChain& KoszulChain::operator+=(const KoszulChain& o) {
    if (dim2n == 0 && terms.empty()) dim2n = o.dim2n;
    if (dim2n != o.dim2n) throw usage_error("ambient dimension mismatch");
    for (const auto& [k, p] : o.terms) add_term(k, p);
    return *this;
}

KoszulChain& KoszulChain::operator-=(const KoszulChain& o) {
    KoszulChain neg;
    neg.dim2n = o.dim2n;
    for (const auto& [k, p] : o.terms) neg.terms[k] = -p;
    return *this += neg;
}

KoszulChain operator*(const Rational& s, const KoszulChain& a) {
    KoszulChain r;
    r.dim2n = a.dim2n;
    for (const auto& [k, p] : a.terms) r.add_term(k, s * p);
    return r;
}

bool KoszulChain::operator==(const KoszulChain& o) const {
    KoszulChain diff = *this;
    diff -= o;
    return diff.is_zero();
}

std::string KoszulChain::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : terms) {
        if (!first) os << "  +  ";
        first = false;
        os << "[" << p.str() << "]";
        for (size_t i : k) os << "^y" << i + 1;
    }
    return os.str();
}

namespace {

// prepend index j to the sorted tuple; 0 on collision, else +-1
int wedge_front(size_t j, const std::vector<size_t>& idx, std::vector<size_t>& out) {
    out.clear();
    out.reserve(idx.size() + 1);
    int sign = 1;
    bool placed = false;
    for (size_t i : idx) {
        if (i == j) return 0;
        if (!placed && i > j) {
            out.push_back(j);
            placed = true;
        }
        if (!placed) sign = -sign;
        out.push_back(i);
    }
    if (!placed) out.push_back(j);
    return sign;
}

}  // namespace

KoszulChain koszul_d(const Matrix& gamma, const KoszulChain& c) {
    size_t dim2n = c.dim2n;
    KoszulChain r;
    r.dim2n = dim2n;
    std::vector<WeylPoly> vars;
    std::vector<WeylPoly> gvars;  // gamma . y_j
    for (size_t j = 0; j < dim2n; ++j) {
        vars.push_back(WeylPoly::variable(dim2n, j));
        WeylPoly g(dim2n);
        for (size_t k = 0; k < dim2n; ++k) {
            Rational v = rational_entry(gamma, k, j);
            if (v != 0) g += v * WeylPoly::variable(dim2n, k);
        }
        gvars.push_back(std::move(g));
    }
    std::vector<size_t> merged;
    for (const auto& [idx, a] : c.terms)
        for (size_t j = 0; j < dim2n; ++j) {
            int sign = wedge_front(j, idx, merged);
            if (sign == 0) continue;
            // the displayed sign (-1)^j with 1-based j
            if ((j + 1) % 2 == 1) sign = -sign;
            WeylPoly coeff = moyal(vars[j], a) - moyal(a, gvars[j]);
            if (coeff.is_zero()) continue;
            r.add_term(merged, sign > 0 ? coeff : -coeff);
        }
    return r;
}

namespace {

// wedge part substitution: y_I -> product of gamma-images, expanded
KoszulChain wedge_substitute(const Matrix& gamma, const KoszulChain& c) {
    size_t dim2n = c.dim2n;
    KoszulChain r;
    r.dim2n = dim2n;
    for (const auto& [idx, a] : c.terms) {
        // expand the wedge of the substituted generators
        std::map<std::vector<size_t>, Rational> acc;
        acc[{}] = Rational(1);
        std::vector<size_t> merged;
        for (size_t i : idx) {
            std::map<std::vector<size_t>, Rational> next;
            for (const auto& [key, coef] : acc)
                for (size_t j = 0; j < dim2n; ++j) {
                    Rational v = rational_entry(gamma, j, i);
                    if (v == 0) continue;
                    // append j at the end of key, tracking the sort sign
                    int sign = 1;
                    bool clash = false;
                    merged.clear();
                    bool placed = false;
                    for (size_t k : key) {
                        if (k == j) {
                            clash = true;
                            break;
                        }
                        if (!placed && k > j) {
                            merged.push_back(j);
                            placed = true;
                        }
                        if (placed) sign = -sign;
                        merged.push_back(k);
                    }
                    if (clash) continue;
                    if (!placed) merged.push_back(j);
                    Rational add = coef * v * Rational(sign);
                    auto [it, ins] = next.try_emplace(merged, add);
                    if (!ins) {
                        it->second += add;
                        if (it->second == 0) next.erase(it);
                    }
                }
            acc = std::move(next);
        }
        for (const auto& [key, coef] : acc) r.add_term(key, coef * a);
    }
    return r;
}

}  // namespace

KoszulChain chain_apply(const Matrix& gamma, const KoszulChain& c) {
    KoszulChain moved = wedge_substitute(gamma, c);
    KoszulChain r;
    r.dim2n = c.dim2n;
    for (const auto& [idx, a] : moved.terms) r.add_term(idx, apply_linear(gamma, a));
    return r;
}

KoszulChain twisted_cup(const Matrix& gamma1, const KoszulChain& a,
                        const KoszulChain& b) {
    KoszulChain gb = chain_apply(gamma1, b);
    KoszulChain r;
    r.dim2n = a.dim2n;
    std::vector<size_t> merged;
    for (const auto& [ia, pa] : a.terms)
        for (const auto& [ib, pb] : gb.terms) {
            // merge sorted tuples with sign
            merged.clear();
            int sign = 1;
            size_t i = 0, j = 0;
            bool clash = false;
            while (i < ia.size() && j < ib.size()) {
                if (ia[i] == ib[j]) {
                    clash = true;
                    break;
                }
                if (ia[i] < ib[j]) {
                    merged.push_back(ia[i++]);
                } else {
                    if ((ia.size() - i) % 2 == 1) sign = -sign;
                    merged.push_back(ib[j++]);
                }
            }
            if (clash) continue;
            while (i < ia.size()) merged.push_back(ia[i++]);
            while (j < ib.size()) merged.push_back(ib[j++]);
            WeylPoly coeff = moyal(pa, pb);
            if (coeff.is_zero()) continue;
            r.add_term(merged, sign > 0 ? coeff : -coeff);
        }
    return r;
}

namespace {

// wedge of two constant-coefficient chains (used for bivector powers)
KoszulChain const_wedge(const KoszulChain& a, const KoszulChain& b) {
    KoszulChain r;
    r.dim2n = a.dim2n;
    for (const auto& [ia, pa] : a.terms)
        for (const auto& [ib, pb] : b.terms) {
            std::vector<size_t> merged;
            int sign = 1;
            size_t i = 0, j = 0;
            bool clash = false;
            while (i < ia.size() && j < ib.size()) {
                if (ia[i] == ib[j]) {
                    clash = true;
                    break;
                }
                if (ia[i] < ib[j]) {
                    merged.push_back(ia[i++]);
                } else {
                    if ((ia.size() - i) % 2 == 1) sign = -sign;
                    merged.push_back(ib[j++]);
                }
            }
            if (clash) continue;
            while (i < ia.size()) merged.push_back(ia[i++]);
            while (j < ib.size()) merged.push_back(ib[j++]);
            WeylPoly coeff = pa * pb;
            if (coeff.is_zero()) continue;
            r.add_term(merged, sign > 0 ? coeff : -coeff);
        }
    return r;
}

}  // namespace

KoszulChain psi_generator(const Matrix& gamma) {
    size_t dim2n = gamma.rows();
    Matrix shifted = gamma - Matrix::identity(dim2n);
    std::vector<CycVec> fixed = shifted.kernel_basis();
    std::vector<CycVec> normal = shifted.image_basis();
    size_t ell = normal.size();
    if (ell == 0) return KoszulChain::unit(dim2n);
    if (ell % 2 != 0) throw invariant_violation("odd symplectic codimension");

    std::vector<CycVec> cols = fixed;
    cols.insert(cols.end(), normal.begin(), normal.end());
    Matrix basis = Matrix::from_columns(cols);
    CycVec diag(dim2n);
    for (size_t i = 0; i < dim2n; ++i)
        diag[i] = CycNum(i < fixed.size() ? Rational(0) : Rational(1));
    Matrix proj = basis * Matrix::diagonal(diag) * basis.inverse();

    Matrix pi(dim2n, dim2n);
    for (size_t i = 0; i < dim2n; ++i)
        for (size_t j = 0; j < dim2n; ++j)
            pi.at(i, j) = CycNum(poisson_entry(dim2n, i, j));
    Matrix piperp = proj * pi * proj.transpose();

    KoszulChain bivec;
    bivec.dim2n = dim2n;
    for (size_t i = 0; i < dim2n; ++i)
        for (size_t j = i + 1; j < dim2n; ++j) {
            Rational v = rational_entry(piperp, i, j);
            if (v != 0) bivec.add_term({i, j}, WeylPoly::constant(dim2n, v));
        }

    KoszulChain psi = bivec;
    Rational factorial(1);
    for (size_t p = 2; p <= ell / 2; ++p) {
        psi = const_wedge(psi, bivec);
        factorial *= Rational(static_cast<long>(p));
    }
    return (Rational(1) / factorial) * psi;
}

namespace {

// all monomial keys of the given weight
void enumerate_keys(size_t dim2n, unsigned w, std::vector<WeylPoly::Key>& out) {
    std::vector<unsigned> exps(dim2n, 0);
    auto rec = [&](auto&& self, size_t pos, unsigned left) -> void {
        if (pos == dim2n) {
            if (left % 2 == 0) out.push_back({exps, left / 2});
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            exps[pos] = e;
            self(self, pos + 1, left - e);
        }
        exps[pos] = 0;
    };
    rec(rec, 0, w);
}

void enumerate_tuples(size_t dim2n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < dim2n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

struct SliceBasis {
    std::vector<std::pair<std::vector<size_t>, WeylPoly::Key>> elems;
    std::map<std::pair<std::vector<size_t>, WeylPoly::Key>, size_t> index;
};

SliceBasis slice_basis(size_t dim2n, size_t k, unsigned w) {
    SliceBasis b;
    if (k > dim2n) return b;
    std::vector<std::vector<size_t>> tuples;
    enumerate_tuples(dim2n, k, tuples);
    std::vector<WeylPoly::Key> keys;
    enumerate_keys(dim2n, w, keys);
    for (const auto& t : tuples)
        for (const auto& key : keys) {
            b.index[{t, key}] = b.elems.size();
            b.elems.push_back({t, key});
        }
    return b;
}

// image of each domain basis chain under d, as sparse columns over the
// codomain basis
std::vector<std::map<size_t, Rational>> d_columns(const Matrix& gamma,
                                                  const SliceBasis& dom,
                                                  const SliceBasis& codom,
                                                  size_t dim2n) {
    std::vector<std::map<size_t, Rational>> cols;
    cols.reserve(dom.elems.size());
    for (const auto& [tuple, key] : dom.elems) {
        KoszulChain c;
        c.dim2n = dim2n;
        WeylPoly p(dim2n);
        p.add_term(key, Rational(1));
        c.add_term(tuple, p);
        KoszulChain img = koszul_d(gamma, c);
        std::map<size_t, Rational> col;
        for (const auto& [it, ip] : img.terms)
            for (const auto& [ik, ic] : ip.terms()) {
                auto found = codom.index.find({it, ik});
                if (found == codom.index.end())
                    throw invariant_violation("differential left the weight slice");
                col[found->second] = ic;
            }
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

size_t sparse_rank(std::vector<std::map<size_t, Rational>> cols) {
    // pivot row -> reduced column with that leading row
    std::map<size_t, std::map<size_t, Rational>> pivots;
    size_t rank = 0;
    for (auto& col : cols) {
        while (!col.empty()) {
            size_t lead = col.begin()->first;
            auto piv = pivots.find(lead);
            if (piv == pivots.end()) {
                Rational inv = Rational(1) / col.begin()->second;
                for (auto& [r, v] : col) v *= inv;
                pivots.emplace(lead, std::move(col));
                ++rank;
                break;
            }
            Rational factor = col.begin()->second;
            for (const auto& [r, v] : piv->second) {
                auto [it, ins] = col.try_emplace(r, Rational(-factor * v));
                if (!ins) {
                    it->second -= factor * v;
                    if (it->second == 0) col.erase(it);
                }
            }
        }
    }
    return rank;
}

size_t koszul_cohomology_dim(const Matrix& gamma, size_t k, unsigned w,
                             unsigned wmax) {
    if (w >= wmax) throw usage_error("weight outside the guard band");
    size_t dim2n = gamma.rows();
    SliceBasis dom = slice_basis(dim2n, k, w);
    SliceBasis up = slice_basis(dim2n, k + 1, w + 1);
    size_t rank_out = sparse_rank(d_columns(gamma, dom, up, dim2n));
    size_t rank_in = 0;
    if (k > 0 && w > 0) {
        SliceBasis below = slice_basis(dim2n, k - 1, w - 1);
        rank_in = sparse_rank(d_columns(gamma, below, dom, dim2n));
    }
    return dom.elems.size() - rank_out - rank_in;
}

bool class_equal_mod_exact(const Matrix& gamma, const KoszulChain& a,
                           const KoszulChain& b) {
    KoszulChain diff = a - b;
    if (diff.is_zero()) return true;
    size_t dim2n = diff.dim2n;

    // split the difference into (degree, weight) slices
    std::map<std::pair<size_t, unsigned>, std::map<std::pair<std::vector<size_t>, WeylPoly::Key>, Rational>>
        slices;
    for (const auto& [idx, p] : diff.terms)
        for (const auto& [key, c] : p.terms())
            slices[{idx.size(), key_weight(key)}][{idx, key}] = c;

    for (const auto& [kw, entries] : slices) {
        auto [deg, w] = kw;
        if (deg == 0 || w == 0) return false;  // no chains below to hit this slice
        SliceBasis dom = slice_basis(dim2n, deg - 1, w - 1);
        SliceBasis codom = slice_basis(dim2n, deg, w);
        auto cols = d_columns(gamma, dom, codom, dim2n);
        // solve d x = slice by augmented elimination
        std::map<size_t, Rational> rhs;
        for (const auto& [key, c] : entries) rhs[codom.index.at(key)] = c;

        std::map<size_t, std::map<size_t, Rational>> pivots;
        for (auto& col : cols) {
            while (!col.empty()) {
                size_t lead = col.begin()->first;
                auto piv = pivots.find(lead);
                if (piv == pivots.end()) {
                    Rational inv = Rational(1) / col.begin()->second;
                    for (auto& [r, v] : col) v *= inv;
                    pivots.emplace(lead, std::move(col));
                    break;
                }
                Rational factor = col.begin()->second;
                for (const auto& [r, v] : piv->second) {
                    auto [it, ins] = col.try_emplace(r, Rational(-factor * v));
                    if (!ins) {
                        it->second -= factor * v;
                        if (it->second == 0) col.erase(it);
                    }
                }
            }
        }
        // reduce the right-hand side against the pivots
        while (!rhs.empty()) {
            size_t lead = rhs.begin()->first;
            auto piv = pivots.find(lead);
            if (piv == pivots.end()) return false;
            Rational factor = rhs.begin()->second;
            for (const auto& [r, v] : piv->second) {
                auto [it, ins] = rhs.try_emplace(r, Rational(-factor * v));
                if (!ins) {
                    it->second -= factor * v;
                    if (it->second == 0) rhs.erase(it);
                }
            }
        }
    }
    return true;
}

}  // namespace orb
