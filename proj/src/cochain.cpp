#include "orb/cochain.hpp"

#include <algorithm>
#include <sstream>

#include "orb/error.hpp"

namespace orb {

PolyFun PolyFun::constant(size_t nvars, const CycNum& c) {
    PolyFun p(nvars);
    p.add_term(Key(nvars, 0), c);
    return p;
}

PolyFun PolyFun::coordinate(size_t nvars, size_t i) {
    if (i >= nvars) throw usage_error("coordinate index out of range");
    Key k(nvars, 0);
    k[i] = 1;
    PolyFun p(nvars);
    p.add_term(std::move(k), CycNum(Rational(1)));
    return p;
}

void PolyFun::add_term(Key k, const CycNum& c) {
    if (c.is_zero()) return;
    if (k.size() != nvars_) throw usage_error("exponent vector length mismatch");
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CycNum PolyFun::constant_term() const {
    auto it = terms_.find(Key(nvars_, 0));
    return it == terms_.end() ? CycNum() : it->second;
}

PolyFun PolyFun::operator-() const {
    PolyFun p(nvars_);
    for (const auto& [k, c] : terms_) p.terms_[k] = -c;
    return p;
}

PolyFun& PolyFun::operator+=(const PolyFun& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    if (nvars_ != o.nvars_) throw usage_error("variable count mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

PolyFun& PolyFun::operator-=(const PolyFun& o) { return *this += -o; }

PolyFun operator*(const PolyFun& a, const PolyFun& b) {
    if (a.nvars_ != b.nvars_) throw usage_error("variable count mismatch");
    PolyFun r(a.nvars_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            PolyFun::Key k = ka;
            for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
            r.add_term(std::move(k), ca * cb);
        }
    return r;
}

PolyFun operator*(const CycNum& s, const PolyFun& a) {
    PolyFun r(a.nvars_);
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
}

bool PolyFun::operator==(const PolyFun& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

PolyFun PolyFun::derivative(size_t i) const {
    PolyFun r(nvars_);
    for (const auto& [k, c] : terms_) {
        if (k[i] == 0) continue;
        Key k2 = k;
        --k2[i];
        r.add_term(std::move(k2), Rational(k[i]) * c);
    }
    return r;
}

PolyFun PolyFun::scale_var(size_t i, const CycNum& lambda) const {
    PolyFun r(nvars_);
    for (const auto& [k, c] : terms_) {
        CycNum scale = CycNum(Rational(1));
        for (unsigned p = 0; p < k[i]; ++p) scale *= lambda;
        r.add_term(k, scale * c);
    }
    return r;
}

std::string PolyFun::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i]) {
                os << "*u" << i + 1;
                if (k[i] > 1) os << "^" << k[i];
            }
    }
    return os.str();
}

std::vector<size_t> SectorFrame::normal_indices() const {
    std::vector<size_t> idx;
    CycNum unit = CycNum(Rational(1));
    for (size_t i = 0; i < nvars; ++i)
        if (lambdas[i] != unit) idx.push_back(i);
    return idx;
}

std::vector<size_t> SectorFrame::tangential_indices() const {
    std::vector<size_t> idx;
    CycNum unit = CycNum(Rational(1));
    for (size_t i = 0; i < nvars; ++i)
        if (lambdas[i] == unit) idx.push_back(i);
    return idx;
}

PolyFun SectorFrame::twist(const PolyFun& f) const {
    PolyFun r = f;
    CycNum unit = CycNum(Rational(1));
    for (size_t i = 0; i < nvars; ++i)
        if (lambdas[i] != unit) r = r.scale_var(i, lambdas[i]);
    return r;
}

SectorFrame frame_from_element(const Group& g, size_t idx) {
    const Matrix& gamma = g.element(idx);
    size_t n = g.dim();
    size_t m = g.element_order(idx);
    unsigned field = lcm_u(g.cyclotomic_order(), static_cast<unsigned>(m));

    // eigenvalues of the action on holomorphic coordinate functionals:
    // a functional with coefficient row c transforms by gamma^T
    Matrix gt = gamma.transpose();
    std::vector<CycNum> holo;
    for (size_t k = 0; k < m; ++k) {
        CycNum mu = CycNum::zeta(static_cast<unsigned>(m), static_cast<long>(k))
                        .promoted(field);
        Matrix shifted = gt - Matrix::diagonal(CycVec(n, mu));
        size_t mult = shifted.kernel_basis().size();
        for (size_t r = 0; r < mult; ++r) holo.push_back(mu);
    }
    if (holo.size() != n) throw invariant_violation("element is not diagonalizable");

    SectorFrame f;
    f.nvars = 2 * n;
    f.lambdas = holo;
    for (const CycNum& mu : holo) f.lambdas.push_back(mu.conj());
    return f;
}

PolyFun ddiff(const PolyFun& f, size_t i, const CycNum& lambda) {
    PolyFun r(f.nvars());
    for (const auto& [k, c] : f.terms()) {
        unsigned d = k[i];
        if (d == 0) continue;
        CycNum geom;
        CycNum power = CycNum(Rational(1));
        for (unsigned s = 0; s < d; ++s) {
            geom += power;
            power *= lambda;
        }
        PolyFun::Key k2 = k;
        --k2[i];
        r.add_term(std::move(k2), geom * c);
    }
    return r;
}

namespace {

int permutation_sign(const std::vector<size_t>& p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

}  // namespace

PolyFun omega(const SectorFrame& frame, const std::vector<PolyFun>& inputs) {
    std::vector<size_t> normal = frame.normal_indices();
    size_t ell = normal.size();
    if (inputs.size() != ell)
        throw usage_error("input count must match the number of normal directions");
    if (ell == 0) return PolyFun::one(frame.nvars);

    std::vector<size_t> perm(ell);
    for (size_t i = 0; i < ell; ++i) perm[i] = i;
    PolyFun acc(frame.nvars);
    Rational fact(1);
    for (size_t i = 2; i <= ell; ++i) fact *= Rational(static_cast<long>(i));
    do {
        PolyFun term = PolyFun::one(frame.nvars);
        for (size_t j = 0; j < ell && !term.is_zero(); ++j) {
            PolyFun f = inputs[j];
            // staircase: the earlier coordinates are already twisted
            for (size_t t = 0; t < j; ++t) {
                size_t coord = normal[perm[t]];
                f = f.scale_var(coord, frame.lambdas[coord]);
            }
            size_t coord = normal[perm[j]];
            term = term * ddiff(f, coord, frame.lambdas[coord]);
        }
        int sign = permutation_sign(perm);
        if (sign > 0)
            acc += term;
        else
            acc -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CycNum(Rational(1) / fact) * acc;
}

PolyCochain omega_cochain(const SectorFrame& frame) {
    PolyCochain c;
    c.arity = frame.normal_indices().size();
    c.eval = [frame](const std::vector<PolyFun>& in) { return omega(frame, in); };
    return c;
}

PolyFun twisted_coboundary(const SectorFrame& frame, const PolyCochain& F,
                           const std::vector<PolyFun>& inputs) {
    size_t k = F.arity;
    if (inputs.size() != k + 1)
        throw usage_error("coboundary needs arity + 1 inputs");
    std::vector<PolyFun> args(inputs.begin() + 1, inputs.end());
    PolyFun r = inputs[0] * F.eval(args);
    int sign = 1;
    for (size_t i = 0; i + 1 < inputs.size(); ++i) {
        sign = -sign;
        args.clear();
        for (size_t j = 0; j < inputs.size(); ++j) {
            if (j == i) {
                args.push_back(inputs[i] * inputs[i + 1]);
                ++j;
            } else {
                args.push_back(inputs[j]);
            }
        }
        PolyFun v = F.eval(args);
        r += sign > 0 ? v : -v;
    }
    sign = -sign;
    args.assign(inputs.begin(), inputs.end() - 1);
    PolyFun last = F.eval(args) * frame.twist(inputs.back());
    r += sign > 0 ? last : -last;
    return r;
}

bool verify_twisted_cocycle(const SectorFrame& frame,
                            const std::vector<PolyFun>& inputs) {
    return twisted_coboundary(frame, omega_cochain(frame), inputs).is_zero();
}

PolyCochain t1(const SectorFrame& frame, const Multivector& x, const CycNum& y) {
    size_t ell = frame.normal_indices().size();
    size_t p = x.is_zero() ? 0 : x.degree();
    PolyCochain c;
    c.arity = p + ell;
    c.eval = [frame, x, y, p, ell](const std::vector<PolyFun>& in) {
        if (in.size() != p + ell) throw usage_error("cochain arity mismatch");
        std::vector<PolyFun> tail(in.begin() + p, in.end());
        PolyFun om = omega(frame, tail);
        PolyFun r(frame.nvars);
        for (const auto& [idx, coeff] : x.terms()) {
            PolyFun term = PolyFun::constant(frame.nvars, y * coeff);
            for (size_t m = 0; m < p; ++m) term = term * in[m].derivative(idx[m]);
            r += term * om;
        }
        return r;
    };
    return c;
}

Multivector l2_extract(const SectorFrame& frame, const PolyCochain& F) {
    size_t k = F.arity;
    size_t nv = frame.nvars;
    Multivector result(nv);
    // enumerate sorted k-subsets of the coordinates
    std::vector<size_t> subset;
    auto process = [&](const std::vector<size_t>& s) {
        CycNum c;
        std::vector<size_t> perm(k);
        for (size_t i = 0; i < k; ++i) perm[i] = i;
        if (k == 0) {
            c = F.eval({}).constant_term();
        } else {
            do {
                std::vector<PolyFun> args;
                for (size_t i = 0; i < k; ++i)
                    args.push_back(PolyFun::coordinate(nv, s[perm[i]]));
                CycNum v = F.eval(args).constant_term();
                if (permutation_sign(perm) < 0) v = -v;
                c += v;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (!c.is_zero()) result.add_term(s, c);
    };
    auto rec = [&](auto&& self, size_t start) -> void {
        if (subset.size() == k) {
            process(subset);
            return;
        }
        for (size_t i = start; i < nv; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

Multivector l3_project(const SectorFrame& frame, const Multivector& m) {
    std::vector<size_t> normal = frame.normal_indices();
    Multivector r(m.dim());
    for (const auto& [idx, c] : m.terms()) {
        bool full = true;
        for (size_t nrm : normal)
            if (!std::binary_search(idx.begin(), idx.end(), nrm)) {
                full = false;
                break;
            }
        if (full) r.add_term(idx, c);
    }
    return r;
}

bool roundtrip_check(const SectorFrame& frame, const Multivector& xi) {
    if (xi.is_zero()) return true;
    if (!xi.is_homogeneous()) throw usage_error("sector class must be homogeneous");
    std::vector<size_t> normal = frame.normal_indices();

    // split each term into its tangential factor and the normal top wedge
    Multivector tangential(frame.nvars);
    CycNum unit = CycNum(Rational(1));
    for (const auto& [idx, c] : xi.terms()) {
        std::vector<size_t> tang;
        size_t seen_normal = 0;
        // sign of merging (tangential part, normal part) back into idx
        int sign = 1;
        for (size_t i : idx) {
            if (frame.lambdas[i] != unit) {
                ++seen_normal;
            } else {
                tang.push_back(i);
                if (seen_normal % 2 == 1) sign = -sign;
            }
        }
        if (seen_normal != normal.size())
            throw usage_error("class term lacks the full normal wedge");
        tangential.add_term(tang, sign > 0 ? c : -c);
    }

    PolyCochain F = t1(frame, tangential, unit);
    Multivector back = l3_project(frame, l2_extract(frame, F));
    return back == xi;
}

CrossedCochain t2_extend(const Group& g, const PolyCochain& F,
                         std::function<PolyFun(size_t, const PolyFun&)> action) {
    CrossedCochain c;
    c.arity = F.arity;
    c.eval = [&g, F, action](const std::vector<CrossedArg>& in) {
        std::vector<PolyFun> args;
        size_t acc = 0;  // identity
        for (const auto& a : in) {
            args.push_back(acc == 0 ? a.f : action(acc, a.f));
            acc = g.mul(acc, a.elem);
        }
        return std::make_pair(F.eval(args), acc);
    };
    return c;
}

PolyCochain l1_restrict(const CrossedCochain& F) {
    PolyCochain c;
    c.arity = F.arity;
    c.eval = [F](const std::vector<PolyFun>& in) {
        std::vector<CrossedArg> args;
        for (const auto& f : in) args.push_back({f, 0});
        return F.eval(args).first;
    };
    return c;
}

}  // namespace orb
