#include "orb/multivector.hpp"

#include <algorithm>
#include <sstream>

#include "orb/error.hpp"

namespace orb {

Multivector Multivector::scalar(size_t dim2n, const CycNum& c) {
    Multivector m(dim2n);
    m.add_term({}, c);
    return m;
}

Multivector Multivector::generator(size_t dim2n, size_t i) {
    return monomial(dim2n, {i}, CycNum(Rational(1)));
}

Multivector Multivector::monomial(size_t dim2n, std::vector<size_t> idx,
                                  const CycNum& c) {
    Multivector m(dim2n);
    // sort with sign
    int sign = 1;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        for (size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return m;  // repeated generator
    m.add_term(std::move(idx), sign > 0 ? c : -c);
    return m;
}

void Multivector::add_term(std::vector<size_t> idx, const CycNum& c) {
    if (c.is_zero()) return;
    for (size_t i : idx)
        if (i >= dim_) throw usage_error("generator index out of range");
    auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

size_t Multivector::degree() const {
    if (!is_homogeneous()) throw usage_error("degree of a mixed multivector");
    return terms_.empty() ? 0 : terms_.begin()->first.size();
}

bool Multivector::is_homogeneous() const {
    if (terms_.empty()) return true;
    size_t d = terms_.begin()->first.size();
    for (const auto& [k, c] : terms_)
        if (k.size() != d) return false;
    return true;
}

Multivector Multivector::operator-() const {
    Multivector m(dim_);
    for (const auto& [k, c] : terms_) m.terms_[k] = -c;
    return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (dim_ == 0 && terms_.empty()) dim_ = o.dim_;
    if (dim_ != o.dim_) throw usage_error("ambient dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector operator*(const CycNum& s, const Multivector& a) {
    Multivector m(a.dim());
    for (const auto& [k, c] : a.terms()) m.add_term(k, s * c);
    return m;
}

bool Multivector::operator==(const Multivector& o) const {
    if (dim_ != o.dim_) return false;
    return terms_ == o.terms_;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i : k) os << "^e" << i;
    }
    return os.str();
}

namespace {

// merge two sorted index tuples; returns sign, or 0 on collision
int merge_indices(const std::vector<size_t>& a, const std::vector<size_t>& b,
                  std::vector<size_t>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] hops over the remaining a-elements
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw usage_error("ambient dimension mismatch in wedge");
    Multivector r(a.dim());
    std::vector<size_t> merged;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int sign = merge_indices(ka, kb, merged);
            if (sign == 0) continue;
            CycNum c = ca * cb;
            r.add_term(merged, sign > 0 ? c : -c);
        }
    return r;
}

Multivector substitute(const Multivector& x, const Matrix& m) {
    if (m.rows() != x.dim() || m.cols() != x.dim())
        throw usage_error("substitution matrix shape mismatch");
    Multivector r(x.dim());
    for (const auto& [k, c] : x.terms()) {
        Multivector term = Multivector::scalar(x.dim(), c);
        for (size_t i : k) {
            Multivector img(x.dim());
            for (size_t j = 0; j < x.dim(); ++j)
                img.add_term({j}, m.at(j, i));
            term = wedge(term, img);
        }
        r += term;
    }
    return r;
}

Multivector act(const Matrix& g, const Multivector& x) {
    size_t n = g.rows();
    if (2 * n != x.dim()) throw usage_error("group element dimension mismatch");
    Matrix big(2 * n, 2 * n);
    Matrix gc = g.conj();
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            big.at(r, c) = gc.at(r, c);
            big.at(n + r, n + c) = g.at(r, c);
        }
    return substitute(x, big);
}

Matrix adapted_frame(const std::vector<CycVec>& fixed_basis,
                     const std::vector<CycVec>& normal_basis) {
    size_t n = fixed_basis.empty() ? normal_basis[0].size() : fixed_basis[0].size();
    std::vector<CycVec> cols;
    auto push_pair = [&](const CycVec& v) {
        CycVec holo(2 * n), anti(2 * n);
        for (size_t i = 0; i < n; ++i) {
            holo[i] = v[i];
            anti[n + i] = v[i].conj();
        }
        cols.push_back(std::move(holo));
        cols.push_back(std::move(anti));
    };
    // tangential columns first (holomorphic/antiholomorphic pairs), then normal
    for (const auto& v : fixed_basis) push_pair(v);
    // reorder: all holomorphic fixed, then antiholomorphic fixed
    std::vector<CycVec> ordered;
    for (size_t i = 0; i < cols.size(); i += 2) ordered.push_back(cols[i]);
    for (size_t i = 1; i < cols.size(); i += 2) ordered.push_back(cols[i]);
    cols.clear();
    for (const auto& v : normal_basis) push_pair(v);
    for (size_t i = 0; i < cols.size(); i += 2) ordered.push_back(cols[i]);
    for (size_t i = 1; i < cols.size(); i += 2) ordered.push_back(cols[i]);
    return Matrix::from_columns(ordered);
}

Multivector project_adapted(const Multivector& x,
                            const std::vector<CycVec>& fixed_basis,
                            const std::vector<CycVec>& normal_basis, size_t p) {
    Matrix frame = adapted_frame(fixed_basis, normal_basis);
    if (frame.rank() != frame.rows())
        throw domain_error("fixed and normal bases do not span the ambient space");
    size_t tangential = 2 * fixed_basis.size();
    // rewrite in the adapted frame
    Multivector adapted = substitute(x, frame.inverse());
    Multivector kept(x.dim());
    for (const auto& [k, c] : adapted.terms()) {
        size_t normal_count = 0;
        for (size_t i : k)
            if (i >= tangential) ++normal_count;
        if (normal_count == p) kept.add_term(k, c);
    }
    return substitute(kept, frame);
}

}  // namespace orb
