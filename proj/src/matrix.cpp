#include "orb/matrix.hpp"

#include <sstream>

#include "orb/error.hpp"

namespace orb {

Matrix::Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

Matrix::Matrix(size_t rows, size_t cols, std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw usage_error("matrix entry count mismatch");
    normalize_order();
}

void Matrix::normalize_order() {
    order_ = 1;
    for (const auto& x : e_) order_ = lcm_u(order_, x.order());
    for (auto& x : e_) x = x.promoted(order_);
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(Rational(1));
    return m;
}

Matrix Matrix::diagonal(const CycVec& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    m.normalize_order();
    return m;
}

Matrix Matrix::from_columns(const std::vector<CycVec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(cols[0].size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_) throw usage_error("ragged column list");
        for (size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    m.normalize_order();
    return m;
}

CycVec Matrix::column(size_t c) const {
    CycVec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

CycVec Matrix::row(size_t r) const {
    CycVec v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("shape mismatch in +");
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    m.normalize_order();
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("shape mismatch in -");
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    m.normalize_order();
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw usage_error("shape mismatch in *");
    Matrix m(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (size_t c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
        }
    m.normalize_order();
    return m;
}

CycVec Matrix::operator*(const CycVec& v) const {
    if (cols_ != v.size()) throw usage_error("shape mismatch in matrix-vector product");
    CycVec w(rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) w[r] += at(r, c) * v[c];
    return w;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    m.order_ = order_;
    return m;
}

Matrix Matrix::conj() const {
    Matrix m = *this;
    for (auto& x : m.e_) x = x.conj();
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::lex_less(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < e_.size(); ++i) {
        auto c = e_[i] <=> o.e_[i];
        if (c != 0) return c < 0;
    }
    return false;
}

Matrix::Rref Matrix::rref() const {
    Rref out{*this, {}};
    Matrix& m = out.reduced;
    size_t lead = 0;
    for (size_t c = 0; c < cols_ && lead < rows_; ++c) {
        size_t p = lead;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != lead)
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(lead, j));
        CycNum inv = m.at(lead, c).inverse();
        for (size_t j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, c).is_zero()) continue;
            CycNum f = m.at(r, c);
            for (size_t j = 0; j < cols_; ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    return out;
}

std::vector<CycVec> Matrix::kernel_basis() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<CycVec> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        CycVec v(cols_);
        v[fc] = CycNum(Rational(1));
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.reduced.at(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<CycVec> Matrix::image_basis() const {
    Rref rr = rref();
    std::vector<CycVec> basis;
    for (size_t c : rr.pivots) basis.push_back(column(c));
    return basis;
}

std::optional<CycVec> Matrix::solve(const CycVec& v) const {
    if (v.size() != rows_) throw usage_error("shape mismatch in solve");
    Matrix aug(rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = v[r];
    }
    aug.normalize_order();
    Rref rr = aug.rref();
    CycVec x(cols_);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == cols_) return std::nullopt;  // inconsistent row
        x[rr.pivots[i]] = rr.reduced.at(i, cols_);
    }
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw usage_error("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = CycNum(Rational(1));
    }
    aug.normalize_order();
    Rref rr = aug.rref();
    if (rr.pivots.size() != rows_ || rr.pivots.back() >= cols_)
        throw domain_error("matrix is singular");
    Matrix inv(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) inv.at(r, c) = rr.reduced.at(r, cols_ + c);
    inv.normalize_order();
    return inv;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).str();
        os << "]\n";
    }
    return os.str();
}

size_t span_rank(const std::vector<CycVec>& vectors, size_t dim) {
    if (vectors.empty()) return 0;
    Matrix m(dim, vectors.size());
    for (size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].size() != dim) throw usage_error("span_rank: ragged vectors");
        for (size_t r = 0; r < dim; ++r) m.at(r, c) = vectors[c][r];
    }
    return m.rank();
}

}  // namespace orb
