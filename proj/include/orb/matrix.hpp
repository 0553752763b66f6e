#pragma once

#include <optional>
#include <vector>

#include "orb/cyclotomic.hpp"

namespace orb {

using CycVec = std::vector<CycNum>;

// Dense matrix over Q(zeta_N).  Entries are promoted to a common
// cyclotomic order on construction.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols);
    Matrix(size_t rows, size_t cols, std::vector<CycNum> entries);

    static Matrix identity(size_t n);
    static Matrix diagonal(const CycVec& d);
    // Columns assembled into a matrix.
    static Matrix from_columns(const std::vector<CycVec>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    unsigned order() const { return order_; }

    const CycNum& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    CycNum& at(size_t r, size_t c) { return e_[r * cols_ + c]; }

    CycVec column(size_t c) const;
    CycVec row(size_t r) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    CycVec operator*(const CycVec& v) const;
    Matrix transpose() const;
    // Entrywise complex conjugation.
    Matrix conj() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    // Deterministic total order: by shape, then lexicographic on entries.
    bool lex_less(const Matrix& o) const;

    struct Rref;
    Rref rref() const;
    size_t rank() const;
    // Basis of the right kernel.
    std::vector<CycVec> kernel_basis() const;
    // Basis of the column space (the pivot columns of the original matrix).
    std::vector<CycVec> image_basis() const;
    // An exact solution of A x = v, or nullopt when none exists.
    std::optional<CycVec> solve(const CycVec& v) const;
    // Inverse; throws domain_error when singular.
    Matrix inverse() const;

    std::string str() const;

private:
    void normalize_order();

    size_t rows_, cols_;
    unsigned order_ = 1;
    std::vector<CycNum> e_;
};

struct Matrix::Rref {
    Matrix reduced;
    std::vector<size_t> pivots;
};

inline size_t Matrix::rank() const { return rref().pivots.size(); }

struct MatrixLess {
    bool operator()(const Matrix& a, const Matrix& b) const { return a.lex_less(b); }
};

// Stack the given vectors as columns and return the rank of the span.
size_t span_rank(const std::vector<CycVec>& vectors, size_t dim);

}  // namespace orb
