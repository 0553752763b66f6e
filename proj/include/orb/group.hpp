#pragma once

#include <vector>

#include "orb/matrix.hpp"

namespace orb {

// A finite matrix group enumerated from generators, with multiplication
// table, inverses, conjugacy classes and centralizers.  Element 0 is the
// identity; ordering is breadth-first from the identity with lexicographic
// tie-breaking, so it is deterministic for a given generator list.
class Group {
public:
    static constexpr size_t kDefaultCap = 10000;

    static Group generate(const std::vector<Matrix>& generators,
                          size_t cap = kDefaultCap);

    size_t size() const { return elements_.size(); }
    size_t dim() const { return dim_; }
    unsigned cyclotomic_order() const { return order_; }

    const Matrix& element(size_t i) const { return elements_[i]; }
    const std::vector<Matrix>& elements() const { return elements_; }

    size_t mul(size_t i, size_t j) const { return mult_table_[i * size() + j]; }
    size_t inv(size_t i) const { return inverse_[i]; }
    // Order of the element as a group element.
    size_t element_order(size_t i) const;

    // Conjugacy classes, each sorted, listed by smallest member; the
    // representative of a class is its smallest element index.
    const std::vector<std::vector<size_t>>& classes() const { return classes_; }
    size_t class_of(size_t i) const { return class_index_[i]; }
    std::vector<size_t> centralizer(size_t i) const;
    size_t centralizer_size(size_t i) const;

private:
    size_t dim_ = 0;
    unsigned order_ = 1;
    std::vector<Matrix> elements_;
    std::vector<size_t> mult_table_;
    std::vector<size_t> inverse_;
    std::vector<std::vector<size_t>> classes_;
    std::vector<size_t> class_index_;
};

}  // namespace orb
