#include "orb/group.hpp"

#include <algorithm>
#include <map>

#include "orb/error.hpp"

namespace orb {

Group Group::generate(const std::vector<Matrix>& generators, size_t cap) {
    if (generators.empty()) throw usage_error("need at least one generator");
    size_t n = generators[0].rows();
    unsigned ord = 1;
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw usage_error("generators must be square matrices of equal dimension");
        ord = lcm_u(ord, g.order());
    }
    for (const auto& g : generators) {
        if (g.rank() != n) throw domain_error("generator is not invertible");
    }

    Group grp;
    grp.dim_ = n;
    grp.order_ = ord;

    std::map<Matrix, size_t, MatrixLess> index;
    std::vector<Matrix> elems;
    elems.push_back(Matrix::identity(n));
    index.emplace(elems[0], 0);

    // breadth-first closure; new elements of each level are appended in
    // lexicographic order
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<Matrix> fresh;
        for (size_t i : frontier) {
            for (const auto& g : generators) {
                Matrix p = elems[i] * g;
                if (!index.count(p)) {
                    index.emplace(p, SIZE_MAX);  // reserve; index assigned below
                    fresh.push_back(std::move(p));
                }
            }
        }
        std::sort(fresh.begin(), fresh.end(),
                  [](const Matrix& a, const Matrix& b) { return a.lex_less(b); });
        frontier.clear();
        for (auto& p : fresh) {
            size_t idx = elems.size();
            if (idx >= cap) throw cap_exceeded("group not finite within cap");
            index[p] = idx;
            elems.push_back(std::move(p));
            frontier.push_back(idx);
        }
    }

    size_t m = elems.size();
    grp.elements_ = std::move(elems);
    grp.mult_table_.assign(m * m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            auto it = index.find(grp.elements_[i] * grp.elements_[j]);
            if (it == index.end()) throw invariant_violation("closure is not closed");
            grp.mult_table_[i * m + j] = it->second;
        }

    grp.inverse_.assign(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (grp.mul(i, j) == 0) {
                grp.inverse_[i] = j;
                break;
            }

    // conjugacy classes as orbits of the conjugation action
    grp.class_index_.assign(m, SIZE_MAX);
    for (size_t i = 0; i < m; ++i) {
        if (grp.class_index_[i] != SIZE_MAX) continue;
        std::vector<size_t> cls;
        for (size_t h = 0; h < m; ++h) {
            size_t c = grp.mul(grp.mul(h, i), grp.inv(h));
            if (grp.class_index_[c] == SIZE_MAX) {
                grp.class_index_[c] = grp.classes_.size();
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        grp.classes_.push_back(std::move(cls));
    }

    return grp;
}

size_t Group::element_order(size_t i) const {
    size_t k = 1, p = i;
    while (p != 0) {
        p = mul(p, i);
        ++k;
    }
    return k;
}

std::vector<size_t> Group::centralizer(size_t i) const {
    std::vector<size_t> z;
    for (size_t h = 0; h < size(); ++h)
        if (mul(h, i) == mul(i, h)) z.push_back(h);
    return z;
}

size_t Group::centralizer_size(size_t i) const { return centralizer(i).size(); }

}  // namespace orb
