#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orb/error.hpp"
#include "orb/matrix.hpp"

using orb::CycNum;
using orb::CycVec;
using orb::Matrix;
using orb::Rational;

namespace {

CycNum q(long n, long d = 1) { return CycNum(Rational(n, d)); }

Matrix random_matrix(std::mt19937& rng, size_t n, unsigned order) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> zexp(0, static_cast<int>(order) - 1);
    Matrix m(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            m.at(r, c) = Rational(coeff(rng)) * CycNum::zeta(order, zexp(rng));
    return m;
}

bool is_zero_vec(const CycVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    Matrix a(2, 2, {q(1), q(2), q(3), q(4)});
    Matrix b(2, 2, {q(0), q(1), q(1), q(0)});
    Matrix ab = a * b;
    CHECK(ab.at(0, 0) == q(2));
    CHECK(ab.at(0, 1) == q(1));
    CHECK(ab.at(1, 0) == q(4));
    CHECK(ab.at(1, 1) == q(3));
    CHECK(a + b - b == a);
    CHECK(a.transpose().transpose() == a);
}

TEST_CASE("rref and rank") {
    Matrix a(2, 3, {q(1), q(2), q(3), q(2), q(4), q(6)});
    CHECK(a.rank() == 1);
    Matrix id = Matrix::identity(3);
    CHECK(id.rank() == 3);
    auto r = a.rref();
    REQUIRE(r.pivots.size() == 1);
    CHECK(r.pivots[0] == 0);
    CHECK(r.reduced.at(0, 1) == q(2));
}

TEST_CASE("kernel vectors are annihilated") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix m = random_matrix(rng, 3, 4);
        for (const auto& v : m.kernel_basis()) CHECK(is_zero_vec(m * v));
        CHECK(m.kernel_basis().size() + m.rank() == 3);
    }
}

TEST_CASE("image basis spans the columns") {
    Matrix m(3, 3, {q(1), q(1), q(2), q(0), q(1), q(1), q(1), q(0), q(1)});
    auto img = m.image_basis();
    CHECK(img.size() == m.rank());
    // every original column solves against the image
    Matrix from_img = Matrix::from_columns(img);
    for (size_t c = 0; c < 3; ++c) CHECK(from_img.solve(m.column(c)).has_value());
}

TEST_CASE("solve finds exact solutions") {
    Matrix m(2, 2, {q(1), q(1), q(0), q(1)});
    CycVec rhs{q(3), q(2)};
    auto x = m.solve(rhs);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == q(1));
    CHECK((*x)[1] == q(2));
    // inconsistent system
    Matrix s(2, 1, {q(1), q(2)});
    CHECK(!s.solve({q(1), q(3)}).has_value());
}

TEST_CASE("inverse on random nonsingular matrices") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 10) {
        Matrix m = random_matrix(rng, 3, 3);
        if (m.rank() < 3) continue;
        CHECK(m * m.inverse() == Matrix::identity(3));
        CHECK(m.inverse() * m == Matrix::identity(3));
        ++done;
    }
    Matrix singular(2, 2, {q(1), q(2), q(2), q(4)});
    CHECK_THROWS_AS(singular.inverse(), orb::domain_error);
}

TEST_CASE("conjugation distributes over products") {
    std::mt19937 rng(3);
    Matrix a = random_matrix(rng, 2, 5);
    Matrix b = random_matrix(rng, 2, 5);
    CHECK((a * b).conj() == a.conj() * b.conj());
}

TEST_CASE("span rank") {
    CycVec v1{q(1), q(0)};
    CycVec v2{q(2), q(0)};
    CycVec v3{q(0), q(1)};
    CHECK(orb::span_rank({v1, v2}, 2) == 1);
    CHECK(orb::span_rank({v1, v3}, 2) == 2);
    CHECK(orb::span_rank({}, 2) == 0);
}
