#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orb/error.hpp"
#include "orb/group.hpp"
#include "orb/presets.hpp"
#include "orb/weyl.hpp"

using orb::KoszulChain;
using orb::Matrix;
using orb::Rational;
using orb::WeylPoly;

namespace {

size_t real_ell(const Matrix& g) {
    return (g - Matrix::identity(g.rows())).rank();
}

WeylPoly random_poly(size_t dim2n, unsigned maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> deg(0, maxdeg);
    WeylPoly p(dim2n);
    for (int t = 0; t < 5; ++t) {
        std::vector<unsigned> exp(dim2n, 0);
        unsigned d = deg(rng);
        std::uniform_int_distribution<size_t> var(0, dim2n - 1);
        for (unsigned k = 0; k < d; ++k) ++exp[var(rng)];
        p.add_term({exp, 0}, Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("star product basics") {
    size_t n2 = 2;
    WeylPoly y1 = WeylPoly::variable(n2, 0);
    WeylPoly y2 = WeylPoly::variable(n2, 1);
    WeylPoly one = WeylPoly::one(n2);
    CHECK(moyal(one, y1) == y1);
    CHECK(moyal(y1, one) == y1);
    CHECK(moyal(y1, y1) == y1 * y1);
    // the commutator of a conjugate pair is a pure h term
    WeylPoly comm = moyal(y1, y2) - moyal(y2, y1);
    WeylPoly expect(n2);
    expect.add_term({{0, 0}, 1}, Rational(-2));
    CHECK(comm == expect);
}

TEST_CASE("star product is associative") {
    std::mt19937 rng(7);
    for (size_t n : {1u, 2u}) {
        size_t n2 = 2 * n;
        for (int trial = 0; trial < 6; ++trial) {
            WeylPoly a = random_poly(n2, 3, rng);
            WeylPoly b = random_poly(n2, 3, rng);
            WeylPoly c = random_poly(n2, 3, rng);
            CHECK(moyal(moyal(a, b), c) == moyal(a, moyal(b, c)));
        }
    }
}

TEST_CASE("star product adds weights") {
    size_t n2 = 4;
    WeylPoly a = WeylPoly::variable(n2, 0) * WeylPoly::variable(n2, 2);
    WeylPoly b = WeylPoly::variable(n2, 1) * WeylPoly::variable(n2, 3);
    WeylPoly p = moyal(a, b);
    CHECK(a.weight() == 2);
    CHECK(p.is_weight_homogeneous());
    CHECK(p.weight() == 4);
    CHECK(WeylPoly::hbar(n2).weight() == 2);
}

TEST_CASE("twisted differential squares to zero") {
    std::mt19937 rng(11);
    for (const auto& p : orb::symplectic_presets()) {
        CAPTURE(p.name);
        orb::Group g = orb::Group::generate(p.generators);
        // symplectic preset matrices act on the full real space already
        size_t n2 = g.dim();
        for (size_t i = 0; i < g.size(); ++i) {
            Matrix gamma = g.element(i);
            for (int trial = 0; trial < 3; ++trial) {
                KoszulChain c;
                c.dim2n = n2;
                c.add_term({}, random_poly(n2, 2, rng));
                c.add_term({0}, random_poly(n2, 2, rng));
                if (n2 > 2) c.add_term({1, 3}, random_poly(n2, 1, rng));
                CHECK(koszul_d(gamma, koszul_d(gamma, c)).is_zero());
            }
        }
    }
}

TEST_CASE("transverse bivector power is a cocycle") {
    for (const auto& p : orb::symplectic_presets()) {
        CAPTURE(p.name);
        orb::Group g = orb::Group::generate(p.generators);
        for (size_t i = 0; i < g.size(); ++i) {
            Matrix gamma = g.element(i);
            KoszulChain psi = orb::psi_generator(gamma);
            if (i == 0) CHECK(psi == KoszulChain::unit(g.dim()));
            CHECK(!psi.is_zero());
            CHECK(koszul_d(gamma, psi).is_zero());
        }
    }
}

TEST_CASE("cohomology concentrates in the sector degree") {
    // planar sectors: one line of cohomology at the rank of gamma - 1,
    // dimension one at even weights
    const unsigned wmax = 8;
    for (const char* name : {"sp2-z2", "sp2-z3", "sp2-z4"}) {
        CAPTURE(name);
        auto p = orb::find_symplectic_preset(name);
        REQUIRE(p.has_value());
        orb::Group g = orb::Group::generate(p->generators);
        for (size_t i = 1; i < g.size(); ++i) {
            Matrix gamma = g.element(i);
            size_t ell = real_ell(gamma);
            REQUIRE(ell == 2);
            for (size_t k = 0; k <= 2; ++k)
                for (unsigned w = 0; w < wmax - 1; ++w) {
                    size_t dim = orb::koszul_cohomology_dim(gamma, k, w, wmax);
                    if (k == ell && w % 2 == 0)
                        CHECK(dim == 1);
                    else
                        CHECK(dim == 0);
                }
        }
    }
    auto p = orb::find_symplectic_preset("sp2-z2");
    Matrix gamma = orb::Group::generate(p->generators).element(1);
    CHECK_THROWS_AS(orb::koszul_cohomology_dim(gamma, 2, 8, 8), orb::usage_error);
}

TEST_CASE("cup products of generators follow length additivity") {
    for (const char* name : {"sp2-z2", "sp2-z3", "sp4-z2xz2"}) {
        CAPTURE(name);
        auto p = orb::find_symplectic_preset(name);
        REQUIRE(p.has_value());
        orb::Group g = orb::Group::generate(p->generators);
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) {
                Matrix g1 = g.element(i);
                Matrix g2 = g.element(j);
                Matrix g12 = g.element(g.mul(i, j));
                KoszulChain cup =
                    orb::twisted_cup(g1, orb::psi_generator(g1), orb::psi_generator(g2));
                bool additive = real_ell(g1) + real_ell(g2) == real_ell(g12);
                KoszulChain target = additive
                                         ? orb::psi_generator(g12)
                                         : Rational(0) * orb::psi_generator(g12);
                CHECK(orb::class_equal_mod_exact(g12, cup, target));
            }
    }
}

TEST_CASE("generators transform along conjugation") {
    for (const char* name : {"sp2-z4", "sp4-z2xz2"}) {
        CAPTURE(name);
        auto p = orb::find_symplectic_preset(name);
        REQUIRE(p.has_value());
        orb::Group g = orb::Group::generate(p->generators);
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) {
                size_t conj = g.mul(g.mul(i, j), g.inv(i));
                KoszulChain moved = orb::chain_apply(
                    g.element(i), orb::psi_generator(g.element(j)));
                CHECK(orb::class_equal_mod_exact(g.element(conj), moved,
                                                 orb::psi_generator(g.element(conj))));
            }
    }
}
