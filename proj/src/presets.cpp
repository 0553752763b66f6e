#include "orb/presets.hpp"

namespace orb {

namespace {

CycNum q(long n, long d = 1) { return CycNum(Rational(n, d)); }

Matrix mat(size_t n, std::vector<CycNum> entries) {
    return Matrix(n, n, std::move(entries));
}

std::vector<Preset> build_complex() {
    std::vector<Preset> p;
    CycNum z3 = CycNum::zeta(3);
    CycNum z4 = CycNum::zeta(4);

    p.push_back({"z2-c1", 1, {mat(1, {q(-1)})}});
    p.push_back({"z3-c1", 1, {mat(1, {z3})}});
    p.push_back({"z4-c1", 1, {mat(1, {z4})}});
    p.push_back({"z2-c2", 2, {mat(2, {q(-1), q(0), q(0), q(-1)})}});
    p.push_back({"z2xz2-c2",
                 2,
                 {mat(2, {q(-1), q(0), q(0), q(1)}),
                  mat(2, {q(1), q(0), q(0), q(-1)})}});
    // S3 as permutation matrices: the transposition (1 2) and the cycle (1 2 3)
    p.push_back({"s3-perm",
                 3,
                 {mat(3, {q(0), q(1), q(0), q(1), q(0), q(0), q(0), q(0), q(1)}),
                  mat(3, {q(0), q(0), q(1), q(1), q(0), q(0), q(0), q(1), q(0)})}});
    p.push_back({"q8-c2",
                 2,
                 {mat(2, {z4, CycNum(), CycNum(), z4.inverse()}),
                  mat(2, {q(0), q(1), q(-1), q(0)})}});
    return p;
}

std::vector<Preset> build_symplectic() {
    std::vector<Preset> p;
    p.push_back({"sp2-z2", 2, {mat(2, {q(-1), q(0), q(0), q(-1)})}});
    p.push_back({"sp2-z3", 2, {mat(2, {q(0), q(-1), q(1), q(-1)})}});
    p.push_back({"sp2-z4", 2, {mat(2, {q(0), q(-1), q(1), q(0)})}});
    {
        std::vector<CycNum> e(16, q(0));
        for (size_t i = 0; i < 4; ++i) e[i * 4 + i] = q(-1);
        p.push_back({"sp4-z2", 4, {mat(4, e)}});
    }
    {
        std::vector<CycNum> a(16, q(0)), b(16, q(0));
        long da[4] = {-1, 1, -1, 1};
        long db[4] = {1, -1, 1, -1};
        for (size_t i = 0; i < 4; ++i) {
            a[i * 4 + i] = q(da[i]);
            b[i * 4 + i] = q(db[i]);
        }
        p.push_back({"sp4-z2xz2", 4, {mat(4, a), mat(4, b)}});
    }
    return p;
}

}  // namespace

const std::vector<Preset>& complex_presets() {
    static const std::vector<Preset> presets = build_complex();
    return presets;
}

std::optional<Preset> find_preset(const std::string& name) {
    for (const auto& p : complex_presets())
        if (p.name == name) return p;
    return std::nullopt;
}

const std::vector<Preset>& symplectic_presets() {
    static const std::vector<Preset> presets = build_symplectic();
    return presets;
}

std::optional<Preset> find_symplectic_preset(const std::string& name) {
    for (const auto& p : symplectic_presets())
        if (p.name == name) return p;
    return std::nullopt;
}

}  // namespace orb
