#include "orb/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "orb/error.hpp"

namespace orb {

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Quotient of a by monic b; remainder returned through a.
Poly poly_divmod(Poly& a, const Poly& b) {
    Poly q;
    trim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return q;
}

// x^n - 1
Poly xn_minus_1(unsigned n) {
    Poly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    return p;
}

std::mutex g_phi_mutex;
std::map<unsigned, Poly> g_cyclo_cache;

const Poly& cyclo(unsigned n);

Poly compute_cyclo(unsigned n) {
    Poly p = xn_minus_1(n);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly q = poly_divmod(p, cyclo(d));
        if (!p.empty()) throw invariant_violation("cyclotomic division not exact");
        p = std::move(q);
    }
    return p;
}

const Poly& cyclo(unsigned n) {
    // cache is filled in divisor order, so the recursion always hits
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    Poly p = compute_cyclo(n);
    return g_cyclo_cache.emplace(n, std::move(p)).first->second;
}

const Poly& cyclo_locked(unsigned n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclo(n);
}

// Reduce a dense polynomial modulo Phi_n and truncate to length phi(n).
std::vector<Rational> reduce_mod_phi(Poly p, unsigned n) {
    const Poly& phi_n = cyclo_locked(n);
    poly_divmod(p, phi_n);
    p.resize(phi_n.size() - 1);
    return p;
}

}  // namespace

unsigned CycNum::phi(unsigned n) {
    return static_cast<unsigned>(cyclo_locked(n).size() - 1);
}

const std::vector<Rational>& CycNum::cyclotomic_poly(unsigned n) {
    return cyclo_locked(n);
}

CycNum::CycNum(unsigned order, std::vector<Rational> coeffs) : order_(order) {
    if (order == 0) throw usage_error("cyclotomic order must be positive");
    coeffs_ = reduce_mod_phi(std::move(coeffs), order);
}

CycNum CycNum::zeta(unsigned order, long k) {
    long n = static_cast<long>(order);
    k %= n;
    if (k < 0) k += n;
    Poly p(static_cast<size_t>(k) + 1);
    p[static_cast<size_t>(k)] = 1;
    return CycNum(order, reduce_mod_phi(std::move(p), order));
}

CycNum CycNum::from_rational(unsigned order, const Rational& r) {
    std::vector<Rational> c(phi(order));
    c[0] = r;
    return CycNum(order, std::move(c));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw domain_error("not a rational value: " + str());
    return coeffs_[0];
}

CycNum CycNum::promoted(unsigned n) const {
    if (n == order_) return *this;
    if (n % order_ != 0) throw usage_error("promotion target must be a multiple of the order");
    unsigned step = n / order_;
    Poly p(static_cast<size_t>(coeffs_.size() - 1) * step + 1);
    for (size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
    return CycNum(n, reduce_mod_phi(std::move(p), n));
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (order_ != o.order_) {
        unsigned n = lcm_u(order_, o.order_);
        return *this = promoted(n) += o.promoted(n);
    }
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    if (order_ != o.order_) {
        unsigned n = lcm_u(order_, o.order_);
        return *this = promoted(n) *= o.promoted(n);
    }
    Poly p = poly_mul(coeffs_, o.coeffs_);
    coeffs_ = reduce_mod_phi(std::move(p), order_);
    return *this;
}

CycNum operator*(const Rational& r, const CycNum& a) {
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c) x *= r;
    return CycNum(a.order(), std::move(c));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw domain_error("division by zero in Q(zeta)");
    // extended Euclid for coeffs_ and Phi_N over Q
    Poly r0 = cyclo_locked(order_), r1 = coeffs_;
    trim(r1);
    Poly s0 = {}, s1 = {Rational(1)};
    while (true) {
        // make r1 monic for the division helper
        Poly r1m = r1;
        Rational lead = r1m.back();
        for (auto& c : r1m) c /= lead;
        Poly r0c = r0;
        Poly q = poly_divmod(r0c, r1m);
        for (auto& c : q) c /= lead;
        // r2 = r0 - q * r1, s2 = s0 - q * s1
        Poly qr1 = poly_mul(q, r1);
        Poly r2 = r0;
        r2.resize(std::max(r2.size(), qr1.size()));
        for (size_t i = 0; i < qr1.size(); ++i) r2[i] -= qr1[i];
        trim(r2);
        Poly qs1 = poly_mul(q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs1.size()));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        if (r2.empty()) {
            // r1 = gcd, a unit since Phi_N is irreducible; inverse = s1 / r1
            if (r1.size() != 1) throw invariant_violation("cyclotomic gcd not a unit");
            for (auto& c : s1) c /= r1[0];
            return CycNum(order_, reduce_mod_phi(std::move(s1), order_));
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

CycNum CycNum::galois(long m) const {
    long n = static_cast<long>(order_);
    long mm = m % n;
    if (mm < 0) mm += n;
    if (std::gcd(mm, n) != 1) throw usage_error("galois exponent not coprime to order");
    Poly p(static_cast<size_t>(n));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        p[static_cast<size_t>((static_cast<long>(k) * mm) % n)] += coeffs_[k];
    return CycNum(order_, reduce_mod_phi(std::move(p), order_));
}

CycNum CycNum::conj() const { return galois(static_cast<long>(order_) - 1); }

bool CycNum::operator==(const CycNum& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering CycNum::operator<=>(const CycNum& o) const {
    if (order_ != o.order_) {
        unsigned n = lcm_u(order_, o.order_);
        CycNum a = promoted(n), b = o.promoted(n);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
            if (b.coeffs_[i] < a.coeffs_[i]) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] < o.coeffs_[i]) return std::strong_ordering::less;
        if (o.coeffs_[i] < coeffs_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << to_string(coeffs_[k]);
        } else {
            if (coeffs_[k] != 1) os << to_string(coeffs_[k]) << "*";
            os << "z" << order_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace orb
