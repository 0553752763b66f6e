#pragma once

#include <map>
#include <sstream>
#include <string>

#include "orb/cyclotomic.hpp"

namespace orb {

// Sparse Laurent-style polynomial in a single formal variable t with
// rational exponents and Q(zeta) coefficients.  Zero coefficients are
// never stored.
class TPoly {
public:
    TPoly() = default;

    static TPoly zero() { return TPoly(); }
    static TPoly one() { return monomial(Rational(0), CycNum(Rational(1))); }
    static TPoly monomial(const Rational& exp, const CycNum& coeff) {
        TPoly p;
        if (!coeff.is_zero()) p.terms_[exp] = coeff;
        return p;
    }
    static TPoly t_power(const Rational& exp) {
        return monomial(exp, CycNum(Rational(1)));
    }

    const std::map<Rational, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CycNum coeff(const Rational& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? CycNum() : it->second;
    }

    TPoly& operator+=(const TPoly& o) {
        for (const auto& [q, c] : o.terms_) add_term(q, c);
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        for (const auto& [q, c] : o.terms_) add_term(q, -c);
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r;
        for (const auto& [qa, ca] : a.terms_)
            for (const auto& [qb, cb] : b.terms_) r.add_term(qa + qb, ca * cb);
        return r;
    }
    friend TPoly operator*(const CycNum& s, const TPoly& a) {
        TPoly r;
        for (const auto& [q, c] : a.terms_) r.add_term(q, s * c);
        return r;
    }

    bool operator==(const TPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [q, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            bool unit_coeff = c == CycNum(Rational(1));
            if (q == 0) {
                os << "(" << c.str() << ")";
            } else {
                if (!unit_coeff) os << "(" << c.str() << ")*";
                os << "t";
                if (q != 1) os << "^(" << to_string(q) << ")";
            }
        }
        return os.str();
    }

private:
    void add_term(const Rational& q, const CycNum& c) {
        auto [it, inserted] = terms_.try_emplace(q, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else if (c.is_zero()) {
            terms_.erase(it);
        }
    }

    std::map<Rational, CycNum> terms_;
};

}  // namespace orb
