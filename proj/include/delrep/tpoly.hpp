#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include <delrep/rational.hpp>

namespace delrep {

// Polynomial in the parameter t over Rational. Invariant: terms are sorted by
// strictly increasing exponent and no stored coefficient is zero, so equality
// of values is equality of representations.
class TPoly {
public:
    using Term = std::pair<int, Rational>;

    TPoly() = default;
    explicit TPoly(Rational c) {
        if (c != 0)
            terms_.emplace_back(0, std::move(c));
    }
    explicit TPoly(long c) : TPoly(Rational(c)) {}

    static TPoly zero() { return TPoly(); }
    static TPoly one() { return TPoly(Rational(1)); }
    static TPoly t() { return monomial(1, Rational(1)); }
    static TPoly monomial(int exp, Rational c) {
        TPoly p;
        if (exp < 0)
            throw error("t-polynomials do not allow negative exponents");
        if (c != 0)
            p.terms_.emplace_back(exp, std::move(c));
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    }
    int degree() const { return terms_.empty() ? -1 : terms_.back().first; }

    // Coefficient of t^exp (zero when absent).
    Rational coeff(int exp) const {
        for (const auto& [e, c] : terms_)
            if (e == exp)
                return c;
        return Rational(0);
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        TPoly out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                out.terms_.push_back(*ib++);
            } else {
                Rational c = ia->second + ib->second;
                if (c != 0)
                    out.terms_.emplace_back(ia->first, std::move(c));
                ++ia, ++ib;
            }
        }
        return out;
    }

    TPoly operator-() const {
        TPoly out(*this);
        for (auto& [e, c] : out.terms_)
            c = -c;
        return out;
    }

    friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly out;
        for (const auto& [ea, ca] : a.terms_)
            out = out + shifted_scaled(b, ea, ca);
        return out;
    }

    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly scaled(const Rational& c) const { return shifted_scaled(*this, 0, c); }

    // Multiply by t^k; the diagram calculus feeds loop counts in through here.
    TPoly mul_tpow(int k) const { return shifted_scaled(*this, k, Rational(1)); }

    Rational eval(const Rational& t0) const {
        // Horner from the top exponent down, stepping over exponent gaps.
        if (terms_.empty())
            return Rational(0);
        Rational acc(0);
        int prev = terms_.back().first;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            acc *= rat_pow(t0, prev - it->first);
            acc += it->second;
            prev = it->first;
        }
        return acc * rat_pow(t0, prev);
    }

    // Exact division; throws when the divisor does not divide evenly.
    friend TPoly divide_exact(TPoly num, const TPoly& den) {
        if (den.is_zero())
            throw error("polynomial division by zero");
        TPoly quot;
        while (!num.is_zero()) {
            int shift = num.degree() - den.degree();
            if (shift < 0)
                throw error("polynomial division leaves a remainder");
            Rational c = num.terms_.back().second / den.terms_.back().second;
            TPoly m = TPoly::monomial(shift, c);
            quot += m;
            num -= m * den;
        }
        return quot;
    }

    bool operator==(const TPoly&) const = default;
    auto operator<=>(const TPoly&) const = default;

private:
    static TPoly shifted_scaled(const TPoly& p, int shift, const Rational& c) {
        TPoly out;
        if (c == 0)
            return out;
        out.terms_.reserve(p.terms_.size());
        for (const auto& [e, pc] : p.terms_) {
            Rational nc = pc * c;
            if (nc != 0)
                out.terms_.emplace_back(e + shift, std::move(nc));
        }
        return out;
    }

    std::vector<Term> terms_;
};

} // namespace delrep
