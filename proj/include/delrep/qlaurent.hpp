#pragma once

#include <utility>
#include <vector>

#include <delrep/tpoly.hpp>

namespace delrep {

// Laurent polynomial in q whose coefficients are polynomials in t. Negative
// q-exponents are allowed (q is invertible); t stays polynomial. Invariant:
// terms sorted by strictly increasing q-exponent, no zero coefficients.
class QLaurent {
public:
    using Term = std::pair<int, TPoly>;

    QLaurent() = default;
    explicit QLaurent(TPoly c) {
        if (!c.is_zero())
            terms_.emplace_back(0, std::move(c));
    }
    explicit QLaurent(Rational c) : QLaurent(TPoly(std::move(c))) {}

    static QLaurent zero() { return QLaurent(); }
    static QLaurent one() { return QLaurent(TPoly::one()); }
    static QLaurent q_power(int exp) { return monomial(exp, TPoly::one()); }
    static QLaurent monomial(int exp, TPoly c) {
        QLaurent p;
        if (!c.is_zero())
            p.terms_.emplace_back(exp, std::move(c));
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_q_free() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    }

    // The t-polynomial part at q-exponent exp (zero when absent).
    TPoly coeff(int exp) const {
        for (const auto& [e, c] : terms_)
            if (e == exp)
                return c;
        return TPoly::zero();
    }

    friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
        QLaurent out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                out.terms_.push_back(*ib++);
            } else {
                TPoly c = ia->second + ib->second;
                if (!c.is_zero())
                    out.terms_.emplace_back(ia->first, std::move(c));
                ++ia, ++ib;
            }
        }
        return out;
    }

    QLaurent operator-() const {
        QLaurent out(*this);
        for (auto& [e, c] : out.terms_)
            c = -c;
        return out;
    }

    friend QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent out;
        for (const auto& [ea, ca] : a.terms_) {
            QLaurent part;
            part.terms_.reserve(b.terms_.size());
            for (const auto& [eb, cb] : b.terms_) {
                TPoly c = ca * cb;
                if (!c.is_zero())
                    part.terms_.emplace_back(ea + eb, std::move(c));
            }
            out = out + part;
        }
        return out;
    }

    QLaurent& operator+=(const QLaurent& o) { return *this = *this + o; }
    QLaurent& operator-=(const QLaurent& o) { return *this = *this - o; }
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    QLaurent scaled(const Rational& c) const {
        QLaurent out;
        for (const auto& [e, p] : terms_) {
            TPoly sc = p.scaled(c);
            if (!sc.is_zero())
                out.terms_.emplace_back(e, std::move(sc));
        }
        return out;
    }

    QLaurent mul_tpow(int k) const {
        QLaurent out;
        for (const auto& [e, p] : terms_)
            out.terms_.emplace_back(e, p.mul_tpow(k));
        return out;
    }

    QLaurent mul_qpow(int k) const {
        QLaurent out(*this);
        for (auto& [e, p] : out.terms_)
            e += k;
        return out;
    }

    // Substitute q = q0 (must be nonzero when negative exponents occur; we
    // require nonzero always since q is a unit).
    TPoly eval_q(const Rational& q0) const {
        if (q0 == 0)
            throw error("q must be invertible: q = 0 is not a valid assignment");
        TPoly acc;
        for (const auto& [e, p] : terms_)
            acc += p.scaled(rat_pow(q0, e));
        return acc;
    }

    Rational eval(const Rational& t0, const Rational& q0) const { return eval_q(q0).eval(t0); }

    bool operator==(const QLaurent&) const = default;

private:
    std::vector<Term> terms_;
};

} // namespace delrep
