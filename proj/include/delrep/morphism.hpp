#pragma once

#include <map>

#include <delrep/diagram.hpp>
#include <delrep/enumerate.hpp>
#include <delrep/qlaurent.hpp>
#include <delrep/tpoly.hpp>

namespace delrep {

// A finite linear combination of partition diagrams, all sharing the same
// source arity (top row) and target arity (bottom row). The coefficient ring
// C is TPoly for the plain category and QLaurent for the graded one; loop
// factors enter through C::mul_tpow. Zero coefficients are never stored, and
// diagrams are canonical, so equality of morphisms is map equality.
template <class C>
struct Morphism {
    int src = 0;
    int dst = 0;
    std::map<PartitionDiagram, C> terms;

    static Morphism zero(int src, int dst) { return Morphism{src, dst, {}}; }

    static Morphism single(const PartitionDiagram& d, C c) {
        Morphism m{d.top, d.bottom, {}};
        m.add_term(d, std::move(c));
        return m;
    }

    static Morphism identity(int n) {
        return single(PartitionDiagram::identity(n), C::one());
    }

    void add_term(const PartitionDiagram& d, C c) {
        if (d.top != src || d.bottom != dst)
            throw error("diagram arity does not match morphism arity");
        if (c.is_zero())
            return;
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms.emplace(d, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    Morphism scaled(const Rational& r) const {
        Morphism out{src, dst, {}};
        if (r == 0)
            return out;
        for (const auto& [d, c] : terms) {
            C sc = c.scaled(r);
            if (!sc.is_zero())
                out.terms.emplace(d, std::move(sc));
        }
        return out;
    }

    Morphism scaled_coeff(const C& factor) const {
        Morphism out{src, dst, {}};
        for (const auto& [d, c] : terms) {
            C sc = c * factor;
            if (!sc.is_zero())
                out.terms.emplace(d, std::move(sc));
        }
        return out;
    }

    friend Morphism operator+(const Morphism& a, const Morphism& b) {
        if (a.src != b.src || a.dst != b.dst)
            throw error("morphism arity mismatch in addition");
        Morphism out = a;
        for (const auto& [d, c] : b.terms)
            out.add_term(d, c);
        return out;
    }

    Morphism operator-() const { return scaled(Rational(-1)); }
    friend Morphism operator-(const Morphism& a, const Morphism& b) { return a + (-b); }
    Morphism& operator+=(const Morphism& o) { return *this = *this + o; }
    Morphism& operator-=(const Morphism& o) { return *this = *this - o; }

    bool operator==(const Morphism&) const = default;
};

// f ∘ g: apply g first. Diagrammatically g is stacked on top of f and closed
// middle components turn into powers of t on the coefficients.
template <class C>
Morphism<C> mor_compose(const Morphism<C>& f, const Morphism<C>& g) {
    if (g.dst != f.src)
        throw error("composition arity mismatch: inner produces " + std::to_string(g.dst) +
                    " strands, outer consumes " + std::to_string(f.src));
    Morphism<C> out = Morphism<C>::zero(g.src, f.dst);
    for (const auto& [dg, cg] : g.terms)
        for (const auto& [df, cf] : f.terms) {
            ComposeResult r = compose(dg, df);
            out.add_term(r.diagram, (cf * cg).mul_tpow(r.loops));
        }
    return out;
}

template <class C>
Morphism<C> mor_tensor(const Morphism<C>& f, const Morphism<C>& g) {
    Morphism<C> out = Morphism<C>::zero(f.src + g.src, f.dst + g.dst);
    for (const auto& [df, cf] : f.terms)
        for (const auto& [dg, cg] : g.terms)
            out.add_term(tensor(df, dg), cf * cg);
    return out;
}

template <class C>
Morphism<C> mor_flip(const Morphism<C>& f) {
    Morphism<C> out = Morphism<C>::zero(f.dst, f.src);
    for (const auto& [d, c] : f.terms)
        out.add_term(flip(d), c);
    return out;
}

enum class TraceSide { Left, Right };

// Close w strands of f on the given side (top strand i joined to bottom
// strand i of the closed band); swallowed components contribute factors of t.
template <class C>
Morphism<C> partial_trace(const Morphism<C>& f, TraceSide side, int w) {
    if (w < 0 || w > f.src || w > f.dst)
        throw error("partial trace over more strands than the morphism has");
    std::vector<int> ttop(w), tbot(w);
    for (int k = 0; k < w; ++k) {
        ttop[k] = side == TraceSide::Left ? k : f.src - w + k;
        tbot[k] = side == TraceSide::Left ? k : f.dst - w + k;
    }
    Morphism<C> out = Morphism<C>::zero(f.src - w, f.dst - w);
    for (const auto& [d, c] : f.terms) {
        TraceResult r = close_strands(d, ttop, tbot);
        out.add_term(r.diagram, c.mul_tpow(r.loops));
    }
    return out;
}

// Full closure of an endomorphism: the scalar multiplying the empty diagram.
template <class C>
C categorical_trace(const Morphism<C>& f) {
    if (f.src != f.dst)
        throw error("categorical trace requires an endomorphism");
    Morphism<C> closed = partial_trace(f, TraceSide::Right, f.src);
    C out = C::zero();
    for (const auto& [d, c] : closed.terms)
        out += c;
    return out;
}

template <class C>
bool is_idempotent(const Morphism<C>& e) {
    return e.src == e.dst && mor_compose(e, e) == e;
}

// g is negligible at t0 when every composite g ∘ h with a diagram h has
// vanishing categorical trace there. Checked by exhausting P_{dst,src}.
bool is_negligible(const Morphism<TPoly>& g, const Rational& t0,
                   int cap = DiagramEnumerator::default_cap);

// --- rigid structure maps ----------------------------------------------------

// Nested pairing: ev joins top strand i with top strand 2n+1-i (1-based), so
// the evaluation of [a+b] restricts to the evaluations of [a] and [b] nested
// inside one another. coev is its flip.
PartitionDiagram ev_diagram(int n);
PartitionDiagram coev_diagram(int n);

// The block transposition permutation [n]⊗[m] → [m]⊗[n].
PartitionDiagram braiding_diagram(int n, int m);

// One-sided duals from the symmetric structure: ev' = ev ∘ braiding,
// coev' = braiding ∘ coev (the twist on [n] is the identity).
PartitionDiagram ev_prime_diagram(int n);
PartitionDiagram coev_prime_diagram(int n);

template <class C>
Morphism<C> to_coeff(const Morphism<TPoly>& f) {
    Morphism<C> out = Morphism<C>::zero(f.src, f.dst);
    for (const auto& [d, c] : f.terms)
        out.add_term(d, C(c));
    return out;
}

} // namespace delrep
