#pragma once

#include <delrep/modtrace.hpp>
#include <delrep/morphism.hpp>

namespace delrep {

// An object of the graded category: a strands carrying the generator and b
// carrying its dual, in that order. Its degree a - b is what the braiding
// and twist read; homs between objects of different degree are zero.
struct GradedObject {
    int a = 0;
    int b = 0;

    int degree() const { return a - b; }
    int arity() const { return a + b; }
    GradedObject dual() const { return {b, a}; }
    GradedObject tensor(const GradedObject& o) const { return {a + o.a, b + o.b}; }

    bool operator==(const GradedObject&) const = default;
};

// A morphism of the graded category: a plain diagram combination with
// q-Laurent coefficients, tagged with its source and target objects.
struct GradedMorphism {
    GradedObject src;
    GradedObject dst;
    Morphism<QLaurent> body;

    GradedMorphism scaled(const QLaurent& c) const { return {src, dst, body.scaled_coeff(c)}; }

    bool operator==(const GradedMorphism&) const = default;
};

// Validating constructor: arities must match and a nonzero body needs equal
// degrees on both ends.
GradedMorphism g_make(GradedObject src, GradedObject dst, Morphism<QLaurent> body);

GradedMorphism g_id(GradedObject v);
GradedMorphism g_zero(GradedObject src, GradedObject dst);
GradedMorphism g_compose(const GradedMorphism& f, const GradedMorphism& g); // f ∘ g
GradedMorphism g_tensor(const GradedMorphism& f, const GradedMorphism& g);

// The lifted braiding v⊗w → w⊗v: the block transposition scaled by
// q^(deg v · deg w). Its inverse carries the opposite power.
GradedMorphism graded_braiding(GradedObject v, GradedObject w);
GradedMorphism graded_braiding_inverse(GradedObject v, GradedObject w); // w⊗v → v⊗w

// The twist q^(deg v)^2 · id.
GradedMorphism graded_twist(GradedObject v);

// Two-sided duality data. ev: v*⊗v → 1 and coev: 1 → v⊗v* lift the plain
// nested pairings unchanged; the primed pair is built from them by the
// defining composites through the braiding and the twist.
GradedMorphism graded_ev(GradedObject v);
GradedMorphism graded_coev(GradedObject v);
GradedMorphism graded_ev_prime(GradedObject v);   // v⊗v* → 1
GradedMorphism graded_coev_prime(GradedObject v); // 1 → v*⊗v

// Partial traces of f: v⊗w → v⊗w written out as the duality composites:
// the right trace closes w through coev_w and ev'_w, the left trace closes v
// through coev'_v and ev_v.
GradedMorphism graded_tr_right(const GradedMorphism& f, GradedObject v, GradedObject w);
GradedMorphism graded_tr_left(const GradedMorphism& f, GradedObject v, GradedObject w);

// The degrading functor: identity on underlying diagram combinations.
Morphism<QLaurent> degrade(const GradedMorphism& f);

// Degrade and substitute a numeric q.
Morphism<TPoly> degrade_at(const GradedMorphism& f, const Rational& q0);

// Degrade a morphism whose coefficients never mention q; errors otherwise.
Morphism<TPoly> degrade_strict(const GradedMorphism& f);

// Modified trace of an endomorphism of v sandwiched by the antisymmetrizer
// on all of its strands: decompose and apply the trace functional.
QLaurent graded_mod_trace(const GradedMorphism& h);

} // namespace delrep
