#include <delrep/graded.hpp>

namespace delrep {

namespace {

std::string obj_str(const GradedObject& v) {
    return "[" + std::to_string(v.a) + "," + std::to_string(v.b) + "]";
}

} // namespace

GradedMorphism g_make(GradedObject src, GradedObject dst, Morphism<QLaurent> body) {
    if (body.src != src.arity() || body.dst != dst.arity())
        throw error("graded morphism body has arity " + std::to_string(body.src) + "->" +
                    std::to_string(body.dst) + " but the objects are " + obj_str(src) + "->" +
                    obj_str(dst));
    if (src.degree() != dst.degree() && !body.is_zero())
        throw error("nonzero graded morphism between objects of different degree: " +
                    obj_str(src) + " -> " + obj_str(dst));
    return {src, dst, std::move(body)};
}

GradedMorphism g_id(GradedObject v) {
    return {v, v, Morphism<QLaurent>::identity(v.arity())};
}

GradedMorphism g_zero(GradedObject src, GradedObject dst) {
    return {src, dst, Morphism<QLaurent>::zero(src.arity(), dst.arity())};
}

GradedMorphism g_compose(const GradedMorphism& f, const GradedMorphism& g) {
    if (!(g.dst == f.src))
        throw error("graded composition mismatch: inner ends at " + obj_str(g.dst) +
                    ", outer starts at " + obj_str(f.src));
    return {g.src, f.dst, mor_compose(f.body, g.body)};
}

GradedMorphism g_tensor(const GradedMorphism& f, const GradedMorphism& g) {
    return {f.src.tensor(g.src), f.dst.tensor(g.dst), mor_tensor(f.body, g.body)};
}

GradedMorphism graded_braiding(GradedObject v, GradedObject w) {
    Morphism<QLaurent> body = Morphism<QLaurent>::single(
        braiding_diagram(v.arity(), w.arity()), QLaurent::q_power(v.degree() * w.degree()));
    return {v.tensor(w), w.tensor(v), std::move(body)};
}

GradedMorphism graded_braiding_inverse(GradedObject v, GradedObject w) {
    Morphism<QLaurent> body = Morphism<QLaurent>::single(
        braiding_diagram(w.arity(), v.arity()), QLaurent::q_power(-v.degree() * w.degree()));
    return {w.tensor(v), v.tensor(w), std::move(body)};
}

GradedMorphism graded_twist(GradedObject v) {
    int d = v.degree();
    GradedMorphism id = g_id(v);
    id.body = id.body.scaled_coeff(QLaurent::q_power(d * d));
    return id;
}

GradedMorphism graded_ev(GradedObject v) {
    Morphism<QLaurent> body =
        Morphism<QLaurent>::single(ev_diagram(v.arity()), QLaurent::one());
    return {v.dual().tensor(v), GradedObject{0, 0}, std::move(body)};
}

GradedMorphism graded_coev(GradedObject v) {
    Morphism<QLaurent> body =
        Morphism<QLaurent>::single(coev_diagram(v.arity()), QLaurent::one());
    return {GradedObject{0, 0}, v.tensor(v.dual()), std::move(body)};
}

GradedMorphism graded_ev_prime(GradedObject v) {
    // ev ∘ braiding ∘ (twist ⊗ id): the braiding's q-power and the twist's
    // cancel, leaving the flipped pairing with trivial q-weight.
    return g_compose(graded_ev(v),
                     g_compose(graded_braiding(v, v.dual()),
                               g_tensor(graded_twist(v), g_id(v.dual()))));
}

GradedMorphism graded_coev_prime(GradedObject v) {
    // braiding ∘ (twist ⊗ id) ∘ coev.
    return g_compose(graded_braiding(v, v.dual()),
                     g_compose(g_tensor(graded_twist(v), g_id(v.dual())), graded_coev(v)));
}

GradedMorphism graded_tr_right(const GradedMorphism& f, GradedObject v, GradedObject w) {
    GradedObject vw = v.tensor(w);
    if (!(f.src == vw) || !(f.dst == vw))
        throw error("right trace expects an endomorphism of " + obj_str(vw));
    GradedMorphism lower = g_tensor(g_id(v), graded_coev(w));            // v -> v⊗w⊗w*
    GradedMorphism middle = g_tensor(f, g_id(w.dual()));                 // -> v⊗w⊗w*
    GradedMorphism upper = g_tensor(g_id(v), graded_ev_prime(w));        // -> v
    return g_compose(upper, g_compose(middle, lower));
}

GradedMorphism graded_tr_left(const GradedMorphism& f, GradedObject v, GradedObject w) {
    GradedObject vw = v.tensor(w);
    if (!(f.src == vw) || !(f.dst == vw))
        throw error("left trace expects an endomorphism of " + obj_str(vw));
    GradedMorphism lower = g_tensor(graded_coev_prime(v), g_id(w));      // w -> v*⊗v⊗w
    GradedMorphism middle = g_tensor(g_id(v.dual()), f);                 // -> v*⊗v⊗w
    GradedMorphism upper = g_tensor(graded_ev(v), g_id(w));              // -> w
    return g_compose(upper, g_compose(middle, lower));
}

Morphism<QLaurent> degrade(const GradedMorphism& f) {
    return f.body;
}

Morphism<TPoly> degrade_at(const GradedMorphism& f, const Rational& q0) {
    Morphism<TPoly> out = Morphism<TPoly>::zero(f.body.src, f.body.dst);
    for (const auto& [d, c] : f.body.terms)
        out.add_term(d, c.eval_q(q0));
    return out;
}

Morphism<TPoly> degrade_strict(const GradedMorphism& f) {
    Morphism<TPoly> out = Morphism<TPoly>::zero(f.body.src, f.body.dst);
    for (const auto& [d, c] : f.body.terms) {
        if (!c.is_q_free())
            throw error("residual q in coefficients: specify q handling "
                        "(substitute a value, or keep the graded form)");
        out.add_term(d, c.coeff(0));
    }
    return out;
}

QLaurent graded_mod_trace(const GradedMorphism& h) {
    if (!(h.src == h.dst))
        throw error("graded modified trace expects an endomorphism");
    EndCoords<QLaurent> coords = decompose_endomorphism(h.body, h.src.arity());
    return trace_functional(coords);
}

} // namespace delrep
