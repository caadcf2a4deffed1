#pragma once

#include <array>
#include <functional>
#include <optional>

#include <delrep/morphism.hpp>

namespace delrep {

// The identity diagram with the edge at the last strand removed; together
// with the antisymmetrizer it spans the sandwiched endomorphism space.
PartitionDiagram x_diagram(int n);

// s_n = (1/n!) Σ_σ sgn(σ) σ, the alternating idempotent on n strands.
Morphism<TPoly> antisymmetrizer(int n);

// Coordinates of a sandwiched endomorphism f = α s_n + β (s_n x_n s_n).
template <class C>
struct EndCoords {
    C alpha;
    C beta;
};

// Read the coordinates off a sandwiched endomorphism by classifying its
// diagram terms: permutation terms land in α with their sign, punctured
// permutation terms in β. Requires f = s_n f s_n exactly.
template <class C>
EndCoords<C> decompose_endomorphism(const Morphism<C>& f, int n) {
    if (f.src != n || f.dst != n)
        throw error("decomposition requires an endomorphism on " + std::to_string(n) + " strands");
    Morphism<C> s = to_coeff<C>(antisymmetrizer(n));
    if (mor_compose(s, mor_compose(f, s)) != f)
        throw error("morphism is not sandwiched by the antisymmetrizer");
    EndCoords<C> out{C::zero(), C::zero()};
    for (const auto& [d, c] : f.terms) {
        Classification cls = classify(d);
        switch (cls.kind) {
        case DiagramClass::Permutation:
            out.alpha += c.scaled(Rational(cls.sign));
            break;
        case DiagramClass::PuncturedPermutation:
            out.beta += c.scaled(Rational(cls.sign));
            break;
        case DiagramClass::Other:
            throw error("internal: sandwiched morphism with an unclassifiable term");
        }
    }
    return out;
}

// The linear functional sending both basis elements to 1; on coordinates
// that is α + β.
template <class C>
C trace_functional(const EndCoords<C>& coords) {
    return coords.alpha + coords.beta;
}

// The two halved traces of the doubled endomorphism built from a diagram pi
// on 2n strands: sandwich pi by the antisymmetrizer on each tensor factor,
// then close the right (or left) n strands. Reference implementation; the
// verifier uses theta_direct.
EndCoords<TPoly> theta(const PartitionDiagram& pi, TraceSide side, int n);

// Same values computed without materializing the sandwich: the outer
// antisymmetrizers collapse onto a single sum over permutations glued to
// pi's closed side. Exhaustively checked against theta in the tests.
EndCoords<TPoly> theta_direct(const PartitionDiagram& pi, TraceSide side, int n);

struct AmbidexterityFailure {
    PartitionDiagram pi;
    TPoly lhs; // trace functional of the right-closed theta
    TPoly rhs; // …and of the left-closed theta
};

struct AmbidexterityReport {
    // At most this many failing diagrams are kept; failure_count is exact.
    static constexpr std::size_t max_recorded = 64;

    int n = 0;
    std::optional<Rational> t0; // empty = generic t
    std::uint64_t checked = 0;
    std::uint64_t failure_count = 0;
    std::vector<AmbidexterityFailure> failures;
    double seconds = 0.0;
    bool ok() const { return failure_count == 0; }
};

struct VerifyOptions {
    std::optional<Rational> t0;    // empty = verify as polynomials in t
    int jobs = 1;
    int cap = DiagramEnumerator::default_cap;
    // Recompute everything through the reference theta as well — including
    // the diagrams the restriction filter would skip — and require agreement.
    bool paranoid = false;
    // Called with (done, total) once per progress step from worker threads.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Check the trace functional is ambidextrous: for every diagram pi on 2n
// strands, both closures of the sandwiched doubled endomorphism have the
// same functional value. Diagrams whose induced side partitions are neither
// permutations nor once-punctured permutations contribute zero to both sides
// and are skipped (still counted); the rest are computed directly.
AmbidexterityReport verify_ambidextrous(int n, const VerifyOptions& opts = {});

// The space of linear functionals on the single-strand endomorphism algebra
// satisfying the ambidexterity constraints, as values on (identity, x_1).
struct SolutionSpace {
    int dimension = 0;
    std::vector<std::array<TPoly, 2>> basis;
};

SolutionSpace ambidextrous_solution_space(const std::optional<Rational>& t0);

// (s_n ⊗ id_k) h (s_n ⊗ id_k) — the projection onto the sandwiched part.
Morphism<TPoly> project_sandwich(const Morphism<TPoly>& h, int n, int k);

// Modified trace on endomorphisms of the sandwich object tensored with k
// plain strands: close the k strands, then apply the trace functional.
// Requires h = (s_n ⊗ id_k) h (s_n ⊗ id_k).
TPoly mod_trace(const Morphism<TPoly>& h, int n, int k);

// An object presented as the image of an idempotent on `arity` strands.
struct RetractObject {
    int arity = 0;
    Morphism<TPoly> idempotent;
};

// Modified dimension of the retract relative to the trace family with index
// n: mod_trace of the idempotent with k = arity - n closed strands.
// Requires the idempotent to be sandwiched accordingly.
TPoly mod_dimension(const RetractObject& obj, int n);

} // namespace delrep
