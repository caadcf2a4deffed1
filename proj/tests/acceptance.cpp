// Release gates. Each numbered check prints exactly one PASS/FAIL line with
// its timing; the binary exits nonzero if any gate fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <delrep/enumerate.hpp>
#include <delrep/error.hpp>
#include <delrep/graded.hpp>
#include <delrep/knots.hpp>
#include <delrep/modtrace.hpp>
#include <delrep/morphism_io.hpp>
#include <delrep/oracle.hpp>

using namespace delrep;

namespace {

Morphism<TPoly> single(const PartitionDiagram& d) {
    return Morphism<TPoly>::single(d, TPoly::one());
}

struct Gate {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool fail(std::string& detail, const std::string& why) {
    detail = why;
    return false;
}

// ---- 1: modified dimensions -------------------------------------------------

bool gate_dims(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 8; ++n) {
        Rational got = mod_trace(antisymmetrizer(n), 1, n - 1).eval(Rational(0));
        Rational want = Rational((n % 2 == 1) ? 1 : -1) / n;
        if (got != want)
            return fail(detail, "n=" + std::to_string(n) + " gave " + to_string(got));
    }
    double s = seconds_since(start);
    detail = "n=1..8 exact at t=0, " + std::to_string(s) + " s (limit 10)";
    return s < 10.0;
}

// ---- 2: exhaustive ambidexterity -------------------------------------------

bool gate_verify(std::string& detail) {
    AmbidexterityReport r1 = verify_ambidextrous(1);
    VerifyOptions generic2;
    generic2.jobs = static_cast<int>(std::thread::hardware_concurrency());
    AmbidexterityReport r2 = verify_ambidextrous(2, generic2);
    if (!r1.ok() || r1.checked != 15)
        return fail(detail, "n=1 run came back wrong");
    if (!r2.ok() || r2.checked != 4140)
        return fail(detail, "n=2 run came back wrong");
    const double small = r1.seconds + r2.seconds;
    if (small >= 60.0)
        return fail(detail, "n=1,2 generic took " + std::to_string(small) + " s (limit 60)");

    VerifyOptions stress;
    stress.t0 = Rational(2);
    unsigned hw = std::thread::hardware_concurrency();
    stress.jobs = static_cast<int>(hw < 4 ? 4 : hw);
    AmbidexterityReport r3 = verify_ambidextrous(3, stress);
    if (!r3.ok() || r3.checked != 4213597)
        return fail(detail, "n=3 at t=2: " + std::to_string(r3.failure_count) + " failures over " +
                                std::to_string(r3.checked) + " diagrams");
    if (r3.seconds >= 1800.0)
        return fail(detail, "n=3 took " + std::to_string(r3.seconds) + " s (limit 1800)");
    detail = "n=1,2 generic in " + std::to_string(small) + " s; n=3 at t=2, " +
             std::to_string(stress.jobs) + " workers, " + std::to_string(r3.seconds) + " s";
    return true;
}

// ---- 3: one-strand uniqueness ----------------------------------------------

bool gate_solution_space(std::string& detail) {
    SolutionSpace space = ambidextrous_solution_space(Rational(0));
    if (space.dimension != 1 || space.basis.size() != 1)
        return fail(detail, "dimension " + std::to_string(space.dimension));
    if (space.basis[0][0] != TPoly::one() || space.basis[0][1] != TPoly::one())
        return fail(detail, "basis (" + to_string(space.basis[0][0]) + ", " +
                                to_string(space.basis[0][1]) + ")");
    detail = "t=0 solution space is the line through (1, 1)";
    return true;
}

// ---- 4: the antisymmetrizer trichotomy -------------------------------------

bool gate_sandwich_rules(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 3; ++n) {
        const Morphism<TPoly> s = antisymmetrizer(n);
        const Morphism<TPoly> sxs = mor_compose(s, mor_compose(single(x_diagram(n)), s));

        // (1) permutations pass through at the cost of their sign
        for (const auto& perm : all_permutations(n)) {
            Morphism<TPoly> sig = single(PartitionDiagram::permutation(perm));
            Morphism<TPoly> want = s.scaled(Rational(perm_sign(perm)));
            if (mor_compose(sig, s) != want || mor_compose(s, sig) != want)
                return fail(detail, "sign rule broke at n=" + std::to_string(n));
        }

        // (2) everything outside the permutations and once-punctured
        // permutations is crushed; (3) the punctured ones all collapse onto
        // one element, weighted by the completed sign
        std::uint64_t perms = 0, punctured = 0, crushed = 0;
        for (const PartitionDiagram& pi : enumerate_all(n, n)) {
            Classification cl = classify(pi);
            Morphism<TPoly> sps = mor_compose(s, mor_compose(single(pi), s));
            if (cl.kind == DiagramClass::Other) {
                ++crushed;
                if (!sps.is_zero())
                    return fail(detail, "s·" + to_string(pi) + "·s is not zero");
            } else if (cl.kind == DiagramClass::Permutation) {
                ++perms;
            } else {
                ++punctured;
                if (sps != sxs.scaled(Rational(cl.sign)))
                    return fail(detail, "collapse rule broke on " + to_string(pi));
            }
        }
        std::uint64_t total = perms + punctured + crushed;
        if (total != bell_number(2 * n) || perms != factorial(n).convert_to<std::uint64_t>() ||
            punctured != n * perms)
            return fail(detail, "class counts off at n=" + std::to_string(n));
    }
    double s = seconds_since(start);
    detail = "all three rules exact over the polynomial ring for n≤3, " + std::to_string(s) +
             " s (limit 30)";
    return s < 30.0;
}

// ---- 5: negligibility and the closed trace formula -------------------------

int cycle_count(std::vector<int> perm) {
    int cycles = 0;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j])
            seen[j] = true;
    }
    return cycles;
}

bool gate_negligible(std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
        const Morphism<TPoly> s = antisymmetrizer(n);
        for (int t0 = 0; t0 <= 6; ++t0)
            if (is_negligible(s, Rational(t0)) != (t0 < n))
                return fail(detail, "s_" + std::to_string(n) + " at t=" + std::to_string(t0));
    }
    for (int n = 1; n <= 5; ++n) {
        // direct sum over the symmetric group, cycles counted by hand
        TPoly oracle = TPoly::zero();
        for (const auto& perm : all_permutations(n))
            oracle += TPoly::monomial(cycle_count(perm), Rational(perm_sign(perm)));
        oracle = oracle.scaled(Rational(1) / Rational(factorial(n)));

        TPoly falling = TPoly::one();
        for (int i = 0; i < n; ++i)
            falling *= TPoly::t() - TPoly(Rational(i));
        falling = falling.scaled(Rational(1) / Rational(factorial(n)));

        TPoly got = categorical_trace(antisymmetrizer(n));
        if (got != oracle || got != falling)
            return fail(detail, "trace of s_" + std::to_string(n) + " is " + to_string(got));
    }
    detail = "negligible iff t<n (n≤4, t≤6); trace of s_n matches the falling factorial, n≤5";
    return true;
}

// ---- 6: the graded lift ----------------------------------------------------

bool gate_graded(std::string& detail) {
    const GradedObject V{1, 0};
    const GradedObject VV = V.tensor(V);
    for (const PartitionDiagram& pi : enumerate_all(2, 2)) {
        GradedMorphism h = g_make(VV, VV, Morphism<QLaurent>::single(pi, QLaurent::one()));
        QLaurent right = graded_mod_trace(graded_tr_right(h, V, V));
        QLaurent left = graded_mod_trace(graded_tr_left(h, V, V));
        if (right != left)
            return fail(detail, "closures disagree on " + to_string(pi) + ": " +
                                    to_string(right) + " vs " + to_string(left));
        if (degrade(graded_tr_right(h, V, V)) != partial_trace(h.body, TraceSide::Right, 1))
            return fail(detail, "degrading does not commute with the right closure on " +
                                    to_string(pi));
    }
    detail = "one-strand ambidexterity with q symbolic, and degrading commutes, 15 generators";
    return true;
}

// ---- 7: the knot corpus ----------------------------------------------------

bool gate_knots(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const std::pair<const char*, int> corpus[] = {
        {"unknot.tw", 0},      {"kink_p1.tw", 1},  {"kink_m1.tw", -1},
        {"kink_p2.tw", 2},     {"kink_m2.tw", -2}, {"kink_p3.tw", 3},
        {"kink_m3.tw", -3},    {"trefoil.tw", 3},  {"trefoil_mirror.tw", -3},
        {"figure8.tw", 0},
    };
    const std::pair<int, int> labels[] = {{1, 0}, {2, 0}, {2, 1}, {1, 1}};
    for (const auto& [name, omega] : corpus) {
        std::ifstream in(std::string(KNOT_WORD_DIR) + "/" + name);
        if (!in)
            return fail(detail, std::string("missing corpus word ") + name);
        std::stringstream buf;
        buf << in.rdbuf();
        TangleWord word = parse_tangle(buf.str());
        for (const auto& [a, b] : labels) {
            KnotResult r = evaluate_knot(word, a, b);
            QLaurent want = QLaurent::q_power((a - b) * (a - b) * omega);
            if (r.value != want || r.writhe != omega)
                return fail(detail, std::string(name) + " at (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") gave " + to_string(r.value));
            if ((a == b) != r.degenerate)
                return fail(detail, std::string("degeneracy flag wrong on ") + name);
        }
    }
    double s = seconds_since(start);
    detail = "10 words × 4 labels equal the framing power exactly, " + std::to_string(s) +
             " s (limit 5)";
    return s < 5.0;
}

// ---- 8: the matrix model ---------------------------------------------------

bool gate_oracle(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t checked = 0;
    for (int dim : {2, 3}) {
        OracleOptions opts;
        opts.dimension = dim;
        opts.samples = dim == 3 ? 1000 : 0;
        OracleReport r = oracle_check(opts);
        if (!r.ok)
            return fail(detail, "dimension " + std::to_string(dim) + ": " + r.first_mismatch);
        checked += r.checked;
    }
    double s = seconds_since(start);
    detail = std::to_string(checked) + " checks at dimensions 2 and 3, " + std::to_string(s) +
             " s (limit 60)";
    return s < 60.0;
}

// ---- 9: structural identities ----------------------------------------------

bool gate_structure(std::string& detail) {
    if (bell_number(2) != 2 || bell_number(4) != 15 || bell_number(8) != 4140)
        return fail(detail, "Bell numbers off");
    if (enumerate_all(1, 1).size() != 2 || enumerate_all(2, 2).size() != 15)
        return fail(detail, "enumeration counts off");

    const auto all = enumerate_all(2, 2);
    for (std::size_t i : {2u, 7u, 13u})
        for (std::size_t j : {0u, 5u, 11u})
            for (std::size_t k : {3u, 9u, 14u}) {
                Morphism<TPoly> f = single(all[i]), g = single(all[j]), h = single(all[k]);
                if (mor_compose(mor_compose(f, g), h) != mor_compose(f, mor_compose(g, h)))
                    return fail(detail, "associativity broke");
            }

    const auto p11 = enumerate_all(1, 1);
    for (const PartitionDiagram& a : p11)
        for (const PartitionDiagram& b : p11)
            for (const PartitionDiagram& c : p11)
                for (const PartitionDiagram& d : p11) {
                    Morphism<TPoly> fa = single(a), fb = single(b), fc = single(c),
                                    fd = single(d);
                    if (mor_compose(mor_tensor(fa, fb), mor_tensor(fc, fd)) !=
                        mor_tensor(mor_compose(fa, fc), mor_compose(fb, fd)))
                        return fail(detail, "interchange broke");
                }

    for (int n = 1; n <= 3; ++n) {
        Morphism<TPoly> idn = single(PartitionDiagram::identity(n));
        Morphism<TPoly> ev = single(ev_diagram(n)), coev = single(coev_diagram(n));
        if (mor_compose(mor_tensor(ev, idn), mor_tensor(idn, coev)) != idn ||
            mor_compose(mor_tensor(idn, ev), mor_tensor(coev, idn)) != idn)
            return fail(detail, "snakes broke at n=" + std::to_string(n));
    }

    for (const PartitionDiagram& a : all)
        for (const PartitionDiagram& b : all)
            if (categorical_trace(mor_compose(single(a), single(b))) !=
                categorical_trace(mor_compose(single(b), single(a))))
                return fail(detail, "trace cyclicity broke");

    Morphism<TPoly> f = single(all[4]) + single(all[10]).scaled(Rational(1, 3));
    Morphism<TPoly> g = single(p11[1]).scaled_coeff(TPoly::t());
    if (categorical_trace(mor_tensor(f, g)) != categorical_trace(f) * categorical_trace(g))
        return fail(detail, "trace multiplicativity broke");

    detail = "associativity, interchange, snakes, trace laws, and the diagram counts";
    return true;
}

} // namespace

int main() {
    const Gate gates[] = {
        {1, "modified dimensions", gate_dims},
        {2, "exhaustive ambidexterity", gate_verify},
        {3, "one-strand uniqueness", gate_solution_space},
        {4, "antisymmetrizer sandwich rules", gate_sandwich_rules},
        {5, "negligibility and closed trace", gate_negligible},
        {6, "graded lift", gate_graded},
        {7, "knot corpus", gate_knots},
        {8, "matrix model", gate_oracle},
        {9, "structural identities", gate_structure},
    };
    int failures = 0;
    for (const Gate& gate : gates) {
        std::string detail;
        bool ok = false;
        try {
            ok = gate.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok)
            ++failures;
        std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", gate.id, gate.name, detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
