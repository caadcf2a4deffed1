#include <delrep/modtrace.hpp>

#include <delrep/linalg.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace delrep {

namespace {

struct SignedPerms {
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;

    explicit SignedPerms(int n) : perms(all_permutations(n)) {
        signs.reserve(perms.size());
        for (const auto& p : perms)
            signs.push_back(perm_sign(p));
    }
};

// Integer coordinate accumulators for n! * theta: index = power of t picked
// up as loops while closing one side. Closing n strands swallows at most n
// components, and every summand weight is ±1, so int64 never overflows.
struct ThetaAccum {
    std::vector<std::int64_t> alpha, beta;

    void reset(int n) {
        alpha.assign(n + 1, 0);
        beta.assign(n + 1, 0);
    }
};

// Accumulate n! * theta(pi, side) into acc. The outer antisymmetrizers of
// the doubled endomorphism collapse onto a single signed sum over the
// permutations glued into the side being closed: each summand is pi with the
// closed-side top strands rerouted through rho, closed, and classified.
void accumulate_theta(const PartitionDiagram& pi, int n, TraceSide side, const SignedPerms& sp,
                      ThetaAccum& acc, PartitionDiagram& comp, const std::vector<int>& close_top,
                      const std::vector<int>& close_bottom) {
    comp.top = 2 * n;
    comp.bottom = 2 * n;
    comp.label = pi.label;
    const int base = side == TraceSide::Right ? n : 0;
    for (std::size_t r = 0; r < sp.perms.size(); ++r) {
        const std::vector<int>& rho = sp.perms[r];
        for (int j = 0; j < n; ++j)
            comp.label[base + j] = pi.label[base + rho[j]];
        TraceResult closed = close_strands(comp, close_top, close_bottom);
        Classification cls = classify(closed.diagram);
        if (cls.kind == DiagramClass::Other)
            continue;
        std::int64_t w = sp.signs[r] * cls.sign;
        auto& target = cls.kind == DiagramClass::Permutation ? acc.alpha : acc.beta;
        target[closed.loops] += w;
    }
}

TPoly poly_from_counts(const std::vector<std::int64_t>& counts, const Integer& denom) {
    TPoly out = TPoly::zero();
    for (std::size_t e = 0; e < counts.size(); ++e)
        if (counts[e] != 0)
            out += TPoly::monomial(static_cast<int>(e), Rational(Integer(counts[e]), denom));
    return out;
}

std::vector<int> iota_range(int from, int count) {
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = from + i;
    return out;
}

// Division with remainder in Q[t], for gcd-based normalization of kernel
// vectors; quotients are discarded.
TPoly poly_rem(TPoly a, const TPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational c = a.terms().back().second / b.terms().back().second;
        a -= TPoly::monomial(a.degree() - b.degree(), c) * b;
    }
    return a;
}

TPoly poly_gcd(TPoly a, TPoly b) {
    while (!b.is_zero()) {
        TPoly r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        a = a.scaled(Rational(1) / a.terms().back().second);
    return a;
}

} // namespace

PartitionDiagram x_diagram(int n) {
    if (n < 1)
        throw error("the punctured identity needs at least one strand");
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i)
        id[i] = i;
    return PartitionDiagram::punctured_permutation(id, {n - 1});
}

Morphism<TPoly> antisymmetrizer(int n) {
    if (n < 1)
        throw error("the antisymmetrizer needs at least one strand");
    Morphism<TPoly> out = Morphism<TPoly>::zero(n, n);
    const Integer nf = factorial(n);
    for (const auto& perm : all_permutations(n))
        out.add_term(PartitionDiagram::permutation(perm),
                     TPoly(Rational(Integer(perm_sign(perm)), nf)));
    return out;
}

EndCoords<TPoly> theta(const PartitionDiagram& pi, TraceSide side, int n) {
    if (pi.top != 2 * n || pi.bottom != 2 * n)
        throw error("theta expects a diagram on twice the strand count");
    Morphism<TPoly> s = antisymmetrizer(n);
    Morphism<TPoly> ss = mor_tensor(s, s);
    Morphism<TPoly> h =
        mor_compose(ss, mor_compose(Morphism<TPoly>::single(pi, TPoly::one()), ss));
    return decompose_endomorphism(partial_trace(h, side, n), n);
}

EndCoords<TPoly> theta_direct(const PartitionDiagram& pi, TraceSide side, int n) {
    if (pi.top != 2 * n || pi.bottom != 2 * n)
        throw error("theta expects a diagram on twice the strand count");
    SignedPerms sp(n);
    ThetaAccum acc;
    acc.reset(n);
    PartitionDiagram comp;
    const int base = side == TraceSide::Right ? n : 0;
    const std::vector<int> closed = iota_range(base, n);
    accumulate_theta(pi, n, side, sp, acc, comp, closed, closed);
    const Integer nf = factorial(n);
    return {poly_from_counts(acc.alpha, nf), poly_from_counts(acc.beta, nf)};
}

AmbidexterityReport verify_ambidextrous(int n, const VerifyOptions& opts) {
    if (n < 1)
        throw error("the ambidexterity check needs at least one strand");
    AmbidexterityReport rep;
    rep.n = n;
    rep.t0 = opts.t0;
    const auto started = std::chrono::steady_clock::now();

    DiagramEnumerator probe(2 * n, 2 * n, opts.cap);
    const std::uint64_t total = probe.size();
    const SignedPerms sp(n);
    const Integer nf = factorial(n);

    std::vector<Rational> tpow;
    if (opts.t0) {
        tpow.resize(n + 1);
        tpow[0] = 1;
        for (int i = 1; i <= n; ++i)
            tpow[i] = tpow[i - 1] * *opts.t0;
    }

    const int jobs = std::max(1, opts.jobs);
    const std::uint64_t chunk = std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(16384, total / (static_cast<std::uint64_t>(jobs) * 32) + 1));

    std::atomic<std::uint64_t> cursor{0};
    std::atomic<std::uint64_t> done{0};
    std::atomic<std::uint64_t> failure_count{0};
    std::mutex sink;
    std::exception_ptr first_error;

    const std::vector<int> close_left = iota_range(0, n);
    const std::vector<int> close_right = iota_range(n, n);

    auto worker = [&]() {
        try {
            DiagramEnumerator en(2 * n, 2 * n, opts.cap);
            PartitionDiagram pi, comp;
            ThetaAccum right_acc, left_acc;
            for (;;) {
                const std::uint64_t lo = cursor.fetch_add(chunk);
                if (lo >= total)
                    break;
                const std::uint64_t hi = std::min(total, lo + chunk);
                en.seek(lo);
                for (std::uint64_t i = lo; i < hi; ++i) {
                    en.next(pi);
                    bool mismatch = false;
                    right_acc.reset(n);
                    left_acc.reset(n);
                    accumulate_theta(pi, n, TraceSide::Right, sp, right_acc, comp,
                                     close_right, close_right);
                    accumulate_theta(pi, n, TraceSide::Left, sp, left_acc, comp,
                                     close_left, close_left);
                    if (!opts.t0) {
                        for (int e = 0; e <= n && !mismatch; ++e)
                            mismatch = right_acc.alpha[e] + right_acc.beta[e] !=
                                       left_acc.alpha[e] + left_acc.beta[e];
                    } else {
                        Rational lhs = 0, rhs = 0;
                        for (int e = 0; e <= n; ++e) {
                            lhs += Rational(right_acc.alpha[e] + right_acc.beta[e]) * tpow[e];
                            rhs += Rational(left_acc.alpha[e] + left_acc.beta[e]) * tpow[e];
                        }
                        mismatch = lhs != rhs;
                    }
                    if (opts.paranoid) {
                        EndCoords<TPoly> ref_r = theta(pi, TraceSide::Right, n);
                        EndCoords<TPoly> ref_l = theta(pi, TraceSide::Left, n);
                        if (poly_from_counts(right_acc.alpha, nf) != ref_r.alpha ||
                            poly_from_counts(right_acc.beta, nf) != ref_r.beta ||
                            poly_from_counts(left_acc.alpha, nf) != ref_l.alpha ||
                            poly_from_counts(left_acc.beta, nf) != ref_l.beta) {
                            throw error("internal: direct theta disagrees with the reference "
                                        "at " +
                                        to_string(pi));
                        }
                    }
                    if (mismatch) {
                        failure_count.fetch_add(1);
                        std::vector<std::int64_t> lsum(n + 1), rsum(n + 1);
                        for (int e = 0; e <= n; ++e) {
                            lsum[e] = right_acc.alpha[e] + right_acc.beta[e];
                            rsum[e] = left_acc.alpha[e] + left_acc.beta[e];
                        }
                        std::lock_guard<std::mutex> lock(sink);
                        if (rep.failures.size() < AmbidexterityReport::max_recorded)
                            rep.failures.push_back({pi, poly_from_counts(lsum, nf),
                                                    poly_from_counts(rsum, nf)});
                    }
                }
                done.fetch_add(hi - lo);
                if (opts.progress)
                    opts.progress(done.load(), total);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(sink);
            if (!first_error)
                first_error = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    rep.checked = total;
    rep.failure_count = failure_count.load();
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const AmbidexterityFailure& a, const AmbidexterityFailure& b) {
                  return a.pi < b.pi;
              });
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

SolutionSpace ambidextrous_solution_space(const std::optional<Rational>& t0) {
    std::vector<std::array<TPoly, 2>> rows;
    for (const auto& pi : enumerate_all(2, 2)) {
        EndCoords<TPoly> right = theta_direct(pi, TraceSide::Right, 1);
        EndCoords<TPoly> left = theta_direct(pi, TraceSide::Left, 1);
        rows.push_back({right.alpha - left.alpha, right.beta - left.beta});
    }

    SolutionSpace out;
    if (!t0) {
        int pivot = -1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i][0].is_zero() || !rows[i][1].is_zero()) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) {
            out.dimension = 2;
            out.basis = {{TPoly::one(), TPoly::zero()}, {TPoly::zero(), TPoly::one()}};
            return out;
        }
        // Rank 2 exactly when some row is independent of the pivot row.
        for (std::size_t i = 0; i < rows.size(); ++i) {
            TPoly det = rows[pivot][0] * rows[i][1] - rows[pivot][1] * rows[i][0];
            if (!det.is_zero()) {
                out.dimension = 0;
                return out;
            }
        }
        TPoly x = rows[pivot][1];
        TPoly y = -rows[pivot][0];
        TPoly g = poly_gcd(x, y);
        if (!g.is_zero()) {
            x = divide_exact(x, g);
            y = divide_exact(y, g);
        }
        // Make the first nonzero entry's top coefficient 1.
        const TPoly& lead = x.is_zero() ? y : x;
        Rational scale = Rational(1) / lead.terms().back().second;
        out.dimension = 1;
        out.basis = {{x.scaled(scale), y.scaled(scale)}};
        return out;
    }

    RationalMatrix m(static_cast<int>(rows.size()), 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.at(static_cast<int>(i), 0) = rows[i][0].eval(*t0);
        m.at(static_cast<int>(i), 1) = rows[i][1].eval(*t0);
    }
    auto kernel = nullspace(m);
    out.dimension = static_cast<int>(kernel.size());
    for (const auto& v : kernel) {
        Rational lead = 0;
        for (const auto& c : v)
            if (c != 0) {
                lead = c;
                break;
            }
        std::array<TPoly, 2> vec{TPoly::zero(), TPoly::zero()};
        for (int j = 0; j < 2; ++j)
            vec[j] = TPoly(v[j] / lead);
        out.basis.push_back(vec);
    }
    return out;
}

Morphism<TPoly> project_sandwich(const Morphism<TPoly>& h, int n, int k) {
    if (n < 1 || k < 0)
        throw error("the sandwich projection needs n >= 1 and k >= 0");
    if (h.src != n + k || h.dst != n + k)
        throw error("the sandwich projection expects an endomorphism on " +
                    std::to_string(n + k) + " strands");
    Morphism<TPoly> sk = mor_tensor(antisymmetrizer(n), Morphism<TPoly>::identity(k));
    return mor_compose(sk, mor_compose(h, sk));
}

TPoly mod_trace(const Morphism<TPoly>& h, int n, int k) {
    if (project_sandwich(h, n, k) != h)
        throw error("modified trace requires a morphism fixed by the antisymmetrizer sandwich");
    EndCoords<TPoly> coords =
        decompose_endomorphism(partial_trace(h, TraceSide::Right, k), n);
    return trace_functional(coords);
}

TPoly mod_dimension(const RetractObject& obj, int n) {
    if (obj.idempotent.src != obj.arity || obj.idempotent.dst != obj.arity)
        throw error("retract idempotent must be an endomorphism on the stated arity");
    if (n < 1 || n > obj.arity)
        throw error("modified dimension needs 1 <= n <= arity");
    if (!is_idempotent(obj.idempotent))
        throw error("retract morphism is not idempotent");
    return mod_trace(obj.idempotent, n, obj.arity - n);
}

} // namespace delrep
