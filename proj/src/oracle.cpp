#include <delrep/oracle.hpp>

#include <delrep/linalg.hpp>
#include <delrep/modtrace.hpp>
#include <delrep/scalar_io.hpp>

#include <chrono>
#include <random>
#include <vector>

namespace delrep {

namespace {

std::uint64_t checked_pow(int base, int exp, std::uint64_t limit, const char* what) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= static_cast<std::uint64_t>(base);
        if (out > limit)
            throw error(std::string(what) + " too large: " + std::to_string(base) + "^" +
                        std::to_string(exp) + " exceeds " + std::to_string(limit));
    }
    return out;
}

} // namespace

void SparseMatrix::add(int r, int c, const Rational& v) {
    if (v == 0)
        return;
    auto key = std::make_pair(r, c);
    auto it = entries.find(key);
    if (it == entries.end()) {
        entries.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0)
            entries.erase(it);
    }
}

Rational SparseMatrix::at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Rational(0) : it->second;
}

SparseMatrix sm_mul(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows)
        throw error("matrix product shape mismatch");
    // Group b by row so each a-entry scans only matching b-entries.
    std::vector<std::vector<std::pair<int, const Rational*>>> b_rows(b.rows);
    for (const auto& [rc, v] : b.entries)
        b_rows[rc.first].emplace_back(rc.second, &v);
    SparseMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    for (const auto& [rc, va] : a.entries)
        for (const auto& [c, vb] : b_rows[rc.second])
            out.add(rc.first, c, va * *vb);
    return out;
}

SparseMatrix sm_kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out;
    out.rows = a.rows * b.rows;
    out.cols = a.cols * b.cols;
    for (const auto& [rca, va] : a.entries)
        for (const auto& [rcb, vb] : b.entries)
            out.add(rca.first * b.rows + rcb.first, rca.second * b.cols + rcb.second, va * vb);
    return out;
}

SparseMatrix sm_scale(const SparseMatrix& a, const Rational& c) {
    SparseMatrix out;
    out.rows = a.rows;
    out.cols = a.cols;
    if (c == 0)
        return out;
    for (const auto& [rc, v] : a.entries)
        out.entries.emplace(rc, v * c);
    return out;
}

SparseMatrix sm_add(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw error("matrix sum shape mismatch");
    SparseMatrix out = a;
    for (const auto& [rc, v] : b.entries)
        out.add(rc.first, rc.second, v);
    return out;
}

Rational sm_trace(const SparseMatrix& a) {
    if (a.rows != a.cols)
        throw error("matrix trace requires a square matrix");
    Rational out = 0;
    for (const auto& [rc, v] : a.entries)
        if (rc.first == rc.second)
            out += v;
    return out;
}

SparseMatrix realize(const PartitionDiagram& d, int dimension) {
    if (dimension < 1)
        throw error("realization dimension must be at least 1");
    SparseMatrix out;
    out.rows = static_cast<int>(checked_pow(dimension, d.bottom, 100'000'000, "realization"));
    out.cols = static_cast<int>(checked_pow(dimension, d.top, 100'000'000, "realization"));
    const auto blocks = d.blocks();
    (void)checked_pow(dimension, static_cast<int>(blocks.size()), 10'000'000,
                      "realization support");

    // Odometer over one color per block; distinct colorings hit distinct
    // row/column pairs, so every entry is exactly 1.
    std::vector<int> color(blocks.size(), 0);
    std::vector<int> vertex_color(d.arity(), 0);
    if (dimension == 0 && !blocks.empty())
        return out;
    for (;;) {
        std::uint64_t row = 0, col = 0;
        for (std::size_t bl = 0; bl < blocks.size(); ++bl)
            for (int v : blocks[bl])
                vertex_color[v] = color[bl];
        for (int v = 0; v < d.top; ++v)
            col = col * dimension + vertex_color[v];
        for (int v = 0; v < d.bottom; ++v)
            row = row * dimension + vertex_color[d.top + v];
        out.entries.emplace(std::make_pair(static_cast<int>(row), static_cast<int>(col)),
                            Rational(1));
        std::size_t k = 0;
        while (k < color.size() && ++color[k] == dimension)
            color[k++] = 0;
        if (k == color.size())
            break;
    }
    return out;
}

SparseMatrix realize_morphism(const Morphism<TPoly>& f, int dimension) {
    SparseMatrix out;
    out.rows = static_cast<int>(checked_pow(dimension, f.dst, 100'000'000, "realization"));
    out.cols = static_cast<int>(checked_pow(dimension, f.src, 100'000'000, "realization"));
    const Rational t0(dimension);
    for (const auto& [d, c] : f.terms)
        out = sm_add(out, sm_scale(realize(d, dimension), c.eval(t0)));
    return out;
}

OracleReport oracle_check(const OracleOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    OracleReport rep;
    const int N = opts.dimension;
    const Rational tN(N);

    auto mismatch = [&](const std::string& what) {
        if (rep.ok) {
            rep.ok = false;
            rep.first_mismatch = what;
        }
    };

    // Composition against the loop-scaled matrix product, on exhaustive
    // small arities.
    const auto p22 = enumerate_all(2, 2);
    const auto p21 = enumerate_all(2, 1);
    const auto p12 = enumerate_all(1, 2);
    auto check_compose = [&](const PartitionDiagram& upper, const PartitionDiagram& lower) {
        ComposeResult comp = compose(upper, lower);
        SparseMatrix lhs = sm_scale(realize(comp.diagram, N), rat_pow(tN, comp.loops));
        SparseMatrix rhs = sm_mul(realize(lower, N), realize(upper, N));
        ++rep.checked;
        if (!(lhs == rhs))
            mismatch("composition disagrees with the matrix product for upper=" +
                     to_string(upper) + " lower=" + to_string(lower));
    };
    for (const auto& f : p22)
        for (const auto& g : p22)
            check_compose(f, g);
    for (const auto& f : p21)
        for (const auto& g : p12)
            check_compose(f, g);
    for (const auto& f : p12)
        for (const auto& g : p21)
            check_compose(f, g);

    // Random pairs on three strands, drawn reproducibly.
    {
        DiagramEnumerator en(3, 3);
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, en.size() - 1);
        PartitionDiagram f, g;
        for (int s = 0; s < opts.samples; ++s) {
            en.seek(pick(rng));
            en.next(f);
            en.seek(pick(rng));
            en.next(g);
            check_compose(f, g);
        }
    }

    // Tensor against Kronecker.
    auto check_tensor = [&](const PartitionDiagram& l, const PartitionDiagram& r) {
        ++rep.checked;
        if (!(realize(tensor(l, r), N) == sm_kron(realize(l, N), realize(r, N))))
            mismatch("tensor disagrees with the Kronecker product for left=" + to_string(l) +
                     " right=" + to_string(r));
    };
    const auto p11 = enumerate_all(1, 1);
    for (const auto& l : p11)
        for (const auto& r : p22)
            check_tensor(l, r);
    for (const auto& l : p21)
        for (const auto& r : p12)
            check_tensor(l, r);

    // Categorical trace against matrix trace.
    for (const auto& d : p22) {
        ++rep.checked;
        Rational lhs = categorical_trace(Morphism<TPoly>::single(d, TPoly::one())).eval(tN);
        if (lhs != sm_trace(realize(d, N)))
            mismatch("categorical trace disagrees with matrix trace for " + to_string(d));
    }

    // Antisymmetrizer trace: the falling factorial binom(N, n).
    for (int n = 1; n <= 5; ++n) {
        ++rep.checked;
        Rational expected = 1;
        for (int i = 0; i < n; ++i)
            expected *= Rational(N - i);
        expected /= Rational(factorial(n));
        Rational lhs = sm_trace(realize_morphism(antisymmetrizer(n), N));
        if (lhs != expected)
            mismatch("antisymmetrizer trace is not the falling factorial at n=" +
                     std::to_string(n) + ": got " + to_string(lhs));
    }

    // The two-strand diagrams realize to linearly independent matrices. Below
    // dimension 4 the realization genuinely collapses them, so the check only
    // applies from 4 up.
    if (N >= 4) {
        const int side = static_cast<int>(checked_pow(N, 2, 10'000, "realization"));
        const int dim = side * side;
        RationalMatrix m(static_cast<int>(p22.size()), dim);
        for (std::size_t i = 0; i < p22.size(); ++i)
            for (const auto& [rc, v] : realize(p22[i], N).entries)
                m.at(static_cast<int>(i), rc.first * side + rc.second) = v;
        ++rep.checked;
        if (rank(m) != static_cast<int>(p22.size()))
            mismatch("two-strand diagrams are not linearly independent at dimension " +
                     std::to_string(N));
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

} // namespace delrep
