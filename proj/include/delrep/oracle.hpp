#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <delrep/morphism.hpp>

namespace delrep {

// Exact sparse matrix, only nonzero entries stored, so equality of values is
// map equality.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Rational> entries;

    void add(int r, int c, const Rational& v);
    Rational at(int r, int c) const;

    bool operator==(const SparseMatrix&) const = default;
};

SparseMatrix sm_mul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sm_kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sm_scale(const SparseMatrix& a, const Rational& c);
SparseMatrix sm_add(const SparseMatrix& a, const SparseMatrix& b);
Rational sm_trace(const SparseMatrix& a);

// The matrix of a diagram on the color space of the given dimension N: rows
// and columns are base-N encodings of bottom/top colorings (leftmost strand
// most significant) and an entry is 1 exactly when the combined coloring is
// constant on every block. Built by enumerating block colorings directly, so
// it shares no code with the union-find composition it cross-checks.
SparseMatrix realize(const PartitionDiagram& d, int dimension);

// Linear extension with coefficients evaluated at t = dimension.
SparseMatrix realize_morphism(const Morphism<TPoly>& f, int dimension);

struct OracleOptions {
    int dimension = 4;           // color count N; also the value taken by t
    int samples = 50;            // random diagram pairs on three strands
    std::uint64_t seed = 0x5eed5eedULL;
};

struct OracleReport {
    std::uint64_t checked = 0;
    bool ok = true;
    std::string first_mismatch; // empty when ok
    double seconds = 0.0;
};

// Every structural claim of the calculus that the matrix model can see:
// composition against the loop-scaled product, tensor against Kronecker,
// categorical trace against matrix trace, the falling-factorial trace of the
// antisymmetrizer, and linear independence of the two-strand diagrams.
OracleReport oracle_check(const OracleOptions& opts = {});

} // namespace delrep
