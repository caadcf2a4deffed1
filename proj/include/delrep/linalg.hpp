#pragma once

#include <vector>

#include <delrep/rational.hpp>

namespace delrep {

// Dense exact matrix over the rationals, just big enough for the solver and
// oracle rank checks (tens of rows, a few hundred columns).
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries; // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    Rational& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

int rank(RationalMatrix m);

// Basis of the right kernel {x : m x = 0}, one vector per free column,
// deterministic (free columns in ascending order, pivot entries back-solved).
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

} // namespace delrep
