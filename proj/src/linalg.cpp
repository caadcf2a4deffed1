#include <delrep/linalg.hpp>

#include <algorithm>

namespace delrep {

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot
// row in order.
std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(p, c), m.at(row, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c)
            m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0)
                continue;
            Rational f = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
    std::vector<int> pivots = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots)
        is_pivot[c] = 1;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace delrep
