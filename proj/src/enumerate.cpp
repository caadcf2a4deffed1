#include <delrep/enumerate.hpp>

#include <limits>

namespace delrep {

Integer bell_number(int m) {
    if (m < 0)
        throw error("Bell number of negative arity");
    // f(i, j) = completions from position i with j labels in use;
    // computed bottom-up, j ranges over 0..i.
    std::vector<Integer> row(m + 1, Integer(1)); // f(m, *) = 1
    for (int i = m - 1; i >= 0; --i) {
        std::vector<Integer> next(i + 1);
        for (int j = 0; j <= i; ++j)
            next[j] = j * row[j] + row[j + 1];
        row = std::move(next);
    }
    return row[0];
}

DiagramEnumerator::DiagramEnumerator(int a, int b, int cap)
    : top_(a), bottom_(b), m_(a + b) {
    if (a < 0 || b < 0)
        throw error("negative arity");
    if (m_ > cap)
        throw error("enumeration of P_{" + std::to_string(a) + "," + std::to_string(b) +
                    "} would visit Bell(" + std::to_string(m_) + ") = " +
                    bell_number(m_).str() + " diagrams, above the cap of a+b <= " +
                    std::to_string(cap));
    Integer total = bell_number(m_);
    if (total > std::numeric_limits<std::uint64_t>::max())
        throw error("Bell(" + std::to_string(m_) + ") = " + total.str() +
                    " does not fit the enumerator's 64-bit index space");
    size_ = static_cast<std::uint64_t>(total);

    completions_.assign(m_ + 1, {});
    completions_[m_].assign(m_ + 1, 1);
    for (int i = m_ - 1; i >= 0; --i) {
        completions_[i].assign(m_ + 1, 0);
        for (int j = 0; j <= i; ++j)
            completions_[i][j] =
                static_cast<std::uint64_t>(j) * completions_[i + 1][j] + completions_[i + 1][j + 1];
    }

    rgs_.assign(m_, 0);
    prefix_max_.assign(m_, 0);
}

void DiagramEnumerator::seek(std::uint64_t index) {
    if (index > size_)
        throw error("seek past the end of the enumeration");
    index_ = index;
    if (index == size_ || m_ == 0)
        return;
    // Greedy unranking against the completion counts.
    std::uint64_t rest = index;
    int used = 0;
    for (int i = 0; i < m_; ++i) {
        int digit = 0;
        for (; digit < used; ++digit) {
            std::uint64_t below = completions_[i + 1][used];
            if (rest < below)
                break;
            rest -= below;
        }
        // digit == used means "open a new block".
        rgs_[i] = static_cast<std::uint8_t>(digit);
        if (digit == used)
            ++used;
        prefix_max_[i] = static_cast<std::uint8_t>(used - 1);
    }
}

bool DiagramEnumerator::next(PartitionDiagram& out) {
    if (index_ >= size_)
        return false;
    out.top = top_;
    out.bottom = bottom_;
    out.label.assign(rgs_.begin(), rgs_.end());
    ++index_;
    if (index_ < size_)
        advance();
    return true;
}

void DiagramEnumerator::advance() {
    for (int v = m_ - 1; v >= 1; --v) {
        if (rgs_[v] <= prefix_max_[v - 1]) {
            ++rgs_[v];
            prefix_max_[v] = std::max(prefix_max_[v - 1], rgs_[v]);
            for (int w = v + 1; w < m_; ++w) {
                rgs_[w] = 0;
                prefix_max_[w] = prefix_max_[v];
            }
            return;
        }
    }
    // Only the all-zeros string has no successor reachable here before the
    // index check stops us; nothing to do.
}

std::vector<PartitionDiagram> enumerate_all(int a, int b, int cap) {
    DiagramEnumerator en(a, b, cap);
    std::vector<PartitionDiagram> out;
    out.reserve(en.size());
    PartitionDiagram d;
    while (en.next(d))
        out.push_back(d);
    return out;
}

} // namespace delrep
