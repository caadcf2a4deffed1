#pragma once

#include <cstdint>
#include <vector>

#include <delrep/diagram.hpp>
#include <delrep/rational.hpp>

namespace delrep {

// Number of partitions of an m-element set (exact).
Integer bell_number(int m);

// Streams every diagram of P_{a,b} in restricted-growth-string order: the
// canonical label string over T1 < ... < Ta < B1 < ... < Bb is stepped
// lexicographically. The order is deterministic, and seek() jumps to an
// arbitrary index, so the stream splits into independent sub-streams by index
// range — that is how the parallel verifier shards its work.
class DiagramEnumerator {
public:
    static constexpr int default_cap = 14;

    // cap bounds a+b; raising it past the default is an explicit opt-in.
    DiagramEnumerator(int a, int b, int cap = default_cap);

    std::uint64_t size() const { return size_; }
    std::uint64_t index() const { return index_; }

    void seek(std::uint64_t index);

    // Writes the next diagram into out (reusing its storage) and advances.
    // Returns false when the stream is exhausted.
    bool next(PartitionDiagram& out);

private:
    int top_, bottom_, m_;
    std::uint64_t size_ = 0, index_ = 0;
    std::vector<std::uint8_t> rgs_;
    std::vector<std::uint8_t> prefix_max_; // prefix_max_[v] = max(rgs_[0..v])
    // completions_[i][j]: suffixes from position i with j block labels in use.
    std::vector<std::vector<std::uint64_t>> completions_;

    void advance();
};

// Small-case convenience for tests and exhaustive checks.
std::vector<PartitionDiagram> enumerate_all(int a, int b, int cap = DiagramEnumerator::default_cap);

} // namespace delrep
