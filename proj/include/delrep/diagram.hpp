#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <delrep/error.hpp>

namespace delrep {

// A partition diagram with `top` upper vertices and `bottom` lower vertices:
// a set partition of the disjoint union of the two rows. Vertices are indexed
// 0-based, upper row first, in the order T1 < ... < Ta < B1 < ... < Bb and the
// partition is stored as a restricted-growth string over that order: label[v]
// is the block of vertex v, blocks are numbered by first appearance. That
// string is the canonical form, so equality of diagrams is equality of fields.
struct PartitionDiagram {
    int top = 0;
    int bottom = 0;
    std::vector<std::uint8_t> label;

    int arity() const { return top + bottom; }
    int block_count() const;

    // Blocks in canonical order (sorted by least vertex, members ascending).
    std::vector<std::vector<int>> blocks() const;

    bool operator==(const PartitionDiagram&) const = default;
    auto operator<=>(const PartitionDiagram&) const = default;

    static PartitionDiagram empty() { return {}; }
    static PartitionDiagram identity(int n);

    // The diagram of a permutation: top vertex i joined to bottom vertex
    // perm[i]. perm must be a bijection on {0..n-1}.
    static PartitionDiagram permutation(const std::vector<int>& perm);

    // The permutation diagram of perm with every edge at a top vertex in
    // `punctured` removed, leaving matching singletons on both rows.
    static PartitionDiagram punctured_permutation(const std::vector<int>& perm,
                                                  const std::vector<int>& punctured);

    // Validating constructor from explicit blocks over rows of the stated
    // sizes. Vertices are 0-based: (row, index) with row 0 = top.
    static PartitionDiagram from_blocks(int top, int bottom,
                                        const std::vector<std::vector<std::pair<int, int>>>& blocks);
};

// Result of stacking two diagrams: the outer diagram plus the number of
// closed components swallowed in the middle (each contributes a factor t at
// the morphism level).
struct ComposeResult {
    PartitionDiagram diagram;
    int loops = 0;
};

// Stack `lower` beneath `upper`, identifying upper's bottom row with lower's
// top row. As morphisms (read downward) this is lower ∘ upper.
ComposeResult compose(const PartitionDiagram& upper, const PartitionDiagram& lower);

// Horizontal juxtaposition: left's vertices first in both rows.
PartitionDiagram tensor(const PartitionDiagram& left, const PartitionDiagram& right);

// Exchange the two rows. An anti-homomorphism for composition.
PartitionDiagram flip(const PartitionDiagram& d);

// Close the strands listed in `traced` (0-based strand indices, valid for a
// square-free trace too): top vertex i is joined to bottom vertex i for each
// traced i, the induced diagram on the remaining strands is returned along
// with the number of components that lost all outer vertices.
struct TraceResult {
    PartitionDiagram diagram;
    int loops = 0;
};
TraceResult close_strands(const PartitionDiagram& d, const std::vector<int>& traced_top,
                          const std::vector<int>& traced_bottom);

// --- classification ---------------------------------------------------------

enum class DiagramClass { Permutation, PuncturedPermutation, Other };

struct Classification {
    DiagramClass kind = DiagramClass::Other;
    // For Permutation and PuncturedPermutation: the witnessing permutation as
    // 0-based images. For the punctured case the removed top index is
    // `punctured` and sigma maps it to the unique bottom singleton, which is
    // the only completion that makes sigma a bijection.
    std::vector<int> sigma;
    int punctured = -1;
    int sign = 0;
};

// Decide whether a square diagram is a permutation, a once-punctured
// permutation, or neither.
Classification classify(const PartitionDiagram& d);

int perm_sign(const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int n);

// --- restrictions of square diagrams of even arity ---------------------------

// For pi with 2n upper and 2n lower vertices: the partitions induced on the
// left n strands and on the right n strands, plus — when both restrictions
// are permutations — the linking diagram: the punctured permutation with
// punctures at the top-left vertices lying in blocks of size two and
// sigma(i) = j whenever top vertices i and n + j share a block.
struct Restrictions {
    PartitionDiagram left;
    PartitionDiagram right;
    std::optional<PartitionDiagram> linking;
};

Restrictions restrictions(const PartitionDiagram& pi, int n);

// Inverse direction, for round-trip checks: rebuild pi from permutation
// restrictions and the linking diagram.
PartitionDiagram reconstruct_from_restrictions(int n, const std::vector<int>& left_sigma,
                                               const std::vector<int>& right_sigma,
                                               const PartitionDiagram& linking);

// --- text format -------------------------------------------------------------

// "{1,2'}{2,1'}": 1-based vertices, primes on the bottom row, blocks in
// canonical order. The empty diagram prints as "{}".
std::string to_string(const PartitionDiagram& d);
PartitionDiagram parse_diagram(const std::string& text);

} // namespace delrep
