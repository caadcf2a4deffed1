#include <delrep/diagram.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace delrep {

namespace {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> rank_;

    explicit UnionFind(int n) : parent(n), rank_(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b)
            return;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
    }
};

// Relabel arbitrary non-negative block ids (< bound) into the canonical
// restricted-growth numbering.
PartitionDiagram canonical_from_raw(int top, int bottom, const std::vector<int>& raw, int bound) {
    PartitionDiagram d;
    d.top = top;
    d.bottom = bottom;
    d.label.resize(raw.size());
    std::vector<int> rename(bound, -1);
    int next = 0;
    for (size_t v = 0; v < raw.size(); ++v) {
        int& r = rename[raw[v]];
        if (r < 0)
            r = next++;
        d.label[v] = static_cast<std::uint8_t>(r);
    }
    return d;
}

// Union the vertices of each block of d into uf, with vertex v living at
// slot_of(v).
template <class SlotOf>
void unite_blocks(UnionFind& uf, const PartitionDiagram& d, SlotOf slot_of) {
    std::vector<int> first(d.arity(), -1);
    for (int v = 0; v < d.arity(); ++v) {
        int id = d.label[v];
        if (first[id] < 0)
            first[id] = v;
        else
            uf.unite(slot_of(first[id]), slot_of(v));
    }
}

void check_arity_bound(int n) {
    if (n < 0 || n > 127)
        throw error("diagram row size out of range: " + std::to_string(n));
}

} // namespace

int PartitionDiagram::block_count() const {
    int m = -1;
    for (auto l : label)
        m = std::max(m, static_cast<int>(l));
    return m + 1;
}

std::vector<std::vector<int>> PartitionDiagram::blocks() const {
    std::vector<std::vector<int>> out(block_count());
    for (int v = 0; v < arity(); ++v)
        out[label[v]].push_back(v);
    return out;
}

PartitionDiagram PartitionDiagram::identity(int n) {
    check_arity_bound(n);
    PartitionDiagram d;
    d.top = d.bottom = n;
    d.label.resize(2 * n);
    for (int i = 0; i < n; ++i)
        d.label[i] = d.label[n + i] = static_cast<std::uint8_t>(i);
    return d;
}

PartitionDiagram PartitionDiagram::permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    check_arity_bound(n);
    std::vector<char> seen(n, 0);
    for (int img : perm) {
        if (img < 0 || img >= n || seen[img])
            throw error("not a permutation");
        seen[img] = 1;
    }
    PartitionDiagram d;
    d.top = d.bottom = n;
    d.label.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        d.label[i] = static_cast<std::uint8_t>(i);
        d.label[n + perm[i]] = static_cast<std::uint8_t>(i);
    }
    return d;
}

PartitionDiagram PartitionDiagram::punctured_permutation(const std::vector<int>& perm,
                                                         const std::vector<int>& punctured) {
    PartitionDiagram base = permutation(perm);
    int n = base.top;
    std::vector<char> cut(n, 0);
    for (int i : punctured) {
        if (i < 0 || i >= n)
            throw error("punctured index out of range");
        if (cut[i])
            throw error("repeated punctured index");
        cut[i] = 1;
    }
    // Split {T_i, B_perm[i]} into singletons for each punctured i.
    std::vector<int> raw(2 * n);
    int next = 0;
    std::vector<int> keep(n, -1);
    for (int i = 0; i < n; ++i) {
        raw[i] = next++;
        if (!cut[i])
            keep[perm[i]] = raw[i];
    }
    for (int j = 0; j < n; ++j)
        raw[n + j] = keep[j] >= 0 ? keep[j] : next++;
    return canonical_from_raw(n, n, raw, next);
}

PartitionDiagram PartitionDiagram::from_blocks(
    int top, int bottom, const std::vector<std::vector<std::pair<int, int>>>& blocks) {
    check_arity_bound(top);
    check_arity_bound(bottom);
    std::vector<int> raw(top + bottom, -1);
    int id = 0;
    for (const auto& block : blocks) {
        if (block.empty())
            throw error("empty block");
        for (auto [row, idx] : block) {
            if (row != 0 && row != 1)
                throw error("block vertex row must be 0 (top) or 1 (bottom)");
            int limit = row == 0 ? top : bottom;
            if (idx < 0 || idx >= limit)
                throw error("block vertex index " + std::to_string(idx + 1) +
                            (row == 0 ? "" : "'") + " out of range");
            int v = row == 0 ? idx : top + idx;
            if (raw[v] != -1)
                throw error("vertex " + std::to_string(idx + 1) + (row == 0 ? "" : "'") +
                            " appears twice");
            raw[v] = id;
        }
        ++id;
    }
    for (int v = 0; v < top + bottom; ++v)
        if (raw[v] < 0) {
            bool is_top = v < top;
            throw error("vertex " + std::to_string(is_top ? v + 1 : v - top + 1) +
                        (is_top ? "" : "'") + " not covered by any block");
        }
    return canonical_from_raw(top, bottom, raw, id);
}

ComposeResult compose(const PartitionDiagram& upper, const PartitionDiagram& lower) {
    if (upper.bottom != lower.top)
        throw error("composition arity mismatch: upper has " + std::to_string(upper.bottom) +
                    " lower vertices, lower has " + std::to_string(lower.top) + " upper vertices");
    int a = upper.top, b = upper.bottom, c = lower.bottom;
    UnionFind uf(a + b + c);
    unite_blocks(uf, upper, [&](int v) { return v; /* tops 0..a-1, bottoms a..a+b-1 */ });
    unite_blocks(uf, lower, [&](int v) { return a + v; /* tops a..a+b-1, bottoms a+b.. */ });

    std::vector<char> has_outer(a + b + c, 0);
    for (int v = 0; v < a; ++v)
        has_outer[uf.find(v)] = 1;
    for (int v = 0; v < c; ++v)
        has_outer[uf.find(a + b + v)] = 1;

    ComposeResult result;
    std::vector<char> counted(a + b + c, 0);
    for (int j = 0; j < b; ++j) {
        int r = uf.find(a + j);
        if (!has_outer[r] && !counted[r]) {
            counted[r] = 1;
            ++result.loops;
        }
    }

    std::vector<int> raw(a + c);
    for (int v = 0; v < a; ++v)
        raw[v] = uf.find(v);
    for (int v = 0; v < c; ++v)
        raw[a + v] = uf.find(a + b + v);
    result.diagram = canonical_from_raw(a, c, raw, a + b + c);
    return result;
}

PartitionDiagram tensor(const PartitionDiagram& left, const PartitionDiagram& right) {
    check_arity_bound(left.top + right.top);
    check_arity_bound(left.bottom + right.bottom);
    int shift = left.block_count();
    std::vector<int> raw(left.arity() + right.arity());
    int pos = 0;
    for (int v = 0; v < left.top; ++v)
        raw[pos++] = left.label[v];
    for (int v = 0; v < right.top; ++v)
        raw[pos++] = shift + right.label[v];
    for (int v = 0; v < left.bottom; ++v)
        raw[pos++] = left.label[left.top + v];
    for (int v = 0; v < right.bottom; ++v)
        raw[pos++] = shift + right.label[right.top + v];
    return canonical_from_raw(left.top + right.top, left.bottom + right.bottom, raw,
                              shift + right.block_count());
}

PartitionDiagram flip(const PartitionDiagram& d) {
    std::vector<int> raw(d.arity());
    for (int v = 0; v < d.bottom; ++v)
        raw[v] = d.label[d.top + v];
    for (int v = 0; v < d.top; ++v)
        raw[d.bottom + v] = d.label[v];
    return canonical_from_raw(d.bottom, d.top, raw, d.block_count());
}

TraceResult close_strands(const PartitionDiagram& d, const std::vector<int>& traced_top,
                          const std::vector<int>& traced_bottom) {
    if (traced_top.size() != traced_bottom.size())
        throw error("mismatched trace index lists");
    int slots = d.arity();
    std::vector<char> top_traced(d.top, 0), bottom_traced(d.bottom, 0);
    UnionFind uf(slots);
    unite_blocks(uf, d, [](int v) { return v; });
    for (size_t k = 0; k < traced_top.size(); ++k) {
        int i = traced_top[k], j = traced_bottom[k];
        if (i < 0 || i >= d.top || j < 0 || j >= d.bottom)
            throw error("trace index out of range");
        if (top_traced[i] || bottom_traced[j])
            throw error("repeated trace index");
        top_traced[i] = bottom_traced[j] = 1;
        uf.unite(i, d.top + j);
    }

    std::vector<char> has_outer(slots, 0);
    for (int v = 0; v < d.top; ++v)
        if (!top_traced[v])
            has_outer[uf.find(v)] = 1;
    for (int v = 0; v < d.bottom; ++v)
        if (!bottom_traced[v])
            has_outer[uf.find(d.top + v)] = 1;

    TraceResult result;
    std::vector<char> counted(slots, 0);
    for (int v = 0; v < slots; ++v) {
        bool traced = v < d.top ? top_traced[v] : bottom_traced[v - d.top];
        if (!traced)
            continue;
        int r = uf.find(v);
        if (!has_outer[r] && !counted[r]) {
            counted[r] = 1;
            ++result.loops;
        }
    }

    std::vector<int> raw;
    raw.reserve(slots);
    int new_top = 0, new_bottom = 0;
    for (int v = 0; v < d.top; ++v)
        if (!top_traced[v]) {
            raw.push_back(uf.find(v));
            ++new_top;
        }
    for (int v = 0; v < d.bottom; ++v)
        if (!bottom_traced[v]) {
            raw.push_back(uf.find(d.top + v));
            ++new_bottom;
        }
    result.diagram = canonical_from_raw(new_top, new_bottom, raw, slots);
    return result;
}

Classification classify(const PartitionDiagram& d) {
    if (d.top != d.bottom)
        throw error("classification requires a square diagram");
    int n = d.top;
    Classification cls;
    auto blocks = d.blocks();

    int top_singleton = -1, bottom_singleton = -1;
    std::vector<int> sigma(n, -1);
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            int v = block[0];
            if (v < n) {
                if (top_singleton >= 0)
                    return cls; // two punctures: Other
                top_singleton = v;
            } else {
                if (bottom_singleton >= 0)
                    return cls;
                bottom_singleton = v - n;
            }
        } else if (block.size() == 2) {
            int u = block[0], v = block[1];
            if (u >= n || v < n)
                return cls; // same-row pair: Other
            sigma[u] = v - n;
        } else {
            return cls;
        }
    }
    if ((top_singleton < 0) != (bottom_singleton < 0))
        return cls;
    if (top_singleton >= 0) {
        // The two singletons complete sigma uniquely.
        sigma[top_singleton] = bottom_singleton;
        cls.kind = DiagramClass::PuncturedPermutation;
        cls.punctured = top_singleton;
    } else {
        cls.kind = DiagramClass::Permutation;
    }
    cls.sigma = std::move(sigma);
    cls.sign = perm_sign(cls.sigma);
    return cls;
}

int perm_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Restrictions restrictions(const PartitionDiagram& pi, int n) {
    if (pi.top != 2 * n || pi.bottom != 2 * n)
        throw error("restrictions require a square diagram of row size 2n");

    auto induced = [&](int offset) {
        std::vector<int> raw(2 * n);
        for (int i = 0; i < n; ++i) {
            raw[i] = pi.label[offset + i];
            raw[n + i] = pi.label[2 * n + offset + i];
        }
        return canonical_from_raw(n, n, raw, pi.block_count());
    };

    Restrictions out;
    out.left = induced(0);
    out.right = induced(n);

    if (classify(out.left).kind != DiagramClass::Permutation ||
        classify(out.right).kind != DiagramClass::Permutation)
        return out;

    std::vector<int> block_size(pi.block_count(), 0);
    for (auto l : pi.label)
        ++block_size[l];

    std::vector<int> sigma(n, -1);
    std::vector<int> punctures;
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
        if (block_size[pi.label[i]] == 2) {
            punctures.push_back(i);
            continue;
        }
        for (int j = 0; j < n; ++j)
            if (pi.label[i] == pi.label[n + j]) {
                sigma[i] = j;
                used[j] = 1;
                break;
            }
        if (sigma[i] < 0)
            throw error("internal: size-4 block without a right partner");
    }
    // Complete sigma on the punctured indices; the completion is erased by
    // the puncturing, so pick the ascending one.
    int next = 0;
    for (int i : punctures) {
        while (used[next])
            ++next;
        sigma[i] = next;
        used[next] = 1;
    }
    out.linking = PartitionDiagram::punctured_permutation(sigma, punctures);
    return out;
}

PartitionDiagram reconstruct_from_restrictions(int n, const std::vector<int>& left_sigma,
                                               const std::vector<int>& right_sigma,
                                               const PartitionDiagram& linking) {
    if (linking.top != n || linking.bottom != n)
        throw error("linking diagram must be square of row size n");
    // Blocks are either propagating pairs {i, n+j} (sigma(i) = j) or the
    // singleton halves left by a puncture; anything else is malformed.
    std::vector<int> link_sigma(n, -1);
    for (const auto& block : linking.blocks()) {
        if (block.size() == 1)
            continue;
        if (block.size() != 2 || block[0] >= n || block[1] < n)
            throw error("linking diagram must be a (possibly punctured) permutation");
        link_sigma[block[0]] = block[1] - n;
    }

    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<char> right_used(n, 0);
    for (int i = 0; i < n; ++i) {
        int k = link_sigma[i];
        if (k < 0) {
            blocks.push_back({{0, i}, {1, left_sigma[i]}});
        } else {
            right_used[k] = 1;
            blocks.push_back({{0, i}, {1, left_sigma[i]}, {0, n + k}, {1, n + right_sigma[k]}});
        }
    }
    for (int k = 0; k < n; ++k)
        if (!right_used[k])
            blocks.push_back({{0, n + k}, {1, n + right_sigma[k]}});
    return PartitionDiagram::from_blocks(2 * n, 2 * n, blocks);
}

std::string to_string(const PartitionDiagram& d) {
    auto blocks = d.blocks();
    if (blocks.empty())
        return "{}";
    std::string out;
    for (const auto& block : blocks) {
        out += "{";
        for (size_t k = 0; k < block.size(); ++k) {
            int v = block[k];
            if (k)
                out += ",";
            if (v < d.top)
                out += std::to_string(v + 1);
            else
                out += std::to_string(v - d.top + 1) + "'";
        }
        out += "}";
    }
    return out;
}

PartitionDiagram parse_diagram(const std::string& text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](const std::string& what) -> void {
        throw error("diagram parse error at offset " + std::to_string(i) + ": " + what + " in \"" +
                    text + "\"");
    };

    // (row, index) pairs per block, 0-based.
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int max_top = 0, max_bottom = 0;
    bool saw_group = false, saw_empty_group = false;

    skip();
    while (i < text.size()) {
        if (text[i] != '{')
            fail("expected '{'");
        ++i;
        saw_group = true;
        std::vector<std::pair<int, int>> block;
        skip();
        if (i < text.size() && text[i] == '}') {
            ++i;
            saw_empty_group = true;
            skip();
            continue;
        }
        while (true) {
            skip();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == start)
                fail("expected a vertex number");
            int idx = std::stoi(text.substr(start, i - start));
            if (idx < 1)
                fail("vertex numbers are 1-based");
            bool primed = i < text.size() && text[i] == '\'';
            if (primed)
                ++i;
            block.emplace_back(primed ? 1 : 0, idx - 1);
            if (primed)
                max_bottom = std::max(max_bottom, idx);
            else
                max_top = std::max(max_top, idx);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= text.size() || text[i] != '}')
            fail("expected '}'");
        ++i;
        blocks.push_back(std::move(block));
        skip();
    }
    if (!saw_group)
        fail("expected '{'");
    if (saw_empty_group && (!blocks.empty() || max_top || max_bottom))
        fail("empty block");
    return PartitionDiagram::from_blocks(max_top, max_bottom, blocks);
}

} // namespace delrep
