#include <delrep/knots.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace delrep {

namespace {

const char* kind_name(EventKind k) {
    switch (k) {
    case EventKind::Cup:
        return "cup";
    case EventKind::Cap:
        return "cap";
    case EventKind::CrossPos:
        return "x+";
    case EventKind::CrossNeg:
        return "x-";
    }
    return "?";
}

// Range-check every event position against the running strand count and
// require the word to end on zero strands.
void check_positions(const TangleWord& word) {
    if (word.events.empty())
        throw error("empty tangle word");
    int count = 0;
    for (std::size_t e = 0; e < word.events.size(); ++e) {
        const TangleEvent& ev = word.events[e];
        const bool is_cup = ev.kind == EventKind::Cup;
        const int limit = is_cup ? count : count - 2;
        if (ev.pos < 0 || ev.pos > limit)
            throw error("event " + std::to_string(e + 1) + ": " + kind_name(ev.kind) + " " +
                        std::to_string(ev.pos) + " is out of range with " + std::to_string(count) +
                        " strands");
        if (is_cup)
            count += 2;
        else if (ev.kind == EventKind::Cap)
            count -= 2;
    }
    if (count != 0)
        throw error("tangle word does not close: " + std::to_string(count) + " strands remain");
}

// The word cut into arcs (cup-to-cap curve pieces) with the junction graph
// between them: every cup and every cap joins two arcs and reverses the
// running direction. Orienting one arc orients its whole component.
struct Analysis {
    std::vector<int> dir;                        // per arc: +1 down, -1 up
    std::vector<std::pair<int, int>> cup_arcs;   // per event; (-1,-1) off cups
    int components = 0;
    int writhe = 0;
};

Analysis analyze(const TangleWord& word) {
    check_positions(word);
    Analysis out;
    out.cup_arcs.assign(word.events.size(), {-1, -1});
    std::vector<int> cur;                   // arc occupying each strand slot
    std::vector<std::vector<int>> adj;      // direction-reversing junctions
    struct Crossing {
        int a, b, sign;
    };
    std::vector<Crossing> crossings;

    for (std::size_t e = 0; e < word.events.size(); ++e) {
        const TangleEvent& ev = word.events[e];
        switch (ev.kind) {
        case EventKind::Cup: {
            int x = static_cast<int>(adj.size());
            adj.emplace_back();
            int y = static_cast<int>(adj.size());
            adj.emplace_back();
            adj[x].push_back(y);
            adj[y].push_back(x);
            cur.insert(cur.begin() + ev.pos, {x, y});
            out.cup_arcs[e] = {x, y};
            break;
        }
        case EventKind::Cap: {
            int a = cur[ev.pos], b = cur[ev.pos + 1];
            adj[a].push_back(b);
            adj[b].push_back(a);
            cur.erase(cur.begin() + ev.pos, cur.begin() + ev.pos + 2);
            break;
        }
        case EventKind::CrossPos:
        case EventKind::CrossNeg: {
            int a = cur[ev.pos], b = cur[ev.pos + 1];
            crossings.push_back({a, b, ev.kind == EventKind::CrossPos ? 1 : -1});
            std::swap(cur[ev.pos], cur[ev.pos + 1]);
            break;
        }
        }
    }

    // Orient: breadth-first over the junction graph, flipping across every
    // edge. Closed curves traverse an even number of junctions, so the
    // parity never conflicts.
    out.dir.assign(adj.size(), 0);
    std::vector<int> queue;
    for (std::size_t seed = 0; seed < adj.size(); ++seed) {
        if (out.dir[seed] != 0)
            continue;
        ++out.components;
        out.dir[seed] = 1;
        queue.assign(1, static_cast<int>(seed));
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : adj[v]) {
                if (out.dir[u] == 0) {
                    out.dir[u] = -out.dir[v];
                    queue.push_back(u);
                } else if (out.dir[u] != -out.dir[v]) {
                    throw error("internal: inconsistent orientation in a closed tangle");
                }
            }
        }
    }

    for (const Crossing& c : crossings)
        out.writhe += c.sign * out.dir[c.a] * out.dir[c.b];
    return out;
}

void require_knot(const Analysis& an) {
    if (an.components != 1)
        throw error("tangle closes into " + std::to_string(an.components) +
                    " components; a knot needs exactly one");
}

} // namespace

TangleWord parse_tangle(const std::string& text) {
    TangleWord word;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::replace(line.begin(), line.end(), '/', ' ');
        std::istringstream tokens(line);
        std::string head;
        while (tokens >> head) {
            EventKind kind;
            if (head == "cup")
                kind = EventKind::Cup;
            else if (head == "cap")
                kind = EventKind::Cap;
            else if (head == "x+")
                kind = EventKind::CrossPos;
            else if (head == "x-")
                kind = EventKind::CrossNeg;
            else
                throw error("line " + std::to_string(lineno) + ": unknown event \"" + head +
                            "\" (expected cup, cap, x+ or x-)");
            int pos;
            if (!(tokens >> pos))
                throw error("line " + std::to_string(lineno) + ": event \"" + head +
                            "\" is missing its position");
            word.events.push_back({kind, pos});
        }
    }

    require_knot(analyze(word));
    return word;
}

int writhe(const TangleWord& word) {
    Analysis an = analyze(word);
    require_knot(an);
    return an.writhe;
}

KnotResult evaluate_knot(const TangleWord& word, int a, int b) {
    if (a < 0 || b < 0 || a + b < 1)
        throw error("strand label needs nonnegative parts and at least one strand");
    Analysis an = analyze(word);
    require_knot(an);

    const GradedObject v{a, b};
    const int n = v.arity();
    const auto fold = [](auto first, auto last) {
        return std::accumulate(first, last, GradedObject{0, 0},
                               [](GradedObject acc, const GradedObject& o) { return acc.tensor(o); });
    };

    std::vector<GradedObject> strands;
    GradedMorphism state = g_id(GradedObject{0, 0});

    // Apply every event except the closing cap.
    for (std::size_t e = 0; e + 1 < word.events.size(); ++e) {
        const TangleEvent& ev = word.events[e];
        const int i = ev.pos;
        GradedMorphism piece;
        switch (ev.kind) {
        case EventKind::Cup: {
            const bool left_down = an.dir[an.cup_arcs[e].first] > 0;
            piece = left_down ? graded_coev(v) : graded_coev_prime(v);
            break;
        }
        case EventKind::Cap:
            piece = strands[i] == v ? graded_ev_prime(v) : graded_ev(v);
            break;
        case EventKind::CrossPos:
            piece = graded_braiding(strands[i], strands[i + 1]);
            break;
        case EventKind::CrossNeg:
            piece = graded_braiding_inverse(strands[i + 1], strands[i]);
            break;
        }
        const GradedObject prefix = fold(strands.begin(), strands.begin() + i);
        const auto suffix_from = ev.kind == EventKind::Cup ? i : i + 2;
        const GradedObject suffix = fold(strands.begin() + suffix_from, strands.end());
        state = g_compose(g_tensor(g_tensor(g_id(prefix), piece), g_id(suffix)), state);

        switch (ev.kind) {
        case EventKind::Cup: {
            const bool left_down = an.dir[an.cup_arcs[e].first] > 0;
            strands.insert(strands.begin() + i,
                           left_down ? std::initializer_list<GradedObject>{v, v.dual()}
                                     : std::initializer_list<GradedObject>{v.dual(), v});
            break;
        }
        case EventKind::Cap:
            strands.erase(strands.begin() + i, strands.begin() + i + 2);
            break;
        case EventKind::CrossPos:
        case EventKind::CrossNeg:
            std::swap(strands[i], strands[i + 1]);
            break;
        }
    }

    if (strands.size() != 2 || !(strands[0] == strands[1].dual()))
        throw error("internal: tangle state did not reduce to a single closing cap");

    // Cut the closing cap: bend one leg of the state around so that the
    // closed-up value becomes the trace of an honest endomorphism h of v.
    GradedMorphism h =
        strands[0] == v
            ? g_compose(g_tensor(g_id(v), graded_ev(v)), g_tensor(state, g_id(v)))
            : g_compose(g_tensor(graded_ev_prime(v), g_id(v)), g_tensor(g_id(v), state));

    GradedMorphism s{v, v, to_coeff<QLaurent>(antisymmetrizer(n))};
    GradedMorphism sandwiched = g_compose(s, g_compose(h, s));

    KnotResult out;
    out.value = graded_mod_trace(sandwiched);
    out.writhe = an.writhe;
    out.degenerate = a == b;
    return out;
}

} // namespace delrep
