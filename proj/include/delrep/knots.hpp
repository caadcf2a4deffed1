#pragma once

#include <string>

#include <delrep/graded.hpp>

namespace delrep {

// A framed knot as a Morse word, read top to bottom. Positions are 0-based
// strand slots at the moment the event happens: a cup inserts two strands at
// slots pos, pos+1; caps and crossings act on slots pos, pos+1.
enum class EventKind { Cup, Cap, CrossPos, CrossNeg };

struct TangleEvent {
    EventKind kind = EventKind::Cup;
    int pos = 0;

    bool operator==(const TangleEvent&) const = default;
};

struct TangleWord {
    std::vector<TangleEvent> events;

    bool operator==(const TangleWord&) const = default;
};

// Events are "cup N", "cap N", "x+ N", "x- N", separated by newlines or '/';
// '#' starts a comment. Positions are range-checked against the running
// strand count and the word must return to zero strands.
TangleWord parse_tangle(const std::string& text);

// Signed crossing count of the oriented curve: a crossing counts with its
// own sign when the two strands run parallel and with the opposite sign when
// they run antiparallel. Requires a single closed component.
int writhe(const TangleWord& word);

struct KnotResult {
    QLaurent value;
    int writhe = 0;
    // Label with a == b: the braiding powers all cancel and the invariant
    // cannot see the framing.
    bool degenerate = false;
};

// Evaluate the word with every strand carrying the object [a,b]: sweep the
// state morphism through the events, cut the closing cap, sandwich with the
// antisymmetrizer and take the graded modified trace. For a valid framed
// knot the value is q^((a-b)^2 * writhe).
KnotResult evaluate_knot(const TangleWord& word, int a, int b);

} // namespace delrep
