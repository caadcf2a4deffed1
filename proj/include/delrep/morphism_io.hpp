#pragma once

#include <string>

#include <delrep/morphism.hpp>
#include <delrep/scalar_io.hpp>

namespace delrep {

// "(1/2)*{1,1'}{2,2'} + (-1/2)*{1,2'}{2,1'}": one parenthesized coefficient
// per diagram, terms in the diagrams' canonical order attached with " + ".
// The zero morphism prints as "0".
template <class C>
std::string to_string(const Morphism<C>& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [d, c] : f.terms) {
        if (!out.empty())
            out += " + ";
        out += "(" + to_string(c) + ")*" + to_string(d);
    }
    return out;
}

// Accepts the printed form plus bare diagrams (unit coefficient) and "0".
Morphism<TPoly> parse_morphism(const std::string& text);

} // namespace delrep
