#include <delrep/morphism_io.hpp>

#include <cctype>

namespace delrep {

bool is_negligible(const Morphism<TPoly>& g, const Rational& t0, int cap) {
    DiagramEnumerator en(g.dst, g.src, cap);
    PartitionDiagram h;
    while (en.next(h)) {
        TPoly tr = categorical_trace(mor_compose(g, Morphism<TPoly>::single(h, TPoly::one())));
        if (tr.eval(t0) != 0)
            return false;
    }
    return true;
}

PartitionDiagram ev_diagram(int n) {
    std::vector<std::vector<std::pair<int, int>>> blocks;
    for (int i = 0; i < n; ++i)
        blocks.push_back({{0, i}, {0, 2 * n - 1 - i}});
    return PartitionDiagram::from_blocks(2 * n, 0, blocks);
}

PartitionDiagram coev_diagram(int n) { return flip(ev_diagram(n)); }

PartitionDiagram braiding_diagram(int n, int m) {
    std::vector<int> perm(n + m);
    for (int i = 0; i < n; ++i)
        perm[i] = m + i;
    for (int j = 0; j < m; ++j)
        perm[n + j] = j;
    return PartitionDiagram::permutation(perm);
}

PartitionDiagram ev_prime_diagram(int n) {
    // ev ∘ braiding: stack the braiding on top of nothing, the cap below it.
    ComposeResult r = compose(braiding_diagram(n, n), ev_diagram(n));
    return r.diagram;
}

PartitionDiagram coev_prime_diagram(int n) {
    ComposeResult r = compose(coev_diagram(n), braiding_diagram(n, n));
    return r.diagram;
}

namespace {

// Splits "(...)*{...}{...} + ..." into top-level terms on '+', depth-tracked
// over both kinds of bracket.
std::vector<std::string> split_terms(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(' || ch == '{')
            ++depth;
        else if (ch == ')' || ch == '}')
            --depth;
        if (ch == '+' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

} // namespace

Morphism<TPoly> parse_morphism(const std::string& text) {
    std::string whole = strip(text);
    if (whole == "0")
        return Morphism<TPoly>::zero(0, 0);

    Morphism<TPoly> out;
    bool first = true;
    for (const std::string& raw : split_terms(whole)) {
        std::string term = strip(raw);
        if (term.empty())
            throw error("empty term in morphism \"" + text + "\"");

        TPoly coeff = TPoly::one();
        std::string diagram_text = term;
        if (term[0] == '(') {
            // Parenthesized scalar, then "*", then the diagram.
            int depth = 0;
            size_t close = std::string::npos;
            for (size_t k = 0; k < term.size(); ++k) {
                if (term[k] == '(')
                    ++depth;
                else if (term[k] == ')' && --depth == 0) {
                    close = k;
                    break;
                }
            }
            if (close == std::string::npos)
                throw error("unbalanced parentheses in morphism term \"" + term + "\"");
            coeff = parse_tpoly(term.substr(1, close - 1));
            std::string rest = strip(term.substr(close + 1));
            if (rest.empty() || rest[0] != '*')
                throw error("expected '*' after coefficient in \"" + term + "\"");
            diagram_text = strip(rest.substr(1));
        }
        PartitionDiagram d = parse_diagram(diagram_text);
        if (first) {
            out = Morphism<TPoly>::zero(d.top, d.bottom);
            first = false;
        } else if (d.top != out.src || d.bottom != out.dst) {
            throw error("mixed arities in morphism \"" + text + "\"");
        }
        out.add_term(d, coeff);
    }
    return out;
}

} // namespace delrep
