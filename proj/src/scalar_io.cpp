#include <delrep/scalar_io.hpp>

#include <cctype>
#include <sstream>

namespace delrep {

namespace {

std::string integer_str(const Integer& n) { return n.str(); }

// One printed product term: |coeff| * t^e (the sign is handled by the caller
// so sums read "a - b" rather than "a + -b").
std::string tterm_str(const Rational& coeff_abs, int exp) {
    std::string s;
    bool unit = coeff_abs == 1;
    if (!unit || exp == 0)
        s = to_string(coeff_abs);
    if (exp > 0) {
        if (!s.empty())
            s += "*";
        s += exp == 1 ? "t" : "t^" + std::to_string(exp);
    }
    return s;
}

void join_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

std::string qbase_str(int exp) {
    return exp == 1 ? "q" : "q^" + std::to_string(exp);
}

// --- parsing ---------------------------------------------------------------
//
// Grammar (whitespace ignored):
//   sum      := ['+'|'-'] product (('+'|'-') product)*
//   product  := factor ('*' factor)*
//   factor   := rational | 't' ['^' int] | 'q' ['^' int] | '(' sum ')'
//   rational := int ['/' int]
// The value is accumulated as a QLaurent; the narrower parsers check that the
// result fits their domain.
struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw error("scalar parse error at offset " + std::to_string(i) + ": " + what +
                    " in \"" + s + "\"");
    }

    Integer parse_int() {
        skip();
        bool neg = eat('-');
        if (!neg)
            eat('+');
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start)
            fail("expected an integer");
        Integer v(s.substr(start, i - start));
        return neg ? Integer(-v) : v;
    }

    int parse_exponent() {
        Integer e = parse_int();
        if (e > 1000 || e < -1000)
            fail("exponent out of range");
        return static_cast<int>(e);
    }

    QLaurent parse_factor() {
        skip();
        if (i >= s.size())
            fail("expected a factor");
        char c = s[i];
        if (c == '(') {
            ++i;
            QLaurent inner = parse_sum();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (c == 't' || c == 'q') {
            ++i;
            int exp = 1;
            if (eat('^'))
                exp = parse_exponent();
            if (c == 't') {
                if (exp < 0)
                    fail("negative t exponent");
                return QLaurent(TPoly::monomial(exp, Rational(1)));
            }
            return QLaurent::q_power(exp);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_int();
            if (eat('/')) {
                Integer den = parse_int();
                if (den == 0)
                    fail("zero denominator");
                return QLaurent(Rational(num, den));
            }
            return QLaurent(Rational(num));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    QLaurent parse_product() {
        QLaurent acc = parse_factor();
        while (eat('*'))
            acc *= parse_factor();
        return acc;
    }

    QLaurent parse_sum() {
        QLaurent acc;
        bool first = true;
        while (true) {
            skip();
            bool neg = false;
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else if (!first)
                break;
            QLaurent term = parse_product();
            acc += neg ? -term : term;
            first = false;
        }
        return acc;
    }

    QLaurent parse_all() {
        QLaurent v = parse_sum();
        skip();
        if (i != s.size())
            fail("trailing input");
        return v;
    }
};

} // namespace

std::string to_string(const Rational& r) {
    std::string s = integer_str(rat_num(r));
    if (rat_den(r) != 1)
        s += "/" + integer_str(rat_den(r));
    return s;
}

std::string to_string(const TPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [exp, c] : p.terms()) {
        std::string term = tterm_str(c < 0 ? Rational(-c) : c, exp);
        if (c < 0)
            term = "-" + term;
        join_term(out, term);
    }
    return out;
}

std::string to_string(const QLaurent& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [exp, tp] : p.terms()) {
        if (exp == 0) {
            // q-free part: print its t-terms inline.
            for (const auto& [te, c] : tp.terms()) {
                std::string term = tterm_str(c < 0 ? Rational(-c) : c, te);
                if (c < 0)
                    term = "-" + term;
                join_term(out, term);
            }
            continue;
        }
        std::string term;
        if (tp == TPoly::one()) {
            term = qbase_str(exp);
        } else if (tp == -TPoly::one()) {
            term = "-" + qbase_str(exp);
        } else if (tp.terms().size() == 1) {
            const auto& [te, c] = tp.terms()[0];
            term = tterm_str(c < 0 ? Rational(-c) : c, te) + "*" + qbase_str(exp);
            if (c < 0)
                term = "-" + term;
        } else {
            term = "(" + to_string(tp) + ")*" + qbase_str(exp);
        }
        join_term(out, term);
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    QLaurent v = Parser(text).parse_all();
    if (!v.is_q_free())
        throw error("expected a rational, found q terms in \"" + text + "\"");
    TPoly tp = v.coeff(0);
    if (!tp.is_constant())
        throw error("expected a rational, found t terms in \"" + text + "\"");
    return tp.coeff(0);
}

TPoly parse_tpoly(const std::string& text) {
    QLaurent v = Parser(text).parse_all();
    if (!v.is_q_free())
        throw error("expected a t-polynomial, found q terms in \"" + text + "\"");
    return v.coeff(0);
}

QLaurent parse_qlaurent(const std::string& text) { return Parser(text).parse_all(); }

Rational evaluate_scalar(const Rational& r, const ScalarAssignment&) { return r; }

Rational evaluate_scalar(const TPoly& p, const ScalarAssignment& asg) {
    if (!p.is_constant() && !asg.t)
        throw error("unbound parameter t in scalar evaluation");
    return p.eval(asg.t.value_or(Rational(0)));
}

Rational evaluate_scalar(const QLaurent& p, const ScalarAssignment& asg) {
    ScalarAssignment rest{asg.t, std::nullopt};
    if (!p.is_q_free()) {
        if (!asg.q)
            throw error("unbound parameter q in scalar evaluation");
        return evaluate_scalar(p.eval_q(*asg.q), rest);
    }
    if (asg.q && *asg.q == 0)
        throw error("q must be invertible: q = 0 is not a valid assignment");
    return evaluate_scalar(p.coeff(0), rest);
}

} // namespace delrep
