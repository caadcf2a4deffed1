#pragma once

#include <optional>
#include <string>

#include <delrep/qlaurent.hpp>

namespace delrep {

// Text round-trip for scalars. Display rules, all of which parse back
// bit-exactly:
//   Rational   "5", "-3/2", "0"
//   TPoly      lowest degree first, e.g. "-1/2 + 1/2*t^2"; powers "t", "t^2"
//   QLaurent   ascending q-exponent, e.g. "(1/2 + t)*q^-3 + 1 - t + 2*q"
// Parsing is whitespace-insensitive and accepts any sum of '*'-joined factors
// (rational, t^k, q^k, parenthesized sums), so every printed form and the
// obvious handwritten variants are accepted.
std::string to_string(const Rational& r);
std::string to_string(const TPoly& p);
std::string to_string(const QLaurent& p);

Rational parse_rational(const std::string& text);
TPoly parse_tpoly(const std::string& text);
QLaurent parse_qlaurent(const std::string& text);

// Substitution of concrete values for the parameters. t may be any rational;
// q must be nonzero. Unbound parameters that actually occur are an error.
struct ScalarAssignment {
    std::optional<Rational> t;
    std::optional<Rational> q;
};

Rational evaluate_scalar(const Rational& r, const ScalarAssignment& asg);
Rational evaluate_scalar(const TPoly& p, const ScalarAssignment& asg);
Rational evaluate_scalar(const QLaurent& p, const ScalarAssignment& asg);

} // namespace delrep
