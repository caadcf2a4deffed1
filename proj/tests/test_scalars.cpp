#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <delrep/error.hpp>
#include <delrep/scalar_io.hpp>

using namespace delrep;

TEST_CASE("rationals are exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-3, 2) * Rational(-2, 3) == 1);
    CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(factorial(5) == 120);
    CHECK(factorial(0) == 1);
}

TEST_CASE("polynomial ring basics") {
    const TPoly t = TPoly::t();
    const TPoly p = (t - TPoly::one()) * (t + TPoly::one());
    CHECK(p == t * t - TPoly::one());
    CHECK(p.degree() == 2);
    CHECK(TPoly::zero().degree() == -1);
    CHECK(p.eval(Rational(3)) == 8);
    CHECK((t * t - t + TPoly(Rational(1, 2))).eval(Rational(3, 2)) == Rational(5, 4));
}

TEST_CASE("exact division") {
    const TPoly t = TPoly::t();
    const TPoly num = t * t * t - TPoly::one();
    const TPoly den = t - TPoly::one();
    CHECK(divide_exact(num, den) == t * t + t + TPoly::one());
    CHECK_THROWS_AS(divide_exact(t * t + TPoly::one(), t - TPoly::one()), error);
    CHECK_THROWS_AS(divide_exact(t, TPoly::zero()), error);
}

TEST_CASE("laurent ring in q over the polynomial ring") {
    const QLaurent q = QLaurent::q_power(1);
    const QLaurent qinv = QLaurent::q_power(-1);
    CHECK(q * qinv == QLaurent::one());
    CHECK(QLaurent::q_power(-3) * QLaurent::q_power(5) == QLaurent::q_power(2));

    QLaurent mix = QLaurent(TPoly::t()) + QLaurent::q_power(2);
    CHECK(mix.coeff(0) == TPoly::t());
    CHECK(mix.coeff(2) == TPoly::one());
    CHECK_FALSE(mix.is_q_free());
    CHECK(QLaurent(TPoly::t()).is_q_free());

    CHECK(mix.mul_qpow(-2) == QLaurent(TPoly::t()).mul_qpow(-2) + QLaurent::one());
    CHECK(mix.mul_tpow(1).coeff(0) == TPoly::t() * TPoly::t());
}

TEST_CASE("evaluating q") {
    CHECK(QLaurent::q_power(-1).eval_q(Rational(2)) == TPoly(Rational(1, 2)));
    QLaurent mix = QLaurent(TPoly::t()) + QLaurent::q_power(3);
    CHECK(mix.eval_q(Rational(2)) == TPoly::t() + TPoly(Rational(8)));
    CHECK(mix.eval(Rational(5), Rational(2)) == 13);
    CHECK_THROWS_AS(QLaurent::q_power(-1).eval_q(Rational(0)), error);
}

TEST_CASE("scalar display is frozen") {
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");

    const TPoly t = TPoly::t();
    CHECK(to_string(TPoly::zero()) == "0");
    CHECK(to_string(t * t * TPoly(Rational(1, 2)) - TPoly(Rational(1, 2))) ==
          "-1/2 + 1/2*t^2");
    CHECK(to_string(t) == "t");
    CHECK(to_string(-t) == "-t");

    QLaurent p = QLaurent::monomial(-3, TPoly(Rational(1, 2)) + t) +
                 QLaurent(TPoly::one() - t) + QLaurent::monomial(1, TPoly(Rational(2)));
    CHECK(to_string(p) == "(1/2 + t)*q^-3 + 1 - t + 2*q");
    CHECK(to_string(QLaurent::q_power(3)) == "q^3");
    CHECK(to_string(QLaurent::zero()) == "0");
}

TEST_CASE("parsing accepts printed forms and handwritten variants") {
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(parse_rational("t"), error);
    CHECK_THROWS_AS(parse_rational("q"), error);
    CHECK_THROWS_AS(parse_rational("3 +"), error);

    CHECK(parse_tpoly("-1/2 + 1/2*t^2") == TPoly::t() * TPoly::t() * TPoly(Rational(1, 2)) -
                                               TPoly(Rational(1, 2)));
    CHECK(parse_tpoly("(t - 1)*(t + 1)") == TPoly::t() * TPoly::t() - TPoly::one());
    CHECK(parse_tpoly("t^2*1/2-1/2") == parse_tpoly("-1/2 + 1/2*t^2"));
    CHECK_THROWS_AS(parse_tpoly("q + 1"), error);

    const std::string frozen = "(1/2 + t)*q^-3 + 1 - t + 2*q";
    CHECK(to_string(parse_qlaurent(frozen)) == frozen);
    CHECK(parse_qlaurent("q^-1 * q * t") == QLaurent(TPoly::t()));
    CHECK_THROWS_AS(parse_qlaurent("cow"), error);
}

TEST_CASE("round trips") {
    for (const char* text : {"0", "5", "-3/2", "t", "-t", "1 - t + t^3",
                             "(1/2 + t)*q^-3 + 1 - t + 2*q", "q^-2", "-q"}) {
        CAPTURE(text);
        CHECK(to_string(parse_qlaurent(text)) == text);
    }
}

TEST_CASE("substituting concrete parameters") {
    ScalarAssignment both{Rational(3), Rational(2)};
    CHECK(evaluate_scalar(Rational(5, 2), both) == Rational(5, 2));
    CHECK(evaluate_scalar(parse_tpoly("1 + t^2"), both) == 10);
    CHECK(evaluate_scalar(parse_qlaurent("t*q^-1"), both) == Rational(3, 2));

    ScalarAssignment none;
    CHECK(evaluate_scalar(TPoly(Rational(4)), none) == 4);
    CHECK_THROWS_AS(evaluate_scalar(parse_tpoly("t"), none), error);
    CHECK_THROWS_AS(evaluate_scalar(parse_qlaurent("q"), ScalarAssignment{Rational(1), {}}),
                    error);
}
