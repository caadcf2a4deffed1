#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include <delrep/error.hpp>
#include <delrep/knots.hpp>
#include <delrep/scalar_io.hpp>

using namespace delrep;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(KNOT_WORD_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TangleWord corpus(const std::string& name) { return parse_tangle(slurp(name)); }

} // namespace

TEST_CASE("parsing tangle words") {
    TangleWord w = parse_tangle("cup 0 / cap 0");
    REQUIRE(w.events.size() == 2);
    CHECK(w.events[0] == TangleEvent{EventKind::Cup, 0});
    CHECK(w.events[1] == TangleEvent{EventKind::Cap, 0});

    // newlines, slashes, and comments are interchangeable separators
    TangleWord lines = parse_tangle("# a simple loop\ncup 0\ncap 0\n");
    CHECK(lines == w);
    TangleWord crossing = parse_tangle("cup 0 / cup 1 / x+ 0 / x- 0 / x+ 0 / cap 1 / cap 0");
    CHECK(crossing.events.size() == 7);
}

TEST_CASE("malformed words are rejected with location info") {
    CHECK_THROWS_WITH_AS(parse_tangle("hop 0"), doctest::Contains("unknown event"), error);
    CHECK_THROWS_WITH_AS(parse_tangle("cup"), doctest::Contains("missing its position"), error);
    CHECK_THROWS_AS(parse_tangle(""), error);
    CHECK_THROWS_WITH_AS(parse_tangle("cup 0 / cap 1"), doctest::Contains("out of range"),
                         error);
    CHECK_THROWS_WITH_AS(parse_tangle("cup 0 / x+ 1 / cap 0"), doctest::Contains("out of range"),
                         error); // a crossing needs two strands from pos on
    CHECK_THROWS_WITH_AS(parse_tangle("cup 0"), doctest::Contains("does not close"), error);
}

TEST_CASE("words that close into links are not knots") {
    // two nested circles
    CHECK_THROWS_WITH_AS(parse_tangle("cup 0 / cup 1 / cap 1 / cap 0"),
                         doctest::Contains("components"), error);
    // a crossing between the legs of a cup that immediately closes still
    // leaves two separate circles
    CHECK_THROWS_WITH_AS(parse_tangle("cup 0 / cup 1 / x+ 1 / cap 1 / cap 0"),
                         doctest::Contains("components"), error);
}

TEST_CASE("writhe of the corpus") {
    CHECK(writhe(corpus("unknot.tw")) == 0);
    CHECK(writhe(corpus("kink_p1.tw")) == 1);
    CHECK(writhe(corpus("kink_m1.tw")) == -1);
    CHECK(writhe(corpus("kink_p2.tw")) == 2);
    CHECK(writhe(corpus("kink_m2.tw")) == -2);
    CHECK(writhe(corpus("kink_p3.tw")) == 3);
    CHECK(writhe(corpus("kink_m3.tw")) == -3);
    CHECK(writhe(corpus("trefoil.tw")) == 3);
    CHECK(writhe(corpus("trefoil_mirror.tw")) == -3);
    CHECK(writhe(corpus("figure8.tw")) == 0);
}

TEST_CASE("evaluation recovers the framing power of q") {
    const TangleWord trefoil = corpus("trefoil.tw");

    KnotResult r10 = evaluate_knot(trefoil, 1, 0);
    CHECK(r10.value == QLaurent::q_power(3));
    CHECK(r10.writhe == 3);
    CHECK_FALSE(r10.degenerate);

    CHECK(evaluate_knot(trefoil, 2, 0).value == QLaurent::q_power(12));
    CHECK(evaluate_knot(trefoil, 2, 1).value == QLaurent::q_power(3));
    CHECK(evaluate_knot(trefoil, 0, 1).value == QLaurent::q_power(3));

    KnotResult r11 = evaluate_knot(trefoil, 1, 1);
    CHECK(r11.value == QLaurent::one());
    CHECK(r11.degenerate);

    CHECK(evaluate_knot(corpus("trefoil_mirror.tw"), 1, 0).value == QLaurent::q_power(-3));
    CHECK(evaluate_knot(corpus("unknot.tw"), 1, 0).value == QLaurent::one());
    CHECK(evaluate_knot(corpus("figure8.tw"), 1, 0).value == QLaurent::one());
    CHECK(evaluate_knot(corpus("figure8.tw"), 2, 0).value == QLaurent::one());
}

TEST_CASE("each kink multiplies the value by one framing unit") {
    CHECK(evaluate_knot(corpus("kink_p1.tw"), 1, 0).value == QLaurent::q_power(1));
    CHECK(evaluate_knot(corpus("kink_p2.tw"), 1, 0).value == QLaurent::q_power(2));
    CHECK(evaluate_knot(corpus("kink_p3.tw"), 1, 0).value == QLaurent::q_power(3));
    CHECK(evaluate_knot(corpus("kink_m1.tw"), 1, 0).value == QLaurent::q_power(-1));
    CHECK(evaluate_knot(corpus("kink_m2.tw"), 1, 0).value == QLaurent::q_power(-2));
    CHECK(evaluate_knot(corpus("kink_p1.tw"), 2, 0).value == QLaurent::q_power(4));
    CHECK(evaluate_knot(corpus("kink_m1.tw"), 2, 0).value == QLaurent::q_power(-4));
}

TEST_CASE("sliding moves leave the value alone") {
    // a cancelling crossing pair inserted into the trefoil (second move)
    TangleWord padded =
        parse_tangle("cup 0 / cup 1 / x+ 0 / x+ 0 / x+ 0 / x+ 0 / x- 0 / cap 1 / cap 0");
    CHECK(writhe(padded) == 3);
    CHECK(evaluate_knot(padded, 1, 0).value == evaluate_knot(corpus("trefoil.tw"), 1, 0).value);
    CHECK(evaluate_knot(padded, 2, 1).value == evaluate_knot(corpus("trefoil.tw"), 2, 1).value);

    // words of equal writhe share the invariant however the crossings are laid out
    CHECK(evaluate_knot(corpus("kink_p3.tw"), 1, 0).value ==
          evaluate_knot(corpus("trefoil.tw"), 1, 0).value);
    CHECK(evaluate_knot(corpus("figure8.tw"), 1, 0).value ==
          evaluate_knot(corpus("unknot.tw"), 1, 0).value);
}

TEST_CASE("crossings between antiparallel strands count against the framing") {
    // the two legs of one cup run in opposite directions, so their positive
    // crossing behaves like a negative kink
    TangleWord loop = parse_tangle("cup 0 / x+ 0 / cap 0");
    CHECK(writhe(loop) == -1);
    CHECK(evaluate_knot(loop, 1, 0).value == QLaurent::q_power(-1));
}

TEST_CASE("label validation") {
    const TangleWord w = corpus("unknot.tw");
    CHECK_THROWS_AS(evaluate_knot(w, 0, 0), error);
    CHECK_THROWS_AS(evaluate_knot(w, -1, 1), error);
}
