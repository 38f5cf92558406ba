#include "snortcgt/notation.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace cgt;

TEST_CASE("format basics") {
    CHECK(format_game(Game()) == "0");
    CHECK(format_game(integer(3)) == "3");
    CHECK(format_game(integer(-2)) == "-2");
    CHECK(format_game(star()) == "*");
    CHECK(format_game(make_game({integer(6)}, {integer(6)})) == "6*");
    CHECK(format_game(number(Dyadic::fraction(11, 1))) == "11/2");
    CHECK(format_game(make_game({integer(2)}, {integer(-1)})) == "{2|-1}");
    CHECK(format_game(make_game({integer(4)}, {integer(-4)})) == "±4");
    Game half = number(Dyadic::fraction(1, 1));
    CHECK(format_game(make_game({half}, {half})) == "1/2*");
}

TEST_CASE("plus-minus with several options sorts deterministically") {
    Game three_star = make_game({integer(3)}, {integer(3)});
    Game inner = make_game({make_game({integer(5)}, {integer(4)})}, {star()});
    Game g = make_game({three_star, inner}, {negate(three_star), negate(inner)});
    CHECK(format_game(g) == "±{3*, {{5|4}|*}}");
}

TEST_CASE("table rows parse to canonical games and re-format identically") {
    const char* rows[] = {
        "±{3*, {{5|4}|*}}",
        "±{5, {{8|6*}|0}}",
        "±{7*, {{11|8}|*}}",
        "±{9, {{14|10*}|0}}",
        "±{11*, {{17|12}|*}}",
        "±{13, {{20|14*}|0}}",
    };
    for (const char* row : rows) {
        Game g = parse_game(row);
        CHECK(canonicalize(g) == g);  // these forms are already canonical
        CHECK(format_game(g) == row);
    }
}

TEST_CASE("parse accepts whitespace and ascii sign") {
    CHECK(parse_game(" { 2 | -1 } ") == parse_game("{2|-1}"));
    CHECK(parse_game("+-4") == parse_game("±4"));
    CHECK(parse_game("+-{2|-1}") == make_game({parse_game("{2|-1}")},
                                              {negate(parse_game("{2|-1}"))}));
    CHECK(parse_game("{|}") == Game());
    CHECK(parse_game("{ | }") == Game());
    CHECK(parse_game("3*") == make_game({integer(3)}, {integer(3)}));
    CHECK(parse_game("-3/2") == number(Dyadic::fraction(-3, 1)));
    CHECK(parse_game("{-1,{2|-2}|-8}") ==
          make_game({integer(-1), make_game({integer(2)}, {integer(-2)})}, {integer(-8)}));
}

TEST_CASE("pm braces disambiguate list from switch") {
    // ±{a, b}: option list.
    Game list = parse_game("±{1, 2}");
    CHECK(left_options(list).size() == 2);
    // ±{a|b}: a single switch option.
    Game single = parse_game("±{2|-1}");
    REQUIRE(left_options(single).size() == 1);
    CHECK(left_options(single)[0] == parse_game("{2|-1}"));
    // A list of one is accepted and means the same as the bare form.
    CHECK(parse_game("±{3*}") == parse_game("±3*"));
}

TEST_CASE("parse errors carry positions") {
    auto position_of = [](const char* text) {
        try {
            parse_game(text);
        } catch (const ParseError& e) {
            return e.position;
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(position_of("{1|") == 3);
    CHECK(position_of("abc") == 0);
    CHECK(position_of("1/3") != static_cast<std::size_t>(-1));
    CHECK(position_of("{1|2} junk") == 6);
    CHECK(position_of("±") == 2);
    CHECK(position_of("{1,|2}") == 3);
}

TEST_CASE("format/parse round-trip on random canonical games") {
    snort::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        Game g = canonicalize(generators::random_game(rng, 3));
        Game back = parse_game(format_game(g));
        CHECK(back == g);
    }
}
