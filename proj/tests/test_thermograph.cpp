#include "snortcgt/thermograph.hpp"

#include "snortcgt/notation.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace cgt;

namespace {

// Evaluation points covering both thermographs below and above their masts.
std::vector<Dyadic> probe_points(const Thermograph& a, const Thermograph& b, bool from_zero) {
    std::vector<Dyadic> ts;
    Dyadic start = from_zero ? Dyadic(0) : Dyadic(-1);
    ts.push_back(start);
    for (const Thermograph* th : {&a, &b}) {
        for (const Trajectory* tr : {&th->left, &th->right}) {
            for (const auto& p : tr->breakpoints()) {
                if (p.t >= start) ts.push_back(p.t);
            }
        }
        if (th->temperature >= start) ts.push_back(th->temperature);
    }
    Dyadic top = Dyadic::max(a.temperature, b.temperature) + Dyadic(2);
    ts.push_back(top);
    ts.push_back(Dyadic::average(start, top));
    return ts;
}

}  // namespace

TEST_CASE("integers are all mast") {
    Thermograph th = thermograph(integer(3));
    CHECK(th.temperature == Dyadic(-1));
    CHECK(th.mast == Dyadic(3));
    CHECK(th.left.eval(Dyadic(5)) == Dyadic(3));
    CHECK(th.right.eval(Dyadic(-1)) == Dyadic(3));
    CHECK(temperature(Game()) == Dyadic(-1));
    CHECK(temperature(integer(-7)) == Dyadic(-1));
}

TEST_CASE("switch of two integers") {
    Thermograph th = thermograph(parse_game("{2|-1}"));
    CHECK(th.temperature == Dyadic::fraction(3, 1));  // 3/2
    CHECK(th.mast == Dyadic::fraction(1, 1));         // 1/2
    // The right boundary passes through the -1 wall at t = 0.
    CHECK(th.right.eval(Dyadic(0)) == Dyadic(-1));
    CHECK(th.left.eval(Dyadic(0)) == Dyadic(2));
    CHECK(th.left.eval(Dyadic(10)) == th.mast);
}

TEST_CASE("nested options") {
    Thermograph th = thermograph(parse_game("{{2|-1}|{-4|-10}}"));
    CHECK(th.temperature == Dyadic::fraction(15, 2));  // 15/4
    CHECK(th.mast == Dyadic::fraction(-13, 2));        // -13/4
}

TEST_CASE("several left options overlay") {
    Thermograph th = thermograph(parse_game("{-1,{2|-2}|-8}"));
    CHECK(th.temperature == Dyadic(4));
    CHECK(th.mast == Dyadic(-4));
    CHECK(th.left.eval(Dyadic(1)) == Dyadic(-2));
    CHECK(th.right.eval(Dyadic(0)) == Dyadic(-8));
}

TEST_CASE("star and numbers") {
    Thermograph st = thermograph(star());
    CHECK(st.temperature == Dyadic(0));
    CHECK(st.mast == Dyadic(0));
    // Non-integer numbers are not special-cased; {0|1} has temperature -1/2.
    Thermograph half = thermograph(parse_game("{0|1}"));
    CHECK(half.temperature == Dyadic::fraction(-1, 1));
    CHECK(half.mast == Dyadic::fraction(1, 1));
}

TEST_CASE("table row n=4 temperature") {
    CHECK(temperature(parse_game("±{9, {{14|10*}|0}}")) == Dyadic(9));
}

TEST_CASE("trajectory_eval rejects t below -1") {
    Trajectory c = Trajectory::constant(Dyadic(3));
    CHECK(c.eval(Dyadic(5)) == Dyadic(3));
    CHECK_THROWS_AS(c.eval(Dyadic(-2)), std::domain_error);
}

TEST_CASE("switch law for numbers") {
    snort::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        // Random numbers a > b.
        Dyadic a = Dyadic::fraction(rng.range(-16, 16), rng.range(0, 3));
        Dyadic b = Dyadic::fraction(rng.range(-16, 16), rng.range(0, 3));
        if (a == b) continue;
        if (a < b) std::swap(a, b);
        Game g = canonicalize(make_game({number(a)}, {number(b)}));
        Thermograph th = thermograph(g);
        CHECK(th.temperature == (a - b).half());
        CHECK(th.mast == Dyadic::average(a, b));
    }
}

TEST_CASE("negation mirrors thermographs") {
    snort::Rng rng(32);
    for (int i = 0; i < 150; ++i) {
        Game g = canonicalize(generators::random_game(rng, 3));
        Thermograph a = thermograph(g);
        Thermograph b = thermograph(negate(g));
        CHECK(a.temperature == b.temperature);
        CHECK(a.mast == -b.mast);
        for (const Dyadic& t : probe_points(a, b, false)) {
            CHECK(a.left.eval(t) == -b.right.eval(t));
            CHECK(a.right.eval(t) == -b.left.eval(t));
        }
    }
}

TEST_CASE("boundary shape invariants") {
    snort::Rng rng(33);
    for (int i = 0; i < 150; ++i) {
        Game g = canonicalize(generators::random_game(rng, 3));
        Thermograph th = thermograph(g);
        CHECK(th.temperature >= Dyadic(-1));
        for (const Trajectory* tr : {&th.left, &th.right}) {
            const auto& pts = tr->breakpoints();
            CHECK(pts.front().t == Dyadic(-1));
            for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
                CHECK(pts[k].t < pts[k + 1].t);
                Dyadic dv = pts[k + 1].value - pts[k].value;
                Dyadic dt = pts[k + 1].t - pts[k].t;
                bool slope_ok = dv.is_zero() || dv == dt || dv == -dt;
                CHECK(slope_ok);
            }
        }
        // Left boundary dominates the right boundary and both settle on the
        // mast at the temperature; left is non-increasing, right non-decreasing.
        Thermograph same = th;
        for (const Dyadic& t : probe_points(th, same, false)) {
            CHECK(th.left.eval(t) >= th.right.eval(t));
            if (t >= th.temperature) {
                CHECK(th.left.eval(t) == th.mast);
                CHECK(th.right.eval(t) == th.mast);
            }
        }
        const auto& lp = th.left.breakpoints();
        for (std::size_t k = 0; k + 1 < lp.size(); ++k) CHECK(lp[k].value >= lp[k + 1].value);
        const auto& rp = th.right.breakpoints();
        for (std::size_t k = 0; k + 1 < rp.size(); ++k) CHECK(rp[k].value <= rp[k + 1].value);
    }
}

TEST_CASE("adding star leaves the thermograph unchanged above the axis") {
    snort::Rng rng(34);
    for (int i = 0; i < 150; ++i) {
        Game g = canonicalize(generators::random_game(rng, 3));
        Game gs = canonicalize(sum(g, star()));
        Thermograph a = thermograph(g);
        Thermograph b = thermograph(gs);
        for (const Dyadic& t : probe_points(a, b, true)) {
            CHECK(a.left.eval(t) == b.left.eval(t));
            CHECK(a.right.eval(t) == b.right.eval(t));
        }
    }
}

TEST_CASE("json serialization uses fraction strings") {
    std::string j = thermograph_json(thermograph(parse_game("{2|-1}")));
    CHECK(j.find("\"temperature\": \"3/2\"") != std::string::npos);
    CHECK(j.find("\"mast\": \"1/2\"") != std::string::npos);
    CHECK(j.find("\"left\"") != std::string::npos);
    CHECK(j.find("\"right\"") != std::string::npos);
}

TEST_CASE("svg emitter mentions the truncated mast") {
    std::string svg = thermograph_svg(thermograph(parse_game("{2|-1}")));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("truncated") != std::string::npos);
    CHECK(svg.find("3/2") != std::string::npos);
}
