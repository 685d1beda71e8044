#include "doctest.h"
#include "legch/error.hpp"
#include "legch/holonomy.hpp"
#include "legch/knots.hpp"
#include "random_poly.hpp"

using namespace legch;

namespace {
Poly P(const char* text) { return Poly::parse(text); }
Symbol S(const char* name) { return Symbol(name); }

Dga flat(std::initializer_list<const char*> names) {
    std::vector<Generator> gens;
    for (auto n : names) gens.push_back({S(n), 0, {}});
    return Dga(gens, {});
}

Poly W() { return P("1 + w"); }
}  // namespace

TEST_CASE("RII inverse sends x to 0 and y to w") {
    Dga d({{S("x"), 1, {}}, {S("y"), 0, {}}, {S("p"), 0, {}}, {S("q"), 1, {}}},
          {{S("x"), P("y + p p")}, {S("q"), P("y p + x")}});
    auto step = holonomy(RIIInv{S("x"), S("y"), {}}, d);
    CHECK(step.map.image(S("x")).is_zero());
    CHECK(step.map.image(S("y")) == P("p p"));
    CHECK(step.map.image(S("p")) == P("p"));
    CHECK_FALSE(step.state.declares(S("x")));
    CHECK_FALSE(step.state.declares(S("y")));
    // the post-move differential is the holonomy applied to the pre-move one
    CHECK(step.state.differential(S("q")) == step.map.apply(d.differential(S("q"))));
    CHECK(step.state.differential(S("q")) == P("p p p"));

    CHECK_THROWS_WITH_AS(holonomy(RIIInv{S("q"), S("p"), {}}, d), doctest::Contains("MalformedDifferential"), Error);
    CHECK_THROWS_WITH_AS(holonomy(RIIInv{S("x"), S("zz"), {}}, d), doctest::Contains("UnknownGenerator"), Error);
    CHECK_THROWS_WITH_AS(holonomy(RIIInv{S("x"), S("y"), P("p")}, d), doctest::Contains("MalformedDifferential"),
                         Error);
}

TEST_CASE("RIII moves") {
    auto d = flat({"x", "y", "z"});
    auto b = holonomy(RIIIb{S("x"), S("y"), S("z")}, d);
    CHECK(b.map.image(S("x")) == P("x + z y"));
    CHECK(b.map.domain() == std::vector<Symbol>{S("x")});
    auto a = holonomy(RIIIa{}, d);
    CHECK(a.map == AlgebraMap::identity());
    CHECK(a.state.names() == d.names());
    CHECK_THROWS_AS(holonomy(RIIIb{S("x"), S("y"), S("nope")}, d), Error);
}

TEST_CASE("RII births use the zero-differential and height shortcuts") {
    Dga d({{S("p"), 0, Rational(1)}, {S("q"), 1, Rational(5)}}, {});
    RII plain{{S("x"), 1, Rational(3)}, {S("y"), 0, Rational(2)}, {{S("x"), P("y")}}};
    auto step = holonomy(plain, d);
    CHECK(step.map == AlgebraMap::identity());
    CHECK(step.state.declares(S("x")));
    CHECK(step.state.differential(S("x")) == P("y"));

    RII low{{S("x"), 1, Rational(3)}, {S("y"), 0, Rational(2)}, {{S("x"), P("y")}, {S("q"), P("p")}}};
    Dga d_low({{S("p"), 0, Rational(1)}, {S("q"), 1, Rational(1, 2)}}, {});
    CHECK(holonomy(low, d_low).map == AlgebraMap::identity());

    CHECK_THROWS_WITH_AS(holonomy(low, d), doctest::Contains("RIIGeneralHolonomyUnsupported"), Error);
    CHECK_NOTHROW(holonomy(low, d, ScriptMode::Formal));
    Dga no_heights({{S("p"), 0, {}}, {S("q"), 1, {}}}, {});
    RII unsized{{S("x"), 1, {}}, {S("y"), 0, {}}, {{S("q"), P("p")}}};
    CHECK_THROWS_WITH_AS(holonomy(unsized, no_heights), doctest::Contains("RIIGeneralHolonomyUnsupported"), Error);

    RII stale{{S("p"), 1, {}}, {S("y"), 0, {}}, {}};
    CHECK_THROWS_WITH_AS(holonomy(stale, d), doctest::Contains("StaleEvent"), Error);
}

TEST_CASE("Relabel") {
    auto d = flat({"a", "b", "c"});
    auto step = holonomy(Relabel{{{S("a"), S("b")}, {S("b"), S("a")}}}, d);
    CHECK(step.map.image(S("a")) == P("b"));
    CHECK(step.map.image(S("b")) == P("a"));
    CHECK(step.state.declares(S("a")));
    CHECK_THROWS_AS(holonomy(Relabel{{{S("a"), S("b")}}}, d), Error);
    auto fresh = holonomy(Relabel{{{S("a"), S("e")}}}, d);
    CHECK(fresh.state.declares(S("e")));
    CHECK_FALSE(fresh.state.declares(S("a")));
}

TEST_CASE("run_script") {
    auto d = torus_knot_dga(3);
    CHECK(run_script({d, {}, ScriptMode::Verified}).map == AlgebraMap::identity());

    Dga with_yz({{S("b2"), 0, {}}, {S("y"), 0, {}}, {S("z"), 0, {}}}, {});
    auto m = run_script({with_yz, {RIIIb{S("b2"), S("y"), S("z")}, RIIIa{}}, ScriptMode::Verified});
    CHECK(m.map.image(S("b2")) == P("b2 + z y"));
    CHECK(m.endomorphism);
    CHECK(m.degrees.ok());

    // relabel away and back
    auto round = run_script({with_yz,
                             {RIIIb{S("b2"), S("y"), S("z")}, Relabel{{{S("b2"), S("t")}}}, Relabel{{{S("t"), S("b2")}}}},
                             ScriptMode::Verified});
    CHECK(round.map.image(S("b2")) == P("b2 + z y"));

    auto K = P("1 + k.b1 + k.b1 k.b2");
    Dga fly({{S("x"), 1, {}}, {S("b1"), 0, {}}, {S("b3"), 0, {}}, {S("A"), 0, {}}, {S("k.b1"), 0, {}}, {S("k.b2"), 0, {}}},
            {});
    auto w = (Poly::one() + P("b3 A")) * K;
    auto formal = run_script({fly, {RIIInv{S("x"), S("b1"), w}}, ScriptMode::Formal});
    CHECK(formal.map.image(S("b1")) == w);
    CHECK_FALSE(formal.endomorphism);
    CHECK_THROWS_WITH_AS(run_script({fly, {RIIInv{S("x"), S("b1"), w}}, ScriptMode::Verified}),
                         doctest::Contains("MalformedDifferential"), Error);

    Dga graded({{S("x"), 1, {}}, {S("y"), 0, {}}, {S("z"), 1, {}}}, {});
    CHECK_THROWS_WITH_AS(run_script({graded, {RIIIb{S("y"), S("x"), S("z")}}, ScriptMode::Verified}),
                         doctest::Contains("NotDegreePreserving"), Error);
    auto recorded = run_script({graded, {RIIIb{S("y"), S("x"), S("z")}}, ScriptMode::Formal});
    CHECK_FALSE(recorded.degrees.ok());

    auto birth = RII{{S("u"), 1, {}}, {S("v"), 0, {}}, {{S("u"), P("v")}}};
    CHECK_THROWS_WITH_AS(run_script({flat({"b1", "b2"}), {birth}, ScriptMode::Verified}),
                         doctest::Contains("NotAnEndomorphism"), Error);
    auto cancelled = run_script({flat({"b1", "b2"}), {birth, RIIInv{S("u"), S("v"), {}}}, ScriptMode::Verified});
    CHECK(cancelled.map == AlgebraMap::identity());
    CHECK(apply_endomorphism(flat({"b1", "b2"}), cancelled.map).ok());
}

TEST_CASE("run_script is a homomorphism on concatenated formal scripts") {
    sampling::Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto initial = flat({"g1", "g2", "g3", "g4"});
        int counter = 0;
        auto e1 = sampling::random_formal_events(rng, initial, 6, counter);
        auto m1 = run_script({initial, e1, ScriptMode::Formal});
        auto e2 = sampling::random_formal_events(rng, m1.final_state, 6, counter);
        auto m2 = run_script({m1.final_state, e2, ScriptMode::Formal});
        auto all = e1;
        all.insert(all.end(), e2.begin(), e2.end());
        auto m12 = run_script({initial, all, ScriptMode::Formal});
        CHECK(m12.map == restrict(compose(m2.map, m1.map), initial.names()));
    }
}

TEST_CASE("fly_fixed_check") {
    auto d = flat({"x", "y", "z", "f"});
    CHECK(fly_fixed_check({d, {RIIIa{}, RIIIa{}}, ScriptMode::Verified}, {S("f")}).ok());
    auto r = fly_fixed_check({d, {RIIIa{}, RIIIb{S("f"), S("y"), S("z")}}, ScriptMode::Verified}, {S("f")});
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].event == 1);
    CHECK(r.violations[0].generator == S("f"));

    Dga with_kill({{S("x"), 1, {}}, {S("y"), 0, {}}, {S("f"), 0, {}}}, {{S("x"), P("y")}});
    RII birth{{S("u"), 1, {}}, {S("v"), 0, {}}, {{S("u"), P("v")}}};
    MoveScript s{with_kill, {birth, RIIInv{S("x"), S("y"), {}}, RIIInv{S("u"), S("v"), {}}}, ScriptMode::Formal};
    CHECK(fly_fixed_check(s, {S("f")}).ok());
}

TEST_CASE("Kalman monodromy") {
    auto m1 = kalman_monodromy(W(), 1);
    CHECK(m1.image(S("b3")) == P("b1"));
    CHECK(m1.image(S("w")) == P("w"));
    auto m2 = kalman_monodromy(W(), 2);
    CHECK(m2.image(S("b3")) == W() + P("b1 b2") * W());
    auto m3 = kalman_monodromy(W(), 3);
    auto expect = W() + W() * W() + W() * P("b2 b3") * W() + P("b1 b2") * W() * W() + P("b1 b2") * W() * P("b2 b3") * W();
    CHECK(m3.image(S("b3")) == expect);

    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b)
            CHECK(kalman_monodromy(W(), a + b) == compose(kalman_monodromy(W(), a), kalman_monodromy(W(), b)));

    auto unit = kalman_monodromy(Poly::one(), 1);
    CHECK(unit.image(S("b3")) == P("b1"));
    CHECK(unit.image(S("b1")) == P("1 + b1 b2"));
    CHECK(unit.image(S("b2")) == P("1 + b2 b3"));

    CHECK_THROWS_WITH_AS(kalman_monodromy(P("1 + b2"), 1), doctest::Contains("FlyCollision"), Error);
    CHECK_THROWS_AS(kalman_monodromy(W(), 0), Error);

    auto K = connect_sum({tangle_from_knot(torus_knot_dga(7), S("a2"), "k1"), tangle_from_knot(torus_knot_dga(3), S("a2"), "")},
                         "a2");
    auto fly = tangle_from_knot(torus_knot_dga(7), S("a2"), "k1");
    for (int j = 1; j <= 3; ++j) CHECK(apply_endomorphism(K, kalman_monodromy(fly.word, j)).ok());
}
