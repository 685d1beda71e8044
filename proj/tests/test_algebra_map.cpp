#include <random>

#include "doctest.h"
#include "legch/algebra_map.hpp"
#include "random_poly.hpp"

using namespace legch;
using legch::testing::alphabet;
using legch::testing::random_map;
using legch::testing::random_poly;

namespace {
Poly P(const char* text) { return Poly::parse(text); }
Symbol S(const char* name) { return Symbol(name); }

AlgebraMap kalman_one_pass(const char* w) {
    AlgebraMap m;
    auto W = P(w);
    m.assign(S("b1"), W + P("b1 b2") * W);
    m.assign("b2", "1 + b2 b3");
    m.assign("b3", "b1");
    return m;
}

}  // namespace

TEST_CASE("apply_map examples") {
    auto p = P("1 + b1 b2 + k1.b3");
    CHECK(apply_map(AlgebraMap::identity(), p) == p);

    AlgebraMap m;
    m.assign("x", "x + z y");
    CHECK(apply_map(m, P("x z")) == P("x z + z y z"));

    CHECK(apply_map(kalman_one_pass("1 + w"), P("b3")) == P("b1"));
    CHECK(apply_map(m, Poly::one()).is_one());
    CHECK(apply_map(m, Poly()).is_zero());
}

TEST_CASE("compose examples") {
    auto m = kalman_one_pass("1 + w");
    CHECK(compose(AlgebraMap::identity(), m) == m);
    CHECK(compose(m, AlgebraMap::identity()) == m);
    auto sq = compose(m, m);
    auto W = P("1 + w");
    CHECK(sq.image(S("b3")) == W + P("b1 b2") * W);
    CHECK(sq.image(S("w")) == P("w"));
}

TEST_CASE("assigning the identity drops the entry") {
    AlgebraMap m;
    m.assign("a", "a");
    CHECK(m.domain().empty());
    CHECK(m == AlgebraMap::identity());
    m.assign("a", "b");
    CHECK(m.moves(S("a")));
    CHECK(m.to_string() == "{a -> b}");
}

TEST_CASE("restrict keeps only requested generators") {
    AlgebraMap m;
    m.assign("a", "b").assign("c", "1");
    auto r = restrict(m, {S("a")});
    CHECK(r.moves(S("a")));
    CHECK_FALSE(r.moves(S("c")));
}

TEST_CASE("apply_map is a unital ring homomorphism on random inputs") {
    sampling::Rng rng(11);
    auto letters = alphabet(4);
    for (int i = 0; i < 300; ++i) {
        auto m = random_map(rng, letters);
        auto p = random_poly(rng, letters);
        auto q = random_poly(rng, letters);
        CHECK(apply_map(m, p * q) == apply_map(m, p) * apply_map(m, q));
        CHECK(apply_map(m, p + q) == apply_map(m, p) + apply_map(m, q));
    }
}

TEST_CASE("compose is associative and agrees with successive application") {
    sampling::Rng rng(12);
    auto letters = alphabet(3);
    for (int i = 0; i < 200; ++i) {
        auto a = random_map(rng, letters);
        auto b = random_map(rng, letters);
        auto c = random_map(rng, letters);
        auto p = random_poly(rng, letters);
        CHECK(apply_map(compose(a, b), p) == apply_map(a, apply_map(b, p)));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}
