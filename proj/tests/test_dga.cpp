#include <set>

#include "doctest.h"
#include "legch/dga.hpp"
#include "legch/error.hpp"

using namespace legch;

namespace {
Poly P(const char* text) { return Poly::parse(text); }
Symbol S(const char* name) { return Symbol(name); }

Dga trefoil() {
    std::vector<Generator> gens{{S("b1"), 0, {}}, {S("b2"), 0, {}}, {S("b3"), 0, {}}, {S("a1"), 1, {}}, {S("a2"), 1, {}}};
    return Dga(gens, {{S("a1"), P("1 + b1 + b3 + b1 b2 b3")}, {S("a2"), P("b2 + b2 b3 + b1 b2 + b2 b3 b1 b2")}});
}

bool has(const ValidationReport& r, ViolationKind kind, Symbol g) {
    for (const auto& v : r.violations)
        if (v.kind == kind && v.generator == g) return true;
    return false;
}
}  // namespace

TEST_CASE("word_degree") {
    auto d = trefoil();
    CHECK(word_degree(d, {}) == 0);
    CHECK(word_degree(d, {S("b1"), S("b2"), S("b3")}) == 0);
    CHECK(word_degree(d, {S("a1"), S("b2")}) == 1);
    CHECK_THROWS_AS(word_degree(d, {S("zz")}), Error);
}

TEST_CASE("degree_from_rotation") {
    CHECK(degree_from_rotation(Rational(-1, 4)) == 0);
    CHECK(degree_from_rotation(Rational(-3, 4)) == 1);
    CHECK(degree_from_rotation(Rational(1, 4)) == -1);
    CHECK_THROWS_WITH_AS(degree_from_rotation(Rational(1, 2)), doctest::Contains("NotQuarterOdd"), Error);
    CHECK_THROWS_AS(degree_from_rotation(Rational(0)), Error);

    std::set<int> seen;
    for (int k = -10; k <= 10; ++k) CHECK(seen.insert(degree_from_rotation(Rational(2 * k + 1, 4))).second);
    for (int deg = -11; deg <= 9; ++deg) CHECK(seen.count(deg) == 1);
}

TEST_CASE("check_dga") {
    CHECK(check_dga(trefoil()).ok());
    CHECK_FALSE(check_dga(trefoil()).skipped.empty());

    Dga loop({{S("a"), 1, {}}}, {{S("a"), P("a")}});
    CHECK(has(check_dga(loop), ViolationKind::DegreeDrop, S("a")));

    Dga action({{S("x"), 0, Rational(2)}, {S("y"), 1, Rational(1)}}, {{S("y"), P("x")}});
    auto r = check_dga(action);
    CHECK(has(r, ViolationKind::ActionNotDecreasing, S("y")));
    CHECK(r.violations.size() == 1);

    Dga undeclared({{S("a"), 1, {}}}, {{S("a"), P("q")}});
    CHECK(has(check_dga(undeclared), ViolationKind::UndeclaredGenerator, S("a")));

    Dga dd({{S("x"), 0, {}}, {S("y"), 1, {}}, {S("z"), 2, {}}}, {{S("y"), P("x")}, {S("z"), P("y")}});
    CHECK(has(check_dga(dd), ViolationKind::DSquaredNonzero, S("z")));

    Dga rot({{S("x"), 0, {}}}, {}, false);
    CHECK(has(check_dga(rot), ViolationKind::RotationNonzero, Symbol()));
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_WITH_AS(Dga({{S("a"), 0, {}}, {S("a"), 1, {}}}, {}), doctest::Contains("DuplicateGenerator"), Error);
    CHECK_THROWS_AS(Dga({{S("a"), 0, Rational(0)}}, {}), Error);
    CHECK_THROWS_WITH_AS(Dga({{S("a"), 0, {}}}, {{S("b"), P("a")}}), doctest::Contains("UnknownGenerator"), Error);
}

TEST_CASE("shrink") {
    Dga d({{S("c"), 1, Rational(8)}, {S("x"), 0, Rational(3)}}, {{S("c"), P("x")}});
    CHECK(*shrink(d, Rational(1)).at(S("c")).height == Rational(8));
    CHECK(*shrink(d, Rational(1, 2)).at(S("c")).height == Rational(2));
    auto twice = shrink(shrink(d, Rational(2, 3)), Rational(3, 5));
    auto once = shrink(d, Rational(2, 5));
    for (auto g : {S("c"), S("x")}) CHECK(*twice.at(g).height == *once.at(g).height);
    CHECK(check_dga(shrink(d, Rational(1, 7))).ok());
    CHECK_THROWS_WITH_AS(shrink(trefoil(), Rational(1, 2)), doctest::Contains("MissingHeights"), Error);
    CHECK_THROWS_AS(shrink(d, Rational(0)), Error);
    CHECK_THROWS_AS(shrink(d, Rational(3, 2)), Error);
}

TEST_CASE("apply_endomorphism") {
    auto d = trefoil();
    CHECK(apply_endomorphism(d, AlgebraMap::identity()).ok());
    AlgebraMap m;
    m.assign("b3", "b1");
    CHECK(apply_endomorphism(d, m).ok());
    AlgebraMap bad;
    bad.assign("b1", "a1");
    auto r = apply_endomorphism(d, bad);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].generator == S("b1"));
    CHECK(r.violations[0].expected == 0);
    CHECK(r.violations[0].found == 1);
    AlgebraMap stray;
    stray.assign("b1", "q");
    CHECK_THROWS_WITH_AS(apply_endomorphism(d, stray), doctest::Contains("UnknownGenerator"), Error);
    AlgebraMap outside;
    outside.assign("q", "b1");
    CHECK_THROWS_AS(apply_endomorphism(d, outside), Error);
}
