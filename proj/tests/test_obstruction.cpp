#include "doctest.h"
#include "legch/error.hpp"
#include "legch/holonomy.hpp"
#include "legch/obstruction.hpp"
#include "legch/parallel.hpp"
#include "random_poly.hpp"

using namespace legch;

namespace {
Poly P(const char* text) { return Poly::parse(text); }
Symbol S(const char* name) { return Symbol(name); }
}  // namespace

TEST_CASE("certificate on the trefoil and on a sum") {
    auto tref = tau_parity_certificate(torus_knot_dga(3), S("b3"));
    CHECK(tref.ok);
    REQUIRE(tref.entries.size() == 2);
    CHECK(tref.entries[0].tau == 2);
    CHECK(tref.entries[1].tau == 2);

    auto fly = fly_tangle({7});
    auto K = kalman_sum(fly);
    auto cert = tau_parity_certificate(K, S("b3"));
    CHECK(cert.ok);
    for (const auto& e : cert.entries) {
        if (e.generator == S("a1")) CHECK(e.tau == 2);
        if (e.generator == S("a2")) CHECK(e.tau == 2 * fly.word.length());
    }

    Dga odd({{S("b3"), 0, {}}, {S("c"), 1, {}}}, {{S("c"), P("b3")}});
    CHECK_FALSE(tau_parity_certificate(odd, S("b3")).ok);
    CHECK_THROWS_WITH_AS(tau_parity_certificate(odd, S("c")), doctest::Contains("NotDegreeZeroMarker"), Error);
}

TEST_CASE("verdicts") {
    auto fly = fly_tangle({3});
    auto K = kalman_sum(fly);
    auto lw = fly.word.length();
    auto v1 = verdict(K, kalman_monodromy(fly.word, 1), S("b3"), S("b3"));
    CHECK(v1.image == P("b1"));
    CHECK(v1.tau_value == 1);
    CHECK(v1.conclusion == Conclusion::Nontrivial);
    auto v3 = verdict(K, kalman_monodromy(fly.word, 3), S("b3"), S("b3"));
    CHECK(v3.tau_value == 2 * lw * lw + 1);
    CHECK(v3.conclusion == Conclusion::Nontrivial);
    auto id = verdict(K, AlgebraMap::identity(), S("b3"), S("b3"));
    CHECK(id.tau_value == 0);
    CHECK(id.conclusion == Conclusion::Inconclusive);
    CHECK_THROWS_WITH_AS(verdict(K, AlgebraMap::identity(), S("a1"), S("b3")), doctest::Contains("NotDegreeZeroMarker"),
                         Error);
}

TEST_CASE("family verdicts") {
    auto fam = family_verdicts({3}, {1, 2, 3});
    REQUIRE(fam.rows.size() == 3);
    for (const auto& row : fam.rows) CHECK(row.verdict.conclusion == Conclusion::Nontrivial);

    auto two = family_verdicts({3, 3}, {2});
    CHECK(two.rows[0].verdict.tau_value == 1);
    CHECK(two.rows[0].verdict.image == two.fly.word + P("b1 b2") * two.fly.word);

    CHECK_THROWS_WITH_AS(family_verdicts({5}, {1}), doctest::Contains("BadSummand"), Error);
    CHECK_THROWS_WITH_AS(family_verdicts({4}, {1}), doctest::Contains("BadSummand"), Error);
    CHECK_THROWS_WITH_AS(family_verdicts({3}, {4}), doctest::Contains("BadPower"), Error);

    auto empty = family_verdicts({}, {1, 3});
    CHECK(empty.fly.word.is_one());
    CHECK(empty.rows[1].verdict.tau_value == 3);
}

TEST_CASE("verdict values agree with a brute-force expansion") {
    // (summands, j, tau, number of words of mu(b3) + b3), from a set-based reference implementation
    struct Row {
        std::vector<int> summands;
        int j;
        int tau;
        int words;
    };
    const Row rows[] = {{{3}, 1, 1, 2},      {{3}, 2, 1, 11},       {{3}, 3, 51, 86},
                        {{3, 3}, 1, 1, 2},   {{3, 3}, 2, 1, 51},    {{3, 3}, 3, 1251, 2376}};
    for (const auto& r : rows) {
        auto fam = family_verdicts(r.summands, {r.j});
        const auto& v = fam.rows[0].verdict;
        CHECK(v.tau_value == r.tau);
        auto diff = (v.image + P("b3")).expanded();
        CHECK(diff.length() == r.words);
        CHECK(legch::testing::naive_tau(diff, S("b3")).second == static_cast<std::size_t>(r.tau));
    }
}

TEST_CASE("verdicts do not depend on the fly namespace") {
    auto fly = fly_tangle({3, 7});
    auto K = kalman_sum(fly);
    auto renamed_fly = fly;
    AlgebraMap rename;
    for (auto g : fly.word.letters()) rename.assign(g, Poly::generator(Symbol(g.str() + "_r")));
    renamed_fly.word = rename.apply(fly.word);
    for (int j = 1; j <= 3; ++j) {
        auto a = verdict(K, kalman_monodromy(fly.word, j), S("b3"), S("b3"));
        auto mu = kalman_monodromy(renamed_fly.word, j);
        CHECK(a.tau_value == (mu.image(S("b3")) + P("b3")).tau(S("b3")));
    }
}

TEST_CASE("parallel_for") {
    std::vector<int> out(50);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i) * 2; }, 4);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 2);
    CHECK_THROWS(parallel_for(10, [](std::size_t i) { if (i == 3) throw std::runtime_error("x"); }, 3));
}
