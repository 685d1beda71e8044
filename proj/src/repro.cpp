#include "legch/repro.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "legch/error.hpp"
#include "legch/holonomy.hpp"
#include "legch/knots.hpp"
#include "legch/obstruction.hpp"
#include "legch/sampling.hpp"

namespace legch::repro {
namespace {

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        failed_ += !ok;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary(const std::string& success) const {
        if (ok()) return success;
        std::string out = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed: ";
        for (std::size_t i = 0; i < failures_.size(); ++i) out += (i ? "; " : "") + failures_[i];
        return out;
    }
    std::size_t checks() const { return checks_; }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

CriterionResult timed(int id, std::string name, double budget, const std::function<std::pair<bool, std::string>()>& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget = budget;
    auto start = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = body();
        r.passed = ok;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && budget > 0 && r.seconds > budget) {
        r.passed = false;
        std::ostringstream msg;
        msg << "over the " << budget << " s budget; " << r.detail;
        r.detail = msg.str();
    }
    return r;
}

Symbol S(const char* name) { return Symbol(name); }

std::string text(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
}

std::vector<Tangle> torus_tangles(const std::vector<int>& summands) {
    std::vector<Tangle> out;
    for (std::size_t i = 0; i < summands.size(); ++i)
        out.push_back(tangle_from_knot(torus_knot_dga(summands[i]), S("a2"), "k" + std::to_string(i + 1)));
    return out;
}

bool odd(const Count& c) { return (c % 2) == 1; }

}  // namespace

std::vector<std::vector<int>> summand_multisets() {
    const int base[] = {3, 7, 9};
    std::vector<std::vector<int>> out;
    for (int a = 0; a < 3; ++a) {
        out.push_back({base[a]});
        for (int b = a; b < 3; ++b) {
            out.push_back({base[a], base[b]});
            for (int c = b; c < 3; ++c) out.push_back({base[a], base[b], base[c]});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

std::vector<FibonacciRow> fibonacci_table(int max_n) {
    std::vector<FibonacciRow> rows;
    // F_0 .. F_{max_n + 1}
    std::vector<std::uint64_t> fib{0, 1};
    while (static_cast<int>(fib.size()) < max_n + 2) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (int n = 1; n <= max_n; ++n) {
        auto B = path_matrix(n);
        FibonacciRow row;
        row.n = n;
        row.lengths = {B(1, 1).length(), B(1, 2).length(), B(2, 1).length(), B(2, 2).length()};
        row.expected = {fib[n + 1], fib[n], fib[n], fib[n - 1]};
        row.match = true;
        for (int k = 0; k < 4; ++k) row.match = row.match && row.lengths[k] == row.expected[k];
        rows.push_back(row);
    }
    return rows;
}

CriterionResult trefoil_ground_truth() {
    return timed(1, "trefoil ground truth", 1e-3, [&] {
        auto B3 = path_matrix(3);
        auto D3 = torus_knot_dga(3);
        Checker c;
        auto same = [&](const Poly& p, const char* printed, const char* written) {
            c.expect(p.to_string() == printed, p.to_string() + " != " + printed);
            c.expect(Poly::parse(written).to_string() == printed, std::string("canonical form of ") + written);
        };
        same(B3(1, 1), "b1 + b3 + b1 b2 b3", "b1 + b3 + b1 b2 b3");
        same(B3(1, 2), "1 + b1 b2", "1 + b1 b2");
        same(B3(2, 1), "1 + b2 b3", "1 + b2 b3");
        same(B3(2, 2), "b2", "b2");
        same(D3.differential(S("a1")), "1 + b1 + b3 + b1 b2 b3", "1 + b1 + b3 + b1 b2 b3");
        same(D3.differential(S("a2")), "b2 + b1 b2 + b2 b3 + b2 b3 b1 b2", "b2 + b2 b3 + b1 b2 + b2 b3 b1 b2");
        return std::pair{c.ok(), c.summary("path matrix and differentials match character for character")};
    });
}

CriterionResult fibonacci_lemma() {
    return timed(2, "Fibonacci lemma", 10.0, [] {
        Checker c;
        for (const auto& row : fibonacci_table(20))
            c.expect(row.match, "n = " + std::to_string(row.n) + " lengths " + row.lengths[0].str() + "," +
                                    row.lengths[1].str() + "," + row.lengths[2].str() + "," + row.lengths[3].str());
        return std::pair{c.ok(), c.summary("entry lengths equal (F(n+1), F(n), F(n), F(n-1)) for n = 1..20")};
    });
}

CriterionResult even_class_criterion() {
    return timed(3, "even d-class of torus knots", 0, [] {
        Checker c;
        std::string evens;
        for (int n = 3; n <= 21; n += 2) {
            bool even = is_even_delta_class(torus_knot_dga(n)).even;
            c.expect(even == (n % 3 != 2), "n = " + std::to_string(n));
            if (even) evens += (evens.empty() ? "" : ",") + std::to_string(n);
        }
        return std::pair{c.ok(), c.summary("even exactly for n in {" + evens + "}")};
    });
}

CriterionResult connected_sum_algebra() {
    return timed(4, "connected-sum algebra", 5.0, [] {
        Checker c;
        for (const auto& summands : summand_multisets()) {
            auto tag = text(summands);
            auto tangles = torus_tangles(summands);
            auto sum = connect_sum(tangles, "a");
            std::vector<Poly> words;
            Count product = 1;
            bool all_have_unit = true;
            for (const auto& t : tangles) {
                words.push_back(t.word);
                product *= t.word.length();
                all_have_unit = all_have_unit && t.word.contains(Word{});
            }
            auto closure = sum.differential(S("a"));
            c.expect(closure == Poly::one() + Poly::lazy_product(words), tag + ": closure differential");
            auto len = closure.length();
            c.expect(len == Count(all_have_unit ? Count(product - 1) : Count(product + 1)), tag + ": closure length " + len.str());
            c.expect(len % 2 == 0, tag + ": closure length is odd");
            for (std::size_t i = 0; i < tangles.size(); ++i) {
                auto source = torus_knot_dga(summands[i]);
                auto prefix = tangles[i].prefix;
                for (auto g : {S("a1")}) {
                    auto original = source.differential(g).substitute(
                        [&](Symbol s) { return std::optional<Poly>(Poly::generator(s.prefixed(prefix))); });
                    c.expect(sum.differential(g.prefixed(prefix)) == original, tag + ": internal " + prefix + ".a1");
                }
                for (const auto& gen : tangles[i].internal.generators())
                    c.expect(sum.differential(gen.name) == tangles[i].internal.differential(gen.name),
                             tag + ": internal " + gen.name.str());
            }
            auto report = check_dga(sum);
            c.expect(report.ok(), tag + ": check_dga" + (report.ok() ? "" : " " + report.violations.front().detail));
        }
        return std::pair{c.ok(), c.summary(std::to_string(summand_multisets().size()) +
                                           " sums: closure = 1 + W1...Wk, even length, internals unchanged, valid")};
    });
}

CriterionResult tau_certificate() {
    return timed(5, "tau certificate", 0, [] {
        Checker c;
        Symbol b3("b3");
        for (const auto& summands : summand_multisets()) {
            auto tag = text(summands);
            auto fly = fly_tangle(summands);
            auto K = kalman_sum(fly);
            c.expect(K.differential(S("a1")).tau(b3) == 2, tag + ": tau(d a1)");
            c.expect(K.differential(S("a2")).tau(b3) == 2 * fly.word.length(), tag + ": tau(d a2)");
            c.expect(tau_parity_certificate(K, b3).ok, tag + ": certificate");
        }
        return std::pair{c.ok(), c.summary("tau_b3(d a1) = 2 and tau_b3(d a2) = 2 l(W) for every fly")};
    });
}

CriterionResult monodromy_verdicts() {
    return timed(6, "monodromy verdicts", 10.0, [] {
        Checker c;
        Count largest = 0;
        for (const auto& summands : summand_multisets()) {
            auto tag = text(summands);
            auto fam = family_verdicts(summands, {1, 2, 3});
            auto lw = fam.fly.word.length();
            for (const auto& row : fam.rows) {
                const auto& v = row.verdict;
                auto where = tag + " j=" + std::to_string(row.power);
                c.expect(odd(v.tau_value), where + ": tau " + v.tau_value.str() + " is even");
                c.expect(v.conclusion == Conclusion::Nontrivial, where + ": not certified");
                if (row.power == 1) c.expect(v.tau_value == 1, where + ": tau " + v.tau_value.str());
                if (row.power == 3) c.expect(v.tau_value == 2 * lw * lw + 1, where + ": tau " + v.tau_value.str());
                largest = std::max(largest, v.tau_value);
            }
        }
        return std::pair{c.ok(), c.summary("odd tau for j = 1, 2, 3; tau = 1 at j = 1, 2 l(W)^2 + 1 at j = 3 (max " +
                                           largest.str() + ")")};
    });
}

CriterionResult holonomy_rules() {
    return timed(7, "holonomy rules", 0, [] {
        Checker c;
        Generator x{S("x"), 1, {}}, y{S("y"), 0, {}}, z{S("z"), 0, {}}, p{S("p"), 0, {}};
        Dga state({x, y, z, p}, {{S("x"), Poly::parse("y + p z")}});
        auto inv = holonomy(RIIInv{S("x"), S("y"), {}}, state);
        c.expect(inv.map.image(S("x")).is_zero(), "RIIInv x -> 0");
        c.expect(inv.map.image(S("y")) == Poly::parse("p z"), "RIIInv y -> w");
        c.expect(inv.map.domain().size() == 2, "RIIInv moves only x and y");
        auto b = holonomy(RIIIb{S("z"), S("y"), S("p")}, state);
        c.expect(b.map.image(S("z")) == Poly::parse("z + p y"), "RIIIb x -> x + z y");
        c.expect(b.map.domain().size() == 1, "RIIIb moves only x");
        c.expect(holonomy(RIIIa{}, state).map == AlgebraMap::identity(), "RIIIa identity");

        sampling::Rng rng(7);
        int concatenations = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Generator> gens;
            for (auto g : sampling::alphabet(4)) gens.push_back({g, 0, {}});
            Dga initial(gens, {});
            int counter = 0;
            auto e1 = sampling::random_formal_events(rng, initial, 6, counter);
            auto m1 = run_script({initial, e1, ScriptMode::Formal});
            auto e2 = sampling::random_formal_events(rng, m1.final_state, 6, counter);
            auto m2 = run_script({m1.final_state, e2, ScriptMode::Formal});
            auto all = e1;
            all.insert(all.end(), e2.begin(), e2.end());
            auto m12 = run_script({initial, all, ScriptMode::Formal});
            c.expect(m12.map == restrict(compose(m2.map, m1.map), initial.names()),
                     "script " + std::to_string(trial) + ": run(s1 ++ s2) != compose");
            ++concatenations;
        }
        return std::pair{c.ok(), c.summary("RIIInv, RIIIb, RIIIa rules; homomorphism on " +
                                           std::to_string(concatenations) + " random formal scripts")};
    });
}

CriterionResult property_suite(int cases) {
    return timed(8, "property suite", 0, [cases] {
        Checker c;
        sampling::Rng rng(2024);
        auto letters = sampling::alphabet(4);

        for (int i = 0; i < cases; ++i) {
            auto p = sampling::random_poly(rng, letters);
            auto q = sampling::random_poly(rng, letters);
            auto r = sampling::random_poly(rng, letters);
            c.expect((p + p).is_zero(), "p + p = 0");
            c.expect(Poly::one() * p == p && p * Poly::one() == p, "unit");
            c.expect((p * q) * r == p * (q * r), "associativity");
            c.expect(p * (q + r) == p * q + p * r && (q + r) * p == q * p + r * p, "distributivity");
            c.expect((p + q) + r == p + (q + r) && p + q == q + p, "additive group");
        }

        for (int i = 0; i < cases; ++i) {
            auto m = sampling::random_map(rng, letters);
            auto p = sampling::random_poly(rng, letters);
            auto q = sampling::random_poly(rng, letters);
            c.expect(apply_map(m, p * q) == apply_map(m, p) * apply_map(m, q), "apply_map multiplicative");
            c.expect(apply_map(m, p + q) == apply_map(m, p) + apply_map(m, q), "apply_map additive");
            c.expect(apply_map(m, Poly::one()).is_one(), "apply_map unital");
        }

        std::uniform_int_distribution<int> num(1, 40), den(1, 12);
        for (int i = 0; i < cases; ++i) {
            std::vector<Generator> gens;
            for (auto g : letters) gens.push_back({g, 0, Rational(num(rng), den(rng))});
            Dga d(gens, {});
            auto rand_u = [&] {
                int b = den(rng);
                return Rational(std::uniform_int_distribution<int>(1, b)(rng), b);
            };
            auto u = rand_u(), v = rand_u();
            auto twice = shrink(shrink(d, u), v);
            auto once = shrink(d, u * v);
            bool same = true;
            for (auto g : letters) same = same && *twice.at(g).height == *once.at(g).height &&
                                          *once.at(g).height == *d.at(g).height * u * u * v * v;
            c.expect(same, "shrink composition");
        }

        auto fly_letters = sampling::alphabet(3, "f");
        auto renamed_letters = sampling::alphabet(3, "q.r");
        for (int i = 0; i < cases; ++i) {
            auto w = Poly::one() + sampling::random_poly(rng, fly_letters, 3, 2);
            std::vector<Symbol> image = renamed_letters;
            std::shuffle(image.begin(), image.end(), rng);
            AlgebraMap rename;
            for (std::size_t k = 0; k < fly_letters.size(); ++k) rename.assign(fly_letters[k], Poly::generator(image[k]));
            auto make = [](const std::vector<Symbol>& names, const Poly& word) {
                std::vector<Generator> gens;
                for (auto g : names) gens.push_back({g, 0, {}});
                return kalman_sum(Tangle{Dga(gens, {}), word, "fly"});
            };
            auto K = make(fly_letters, w);
            auto K2 = make(renamed_letters, rename.apply(w));
            int j = 1 + i % 3;
            auto v1 = verdict(K, kalman_monodromy(w, j), S("b3"), S("b3"));
            auto v2 = verdict(K2, kalman_monodromy(rename.apply(w), j), S("b3"), S("b3"));
            c.expect(v1.tau_value == v2.tau_value && v1.conclusion == v2.conclusion &&
                         v1.certificate_ok == v2.certificate_ok,
                     "verdict changes under renaming");
        }
        return std::pair{c.ok(), c.summary(std::to_string(cases) +
                                           " cases each: ring axioms, apply_map laws, shrink composition, "
                                           "renaming invariance of verdicts")};
    });
}

std::vector<CriterionResult> run_all() {
    return {trefoil_ground_truth(), fibonacci_lemma(), even_class_criterion(), connected_sum_algebra(),
            tau_certificate(),      monodromy_verdicts(), holonomy_rules(),     property_suite()};
}

std::string format(const CriterionResult& r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s";
    if (r.budget > 0) out << ", budget " << r.budget << " s";
    out << "): " << r.detail;
    return out.str();
}

}  // namespace legch::repro
