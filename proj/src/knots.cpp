#include "legch/knots.hpp"

#include <set>

#include "legch/error.hpp"

namespace legch {
namespace {

Symbol braid_generator(int i) { return Symbol("b" + std::to_string(i)); }

AlgebraMap prefix_map(const Dga& dga, const std::string& prefix) {
    AlgebraMap m;
    if (prefix.empty()) return m;
    for (const auto& g : dga.generators()) m.assign(g.name, Poly::generator(g.name.prefixed(prefix)));
    return m;
}

}  // namespace

PathMatrix path_matrix(int n) {
    if (n < 1) throw Error(ErrorCode::TooSmall, "path matrix needs n >= 1");
    // B^{k+1} = B^k [[b, 1], [1, 0]] = [[B11 b + B12, B11], [B21 b + B22, B21]]
    PathMatrix m;
    auto b1 = Poly::generator(braid_generator(1));
    m.entry = {{{b1, Poly::one()}, {Poly::one(), Poly()}}};
    for (int k = 2; k <= n; ++k) {
        auto b = Poly::generator(braid_generator(k));
        PathMatrix next;
        next.entry[0][0] = m.entry[0][0] * b + m.entry[0][1];
        next.entry[0][1] = m.entry[0][0];
        next.entry[1][0] = m.entry[1][0] * b + m.entry[1][1];
        next.entry[1][1] = m.entry[1][0];
        m = std::move(next);
    }
    return m;
}

Dga torus_knot_dga(int n) {
    if (n % 2 == 0) throw Error(ErrorCode::EvenParameter, "(n,2) torus closure is a link for even n");
    if (n < 3) throw Error(ErrorCode::TooSmall, "torus knot builder needs n >= 3");
    auto B = path_matrix(n);
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({braid_generator(i), 0, std::nullopt});
    Symbol a1("a1"), a2("a2");
    gens.push_back({a1, 1, std::nullopt});
    gens.push_back({a2, 1, std::nullopt});
    return Dga(std::move(gens),
               {{a1, Poly::one() + B(1, 1)}, {a2, Poly::one() + B(2, 2) + B(2, 1) * B(1, 2)}},
               /*rotation_zero=*/true);
}

Tangle Tangle::empty(std::string prefix) { return Tangle{Dga(), Poly::one(), std::move(prefix)}; }

Tangle tangle_from_knot(const Dga& dga, Symbol closure, const std::string& prefix) {
    if (!prefix.empty() && !is_valid_name(prefix))
        throw Error(ErrorCode::InvalidArgument, "invalid prefix '" + prefix + "'");
    const auto& c = dga.at(closure);
    if (c.degree != 1)
        throw Error(ErrorCode::NotDegreeOne, "closure crossing '" + closure.str() + "' has degree " +
                                                 std::to_string(c.degree));
    for (const auto& [g, d] : dga.differential_entries()) {
        if (g == closure) continue;
        auto mentioned = d.mentioned_letters();
        if (std::find(mentioned.begin(), mentioned.end(), closure) == mentioned.end()) continue;
        auto letters = d.letters();
        if (std::find(letters.begin(), letters.end(), closure) != letters.end())
            throw Error(ErrorCode::ClosureReferenced,
                        "differential of '" + g.str() + "' mentions closure crossing '" + closure.str() + "'");
    }

    auto rename = prefix_map(dga, prefix);
    std::vector<Generator> gens;
    std::vector<std::pair<Symbol, Poly>> diffs;
    for (const auto& g : dga.generators()) {
        if (g.name == closure) continue;
        gens.push_back({g.name.prefixed(prefix), g.degree, g.height});
    }
    for (const auto& [g, d] : dga.differential_entries()) {
        if (g == closure) continue;
        diffs.emplace_back(g.prefixed(prefix), rename.apply(d));
    }
    Tangle t;
    t.internal = Dga(std::move(gens), diffs, dga.rotation_zero());
    t.word = rename.apply(dga.differential(closure) + Poly::one());
    t.prefix = prefix;
    return t;
}

Dga connect_sum(const std::vector<Tangle>& tangles, const std::string& closure_name) {
    if (tangles.empty()) throw Error(ErrorCode::EmptyList, "connected sum of no tangles");
    std::set<std::string> prefixes;
    for (const auto& t : tangles)
        if (!prefixes.insert(t.prefix).second)
            throw Error(ErrorCode::PrefixCollision, "prefix '" + t.prefix + "' used by two tangles");

    std::vector<Generator> gens;
    std::vector<std::pair<Symbol, Poly>> diffs;
    bool rotation_zero = true;
    Poly closure_word = Poly::one();
    for (const auto& t : tangles) {
        gens.insert(gens.end(), t.internal.generators().begin(), t.internal.generators().end());
        auto entries = t.internal.differential_entries();
        diffs.insert(diffs.end(), entries.begin(), entries.end());
        rotation_zero = rotation_zero && t.internal.rotation_zero();
        closure_word = closure_word * t.word;
    }
    Symbol a(closure_name);
    gens.push_back({a, 1, std::nullopt});
    diffs.emplace_back(a, Poly::one() + closure_word);
    return Dga(std::move(gens), diffs, rotation_zero);
}

ClassReport is_even_delta_class(const Dga& dga) {
    ClassReport r;
    if (!dga.rotation_zero()) r.failures.push_back("rotation number is nonzero");
    for (const auto& g : dga.generators()) {
        if (g.degree < 0) r.failures.push_back("generator '" + g.name.str() + "' has negative degree");
        if (g.degree == 1) {
            auto len = dga.differential(g.name).length();
            if (len % 2 != 0) r.failures.push_back("differential of '" + g.name.str() + "' has odd length " + len.str());
        }
    }
    r.even = r.failures.empty();
    return r;
}

std::array<std::uint64_t, 4> fibonacci_lengths(int n) {
    if (n < 1) throw Error(ErrorCode::TooSmall, "fibonacci_lengths needs n >= 1");
    if (n > 90) throw Error(ErrorCode::TooLarge, "Fibonacci numbers beyond F_91 overflow 64 bits");
    std::uint64_t prev = 0, cur = 1;  // F_0, F_1
    for (int i = 1; i < n; ++i) {
        auto next = prev + cur;
        prev = cur;
        cur = next;
    }
    // cur = F_n, prev = F_{n-1}
    return {cur + prev, cur, cur, prev};
}

}  // namespace legch
