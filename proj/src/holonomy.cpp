#include "legch/holonomy.hpp"

#include <algorithm>
#include <set>

#include "legch/error.hpp"

namespace legch {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool mentions(const Poly& p, Symbol g) {
    auto m = p.mentioned_letters();
    if (std::find(m.begin(), m.end(), g) == m.end()) return false;
    auto l = p.letters();
    return std::find(l.begin(), l.end(), g) != l.end();
}

void require_declared(const Dga& state, Symbol g, const char* role) {
    if (!state.declares(g))
        throw Error(ErrorCode::UnknownGenerator, std::string(role) + " '" + g.str() + "' is not in the current state");
}

/// State with some generators dropped and a substitution applied to every
/// remaining differential.
Dga rewrite(const Dga& state, const std::vector<Symbol>& drop, const AlgebraMap& sub) {
    std::vector<Generator> gens;
    for (const auto& g : state.generators())
        if (std::find(drop.begin(), drop.end(), g.name) == drop.end()) gens.push_back(g);
    std::vector<std::pair<Symbol, Poly>> diffs;
    for (const auto& [g, d] : state.differential_entries())
        if (std::find(drop.begin(), drop.end(), g) == drop.end()) diffs.emplace_back(g, sub.apply(d));
    return Dga(std::move(gens), diffs, state.rotation_zero());
}

Step birth(const RII& e, const Dga& state, ScriptMode mode) {
    for (const auto* g : {&e.x, &e.y})
        if (state.declares(g->name))
            throw Error(ErrorCode::StaleEvent, "RII births '" + g->name.str() + "', which already exists");
    if (e.x.name == e.y.name) throw Error(ErrorCode::StaleEvent, "RII births the same generator twice");

    std::vector<Generator> gens = state.generators();
    gens.push_back(e.x);
    gens.push_back(e.y);
    auto diffs = state.differential_entries();
    for (const auto& [g, d] : e.differentials) {
        if (g != e.x.name && g != e.y.name) require_declared(state, g, "RII differential target");
        auto it = std::find_if(diffs.begin(), diffs.end(), [&](const auto& kv) { return kv.first == g; });
        if (it != diffs.end())
            it->second = d;
        else
            diffs.emplace_back(g, d);
    }
    Dga next(std::move(gens), diffs, state.rotation_zero());

    if (mode == ScriptMode::Verified) {
        for (const auto& p : state.generators()) {
            if (next.differential(p.name).is_zero()) continue;
            if (p.height && e.y.height && *p.height < *e.y.height) continue;
            throw Error(ErrorCode::RIIGeneralHolonomyUnsupported,
                        "generator '" + p.name.str() +
                            "' has a nonzero differential after the RII move and no height below h(" +
                            e.y.name.str() + ")");
        }
    }
    return {AlgebraMap::identity(), std::move(next)};
}

Step death(const RIIInv& e, const Dga& state, ScriptMode mode) {
    require_declared(state, e.x, "RIIInv x");
    require_declared(state, e.y, "RIIInv y");
    if (e.x == e.y) throw Error(ErrorCode::MalformedDifferential, "RIIInv needs two distinct generators");

    Poly w;
    if (mode == ScriptMode::Formal && e.w) {
        w = *e.w;
    } else {
        auto dx = state.differential(e.x);
        if (!dx.contains(Word{e.y}))
            throw Error(ErrorCode::MalformedDifferential,
                        "d(" + e.x.str() + ") = " + dx.to_string() + " does not contain the word " + e.y.str());
        w = dx + Poly::generator(e.y);
        if (e.w && !(*e.w == w))
            throw Error(ErrorCode::MalformedDifferential,
                        "given w does not match d(" + e.x.str() + ") - " + e.y.str() + " = " + w.to_string());
    }
    if (mentions(w, e.x) || mentions(w, e.y))
        throw Error(ErrorCode::MalformedDifferential, "w must not involve " + e.x.str() + " or " + e.y.str());

    AlgebraMap m;
    m.assign(e.x, Poly());
    m.assign(e.y, w);
    return {m, rewrite(state, {e.x, e.y}, m)};
}

Step triple_b(const RIIIb& e, const Dga& state, ScriptMode mode) {
    require_declared(state, e.x, "RIIIb x");
    require_declared(state, e.y, "RIIIb y");
    require_declared(state, e.z, "RIIIb z");
    if (mode == ScriptMode::Verified && e.x == e.y)
        throw Error(ErrorCode::InvalidArgument, "RIIIb needs x distinct from y");
    AlgebraMap m;
    m.assign(e.x, Poly::generator(e.x) + Poly::generator(e.z) * Poly::generator(e.y));
    return {m, rewrite(state, {}, m)};
}

Step relabel(const Relabel& e, const Dga& state) {
    AlgebraMap m;
    std::unordered_map<Symbol, Symbol> rename;
    for (const auto& [from, to] : e.perm) {
        require_declared(state, from, "Relabel source");
        if (!rename.emplace(from, to).second)
            throw Error(ErrorCode::InvalidArgument, "Relabel lists '" + from.str() + "' twice");
        m.assign(from, Poly::generator(to));
    }
    auto target = [&](Symbol g) {
        auto it = rename.find(g);
        return it == rename.end() ? g : it->second;
    };
    std::vector<Generator> gens;
    std::set<Symbol> seen;
    for (auto g : state.generators()) {
        g.name = target(g.name);
        if (!seen.insert(g.name).second)
            throw Error(ErrorCode::InvalidArgument, "Relabel is not a bijection: '" + g.name.str() + "' hit twice");
        gens.push_back(g);
    }
    std::vector<std::pair<Symbol, Poly>> diffs;
    for (const auto& [g, d] : state.differential_entries()) diffs.emplace_back(target(g), m.apply(d));
    return {m, Dga(std::move(gens), diffs, state.rotation_zero())};
}

std::set<Symbol> name_set(const Dga& d) {
    auto names = d.names();
    return {names.begin(), names.end()};
}

}  // namespace

const char* event_type(const MoveEvent& e) noexcept {
    static constexpr const char* names[] = {"RII", "RIIInv", "RIIIa", "RIIIb", "Relabel"};
    return names[e.index()];
}

const char* to_string(ScriptMode mode) noexcept { return mode == ScriptMode::Verified ? "verified" : "formal"; }

Step holonomy(const MoveEvent& event, const Dga& state, ScriptMode mode) {
    return std::visit(Overloaded{
                          [&](const RII& e) { return birth(e, state, mode); },
                          [&](const RIIInv& e) { return death(e, state, mode); },
                          [&](const RIIIa&) { return Step{AlgebraMap::identity(), state}; },
                          [&](const RIIIb& e) { return triple_b(e, state, mode); },
                          [&](const Relabel& e) { return relabel(e, state); },
                      },
                      event);
}

Monodromy run_script(const MoveScript& script) {
    AlgebraMap total;
    Dga state = script.initial;
    for (const auto& event : script.events) {
        auto step = holonomy(event, state, script.mode);
        total = compose(step.map, total);
        state = std::move(step.state);
    }

    Monodromy out;
    out.map = restrict(total, script.initial.names());
    out.endomorphism = name_set(script.initial) == name_set(state);
    if (!out.endomorphism && script.mode == ScriptMode::Verified)
        throw Error(ErrorCode::NotAnEndomorphism, "the final generator set differs from the initial one");
    out.degrees = check_degree_preserving(script.initial, state, out.map);
    if (!out.degrees.ok() && script.mode == ScriptMode::Verified) {
        const auto& v = out.degrees.violations.front();
        throw Error(ErrorCode::NotDegreePreserving, "image of '" + v.generator.str() + "' has a word of degree " +
                                                        std::to_string(v.found) + ", expected " +
                                                        std::to_string(v.expected));
    }
    out.final_state = std::move(state);
    return out;
}

FlyReport fly_fixed_check(const MoveScript& script, const std::vector<Symbol>& fly) {
    FlyReport report;
    Dga state = script.initial;
    for (std::size_t i = 0; i < script.events.size(); ++i) {
        Step step;
        try {
            step = holonomy(script.events[i], state, script.mode);
        } catch (const Error& e) {
            report.violations.push_back({i, Symbol(), std::string("script stopped: ") + e.what()});
            return report;
        }
        for (auto g : fly)
            if (step.map.moves(g))
                report.violations.push_back(
                    {i, g, std::string(event_type(script.events[i])) + " sends it to " + step.map.image(g).to_string()});
        state = std::move(step.state);
    }
    return report;
}

AlgebraMap kalman_monodromy(const Poly& fly_word, int j, const KalmanLabels& labels) {
    if (j < 1) throw Error(ErrorCode::InvalidArgument, "loop power must be at least 1");
    for (auto b : {labels.b1, labels.b2, labels.b3})
        if (mentions(fly_word, b))
            throw Error(ErrorCode::FlyCollision, "fly word mentions '" + b.str() + "'");
    // M^{k+1}(g) = M^k(M(g)), and M fixes the letters of W
    Poly i1 = Poly::generator(labels.b1);
    Poly i2 = Poly::generator(labels.b2);
    Poly i3 = Poly::generator(labels.b3);
    for (int k = 0; k < j; ++k) {
        Poly n1 = (Poly::one() + i1 * i2) * fly_word;
        Poly n2 = Poly::one() + i2 * i3;
        i3 = i1;
        i1 = std::move(n1);
        i2 = std::move(n2);
    }
    AlgebraMap out;
    out.assign(labels.b1, i1);
    out.assign(labels.b2, i2);
    out.assign(labels.b3, i3);
    return out;
}

}  // namespace legch
