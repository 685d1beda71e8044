#include "legch/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "legch/error.hpp"

namespace legch::io {
namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw Error(ErrorCode::SchemaError, what + " (schemas are described in docs/schemas.md)");
}

const Json& field(const Json& j, const char* key, const char* where) {
    if (!j.is_object()) schema_error(std::string(where) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string(where) + " is missing \"" + key + "\"");
    return *it;
}

std::string string_field(const Json& j, const char* key, const char* where) {
    const auto& v = field(j, key, where);
    if (!v.is_string()) schema_error(std::string(where) + "." + key + " must be a string");
    return v.get<std::string>();
}

void check_schema(const Json& j, const char* expected) {
    if (!j.is_object()) schema_error(std::string(expected) + " document must be a JSON object");
    auto it = j.find("schema");
    if (it != j.end() && (!it->is_string() || it->get<std::string>() != expected))
        schema_error("expected schema \"" + std::string(expected) + "\", found " + it->dump());
}

Symbol symbol_field(const Json& j, const char* key, const char* where) {
    return Symbol(string_field(j, key, where));
}

Poly poly_value(const Json& v, const std::string& where) {
    if (!v.is_string()) schema_error(where + " must be a polynomial string");
    return Poly::parse(v.get<std::string>());
}

Json rational_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_value(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        auto slash = s.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                auto n = std::stoll(s, &used);
                if (used == s.size()) return Rational(n);
            } else {
                auto num = s.substr(0, slash), den = s.substr(slash + 1);
                std::size_t u1 = 0, u2 = 0;
                auto n = std::stoll(num, &u1);
                auto d = std::stoll(den, &u2);
                if (u1 == num.size() && u2 == den.size() && d != 0) return Rational(n, d);
            }
        } catch (const std::logic_error&) {
        }
    }
    schema_error(where + " must be an integer or a \"p/q\" string");
}

Json generator_to_json(const Generator& g) {
    Json out;
    out["name"] = g.name.str();
    out["degree"] = g.degree;
    if (g.height) out["height"] = rational_json(*g.height);
    return out;
}

Generator generator_from_json(const Json& j, const char* where) {
    Generator g;
    g.name = symbol_field(j, "name", where);
    const auto& deg = field(j, "degree", where);
    if (!deg.is_number_integer()) schema_error(std::string(where) + ".degree must be an integer");
    g.degree = deg.get<int>();
    if (auto it = j.find("height"); it != j.end() && !it->is_null())
        g.height = rational_value(*it, std::string(where) + ".height");
    return g;
}

std::vector<std::pair<Symbol, Poly>> differentials_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) schema_error(where + " must be an object mapping names to polynomials");
    std::vector<std::pair<Symbol, Poly>> out;
    for (const auto& [k, v] : j.items()) out.emplace_back(Symbol(k), poly_value(v, where + "." + k));
    return out;
}

Json differentials_to_json(const std::vector<std::pair<Symbol, Poly>>& d) {
    Json out = Json::object();
    for (const auto& [g, p] : d) out[g.str()] = poly_text(p);
    return out;
}

}  // namespace

std::string poly_text(const Poly& p) {
    if (p.is_explicit()) return p.to_string();
    if (p.size_bound() <= static_cast<double>(kExpandedTextLimit) || p.length() <= kExpandedTextLimit)
        return p.expanded().to_string();
    return p.to_string();
}

Json count_json(const Count& c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
    return c.str();
}

Json dga_to_json(const Dga& dga) {
    Json out;
    out["schema"] = "dga.v1";
    Json gens = Json::array();
    for (const auto& g : dga.generators()) gens.push_back(generator_to_json(g));
    out["generators"] = std::move(gens);
    out["differential"] = differentials_to_json(dga.differential_entries());
    out["rotation_zero"] = dga.rotation_zero();
    return out;
}

Dga dga_from_json(const Json& j) {
    check_schema(j, "dga.v1");
    const auto& gens = field(j, "generators", "dga");
    if (!gens.is_array()) schema_error("dga.generators must be an array");
    std::vector<Generator> generators;
    for (const auto& g : gens) generators.push_back(generator_from_json(g, "dga.generators[]"));
    std::vector<std::pair<Symbol, Poly>> diffs;
    if (auto it = j.find("differential"); it != j.end()) diffs = differentials_from_json(*it, "dga.differential");
    bool rotation_zero = true;
    if (auto it = j.find("rotation_zero"); it != j.end()) {
        if (!it->is_boolean()) schema_error("dga.rotation_zero must be a boolean");
        rotation_zero = it->get<bool>();
    }
    return Dga(std::move(generators), diffs, rotation_zero);
}

Json tangle_to_json(const Tangle& t) {
    Json out;
    out["schema"] = "tangle.v1";
    out["prefix"] = t.prefix;
    out["word"] = poly_text(t.word);
    Json internal = dga_to_json(t.internal);
    internal.erase("schema");
    out["internal"] = std::move(internal);
    return out;
}

Tangle tangle_from_json(const Json& j) {
    check_schema(j, "tangle.v1");
    Tangle t;
    t.prefix = string_field(j, "prefix", "tangle");
    t.word = poly_value(field(j, "word", "tangle"), "tangle.word");
    t.internal = dga_from_json(field(j, "internal", "tangle"));
    return t;
}

Json event_to_json(const MoveEvent& e) {
    Json out;
    out["type"] = event_type(e);
    if (const auto* r = std::get_if<RII>(&e)) {
        out["x"] = generator_to_json(r->x);
        out["y"] = generator_to_json(r->y);
        out["differentials"] = differentials_to_json(r->differentials);
    } else if (const auto* r = std::get_if<RIIInv>(&e)) {
        out["x"] = r->x.str();
        out["y"] = r->y.str();
        if (r->w) out["w"] = poly_text(*r->w);
    } else if (const auto* r = std::get_if<RIIIb>(&e)) {
        out["x"] = r->x.str();
        out["y"] = r->y.str();
        out["z"] = r->z.str();
    } else if (const auto* r = std::get_if<Relabel>(&e)) {
        Json perm = Json::object();
        for (const auto& [from, to] : r->perm) perm[from.str()] = to.str();
        out["perm"] = std::move(perm);
    }
    return out;
}

MoveEvent event_from_json(const Json& j) {
    auto type = string_field(j, "type", "event");
    if (type == "RII") {
        RII e;
        e.x = generator_from_json(field(j, "x", "RII"), "RII.x");
        e.y = generator_from_json(field(j, "y", "RII"), "RII.y");
        if (auto it = j.find("differentials"); it != j.end())
            e.differentials = differentials_from_json(*it, "RII.differentials");
        return e;
    }
    if (type == "RIIInv") {
        RIIInv e{symbol_field(j, "x", "RIIInv"), symbol_field(j, "y", "RIIInv"), std::nullopt};
        if (auto it = j.find("w"); it != j.end() && !it->is_null()) e.w = poly_value(*it, "RIIInv.w");
        return e;
    }
    if (type == "RIIIa") return RIIIa{};
    if (type == "RIIIb")
        return RIIIb{symbol_field(j, "x", "RIIIb"), symbol_field(j, "y", "RIIIb"), symbol_field(j, "z", "RIIIb")};
    if (type == "Relabel") {
        const auto& perm = field(j, "perm", "Relabel");
        if (!perm.is_object()) schema_error("Relabel.perm must be an object mapping old names to new names");
        Relabel e;
        for (const auto& [from, to] : perm.items()) {
            if (!to.is_string()) schema_error("Relabel.perm." + from + " must be a string");
            e.perm.emplace_back(Symbol(from), Symbol(to.get<std::string>()));
        }
        return e;
    }
    schema_error("unknown event type \"" + type + "\"");
}

Json script_to_json(const MoveScript& s) {
    Json out;
    out["schema"] = "script.v1";
    Json initial = dga_to_json(s.initial);
    initial.erase("schema");
    out["initial"] = std::move(initial);
    out["mode"] = to_string(s.mode);
    Json events = Json::array();
    for (const auto& e : s.events) events.push_back(event_to_json(e));
    out["events"] = std::move(events);
    return out;
}

MoveScript script_from_json(const Json& j) {
    check_schema(j, "script.v1");
    MoveScript s;
    s.initial = dga_from_json(field(j, "initial", "script"));
    auto mode = j.contains("mode") ? string_field(j, "mode", "script") : std::string("verified");
    if (mode == "verified")
        s.mode = ScriptMode::Verified;
    else if (mode == "formal")
        s.mode = ScriptMode::Formal;
    else
        schema_error("script.mode must be \"verified\" or \"formal\"");
    const auto& events = field(j, "events", "script");
    if (!events.is_array()) schema_error("script.events must be an array");
    for (const auto& e : events) s.events.push_back(event_from_json(e));
    return s;
}

Json map_to_json(const AlgebraMap& m) {
    Json out = Json::object();
    for (auto g : m.domain()) out[g.str()] = poly_text(m.image(g));
    return out;
}

AlgebraMap map_from_json(const Json& j) {
    AlgebraMap m;
    for (const auto& [g, p] : differentials_from_json(j, "map")) m.assign(g, p);
    return m;
}

Json monodromy_to_json(const Monodromy& m, ScriptMode mode) {
    Json out;
    out["schema"] = "monodromy.v1";
    out["mode"] = to_string(mode);
    out["endomorphism"] = m.endomorphism;
    out["map"] = map_to_json(m.map);
    Json violations = Json::array();
    for (const auto& v : m.degrees.violations)
        violations.push_back(
            {{"generator", v.generator.str()}, {"expected", v.expected}, {"found", v.found}, {"example", to_string(v.example)}});
    out["degree_violations"] = std::move(violations);
    Json state = dga_to_json(m.final_state);
    state.erase("schema");
    out["final_state"] = std::move(state);
    return out;
}

Json certificate_to_json(const Certificate& c) {
    Json entries = Json::array();
    for (const auto& e : c.entries)
        entries.push_back({{"generator", e.generator.str()},
                           {"max_count", e.max_count},
                           {"tau", count_json(e.tau)},
                           {"even", e.even}});
    return {{"marker", c.marker.str()}, {"ok", c.ok}, {"entries", std::move(entries)}};
}

Json verdict_to_json(const Verdict& v) {
    Json out;
    out["witness"] = v.witness.str();
    out["marker"] = v.marker.str();
    out["tau_value"] = count_json(v.tau_value);
    out["certificate_ok"] = v.certificate_ok;
    out["conclusion"] = to_string(v.conclusion);
    out["image"] = poly_text(v.image);
    out["certificate"] = certificate_to_json(v.certificate);
    return out;
}

Json family_to_json(const FamilyResult& f) {
    Json out;
    out["schema"] = "verdict.v1";
    out["fly"] = f.summands;
    out["fly_word_length"] = count_json(f.fly.word.length());
    Json rows = Json::array();
    for (const auto& r : f.rows) {
        Json row;
        row["power"] = r.power;
        auto fields = verdict_to_json(r.verdict);
        for (auto& [k, v] : fields.items()) row[k] = v;
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

Json validation_to_json(const ValidationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"kind", to_string(v.kind)}, {"generator", v.generator.str()}, {"detail", v.detail}});
    return {{"valid", r.ok()}, {"violations", std::move(violations)}, {"skipped", r.skipped}};
}

Json class_report_to_json(const ClassReport& r) { return {{"even_delta_class", r.even}, {"failures", r.failures}}; }

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "'" + source + "' is not valid JSON: " + e.what());
    }
}

Json read_json(const std::string& path) { return parse_json(read_text(path), path == "-" ? "<stdin>" : path); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace legch::io
