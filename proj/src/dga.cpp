#include "legch/dga.hpp"

#include <algorithm>

#include "legch/error.hpp"

namespace legch {

Dga::Dga(std::vector<Generator> generators, const std::vector<std::pair<Symbol, Poly>>& differential,
         bool rotation_zero)
    : generators_(std::move(generators)), rotation_zero_(rotation_zero) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (!index_.emplace(g.name, i).second)
            throw Error(ErrorCode::DuplicateGenerator, "generator '" + g.name.str() + "' declared twice");
        if (g.height && *g.height <= 0)
            throw Error(ErrorCode::InvalidArgument, "height of '" + g.name.str() + "' must be positive");
    }
    for (const auto& [g, d] : differential) {
        if (!declares(g))
            throw Error(ErrorCode::UnknownGenerator, "differential given for undeclared generator '" + g.str() + "'");
        if (d.is_explicit() && d.is_zero())
            differential_.erase(g);
        else
            differential_.insert_or_assign(g, d);
    }
}

std::vector<Symbol> Dga::names() const {
    std::vector<Symbol> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(g.name);
    return out;
}

const Generator* Dga::find(Symbol g) const {
    auto it = index_.find(g);
    return it == index_.end() ? nullptr : &generators_[it->second];
}

const Generator& Dga::at(Symbol g) const {
    if (const auto* gen = find(g)) return *gen;
    throw Error(ErrorCode::UnknownGenerator, "generator '" + g.str() + "' is not declared");
}

Poly Dga::differential(Symbol g) const {
    auto it = differential_.find(g);
    return it == differential_.end() ? Poly() : it->second;
}

bool Dga::has_all_heights() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Generator& g) { return g.height.has_value(); });
}

std::vector<std::pair<Symbol, Poly>> Dga::differential_entries() const {
    std::vector<std::pair<Symbol, Poly>> out;
    for (const auto& g : generators_) {
        auto it = differential_.find(g.name);
        if (it != differential_.end()) out.emplace_back(g.name, it->second);
    }
    return out;
}

const char* to_string(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::UndeclaredGenerator: return "undeclared-generator";
        case ViolationKind::DegreeDrop: return "degree-drop";
        case ViolationKind::DSquaredNonzero: return "d-squared-nonzero";
        case ViolationKind::ActionNotDecreasing: return "action";
        case ViolationKind::RotationNonzero: return "rotation";
    }
    return "unknown";
}

int word_degree(const Dga& dga, const Word& w) {
    int total = 0;
    for (auto s : w) total += dga.at(s).degree;
    return total;
}

int degree_from_rotation(Rational r) {
    Rational four_r = r * 4;
    if (four_r.denominator() != 1 || four_r.numerator() % 2 == 0)
        throw Error(ErrorCode::NotQuarterOdd, "rotation " + std::to_string(r.numerator()) + "/" +
                                                  std::to_string(r.denominator()) + " is not of the form (2k+1)/4");
    Rational degree = -2 * r - Rational(1, 2);
    return static_cast<int>(degree.numerator());
}

namespace {

std::vector<Symbol> undeclared_letters(const Dga& dga, const Poly& p) {
    std::vector<Symbol> out;
    bool suspicious = false;
    for (auto s : p.mentioned_letters())
        if (!dga.declares(s)) suspicious = true;
    if (!suspicious) return out;
    for (auto s : p.letters())
        if (!dga.declares(s)) out.push_back(s);
    return out;
}

std::string rational_text(Rational r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

ValidationReport check_dga(const Dga& dga) {
    ValidationReport report;
    if (!dga.rotation_zero())
        report.violations.push_back({ViolationKind::RotationNonzero, Symbol(),
                                     "rotation number is nonzero; the grading is not well defined"});

    const bool heights = dga.has_all_heights();
    if (!heights) report.skipped.push_back("action check skipped: not every generator has a height");

    auto degree = [&](Symbol s) -> std::int64_t { return dga.at(s).degree; };
    auto height = [&](Symbol s) -> Rational { return *dga.at(s).height; };
    auto d = [&](Symbol s) -> std::optional<Poly> {
        if (!dga.declares(s)) return std::nullopt;
        auto p = dga.differential(s);
        if (p.is_explicit() && p.is_zero()) return std::nullopt;
        return p;
    };

    for (const auto& [g, dg] : dga.differential_entries()) {
        const auto& gen = dga.at(g);
        auto missing = undeclared_letters(dga, dg);
        if (!missing.empty()) {
            std::string names;
            for (auto s : missing) names += (names.empty() ? "" : ", ") + s.str();
            report.violations.push_back({ViolationKind::UndeclaredGenerator, g, "differential mentions " + names});
            continue;
        }

        for (const auto& [deg, count] : dg.weight_profile(degree)) {
            if (deg == gen.degree - 1) continue;
            auto example = dg.example_word(degree, deg);
            report.violations.push_back(
                {ViolationKind::DegreeDrop, g,
                 count.str() + " word(s) of degree " + std::to_string(deg) + " in a differential of a degree " +
                     std::to_string(gen.degree) + " generator, e.g. '" + (example ? to_string(*example) : "?") + "'"});
        }

        auto dd = dg.derive(d);
        if (!dd.is_zero()) {
            report.violations.push_back(
                {ViolationKind::DSquaredNonzero, g, "d(d(" + g.str() + ")) has " + dd.length().str() + " word(s)"});
        }

        if (heights) {
            auto top = dg.max_weight(height);
            if (top && !(*top < *gen.height)) {
                report.violations.push_back({ViolationKind::ActionNotDecreasing, g,
                                             "a word of total height " + rational_text(*top) +
                                                 " appears in the differential of a generator of height " +
                                                 rational_text(*gen.height)});
            }
        }
    }
    return report;
}

Dga shrink(const Dga& dga, Rational u) {
    if (!(u > 0 && u <= 1)) throw Error(ErrorCode::InvalidArgument, "shrinking factor must lie in (0, 1]");
    if (!dga.has_all_heights()) throw Error(ErrorCode::MissingHeights, "shrinking needs a height on every generator");
    auto gens = dga.generators();
    for (auto& g : gens) g.height = *g.height * u * u;
    return Dga(std::move(gens), dga.differential_entries(), dga.rotation_zero());
}

DegreeReport check_degree_preserving(const Dga& source, const Dga& target, const AlgebraMap& m) {
    DegreeReport report;
    auto degree = [&](Symbol s) -> std::int64_t { return target.at(s).degree; };
    for (const auto& gen : source.generators()) {
        auto image = m.image(gen.name);
        auto missing = undeclared_letters(target, image);
        if (!missing.empty())
            throw Error(ErrorCode::UnknownGenerator, "image of '" + gen.name.str() +
                                                         "' mentions undeclared generator '" + missing.front().str() + "'");
        for (const auto& [deg, count] : image.weight_profile(degree)) {
            if (deg == gen.degree) continue;
            auto example = image.example_word(degree, deg);
            report.violations.push_back({gen.name, gen.degree, static_cast<int>(deg), example.value_or(Word{})});
        }
    }
    return report;
}

DegreeReport apply_endomorphism(const Dga& dga, const AlgebraMap& m) {
    for (auto g : m.domain())
        if (!dga.declares(g))
            throw Error(ErrorCode::UnknownGenerator, "map assigns undeclared generator '" + g.str() + "'");
    return check_degree_preserving(dga, dga, m);
}

}  // namespace legch
