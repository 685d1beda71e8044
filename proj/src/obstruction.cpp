#include "legch/obstruction.hpp"

#include "legch/error.hpp"
#include "legch/holonomy.hpp"
#include "legch/parallel.hpp"

namespace legch {
namespace {

void require_degree_zero(const Dga& dga, Symbol g, const char* role) {
    const auto* gen = dga.find(g);
    if (!gen || gen->degree != 0)
        throw Error(ErrorCode::NotDegreeZeroMarker,
                    std::string(role) + " '" + g.str() + "' is not a degree 0 generator of the DGA");
}

}  // namespace

Certificate tau_parity_certificate(const Dga& dga, Symbol marker) {
    require_degree_zero(dga, marker, "marker");
    Certificate cert;
    cert.marker = marker;
    for (const auto& g : dga.generators()) {
        if (g.degree != 1) continue;
        auto d = dga.differential(g.name);
        CertificateEntry e;
        e.generator = g.name;
        e.max_count = d.max_count(marker);
        e.tau = d.tau(marker);
        e.even = (e.tau % 2) == 0;
        cert.ok = cert.ok && e.even;
        cert.entries.push_back(std::move(e));
    }
    return cert;
}

const char* to_string(Conclusion c) noexcept { return c == Conclusion::Nontrivial ? "nontrivial" : "inconclusive"; }

Verdict verdict(const Dga& dga, const AlgebraMap& mu, Symbol witness, const Certificate& certificate) {
    require_degree_zero(dga, witness, "witness");
    require_degree_zero(dga, certificate.marker, "marker");
    Verdict v;
    v.witness = witness;
    v.marker = certificate.marker;
    v.image = mu.image(witness);
    v.tau_value = (v.image + Poly::generator(witness)).tau(v.marker);
    v.certificate_ok = certificate.ok;
    v.conclusion = v.certificate_ok && (v.tau_value % 2) == 1 ? Conclusion::Nontrivial : Conclusion::Inconclusive;
    v.certificate = certificate;
    return v;
}

Verdict verdict(const Dga& dga, const AlgebraMap& mu, Symbol witness, Symbol marker) {
    return verdict(dga, mu, witness, tau_parity_certificate(dga, marker));
}

Tangle fly_tangle(const std::vector<int>& summands) {
    if (summands.empty()) return Tangle::empty("fly");
    std::vector<Tangle> parts;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        int n = summands[i];
        if (n < 3 || n % 2 == 0 || n % 3 == 2)
            throw Error(ErrorCode::BadSummand, "summand " + std::to_string(n) +
                                                   " is not an odd n >= 3 with n mod 3 != 2");
        parts.push_back(tangle_from_knot(torus_knot_dga(n), Symbol("a2"), "k" + std::to_string(i + 1)));
    }
    return tangle_from_knot(connect_sum(parts, "a"), Symbol("a"), "fly");
}

Dga kalman_sum(const Tangle& fly) {
    return connect_sum({fly, tangle_from_knot(torus_knot_dga(3), Symbol("a2"), "")}, "a2");
}

FamilyResult family_verdicts(const std::vector<int>& summands, const std::set<int>& powers,
                             const FamilyOptions& options) {
    for (int j : powers)
        if (j < 1 || j > 3) throw Error(ErrorCode::BadPower, "power " + std::to_string(j) + " is outside {1, 2, 3}");
    FamilyResult out;
    out.summands = summands;
    out.fly = fly_tangle(summands);
    out.knot = kalman_sum(out.fly);
    auto cert = tau_parity_certificate(out.knot, options.marker);
    std::vector<int> js(powers.begin(), powers.end());
    out.rows.resize(js.size());
    parallel_for(
        js.size(),
        [&](std::size_t i) {
            out.rows[i].power = js[i];
            out.rows[i].verdict = verdict(out.knot, kalman_monodromy(out.fly.word, js[i]), options.witness, cert);
        },
        options.workers);
    return out;
}

}  // namespace legch
