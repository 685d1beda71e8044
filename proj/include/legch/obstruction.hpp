#pragma once

#include <set>
#include <vector>

#include "legch/algebra_map.hpp"
#include "legch/dga.hpp"
#include "legch/knots.hpp"

namespace legch {

struct CertificateEntry {
    Symbol generator;
    std::size_t max_count = 0;
    Count tau;
    bool even = true;
};

struct Certificate {
    Symbol marker;
    /// One entry per degree 1 generator, in generator order.
    std::vector<CertificateEntry> entries;
    bool ok = true;
};

/// τ_marker(d(c)) for every degree 1 generator c; ok iff all are even.
/// Throws NotDegreeZeroMarker.
Certificate tau_parity_certificate(const Dga& dga, Symbol marker);

enum class Conclusion { Nontrivial, Inconclusive };

const char* to_string(Conclusion c) noexcept;

struct Verdict {
    Symbol witness;
    Symbol marker;
    /// τ_marker(μ(witness) + witness).
    Count tau_value;
    bool certificate_ok = false;
    Conclusion conclusion = Conclusion::Inconclusive;
    /// μ(witness).
    Poly image;
    Certificate certificate;
};

/// Nontrivial iff the certificate holds and tau_value is odd. Throws
/// NotDegreeZeroMarker when witness or marker is not a degree 0 generator.
Verdict verdict(const Dga& dga, const AlgebraMap& mu, Symbol witness, Symbol marker);

/// Same, with a certificate computed beforehand for (dga, marker).
Verdict verdict(const Dga& dga, const AlgebraMap& mu, Symbol witness, const Certificate& certificate);

/// Fly tangle for the given torus summands: the connected sum of the K_{n,2}
/// tangles (prefixes k1, k2, ...) opened at its closure, prefixed "fly".
/// Throws BadSummand for even n, n < 3 or n ≡ 2 mod 3.
Tangle fly_tangle(const std::vector<int>& summands);

/// K = fly # trefoil with closure a2 and trefoil generators b1, b2, b3, a1.
Dga kalman_sum(const Tangle& fly);

struct FamilyRow {
    int power = 0;
    Verdict verdict;
};

struct FamilyResult {
    std::vector<int> summands;
    Tangle fly;
    Dga knot;
    std::vector<FamilyRow> rows;
};

struct FamilyOptions {
    Symbol witness{"b3"};
    Symbol marker{"b3"};
    /// Worker threads across powers (0 = hardware concurrency).
    unsigned workers = 0;
};

/// Verdicts for fly # trefoil under the j-fold Kálmán loop, one row per
/// power (ascending). Throws BadSummand, BadPower (outside {1, 2, 3}).
FamilyResult family_verdicts(const std::vector<int>& summands, const std::set<int>& powers,
                             const FamilyOptions& options = {});

}  // namespace legch
