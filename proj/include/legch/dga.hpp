#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "legch/algebra_map.hpp"
#include "legch/poly.hpp"

namespace legch {

/// A crossing of the Lagrangian projection: grading and optional Reeb chord
/// length (height / action).
struct Generator {
    Symbol name;
    int degree = 0;
    std::optional<Rational> height;
};

/// Chekanov–Eliashberg algebra data: graded generators plus the differential
/// on generators (extended by the Leibniz rule). Immutable once built.
///
/// The constructor enforces only structural well-formedness (unique names,
/// positive heights, differentials attached to declared generators). The
/// algebraic invariants are checked by `check_dga`, which reports every
/// violation instead of throwing.
class Dga {
public:
    Dga() = default;
    Dga(std::vector<Generator> generators, const std::vector<std::pair<Symbol, Poly>>& differential,
        bool rotation_zero = true);

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::vector<Symbol> names() const;
    bool declares(Symbol g) const { return index_.count(g) != 0; }
    const Generator* find(Symbol g) const;
    /// Throws UnknownGenerator.
    const Generator& at(Symbol g) const;
    /// Zero when no differential was given.
    Poly differential(Symbol g) const;
    bool rotation_zero() const noexcept { return rotation_zero_; }
    bool has_all_heights() const;

    /// Differential entries in generator order (zero entries omitted).
    std::vector<std::pair<Symbol, Poly>> differential_entries() const;

private:
    std::vector<Generator> generators_;
    std::unordered_map<Symbol, std::size_t> index_;
    std::unordered_map<Symbol, Poly> differential_;
    bool rotation_zero_ = true;
};

enum class ViolationKind {
    UndeclaredGenerator,
    DegreeDrop,
    DSquaredNonzero,
    ActionNotDecreasing,
    RotationNonzero,
};

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
    ViolationKind kind;
    Symbol generator;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Checks that could not run (for example the action check without heights).
    std::vector<std::string> skipped;

    bool ok() const noexcept { return violations.empty(); }
};

/// Sum of letter degrees; the unit word has degree 0.
int word_degree(const Dga& dga, const Word& w);

/// Grading from the rotation number of a capping path, |c| = -2r - 1/2.
/// Requires 4r to be an odd integer.
int degree_from_rotation(Rational r);

/// All violated invariants: declared letters, degree drop by one, d∘d = 0,
/// action decrease (when every generator has a height), rotation zero.
ValidationReport check_dga(const Dga& dga);

/// Rescales every height by u² (0 < u ≤ 1); combinatorics unchanged.
Dga shrink(const Dga& dga, Rational u);

struct DegreeViolation {
    Symbol generator;
    int expected = 0;
    int found = 0;
    Word example;
};

struct DegreeReport {
    std::vector<DegreeViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks that `m` sends each generator of `source` to a combination of words
/// of the same degree in `target`. Throws UnknownGenerator when an image
/// mentions a generator `target` does not declare.
DegreeReport check_degree_preserving(const Dga& source, const Dga& target, const AlgebraMap& m);

/// Endomorphism form: source and target are both `dga`, and the map's domain
/// must be declared there.
DegreeReport apply_endomorphism(const Dga& dga, const AlgebraMap& m);

}  // namespace legch
