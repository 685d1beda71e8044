#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "legch/algebra_map.hpp"
#include "legch/dga.hpp"

namespace legch {

/// Reidemeister II birth of the crossing pair x, y. `differentials` gives the
/// post-move differentials of x, y and of any existing generator whose
/// differential changes.
struct RII {
    Generator x;
    Generator y;
    std::vector<std::pair<Symbol, Poly>> differentials;
};

/// Reidemeister II death of x, y, where d(x) = y + w. In verified mode `w` is
/// read off the current state (and must agree when given); in formal mode a
/// given `w` is used as is.
struct RIIInv {
    Symbol x;
    Symbol y;
    std::optional<Poly> w;
};

struct RIIIa {};

/// Reidemeister III move of type b: x ↦ x + z y.
struct RIIIb {
    Symbol x;
    Symbol y;
    Symbol z;
};

/// Renames generators; unlisted generators keep their names.
struct Relabel {
    std::vector<std::pair<Symbol, Symbol>> perm;
};

using MoveEvent = std::variant<RII, RIIInv, RIIIa, RIIIb, Relabel>;

const char* event_type(const MoveEvent& e) noexcept;

enum class ScriptMode { Verified, Formal };

const char* to_string(ScriptMode mode) noexcept;

struct MoveScript {
    Dga initial;
    std::vector<MoveEvent> events;
    ScriptMode mode = ScriptMode::Verified;
};

struct Step {
    AlgebraMap map;
    Dga state;
};

/// Holonomy of one move together with the post-move state.
///
/// Verified mode checks every applicability condition; formal mode checks
/// names, freshness and the shape of the data only.
Step holonomy(const MoveEvent& event, const Dga& state, ScriptMode mode = ScriptMode::Verified);

struct Monodromy {
    /// Composite of all holonomies, restricted to the initial generators.
    AlgebraMap map;
    Dga final_state;
    /// True when the final generator set equals the initial one.
    bool endomorphism = false;
    DegreeReport degrees;
};

/// Composes the holonomies of all events in order. Verified mode throws
/// NotAnEndomorphism when the generator set changed and NotDegreePreserving
/// on a degree mismatch; formal mode reports both.
Monodromy run_script(const MoveScript& script);

struct FlyViolation {
    std::size_t event = 0;
    Symbol generator;
    std::string detail;
};

struct FlyReport {
    std::vector<FlyViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks that every event's holonomy fixes every fly generator. Event
/// errors are recorded as violations and stop the scan.
FlyReport fly_fixed_check(const MoveScript& script, const std::vector<Symbol>& fly);

struct KalmanLabels {
    Symbol b1{"b1"};
    Symbol b2{"b2"};
    Symbol b3{"b3"};
};

/// j-fold Kálmán loop monodromy with a rigid fly of associated word W:
///   b1 ↦ W + b1 b2 W,   b2 ↦ 1 + b2 b3,   b3 ↦ b1,
/// fly generators fixed. Throws FlyCollision when W mentions b1, b2 or b3.
AlgebraMap kalman_monodromy(const Poly& fly_word, int j, const KalmanLabels& labels = {});

}  // namespace legch
