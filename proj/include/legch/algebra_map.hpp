#pragma once

#include <map>
#include <string>
#include <vector>

#include "legch/poly.hpp"

namespace legch {

/// Unital algebra homomorphism given by images of finitely many generators;
/// every other generator is fixed. Holonomies and monodromies are values of
/// this type.
class AlgebraMap {
public:
    AlgebraMap() = default;

    static AlgebraMap identity() { return {}; }

    /// Sets the image of `g`. Assigning `g ↦ g` removes the entry.
    AlgebraMap& assign(Symbol g, Poly image);
    AlgebraMap& assign(std::string_view g, std::string_view image) {
        return assign(Symbol(g), Poly::parse(image));
    }

    Poly image(Symbol g) const;
    bool moves(Symbol g) const { return images_.count(g) != 0; }

    /// Generators with a non-identity image, ordered by name.
    std::vector<Symbol> domain() const;

    Poly apply(const Poly& p) const;

    std::string to_string() const;

    friend bool operator==(const AlgebraMap& a, const AlgebraMap& b);

private:
    std::map<Symbol, Poly> images_;
};

inline Poly apply_map(const AlgebraMap& m, const Poly& p) { return m.apply(p); }

/// outer ∘ inner: g ↦ outer(inner(g)).
AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner);

/// Restriction to the given generators (others become identity).
AlgebraMap restrict(const AlgebraMap& m, const std::vector<Symbol>& keep);

}  // namespace legch
