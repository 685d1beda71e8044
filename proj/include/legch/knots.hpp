#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "legch/dga.hpp"
#include "legch/poly.hpp"

namespace legch {

/// 2×2 matrix over the free algebra, the product of the elementary matrices
/// [[b_i, 1], [1, 0]] for i = 1..n.
struct PathMatrix {
    std::array<std::array<Poly, 2>, 2> entry;

    const Poly& operator()(int row, int col) const { return entry[row - 1][col - 1]; }
};

/// Generator names are "b1".."bn".
PathMatrix path_matrix(int n);

/// DGA of the max-tb Legendrian positive (n,2)-torus knot: b1..bn in degree 0
/// with zero differential, a1 and a2 in degree 1 with
///   d(a1) = 1 + B11,   d(a2) = 1 + B22 + B21 B12.
/// n must be odd (a knot, not a link) and at least 3.
Dga torus_knot_dga(int n);

/// An open knot: the crossings left after removing the closure crossing,
/// plus the word the tangle contributes to any closure, W = d(closure) - 1.
struct Tangle {
    Dga internal;
    Poly word;
    std::string prefix;

    /// The trivial tangle (no crossings, W = 1), the unit for connected sums.
    static Tangle empty(std::string prefix = {});
};

/// Opens `dga` at its closure crossing. All names get "prefix." prepended
/// (an empty prefix keeps them). Throws NotDegreeOne, ClosureReferenced,
/// UnknownGenerator.
Tangle tangle_from_knot(const Dga& dga, Symbol closure, const std::string& prefix);

/// Closure of the ordered concatenation of tangles: every internal crossing
/// keeps its differential, and a fresh degree 1 crossing `closure_name` gets
/// d = 1 + W1 W2 ... Wk. Throws EmptyList, PrefixCollision,
/// DuplicateGenerator.
Dga connect_sum(const std::vector<Tangle>& tangles, const std::string& closure_name = "a");

struct ClassReport {
    bool even = false;
    std::vector<std::string> failures;
};

/// Even d-class: rotation zero, every degree 1 generator has a differential
/// of even length, no generator of negative degree.
ClassReport is_even_delta_class(const Dga& dga);

/// (F_{n+1}, F_n, F_n, F_{n-1}) with F_0 = 0, F_1 = F_2 = 1.
std::array<std::uint64_t, 4> fibonacci_lengths(int n);

}  // namespace legch
