#pragma once

#include <utility>

#include "legch/poly.hpp"
#include "legch/sampling.hpp"

namespace legch::testing {

using sampling::alphabet;
using sampling::random_map;
using sampling::random_poly;
using sampling::random_word;

/// Reference word set of an explicit polynomial, computed without any of the
/// library's statistics code.
inline std::size_t naive_count(const Poly& p) { return p.words().size(); }

inline std::pair<std::size_t, std::size_t> naive_tau(const Poly& p, Symbol g) {
    std::size_t best = 0, count = 0;
    for (const auto& w : p.words()) {
        std::size_t k = 0;
        for (auto s : w) k += (s == g);
        if (count == 0 || k > best) {
            best = k;
            count = 1;
        } else if (k == best) {
            ++count;
        }
    }
    return {best, count};
}

}  // namespace legch::testing
