#pragma once

#include <random>
#include <string>
#include <vector>

#include "legch/algebra_map.hpp"
#include "legch/holonomy.hpp"
#include "legch/poly.hpp"

namespace legch::sampling {

using Rng = std::mt19937_64;

std::vector<Symbol> alphabet(int n, const std::string& stem = "g");

Word random_word(Rng& rng, const std::vector<Symbol>& letters, int max_len);

Poly random_poly(Rng& rng, const std::vector<Symbol>& letters, int max_terms = 5, int max_len = 3);

/// Each letter is moved with probability 1/2, to a random polynomial.
AlgebraMap random_map(Rng& rng, const std::vector<Symbol>& letters, int max_terms = 3, int max_len = 2);

/// Random formal-mode events valid against `state` (all generators degree 0).
/// Births use names "<stem><k>" with k drawn from `counter`, which is
/// advanced, so successive calls never reuse a name.
std::vector<MoveEvent> random_formal_events(Rng& rng, const Dga& state, int count, int& counter,
                                            const std::string& stem = "n");

}  // namespace legch::sampling
