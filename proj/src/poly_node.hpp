#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "legch/poly.hpp"

namespace legch {

namespace detail {

/// Deterministic automaton recognizing the support of a factored Poly.
///
/// States are GF(2) vectors over the states of a nondeterministic automaton
/// whose path counts mod 2 give the coefficients; determinizing that way makes
/// every accepted word correspond to exactly one path, so word statistics are
/// plain dynamic programs over an acyclic graph.
struct Dfa {
    struct Edge {
        Symbol letter;
        std::uint32_t target;
    };
    struct State {
        std::vector<Edge> edges;
        bool accept = false;
    };

    std::vector<State> states;  // states[0] is the start state when non-empty
    std::vector<std::uint32_t> order;  // successors before predecessors
    std::vector<Count> suffix_count;  // accepted words readable from each state

    bool empty() const { return states.empty() || suffix_count[0] == 0; }
};

std::unique_ptr<Dfa> build_dfa(const Poly::Node& node);

}  // namespace detail

struct Poly::Node {
    enum class Kind { Leaf, Sum, Product };

    Kind kind = Kind::Leaf;
    std::vector<Word> words;     // Leaf: canonical, reduced
    std::vector<Poly> children;  // Sum / Product
    double bound = 0.0;
    std::vector<Symbol> mentioned;  // sorted by id, unique

    const detail::Dfa& dfa() const {
        std::call_once(dfa_once_, [this] { dfa_ = detail::build_dfa(*this); });
        return *dfa_;
    }

private:
    mutable std::once_flag dfa_once_;
    mutable std::unique_ptr<detail::Dfa> dfa_;
};

namespace detail {

class PolyAccess {
public:
    static const Poly::Node& node(const Poly& p) { return *p.node_; }
    static const void* key(const Poly& p) { return p.node_.get(); }
};

}  // namespace detail
}  // namespace legch
