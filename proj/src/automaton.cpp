#include <algorithm>
#include <map>
#include <unordered_map>

#include "poly_node.hpp"

namespace legch::detail {
namespace {

using Node = Poly::Node;

// Nondeterministic automaton with epsilon edges. Path counts mod 2 give the
// coefficient of each word. Epsilon edges always point to larger state ids,
// which makes closure a single ascending sweep.
struct Nfa {
    std::vector<std::vector<std::pair<Symbol, std::uint32_t>>> letters;
    std::vector<std::vector<std::uint32_t>> eps;

    std::uint32_t add_state() {
        letters.emplace_back();
        eps.emplace_back();
        return static_cast<std::uint32_t>(letters.size() - 1);
    }
};

struct Fragment {
    std::uint32_t entry;
    std::uint32_t exit;
};

Fragment build_leaf(Nfa& nfa, const std::vector<Word>& words) {
    Fragment f{nfa.add_state(), 0};
    std::vector<std::uint32_t> ends;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> child;  // (state, letter id) -> state
    for (const auto& w : words) {
        auto s = f.entry;
        for (auto letter : w) {
            auto key = std::make_pair(s, letter.id());
            auto it = child.find(key);
            if (it == child.end()) {
                auto t = nfa.add_state();
                nfa.letters[s].emplace_back(letter, t);
                it = child.emplace(key, t).first;
            }
            s = it->second;
        }
        ends.push_back(s);
    }
    f.exit = nfa.add_state();
    for (auto e : ends) nfa.eps[e].push_back(f.exit);
    return f;
}

Fragment build(Nfa& nfa, const Node& n) {
    switch (n.kind) {
        case Node::Kind::Leaf: return build_leaf(nfa, n.words);
        case Node::Kind::Sum: {
            Fragment f{nfa.add_state(), 0};
            std::vector<Fragment> parts;
            for (const auto& c : n.children) parts.push_back(build(nfa, PolyAccess::node(c)));
            f.exit = nfa.add_state();
            for (const auto& p : parts) {
                nfa.eps[f.entry].push_back(p.entry);
                nfa.eps[p.exit].push_back(f.exit);
            }
            return f;
        }
        case Node::Kind::Product: {
            Fragment first = build(nfa, PolyAccess::node(n.children.front()));
            Fragment last = first;
            for (std::size_t i = 1; i < n.children.size(); ++i) {
                Fragment next = build(nfa, PolyAccess::node(n.children[i]));
                nfa.eps[last.exit].push_back(next.entry);
                last = next;
            }
            return {first.entry, last.exit};
        }
    }
    return {};
}

struct VectorHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class Determinizer {
public:
    Determinizer(const Nfa& nfa, std::uint32_t accept) : nfa_(nfa), accept_(accept), parity_(nfa.letters.size(), 0) {}

    // Odd-parity closure of `seeds` (each listed once per unit of parity),
    // restricted to states that matter afterwards: those with letter edges and
    // the accepting state.
    std::vector<std::uint32_t> closure(std::vector<std::uint32_t> seeds) {
        std::sort(seeds.begin(), seeds.end());
        // ascending sweep with a min-ordered worklist
        std::vector<std::uint32_t> heap;
        auto push = [&](std::uint32_t s) {
            if (!touched_flag(s)) {
                heap.push_back(s);
                std::push_heap(heap.begin(), heap.end(), std::greater<>());
            }
            parity_[s] ^= 1;
        };
        for (auto s : seeds) push(s);
        std::vector<std::uint32_t> out;
        while (!heap.empty()) {
            std::pop_heap(heap.begin(), heap.end(), std::greater<>());
            auto s = heap.back();
            heap.pop_back();
            bool odd = parity_[s] & 1;
            parity_[s] = 0;
            if (!odd) continue;
            if (s == accept_ || !nfa_.letters[s].empty()) out.push_back(s);
            for (auto t : nfa_.eps[s]) push(t);
        }
        return out;
    }

    Dfa run(std::uint32_t start) {
        Dfa dfa;
        auto init = closure({start});
        if (init.empty()) return dfa;
        intern(std::move(init), dfa);
        for (std::size_t i = 0; i < dfa.states.size(); ++i) {
            const auto vec = vectors_[i];
            // gather letter moves
            std::vector<std::pair<std::uint32_t, std::uint32_t>> moves;  // (letter id, target)
            std::unordered_map<std::uint32_t, Symbol> symbol_of;
            for (auto s : vec) {
                for (const auto& [letter, t] : nfa_.letters[s]) {
                    moves.emplace_back(letter.id(), t);
                    symbol_of.emplace(letter.id(), letter);
                }
            }
            std::sort(moves.begin(), moves.end());
            std::vector<Dfa::Edge> edges;
            for (std::size_t a = 0; a < moves.size();) {
                std::size_t b = a;
                std::vector<std::uint32_t> seeds;
                while (b < moves.size() && moves[b].first == moves[a].first) {
                    seeds.push_back(moves[b].second);
                    ++b;
                }
                auto target = closure(std::move(seeds));
                if (!target.empty()) {
                    auto id = intern(std::move(target), dfa);
                    edges.push_back({symbol_of.at(moves[a].first), id});
                }
                a = b;
            }
            dfa.states[i].edges = std::move(edges);
        }
        vectors_.clear();
        index_.clear();
        finish(dfa);
        return dfa;
    }

private:
    bool touched_flag(std::uint32_t s) const { return parity_[s] != 0; }

    std::uint32_t intern(std::vector<std::uint32_t> vec, Dfa& dfa) {
        auto it = index_.find(vec);
        if (it != index_.end()) return it->second;
        auto id = static_cast<std::uint32_t>(dfa.states.size());
        Dfa::State st;
        st.accept = std::binary_search(vec.begin(), vec.end(), accept_);
        dfa.states.push_back(std::move(st));
        vectors_.push_back(vec);
        index_.emplace(std::move(vec), id);
        return id;
    }

    static void finish(Dfa& dfa) {
        // The support is finite, so the reachable graph is acyclic; a
        // post-order walk yields successors before predecessors.
        const auto n = dfa.states.size();
        std::vector<char> seen(n, 0);
        dfa.order.reserve(n);
        std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
        seen[0] = 1;
        while (!stack.empty()) {
            auto& [s, k] = stack.back();
            const auto& edges = dfa.states[s].edges;
            if (k < edges.size()) {
                auto t = edges[k++].target;
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.emplace_back(t, 0);
                }
            } else {
                dfa.order.push_back(s);
                stack.pop_back();
            }
        }
        dfa.suffix_count.assign(n, Count(0));
        for (auto s : dfa.order) {
            Count c = dfa.states[s].accept ? 1 : 0;
            for (const auto& e : dfa.states[s].edges) c += dfa.suffix_count[e.target];
            dfa.suffix_count[s] = std::move(c);
        }
    }

    const Nfa& nfa_;
    std::uint32_t accept_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::vector<std::uint32_t>> vectors_;
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> index_;
};

}  // namespace

std::unique_ptr<Dfa> build_dfa(const Poly::Node& node) {
    Nfa nfa;
    auto frag = build(nfa, node);
    Determinizer det(nfa, frag.exit);
    return std::make_unique<Dfa>(det.run(frag.entry));
}

}  // namespace legch::detail
