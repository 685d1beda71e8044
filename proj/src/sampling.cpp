#include "legch/sampling.hpp"

#include <algorithm>

namespace legch::sampling {

std::vector<Symbol> alphabet(int n, const std::string& stem) {
    std::vector<Symbol> out;
    for (int i = 1; i <= n; ++i) out.emplace_back(stem + std::to_string(i));
    return out;
}

Word random_word(Rng& rng, const std::vector<Symbol>& letters, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& s : w) s = letters[pick(rng)];
    return w;
}

Poly random_poly(Rng& rng, const std::vector<Symbol>& letters, int max_terms, int max_len) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::vector<Word> words;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) words.push_back(random_word(rng, letters, max_len));
    return Poly::from_words(std::move(words));
}

AlgebraMap random_map(Rng& rng, const std::vector<Symbol>& letters, int max_terms, int max_len) {
    AlgebraMap m;
    std::bernoulli_distribution moved(0.5);
    for (auto g : letters)
        if (moved(rng)) m.assign(g, random_poly(rng, letters, max_terms, max_len));
    return m;
}

std::vector<MoveEvent> random_formal_events(Rng& rng, const Dga& state, int count, int& counter,
                                            const std::string& stem) {
    std::vector<MoveEvent> events;
    auto names = state.names();
    std::uniform_int_distribution<int> kind(0, 4);
    auto pick = [&](const std::vector<Symbol>& from) {
        return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
    };
    for (int i = 0; i < count; ++i) {
        int k = names.size() < 3 ? 0 : kind(rng);
        switch (k) {
            case 0: {
                Symbol x(stem + std::to_string(counter++));
                Symbol y(stem + std::to_string(counter++));
                events.push_back(RII{{x, 0, {}}, {y, 0, {}}, {}});
                names.push_back(x);
                names.push_back(y);
                break;
            }
            case 1: {
                auto x = pick(names);
                Symbol y;
                do y = pick(names);
                while (y == x);
                std::vector<Symbol> rest;
                for (auto s : names)
                    if (s != x && s != y) rest.push_back(s);
                events.push_back(RIIInv{x, y, random_poly(rng, rest, 3, 2)});
                names.erase(std::remove_if(names.begin(), names.end(), [&](Symbol s) { return s == x || s == y; }),
                            names.end());
                break;
            }
            case 2: events.push_back(RIIIa{}); break;
            case 3: {
                auto x = pick(names);
                Symbol y;
                do y = pick(names);
                while (y == x);
                events.push_back(RIIIb{x, y, pick(names)});
                break;
            }
            default: {
                auto shuffled = names;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                Relabel r;
                for (std::size_t j = 0; j < names.size(); ++j)
                    if (names[j] != shuffled[j]) r.perm.emplace_back(names[j], shuffled[j]);
                events.push_back(std::move(r));
                break;
            }
        }
    }
    return events;
}

}  // namespace legch::sampling
