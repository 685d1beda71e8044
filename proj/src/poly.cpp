#include "legch/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "legch/error.hpp"
#include "poly_node.hpp"

namespace legch {
namespace {

using Node = Poly::Node;
using detail::PolyAccess;

bool id_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sorts and cancels repeated words in pairs.
void reduce_mod2(std::vector<Word>& words) {
    std::sort(words.begin(), words.end(), id_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i + 1;
        while (j < words.size() && words[j] == words[i]) ++j;
        if ((j - i) % 2 == 1) {
            if (out != i) words[out] = std::move(words[i]);
            ++out;
        }
        i = j;
    }
    words.resize(out);
}

std::vector<Symbol> merge_letters(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    std::vector<Symbol> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::shared_ptr<const Node> make_leaf(std::vector<Word> canonical) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Leaf;
    std::vector<Symbol> letters;
    for (const auto& w : canonical) letters.insert(letters.end(), w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    node->mentioned = std::move(letters);
    node->bound = static_cast<double>(canonical.size());
    node->words = std::move(canonical);
    return node;
}

const std::shared_ptr<const Node>& zero_node() {
    static const auto node = make_leaf({});
    return node;
}

const std::shared_ptr<const Node>& one_node() {
    static const auto node = make_leaf({Word{}});
    return node;
}

bool is_leaf(const Poly& p) { return PolyAccess::node(p).kind == Node::Kind::Leaf; }

std::vector<Word> explicit_product(const std::vector<Word>& a, const std::vector<Word>& b) {
    std::vector<Word> out;
    out.reserve(a.size() * b.size());
    for (const auto& u : a) {
        for (const auto& v : b) {
            Word w;
            w.reserve(u.size() + v.size());
            w.insert(w.end(), u.begin(), u.end());
            w.insert(w.end(), v.begin(), v.end());
            out.push_back(std::move(w));
        }
    }
    reduce_mod2(out);
    return out;
}

std::vector<Word> explicit_sum(const std::vector<Word>& a, const std::vector<Word>& b) {
    std::vector<Word> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), id_less);
    return out;
}

struct MarkerBest {
    std::size_t max = 0;
    Count count = 0;
};

MarkerBest marker_stats_explicit(const std::vector<Word>& words, Symbol g) {
    MarkerBest best;
    for (const auto& w : words) {
        auto k = static_cast<std::size_t>(std::count(w.begin(), w.end(), g));
        if (best.count == 0 || k > best.max) {
            best.max = k;
            best.count = 1;
        } else if (k == best.max) {
            ++best.count;
        }
    }
    return best;
}

MarkerBest marker_stats_dfa(const detail::Dfa& dfa, Symbol g) {
    if (dfa.empty()) return {};
    std::vector<MarkerBest> best(dfa.states.size());
    for (auto s : dfa.order) {
        const auto& st = dfa.states[s];
        MarkerBest b;
        if (st.accept) {
            b.max = 0;
            b.count = 1;
        }
        for (const auto& e : st.edges) {
            const auto& child = best[e.target];
            if (child.count == 0) continue;
            std::size_t m = child.max + (e.letter == g ? 1 : 0);
            if (b.count == 0 || m > b.max) {
                b.max = m;
                b.count = child.count;
            } else if (m == b.max) {
                b.count += child.count;
            }
        }
        best[s] = std::move(b);
    }
    return best[0];
}

std::vector<std::map<std::int64_t, Count>> dfa_weight_profiles(const detail::Dfa& dfa,
                                                               const std::function<std::int64_t(Symbol)>& weight) {
    std::vector<std::map<std::int64_t, Count>> prof(dfa.states.size());
    std::unordered_map<Symbol, std::int64_t> cache;
    auto wt = [&](Symbol s) {
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
        return cache.emplace(s, weight(s)).first->second;
    };
    for (auto s : dfa.order) {
        const auto& st = dfa.states[s];
        auto& p = prof[s];
        if (st.accept) p[0] += 1;
        for (const auto& e : st.edges) {
            auto w = wt(e.letter);
            for (const auto& [k, c] : prof[e.target]) p[k + w] += c;
        }
    }
    return prof;
}

std::int64_t word_weight(const Word& w, const std::function<std::int64_t(Symbol)>& weight) {
    std::int64_t total = 0;
    for (auto s : w) total += weight(s);
    return total;
}

// ---- parsing ---------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        Poly p = sum();
        skip_space();
        if (!at_end()) fail("unexpected character");
        return p;
    }

private:
    Poly sum() {
        std::vector<Poly> terms{term()};
        for (;;) {
            skip_space();
            if (at_end() || text_[pos_] != '+') return Poly::sum(terms);
            ++pos_;
            terms.push_back(term());
        }
    }

    Poly term() {
        skip_space();
        Poly acc = factor();
        for (;;) {
            skip_space();
            if (at_end()) return acc;
            char c = text_[pos_];
            if (c == '*') {
                ++pos_;
                skip_space();
                acc *= factor();
            } else if (c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c))) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        skip_space();
        if (at_end()) fail("expected a factor");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = sum();
            skip_space();
            if (at_end() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            auto digits = text_.substr(start, pos_ - start);
            if (digits == "1") return Poly::one();
            if (digits == "0") return Poly();
            fail("only the constants 0 and 1 are allowed");
        }
        if (c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end()) {
                char d = text_[pos_];
                if (d == '_' || d == '.' || std::isalnum(static_cast<unsigned char>(d)))
                    ++pos_;
                else
                    break;
            }
            auto name = text_.substr(start, pos_ - start);
            if (!is_valid_name(name)) fail("invalid generator name '" + std::string(name) + "'");
            return Poly::generator(Symbol(name));
        }
        fail("unexpected character");
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError,
                    what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string leaf_text(const std::vector<Word>& words) {
    if (words.empty()) return "0";
    std::vector<const Word*> sorted;
    sorted.reserve(words.size());
    for (const auto& w : words) sorted.push_back(&w);
    std::sort(sorted.begin(), sorted.end(), [](const Word* a, const Word* b) { return serial_less(*a, *b); });
    std::string out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += " + ";
        out += to_string(*sorted[i]);
    }
    return out;
}

std::string node_text(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Leaf: return leaf_text(n.words);
        case Node::Kind::Sum: {
            std::string out;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (i) out += " + ";
                out += node_text(PolyAccess::node(n.children[i]));
            }
            return out;
        }
        case Node::Kind::Product: {
            std::string out;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                const auto& c = PolyAccess::node(n.children[i]);
                if (i) out += ' ';
                if (c.kind == Node::Kind::Leaf && c.words.size() == 1)
                    out += to_string(c.words.front());
                else
                    out += "(" + node_text(c) + ")";
            }
            return out;
        }
    }
    return {};
}

}  // namespace

// ---- construction ----------------------------------------------------------

Poly::Poly() : node_(zero_node()) {}

Poly Poly::one() { return Poly(one_node()); }

Poly Poly::generator(Symbol g) { return Poly(make_leaf({Word{g}})); }

Poly Poly::monomial(Word w) {
    if (w.empty()) return one();
    return Poly(make_leaf({std::move(w)}));
}

Poly Poly::from_words(std::vector<Word> words) {
    reduce_mod2(words);
    if (words.empty()) return Poly();
    return Poly(make_leaf(std::move(words)));
}

Poly Poly::parse(std::string_view text) { return Parser(text).parse(); }

Poly Poly::lazy_product(const std::vector<Poly>& factors) {
    std::vector<Poly> kept;
    for (const auto& f : factors) {
        if (f.is_zero()) return Poly();
        if (is_leaf(f) && f.is_one()) continue;
        kept.push_back(f);
    }
    if (kept.empty()) return one();
    if (kept.size() == 1) return kept.front();
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Product;
    node->bound = 1.0;
    for (const auto& f : kept) {
        const auto& fn = PolyAccess::node(f);
        node->bound *= fn.bound;
        node->mentioned = merge_letters(node->mentioned, fn.mentioned);
    }
    node->children = std::move(kept);
    return Poly(std::move(node));
}

Poly Poly::lazy_sum(const std::vector<Poly>& terms) {
    std::vector<Poly> kept;
    for (const auto& t : terms)
        if (!(is_leaf(t) && PolyAccess::node(t).words.empty())) kept.push_back(t);
    if (kept.empty()) return Poly();
    if (kept.size() == 1) return kept.front();
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Sum;
    for (const auto& t : kept) {
        const auto& tn = PolyAccess::node(t);
        node->bound += tn.bound;
        node->mentioned = merge_letters(node->mentioned, tn.mentioned);
    }
    node->children = std::move(kept);
    return Poly(std::move(node));
}

Poly Poly::sum(const std::vector<Poly>& terms) {
    // one explicit part followed by the factored terms
    std::vector<Word> flat;
    std::vector<Poly> rest;
    for (const auto& t : terms) {
        const auto& tn = PolyAccess::node(t);
        if (tn.kind == Node::Kind::Leaf) {
            flat.insert(flat.end(), tn.words.begin(), tn.words.end());
        } else if (tn.kind == Node::Kind::Sum) {
            for (const auto& c : tn.children) {
                const auto& cn = PolyAccess::node(c);
                if (cn.kind == Node::Kind::Leaf)
                    flat.insert(flat.end(), cn.words.begin(), cn.words.end());
                else
                    rest.push_back(c);
            }
        } else {
            rest.push_back(t);
        }
    }
    auto head = from_words(std::move(flat));
    if (rest.empty()) return head;
    rest.insert(rest.begin(), head);
    return lazy_sum(rest);
}

Poly operator+(const Poly& p, const Poly& q) {
    const auto& pn = PolyAccess::node(p);
    const auto& qn = PolyAccess::node(q);
    if (pn.kind == Node::Kind::Leaf && pn.words.empty()) return q;
    if (qn.kind == Node::Kind::Leaf && qn.words.empty()) return p;
    if (pn.kind == Node::Kind::Leaf && qn.kind == Node::Kind::Leaf) {
        auto words = explicit_sum(pn.words, qn.words);
        if (words.empty()) return Poly();
        return Poly(make_leaf(std::move(words)));
    }
    return Poly::sum({p, q});
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    const auto& pn = PolyAccess::node(p);
    const auto& qn = PolyAccess::node(q);
    if (pn.kind == Node::Kind::Leaf && pn.words.size() == 1 && pn.words.front().empty()) return q;
    if (qn.kind == Node::Kind::Leaf && qn.words.size() == 1 && qn.words.front().empty()) return p;
    if (pn.kind == Node::Kind::Leaf && qn.kind == Node::Kind::Leaf &&
        pn.bound * qn.bound <= static_cast<double>(Poly::kExpandLimit)) {
        auto words = explicit_product(pn.words, qn.words);
        if (words.empty()) return Poly();
        return Poly(make_leaf(std::move(words)));
    }
    std::vector<Poly> factors;
    auto push = [&](const Poly& f) {
        const auto& fn = PolyAccess::node(f);
        if (!factors.empty() && fn.kind == Node::Kind::Leaf) {
            const auto& back = PolyAccess::node(factors.back());
            if (back.kind == Node::Kind::Leaf && back.bound * fn.bound <= static_cast<double>(Poly::kExpandLimit)) {
                factors.back() = Poly::from_words(explicit_product(back.words, fn.words));
                return;
            }
        }
        factors.push_back(f);
    };
    for (const auto* side : {&pn, &qn}) {
        if (side->kind == Node::Kind::Product) {
            for (const auto& c : side->children) push(c);
        } else {
            push(side == &pn ? p : q);
        }
    }
    return Poly::lazy_product(factors);
}

bool operator==(const Poly& p, const Poly& q) {
    if (PolyAccess::key(p) == PolyAccess::key(q)) return true;
    if (is_leaf(p) && is_leaf(q)) return PolyAccess::node(p).words == PolyAccess::node(q).words;
    return (p + q).is_zero();
}

// ---- queries ---------------------------------------------------------------

bool Poly::is_explicit() const noexcept { return node_->kind == Node::Kind::Leaf; }

const std::vector<Word>& Poly::words() const {
    if (!is_explicit()) throw Error(ErrorCode::TooLarge, "polynomial is stored in factored form; call expanded()");
    return node_->words;
}

double Poly::size_bound() const noexcept { return node_->bound; }

Poly Poly::expanded(std::size_t max_words) const {
    if (is_explicit()) return *this;
    const auto& dfa = node_->dfa();
    if (dfa.empty()) return Poly();
    if (dfa.suffix_count[0] > max_words)
        throw Error(ErrorCode::TooLarge, "expansion has " + dfa.suffix_count[0].str() + " words (limit " +
                                             std::to_string(max_words) + ")");
    std::vector<Word> out;
    Word current;
    // Depth-first walk over live edges; each accepted word has a unique path.
    struct Frame {
        std::uint32_t state;
        std::size_t edge;
    };
    std::vector<Frame> stack{{0, 0}};
    if (dfa.states[0].accept) out.push_back(current);
    while (!stack.empty()) {
        auto& top = stack.back();
        const auto& st = dfa.states[top.state];
        if (top.edge == st.edges.size()) {
            stack.pop_back();
            if (!current.empty()) current.pop_back();
            continue;
        }
        const auto& e = st.edges[top.edge++];
        if (dfa.suffix_count[e.target] == 0) continue;
        current.push_back(e.letter);
        if (dfa.states[e.target].accept) out.push_back(current);
        stack.push_back({e.target, 0});
    }
    std::sort(out.begin(), out.end(), id_less);
    return Poly(make_leaf(std::move(out)));
}

bool Poly::is_zero() const {
    if (is_explicit()) return node_->words.empty();
    return node_->dfa().empty();
}

bool Poly::is_one() const {
    if (is_explicit()) return node_->words.size() == 1 && node_->words.front().empty();
    return length() == 1 && contains(Word{});
}

bool Poly::contains(const Word& w) const {
    if (is_explicit()) return std::binary_search(node_->words.begin(), node_->words.end(), w, id_less);
    const auto& dfa = node_->dfa();
    if (dfa.states.empty()) return false;
    std::uint32_t s = 0;
    for (auto letter : w) {
        const auto& edges = dfa.states[s].edges;
        auto it = std::find_if(edges.begin(), edges.end(), [&](const detail::Dfa::Edge& e) { return e.letter == letter; });
        if (it == edges.end()) return false;
        s = it->target;
    }
    return dfa.states[s].accept;
}

Count Poly::length() const {
    if (is_explicit()) return Count(node_->words.size());
    const auto& dfa = node_->dfa();
    return dfa.states.empty() ? Count(0) : dfa.suffix_count[0];
}

std::size_t Poly::max_count(Symbol g) const {
    return is_explicit() ? marker_stats_explicit(node_->words, g).max : marker_stats_dfa(node_->dfa(), g).max;
}

Count Poly::tau(Symbol g) const {
    return is_explicit() ? marker_stats_explicit(node_->words, g).count : marker_stats_dfa(node_->dfa(), g).count;
}

std::vector<Symbol> Poly::mentioned_letters() const {
    auto out = node_->mentioned;
    std::sort(out.begin(), out.end(), ByName{});
    return out;
}

std::vector<Symbol> Poly::letters() const {
    std::vector<Symbol> out;
    if (is_explicit()) {
        out = node_->mentioned;
    } else {
        const auto& dfa = node_->dfa();
        for (const auto& st : dfa.states)
            for (const auto& e : st.edges)
                if (dfa.suffix_count[e.target] > 0) out.push_back(e.letter);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    std::sort(out.begin(), out.end(), ByName{});
    return out;
}

std::map<std::int64_t, Count> Poly::weight_profile(const std::function<std::int64_t(Symbol)>& weight) const {
    if (is_explicit()) {
        std::map<std::int64_t, Count> out;
        for (const auto& w : node_->words) out[word_weight(w, weight)] += 1;
        return out;
    }
    const auto& dfa = node_->dfa();
    if (dfa.empty()) return {};
    auto prof = dfa_weight_profiles(dfa, weight);
    std::map<std::int64_t, Count> out;
    for (auto& [k, c] : prof[0])
        if (c > 0) out.emplace(k, c);
    return out;
}

std::optional<Word> Poly::example_word(const std::function<std::int64_t(Symbol)>& weight, std::int64_t target) const {
    if (is_explicit()) {
        for (const auto& w : node_->words)
            if (word_weight(w, weight) == target) return w;
        return std::nullopt;
    }
    const auto& dfa = node_->dfa();
    if (dfa.empty()) return std::nullopt;
    auto prof = dfa_weight_profiles(dfa, weight);
    auto has = [&](std::uint32_t s, std::int64_t r) {
        auto it = prof[s].find(r);
        return it != prof[s].end() && it->second > 0;
    };
    if (!has(0, target)) return std::nullopt;
    Word out;
    std::uint32_t s = 0;
    std::int64_t remaining = target;
    for (;;) {
        if (dfa.states[s].accept && remaining == 0) return out;
        bool moved = false;
        for (const auto& e : dfa.states[s].edges) {
            auto r = remaining - weight(e.letter);
            if (has(e.target, r)) {
                out.push_back(e.letter);
                s = e.target;
                remaining = r;
                moved = true;
                break;
            }
        }
        if (!moved) return std::nullopt;  // unreachable: profile guarantees a path
    }
}

std::optional<Rational> Poly::max_weight(const std::function<Rational(Symbol)>& weight) const {
    if (is_explicit()) {
        std::optional<Rational> best;
        for (const auto& w : node_->words) {
            Rational total = 0;
            for (auto s : w) total += weight(s);
            if (!best || total > *best) best = total;
        }
        return best;
    }
    const auto& dfa = node_->dfa();
    if (dfa.empty()) return std::nullopt;
    std::vector<std::optional<Rational>> best(dfa.states.size());
    for (auto s : dfa.order) {
        const auto& st = dfa.states[s];
        std::optional<Rational> b;
        if (st.accept) b = Rational(0);
        for (const auto& e : st.edges) {
            if (!best[e.target]) continue;
            Rational v = *best[e.target] + weight(e.letter);
            if (!b || v > *b) b = v;
        }
        best[s] = b;
    }
    return best[0];
}

// ---- structural maps -------------------------------------------------------

Poly Poly::substitute(const std::function<std::optional<Poly>(Symbol)>& image) const {
    std::unordered_map<const void*, Poly> memo;
    std::unordered_map<Symbol, std::optional<Poly>> images;
    auto img = [&](Symbol s) -> const std::optional<Poly>& {
        auto it = images.find(s);
        if (it != images.end()) return it->second;
        return images.emplace(s, image(s)).first->second;
    };
    std::function<Poly(const Poly&)> go = [&](const Poly& p) -> Poly {
        auto key = PolyAccess::key(p);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const auto& n = PolyAccess::node(p);
        Poly result;
        if (n.kind == Node::Kind::Leaf) {
            bool touched = false;
            bool renaming = true;
            for (auto s : n.mentioned) {
                const auto& im = img(s);
                if (!im) continue;
                touched = true;
                const auto& in = PolyAccess::node(*im);
                if (!(in.kind == Node::Kind::Leaf && in.words.size() == 1)) renaming = false;
            }
            if (!touched) {
                result = p;
            } else if (renaming) {
                std::vector<Word> out;
                out.reserve(n.words.size());
                for (const auto& w : n.words) {
                    Word nw;
                    for (auto s : w) {
                        const auto& im = img(s);
                        if (!im) {
                            nw.push_back(s);
                        } else {
                            const auto& iw = PolyAccess::node(*im).words.front();
                            nw.insert(nw.end(), iw.begin(), iw.end());
                        }
                    }
                    out.push_back(std::move(nw));
                }
                result = from_words(std::move(out));
            } else {
                std::vector<Poly> terms;
                terms.reserve(n.words.size());
                double expanded = 0;
                for (const auto& w : n.words) {
                    std::vector<Poly> factors;
                    double bound = 1;
                    for (auto s : w) {
                        const auto& im = img(s);
                        factors.push_back(im ? *im : generator(s));
                        bound *= factors.back().size_bound();
                    }
                    Poly term = one();
                    if (expanded + bound > static_cast<double>(kMaterializeLimit)) {
                        term = lazy_product(factors);
                    } else {
                        for (const auto& f : factors) term = term * f;
                        if (term.is_explicit()) expanded += static_cast<double>(term.node_->words.size());
                    }
                    terms.push_back(std::move(term));
                }
                result = sum(terms);
            }
        } else if (n.kind == Node::Kind::Sum) {
            std::vector<Poly> terms;
            for (const auto& c : n.children) terms.push_back(go(c));
            result = sum(terms);
        } else {
            result = one();
            for (const auto& c : n.children) result = result * go(c);
        }
        memo.emplace(key, result);
        return result;
    };
    return go(*this);
}

Poly Poly::derive(const std::function<std::optional<Poly>(Symbol)>& d) const {
    std::unordered_map<Symbol, std::optional<Poly>> diffs;
    auto dif = [&](Symbol s) -> const std::optional<Poly>& {
        auto it = diffs.find(s);
        if (it != diffs.end()) return it->second;
        auto v = d(s);
        if (v && v->is_zero()) v.reset();
        return diffs.emplace(s, std::move(v)).first->second;
    };
    std::unordered_map<const void*, Poly> memo;
    std::function<Poly(const Poly&)> go = [&](const Poly& p) -> Poly {
        auto key = PolyAccess::key(p);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const auto& n = PolyAccess::node(p);
        Poly result;
        bool any = false;
        for (auto s : n.mentioned)
            if (dif(s)) any = true;
        if (!any) {
            memo.emplace(key, result);
            return result;
        }
        std::vector<Poly> terms;
        if (n.kind == Node::Kind::Leaf) {
            for (const auto& w : n.words) {
                for (std::size_t i = 0; i < w.size(); ++i) {
                    const auto& di = dif(w[i]);
                    if (!di) continue;
                    Poly left = monomial(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)));
                    Poly right = monomial(Word(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end()));
                    terms.push_back(left * *di * right);
                }
            }
        } else if (n.kind == Node::Kind::Sum) {
            for (const auto& c : n.children) terms.push_back(go(c));
        } else {
            const auto& fs = n.children;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                Poly di = go(fs[i]);
                if (di.is_explicit() && di.node_->words.empty()) continue;
                Poly term = one();
                for (std::size_t j = 0; j < fs.size(); ++j) term = term * (j == i ? di : fs[j]);
                terms.push_back(std::move(term));
            }
        }
        result = sum(terms);
        memo.emplace(key, result);
        return result;
    };
    return go(*this);
}

std::string Poly::to_string() const { return node_text(*node_); }

bool serial_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return a[i].str() < b[i].str();
    }
    return false;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].str();
    }
    return out;
}

}  // namespace legch
