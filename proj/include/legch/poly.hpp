#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legch/symbol.hpp"

namespace legch {

/// A monomial of the free monoid on generators; the empty word is the unit.
using Word = std::vector<Symbol>;

/// Exact word counts. Connected-sum polynomials reach 10^18 words, so counts
/// are arbitrary precision.
using Count = boost::multiprecision::cpp_int;

using Rational = boost::rational<std::int64_t>;

namespace detail {
class PolyAccess;
}

/// Element of the free noncommutative unital algebra over Z2.
///
/// A Poly is a finite set of words (coefficient 1 = membership). Small values
/// are stored explicitly as a canonical sorted word list. Products whose
/// expansion would exceed `kExpandLimit` words are kept factored, as a tree of
/// sums and products over explicit leaves; every query (length, max_count,
/// tau, equality, degree profiles) is still exact, computed on a GF(2)
/// automaton built from the tree, so cancellation mod 2 is always accounted
/// for.
///
/// Values are immutable and cheap to copy (shared structure).
class Poly {
public:
    /// Products with at most this many candidate words are expanded eagerly.
    static constexpr std::size_t kExpandLimit = std::size_t{1} << 10;
    /// Default cap for `expanded()` and for textual serialization of
    /// factored values.
    static constexpr std::size_t kMaterializeLimit = std::size_t{1} << 22;

    Poly();  // zero

    static Poly one();
    static Poly generator(Symbol g);
    static Poly generator(std::string_view name) { return generator(Symbol(name)); }
    static Poly monomial(Word w);
    /// Reduces mod 2: a word listed twice cancels.
    static Poly from_words(std::vector<Word> words);
    /// Textual syntax: `1 + b1 b2 + k1.b3`, `0`, juxtaposition or `*` for
    /// products, parentheses for grouping (used by factored values).
    static Poly parse(std::string_view text);

    /// Product/sum that is never expanded eagerly. Mostly for tests and for
    /// building structured values whose size is known to be large.
    static Poly lazy_product(const std::vector<Poly>& factors);
    static Poly lazy_sum(const std::vector<Poly>& terms);
    /// Sum of many terms; explicit parts are reduced in a single pass.
    static Poly sum(const std::vector<Poly>& terms);

    bool is_explicit() const noexcept;
    /// Canonical word list (length, then interning order). Explicit values only.
    const std::vector<Word>& words() const;
    /// Explicit copy; throws TooLarge when more than `max_words` words.
    Poly expanded(std::size_t max_words = kMaterializeLimit) const;
    /// Upper bound on the number of words of the expansion.
    double size_bound() const noexcept;

    bool is_zero() const;
    bool is_one() const;
    bool contains(const Word& w) const;

    /// Number of words.
    Count length() const;
    /// Maximum multiplicity of `g` over all words (0 for the zero polynomial).
    std::size_t max_count(Symbol g) const;
    /// Number of words attaining `max_count(g)` (0 for the zero polynomial).
    Count tau(Symbol g) const;

    /// Generators occurring in some word of the reduced polynomial.
    std::vector<Symbol> letters() const;
    /// Generators mentioned anywhere in the stored form; a superset of
    /// `letters()` that does not require reduction.
    std::vector<Symbol> mentioned_letters() const;

    /// Number of words for each total weight, where a word weighs the sum of
    /// its letters' weights.
    std::map<std::int64_t, Count> weight_profile(const std::function<std::int64_t(Symbol)>& weight) const;
    /// Some word whose total weight equals `target`, if one exists.
    std::optional<Word> example_word(const std::function<std::int64_t(Symbol)>& weight, std::int64_t target) const;
    /// Largest total weight over all words; nullopt for the zero polynomial.
    std::optional<Rational> max_weight(const std::function<Rational(Symbol)>& weight) const;

    /// Homomorphic substitution; letters for which `image` returns nullopt are
    /// fixed.
    Poly substitute(const std::function<std::optional<Poly>(Symbol)>& image) const;
    /// Leibniz extension of a map on generators (signs are moot over Z2).
    /// `d` returns nullopt for generators with zero differential.
    Poly derive(const std::function<std::optional<Poly>(Symbol)>& d) const;

    /// Canonical text. Words are ordered by length, then lexicographically by
    /// generator name. Factored values print their factors in parentheses.
    std::string to_string() const;

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }
    friend bool operator==(const Poly& p, const Poly& q);

    struct Node;

private:
    explicit Poly(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;

    friend class detail::PolyAccess;
};

/// Words in serialization order: length first, then generator names.
bool serial_less(const Word& a, const Word& b);
std::string to_string(const Word& w);

}  // namespace legch
