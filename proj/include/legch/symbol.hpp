#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace legch {

/// Interned generator name (a crossing label such as "b2" or "k1.a1").
///
/// Symbols compare and hash by their interning id, which is stable for the
/// lifetime of the process but not across runs; anything that must be
/// reproducible (serialization, reports) orders by `str()` instead.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string_view name);

    const std::string& str() const;
    std::uint32_t id() const noexcept { return id_; }

    /// Prepends "prefix." (no-op for an empty prefix).
    Symbol prefixed(std::string_view prefix) const;

    friend bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }
    friend auto operator<=>(Symbol a, Symbol b) noexcept { return a.id_ <=> b.id_; }

private:
    std::uint32_t id_ = 0;
};

/// Orders symbols by their text rather than by interning id.
struct ByName {
    bool operator()(Symbol a, Symbol b) const { return a.str() < b.str(); }
};

/// Non-empty, starts with a letter or '_', then letters, digits, '_' and
/// single '.' separators between non-empty segments.
bool is_valid_name(std::string_view name) noexcept;

}  // namespace legch

template <>
struct std::hash<legch::Symbol> {
    std::size_t operator()(legch::Symbol s) const noexcept { return s.id(); }
};
