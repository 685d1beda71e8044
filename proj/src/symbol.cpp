#include "legch/symbol.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "legch/error.hpp"

namespace legch {
namespace {

class SymbolTable {
public:
    SymbolTable() { intern(""); }

    std::uint32_t intern(std::string_view name) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = ids_.find(name); it != ids_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        if (auto it = ids_.find(name); it != ids_.end()) return it->second;
        names_.emplace_back(name);
        auto id = static_cast<std::uint32_t>(names_.size() - 1);
        ids_.emplace(names_.back(), id);
        return id;
    }

    const std::string& name(std::uint32_t id) {
        std::shared_lock lock(mutex_);
        return names_[id];
    }

private:
    std::shared_mutex mutex_;
    // deque keeps element addresses stable, so the string_view keys stay valid
    std::deque<std::string> names_;
    std::unordered_map<std::string_view, std::uint32_t> ids_;
};

SymbolTable& table() {
    static SymbolTable instance;
    return instance;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
    if (!is_valid_name(name)) throw Error(ErrorCode::InvalidArgument, "invalid generator name '" + std::string(name) + "'");
    id_ = table().intern(name);
}

const std::string& Symbol::str() const { return table().name(id_); }

Symbol Symbol::prefixed(std::string_view prefix) const {
    if (prefix.empty()) return *this;
    std::string full(prefix);
    full += '.';
    full += str();
    return Symbol(full);
}

bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    bool segment_start = true;
    for (char c : name) {
        auto u = static_cast<unsigned char>(c);
        if (c == '.') {
            if (segment_start) return false;
            segment_start = true;
            continue;
        }
        if (segment_start) {
            if (!(std::isalpha(u) || c == '_')) return false;
            segment_start = false;
        } else if (!(std::isalnum(u) || c == '_')) {
            return false;
        }
    }
    return !segment_start;
}

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::UnknownGenerator: return "UnknownGenerator";
        case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
        case ErrorCode::NotQuarterOdd: return "NotQuarterOdd";
        case ErrorCode::MissingHeights: return "MissingHeights";
        case ErrorCode::EvenParameter: return "EvenParameter";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::ClosureReferenced: return "ClosureReferenced";
        case ErrorCode::NotDegreeOne: return "NotDegreeOne";
        case ErrorCode::PrefixCollision: return "PrefixCollision";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::RIIGeneralHolonomyUnsupported: return "RIIGeneralHolonomyUnsupported";
        case ErrorCode::MalformedDifferential: return "MalformedDifferential";
        case ErrorCode::StaleEvent: return "StaleEvent";
        case ErrorCode::NotAnEndomorphism: return "NotAnEndomorphism";
        case ErrorCode::NotDegreePreserving: return "NotDegreePreserving";
        case ErrorCode::FlyCollision: return "FlyCollision";
        case ErrorCode::NotDegreeZeroMarker: return "NotDegreeZeroMarker";
        case ErrorCode::BadSummand: return "BadSummand";
        case ErrorCode::BadPower: return "BadPower";
        case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

}  // namespace legch
