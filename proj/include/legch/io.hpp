#pragma once

#include <string>

#include "json.hpp"
#include "legch/dga.hpp"
#include "legch/holonomy.hpp"
#include "legch/knots.hpp"
#include "legch/obstruction.hpp"

namespace legch::io {

using Json = nlohmann::ordered_json;

/// Polynomials with at most this many words are written in expanded canonical
/// form; larger factored values keep their factored text.
inline constexpr std::size_t kExpandedTextLimit = std::size_t{1} << 16;

std::string poly_text(const Poly& p);

/// Counts that fit in 64 bits are numbers, larger ones decimal strings.
Json count_json(const Count& c);

// Every reader throws SchemaError (or the relevant domain error) with a
// message naming the offending field.

Json dga_to_json(const Dga& dga);
Dga dga_from_json(const Json& j);

Json tangle_to_json(const Tangle& t);
Tangle tangle_from_json(const Json& j);

Json event_to_json(const MoveEvent& e);
MoveEvent event_from_json(const Json& j);

Json script_to_json(const MoveScript& s);
MoveScript script_from_json(const Json& j);

Json map_to_json(const AlgebraMap& m);
AlgebraMap map_from_json(const Json& j);

Json monodromy_to_json(const Monodromy& m, ScriptMode mode);

Json certificate_to_json(const Certificate& c);
Json verdict_to_json(const Verdict& v);
Json family_to_json(const FamilyResult& f);

Json validation_to_json(const ValidationReport& r);
Json class_report_to_json(const ClassReport& r);

/// Reads a whole file, or standard input for "-".
std::string read_text(const std::string& path);

/// Throws ParseError naming `source`.
Json parse_json(const std::string& text, const std::string& source);

Json read_json(const std::string& path);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace legch::io
