#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "daml/diagnostics.hpp"
#include "daml/model.hpp"

namespace daml {

struct ParseResult {
    std::optional<Model> model;          // present iff no error-severity diagnostic
    std::vector<Diagnostic> diagnostics; // P001 syntax, P002 construction violations
    SpanMap spans;                       // entity blame spans; filled when model is present
};

/// Parses one `.daml` document. Never throws on bad input: syntax problems
/// become diagnostics and the parser resynchronizes at item boundaries so one
/// run can report several independent errors.
ParseResult parse(std::string_view source, std::string file = "<input>");

} // namespace daml
