#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "daml/diagnostics.hpp"
#include "daml/error.hpp"
#include "daml/model.hpp"

namespace daml {

/// Runs the whole rule catalog (E001-E010, W101-W105) over `model`.
/// `spans` maps model entities to source locations for blame; entities
/// without an entry yield diagnostics with no span. Result is sorted by
/// (line, col, rule, path, message).
std::vector<Diagnostic> validate(const Model& model, const SpanMap& spans = {});

/// A model is valid when validation produces zero error-severity diagnostics.
bool is_valid(const Model& model);

/// One-paragraph description of a rule, e.g. explain("E005").
/// Error code: `unknown-rule`.
Result<std::string> explain(std::string_view rule);

/// Every known rule id, E-rules then W-rules, ascending.
std::vector<std::string> rule_ids();

} // namespace daml
