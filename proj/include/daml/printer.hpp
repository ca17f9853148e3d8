#pragma once

#include <string>

#include "daml/model.hpp"

namespace daml {

/// Canonical text form: 2-space indentation, explicit level clause, node
/// parts ordered ports / representation / behavior, one item per line,
/// inline action payloads. parse(print(m)) reproduces m structurally, and
/// print is idempotent over parse.
std::string print(const Model& model);

} // namespace daml
