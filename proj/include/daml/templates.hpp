#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace daml {

/// Names of the bundled starter models: dosm, lambda, kappa, pipeline.
std::vector<std::string_view> template_names();

/// Exact text of a bundled starter model (the same bytes as the file shipped
/// under models/), or nullopt for an unknown name.
std::optional<std::string_view> template_content(std::string_view name);

} // namespace daml
