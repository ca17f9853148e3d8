#pragma once

#include <string>
#include <string_view>

#include "daml/error.hpp"
#include "daml/model.hpp"

namespace daml {

enum class RankDir { LR, TB };

struct DotOptions {
    RankDir rankdir = RankDir::LR;
    bool formats_on_edges = false;   // label edges with the source node's formats
    bool cluster_by_location = false; // group Cloud/Local nodes into clusters
};

/// Lossless interchange document, version tag `daml-json/1`. Deterministic:
/// fixed key order, arrays in declaration order, compact encoding.
std::string to_json(const Model& model);

/// Strict inverse of to_json: unknown version tags and unknown fields are
/// rejected, and the payload must satisfy checked model construction.
/// Errors: `bad-version`, `schema-violation` (message carries a JSON path).
Result<Model> from_json(std::string_view text);

/// Graphviz view of the node graph: one box per node (name plus
/// processing/storage annotations plus the node's action kinds), one edge
/// per connection, declaration order throughout.
std::string to_dot(const Model& model, const DotOptions& options = {});

} // namespace daml
