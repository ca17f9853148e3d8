#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "daml/error.hpp"
#include "daml/model.hpp"

namespace daml {

enum class Pattern { Pipeline, Lambda, Kappa, Unknown };

std::string_view to_string(Pattern value);

/// Witness for a Lambda classification: two edge-disjoint fork→join paths,
/// one passing through a Batch node, the other through a RealTime node.
struct LambdaEvidence {
    std::string fork;
    std::string join;
    std::vector<std::string> batch_path;
    std::vector<std::string> realtime_path;
    bool operator==(const LambdaEvidence&) const = default;
};

struct PatternClass {
    Pattern value = Pattern::Unknown;
    std::optional<LambdaEvidence> lambda;  // present iff value == Lambda
    // Present iff value is Kappa or Pipeline: the covering source→sink paths.
    std::optional<std::vector<std::vector<std::string>>> covering_paths;
    bool operator==(const PatternClass&) const = default;
};

struct PathEnumeration {
    std::vector<std::vector<std::string>> paths; // lexicographic by node names
    bool truncated = false;                      // a (cap+1)-th path existed
    bool operator==(const PathEnumeration&) const = default;
};

/// Role summary of one node; degrees come from the collapsed node graph.
struct NodeFlow {
    std::string name;
    std::size_t in_degree = 0;
    std::size_t out_degree = 0;
    std::vector<DataFormat> formats;
    std::optional<ProcessingType> processing;
    std::optional<StorageTech> storage;
    bool source = false;  // has a generate action, or in-degree 0
    bool sink = false;    // out-degree 0
    bool serving = false; // has a store or analyze action
    bool operator==(const NodeFlow&) const = default;
};

/// Forward reachability over the node graph, including `from` itself;
/// result in node declaration order. Error: `unknown-node`.
Result<std::vector<std::string>> reachable(const Model& model, std::string_view from);

/// All simple paths from each source (in-degree 0) to each sink (out-degree
/// 0), lexicographically ordered, truncated at `cap`. Error: `cyclic-graph`.
Result<PathEnumeration> source_sink_paths(const Model& model, std::size_t cap = 10000);

/// First match wins: Lambda, then Kappa, then Pipeline, else Unknown.
/// Models with node-graph cycles (and the empty model) classify as Unknown.
PatternClass classify(const Model& model);

/// One entry per node in declaration order.
std::vector<NodeFlow> flow_summary(const Model& model);

} // namespace daml
