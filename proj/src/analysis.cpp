#include "daml/analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace daml {

namespace {

// Simple-path enumeration between two vertices, aborted once `cap` paths
// have been collected. Neighbor order follows the supplied adjacency lists.
class PathFinder {
  public:
    PathFinder(const std::vector<std::vector<std::size_t>>& adj, std::size_t cap)
        : adj_(adj), on_path_(adj.size(), false), cap_(cap) {}

    std::vector<std::vector<std::size_t>> find(std::size_t from, std::size_t to) {
        paths_.clear();
        path_.clear();
        walk(from, to);
        return std::move(paths_);
    }

  private:
    bool walk(std::size_t v, std::size_t to) {
        path_.push_back(v);
        on_path_[v] = true;
        if (v == to) {
            paths_.push_back(path_);
        } else {
            for (std::size_t w : adj_[v]) {
                if (on_path_[w]) continue;
                if (paths_.size() >= cap_) break;
                walk(w, to);
            }
        }
        on_path_[v] = false;
        path_.pop_back();
        return paths_.size() >= cap_;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<bool> on_path_;
    std::vector<std::size_t> path_;
    std::vector<std::vector<std::size_t>> paths_;
    std::size_t cap_;
};

std::vector<std::string> names_of(const NodeGraph& graph, const std::vector<std::size_t>& path) {
    std::vector<std::string> names;
    names.reserve(path.size());
    for (std::size_t v : path) names.push_back(graph.vertices[v]);
    return names;
}

std::optional<ProcessingType> processing_of(const Model& model, std::string_view name) {
    const DataNode* node = find_node(model, name);
    if (node && node->representation) return node->representation->processing;
    return std::nullopt;
}

bool has_action(const DataNode& node, bool (*pred)(const ElementKind&)) {
    if (!node.behavior) return false;
    return std::any_of(node.behavior->elements.begin(), node.behavior->elements.end(),
                       [&](const BehaviorElement& e) { return pred(e.kind); });
}

// Adjacency with each neighbor list sorted by vertex name, so that DFS
// emission order is the lexicographic order of the resulting name paths.
std::vector<std::vector<std::size_t>> lexicographic_adjacency(const NodeGraph& graph) {
    auto adj = graph.adjacency();
    for (auto& neighbors : adj) {
        std::sort(neighbors.begin(), neighbors.end(), [&](std::size_t a, std::size_t b) {
            return graph.vertices[a] < graph.vertices[b];
        });
    }
    return adj;
}

} // namespace

std::string_view to_string(Pattern value) {
    switch (value) {
        case Pattern::Pipeline: return "Pipeline";
        case Pattern::Lambda: return "Lambda";
        case Pattern::Kappa: return "Kappa";
        case Pattern::Unknown: return "Unknown";
    }
    return "";
}

Result<std::vector<std::string>> reachable(const Model& model, std::string_view from) {
    NodeGraph graph = node_graph(model);
    auto start = graph.index_of(from);
    if (!start) {
        return Error{"unknown-node", "unknown node " + quoted(from)};
    }
    auto adj = graph.adjacency();
    std::vector<bool> seen(graph.vertices.size(), false);
    std::deque<std::size_t> queue{*start};
    seen[*start] = true;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<std::string> result;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        if (seen[v]) result.push_back(graph.vertices[v]);
    }
    return result;
}

Result<PathEnumeration> source_sink_paths(const Model& model, std::size_t cap) {
    NodeGraph graph = node_graph(model);
    if (graph.has_cycle()) {
        return Error{"cyclic-graph", "the node graph contains a cycle"};
    }
    auto adj = lexicographic_adjacency(graph);
    auto in = graph.in_degrees();
    auto out = graph.out_degrees();

    std::vector<std::size_t> sources;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        if (in[v] == 0) sources.push_back(v);
    }
    std::sort(sources.begin(), sources.end(), [&](std::size_t a, std::size_t b) {
        return graph.vertices[a] < graph.vertices[b];
    });

    PathEnumeration result;
    std::vector<std::size_t> path;
    // DFS; aborts (setting the flag) the moment a (cap+1)-th path appears.
    auto emit = [&](auto&& self, std::size_t v) -> bool {
        path.push_back(v);
        if (out[v] == 0) {
            if (result.paths.size() == cap) {
                result.truncated = true;
                path.pop_back();
                return true;
            }
            result.paths.push_back(names_of(graph, path));
        } else {
            for (std::size_t w : adj[v]) {
                if (self(self, w)) {
                    path.pop_back();
                    return true;
                }
            }
        }
        path.pop_back();
        return false;
    };
    for (std::size_t s : sources) {
        if (emit(emit, s)) break;
    }
    return result;
}

PatternClass classify(const Model& model) {
    NodeGraph graph = node_graph(model);
    if (graph.vertices.empty() || graph.has_cycle()) return PatternClass{};

    auto adj = graph.adjacency();
    auto batch_node = [&](std::string_view name) {
        return processing_of(model, name) == ProcessingType::Batch;
    };
    auto realtime_node = [&](std::string_view name) {
        return processing_of(model, name) == ProcessingType::RealTime;
    };

    // (1) Lambda: a fork f, a join s, and two edge-disjoint f⇒s paths where
    // one passes a Batch node and the other a RealTime node.
    // Bounded per pair so adversarial inputs cannot lock up classification.
    constexpr std::size_t kPairCap = 100000;
    PathFinder finder(adj, kPairCap);
    for (std::size_t f = 0; f < graph.vertices.size(); ++f) {
        for (std::size_t s = 0; s < graph.vertices.size(); ++s) {
            if (f == s) continue;
            auto paths = finder.find(f, s);
            if (paths.size() < 2) continue;
            for (std::size_t i = 0; i < paths.size(); ++i) {
                for (std::size_t j = i + 1; j < paths.size(); ++j) {
                    std::set<std::pair<std::size_t, std::size_t>> edges;
                    for (std::size_t k = 0; k + 1 < paths[i].size(); ++k) {
                        edges.insert({paths[i][k], paths[i][k + 1]});
                    }
                    bool disjoint = true;
                    for (std::size_t k = 0; k + 1 < paths[j].size() && disjoint; ++k) {
                        disjoint = !edges.count({paths[j][k], paths[j][k + 1]});
                    }
                    if (!disjoint) continue;
                    auto has = [&](const std::vector<std::size_t>& path, auto&& pred) {
                        return std::any_of(path.begin(), path.end(), [&](std::size_t v) {
                            return pred(graph.vertices[v]);
                        });
                    };
                    const std::vector<std::size_t>* batch = nullptr;
                    const std::vector<std::size_t>* realtime = nullptr;
                    if (has(paths[i], batch_node) && has(paths[j], realtime_node)) {
                        batch = &paths[i];
                        realtime = &paths[j];
                    } else if (has(paths[j], batch_node) && has(paths[i], realtime_node)) {
                        batch = &paths[j];
                        realtime = &paths[i];
                    } else {
                        continue;
                    }
                    PatternClass result;
                    result.value = Pattern::Lambda;
                    result.lambda = LambdaEvidence{graph.vertices[f], graph.vertices[s],
                                                   names_of(graph, *batch),
                                                   names_of(graph, *realtime)};
                    return result;
                }
            }
        }
    }

    bool any_batch = std::any_of(graph.vertices.begin(), graph.vertices.end(), batch_node);
    bool any_realtime = std::any_of(graph.vertices.begin(), graph.vertices.end(), realtime_node);

    // (2) Kappa: batch-free, stream-present, and every source reaches a sink.
    if (!any_batch && any_realtime) {
        auto out = graph.out_degrees();
        auto in = graph.in_degrees();
        bool all_reach = true;
        for (std::size_t v = 0; v < graph.vertices.size() && all_reach; ++v) {
            if (in[v] != 0) continue;
            auto reached = reachable(model, graph.vertices[v]);
            all_reach = std::any_of(reached.value().begin(), reached.value().end(),
                                    [&](const std::string& name) {
                                        return out[*graph.index_of(name)] == 0;
                                    });
        }
        if (all_reach) {
            PatternClass result;
            result.value = Pattern::Kappa;
            result.covering_paths = source_sink_paths(model).value().paths;
            return result;
        }
    }

    // (3) Pipeline: the whole graph is one simple path.
    auto in = graph.in_degrees();
    auto out = graph.out_degrees();
    std::size_t n = graph.vertices.size();
    bool degrees_ok = graph.edges.size() == n - 1 &&
                      std::all_of(in.begin(), in.end(), [](std::size_t d) { return d <= 1; }) &&
                      std::all_of(out.begin(), out.end(), [](std::size_t d) { return d <= 1; }) &&
                      std::count(in.begin(), in.end(), std::size_t{0}) == 1 &&
                      std::count(out.begin(), out.end(), std::size_t{0}) == 1;
    if (degrees_ok) {
        std::size_t head = static_cast<std::size_t>(
            std::find(in.begin(), in.end(), std::size_t{0}) - in.begin());
        std::vector<std::size_t> path{head};
        while (!adj[path.back()].empty()) path.push_back(adj[path.back()].front());
        if (path.size() == n) {
            PatternClass result;
            result.value = Pattern::Pipeline;
            result.covering_paths = std::vector<std::vector<std::string>>{names_of(graph, path)};
            return result;
        }
    }

    return PatternClass{};
}

std::vector<NodeFlow> flow_summary(const Model& model) {
    NodeGraph graph = node_graph(model);
    auto in = graph.in_degrees();
    auto out = graph.out_degrees();

    std::vector<NodeFlow> summary;
    summary.reserve(model.nodes.size());
    for (const DataNode& node : model.nodes) {
        NodeFlow flow;
        flow.name = node.name;
        std::size_t v = *graph.index_of(node.name);
        flow.in_degree = in[v];
        flow.out_degree = out[v];
        if (node.representation) {
            flow.formats = node.representation->formats;
            flow.processing = node.representation->processing;
            flow.storage = node.representation->storage;
        }
        bool generates = has_action(node, [](const ElementKind& k) {
            return std::holds_alternative<GenerateAction>(k);
        });
        flow.source = generates || flow.in_degree == 0;
        flow.sink = flow.out_degree == 0;
        flow.serving = has_action(node, [](const ElementKind& k) {
                           return std::holds_alternative<StoreAction>(k);
                       }) ||
                       has_action(node, [](const ElementKind& k) {
                           return std::holds_alternative<AnalyzeAction>(k);
                       });
        summary.push_back(std::move(flow));
    }
    return summary;
}

} // namespace daml
