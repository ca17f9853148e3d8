#include "daml/validator.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

namespace daml {

namespace {

struct RuleInfo {
    std::string_view id;
    Severity severity;
    std::string_view description;
};

constexpr std::array<RuleInfo, 15> kCatalog{{
    {"E001", Severity::Error,
     "Each data node must have a unique name within the architecture."},
    {"E002", Severity::Error, "Each port must have a unique name within its node."},
    {"E003", Severity::Error,
     "Both connection endpoints must name an existing node and one of its ports."},
    {"E004", Severity::Error,
     "A connection must go from an out port of its source node to an in port of its target "
     "node."},
    {"E005", Severity::Error,
     "A connection is a unidirectional communication channel between two data ports of two "
     "different components; both endpoints may not lie in the same node."},
    {"E006", Severity::Error,
     "A receive event must be bound to an in port of its node, and a send action to an out "
     "port."},
    {"E007", Severity::Error,
     "Both link endpoints must name behavior elements declared in the same node."},
    {"E008", Severity::Error, "The links of a behavior must not form a cycle."},
    {"E009", Severity::Error,
     "A link may not target an event; events are entry points and cannot be triggered by "
     "other elements."},
    {"E010", Severity::Error,
     "Each behavior element must have a unique name within its node."},
    {"W101", Severity::Warning,
     "An action with no incoming link is unreachable in a node that also declares events."},
    {"W102", Severity::Warning,
     "A declared port should be referenced by at least one connection."},
    {"W103", Severity::Warning,
     "A node with a Store action should declare a storage technology in its representation."},
    {"W104", Severity::Warning,
     "Connected nodes that both declare formats should share at least one common format."},
    {"W105", Severity::Warning,
     "The node-level graph should not contain a cycle."},
}};

class Validation {
  public:
    Validation(const Model& model, const SpanMap& spans) : model_(model), spans_(spans) {}

    std::vector<Diagnostic> run() {
        check_node_names();
        check_ports();
        check_connections();
        check_behaviors();
        check_unused_ports();
        check_format_compatibility();
        check_node_graph_cycle();
        sort_diagnostics(out_);
        return std::move(out_);
    }

  private:
    void add(std::string_view rule, std::string message, EntityKey key,
             std::vector<std::string> path) {
        auto info = std::find_if(kCatalog.begin(), kCatalog.end(),
                                 [&](const RuleInfo& r) { return r.id == rule; });
        out_.push_back(Diagnostic{info->severity, std::string(rule), std::move(message),
                                  span_of(spans_, key), std::move(path)});
    }

    std::string connection_label(int index) const {
        const Connection& connection = model_.connections[static_cast<std::size_t>(index)];
        if (connection.name) return *connection.name;
        return "connection#" + std::to_string(index + 1);
    }

    // E001
    void check_node_names() {
        for (std::size_t i = 0; i < model_.nodes.size(); ++i) {
            const std::string& name = model_.nodes[i].name;
            for (std::size_t j = 0; j < i; ++j) {
                if (model_.nodes[j].name == name) {
                    add("E001", "duplicate node name " + quoted(name),
                        EntityKey::node_at(static_cast<int>(i)), {name});
                    break;
                }
            }
        }
    }

    // E002
    void check_ports() {
        for (std::size_t i = 0; i < model_.nodes.size(); ++i) {
            const DataNode& node = model_.nodes[i];
            for (std::size_t p = 0; p < node.ports.size(); ++p) {
                for (std::size_t q = 0; q < p; ++q) {
                    if (node.ports[q].name == node.ports[p].name) {
                        add("E002",
                            "duplicate port name \"" + node.ports[p].name + "\" in node " +
                                quoted(node.name),
                            EntityKey::port_at(static_cast<int>(i), static_cast<int>(p)),
                            {node.name, node.ports[p].name});
                        break;
                    }
                }
            }
        }
    }

    // E003, E004, E005
    void check_connections() {
        for (std::size_t c = 0; c < model_.connections.size(); ++c) {
            const Connection& connection = model_.connections[c];
            EntityKey key = EntityKey::connection_at(static_cast<int>(c));
            std::vector<std::string> path{connection_label(static_cast<int>(c))};

            const DataPort* source = resolve_endpoint(connection.source, "source", key, path);
            const DataPort* target = resolve_endpoint(connection.target, "target", key, path);

            if (source && source->direction != PortDirection::Out) {
                add("E004",
                    "connection source " + quoted(connection.source.node) + "." +
                        connection.source.port + " must be an out port",
                    key, path);
            }
            if (target && target->direction != PortDirection::In) {
                add("E004",
                    "connection target " + quoted(connection.target.node) + "." +
                        connection.target.port + " must be an in port",
                    key, path);
            }
            if (connection.source.node == connection.target.node) {
                add("E005",
                    "connection endpoints are both in node " + quoted(connection.source.node) +
                        "; a connection must join two different components",
                    key, path);
            }
        }
    }

    const DataPort* resolve_endpoint(const Endpoint& endpoint, std::string_view which,
                                     const EntityKey& key, const std::vector<std::string>& path) {
        const DataNode* node = find_node(model_, endpoint.node);
        if (node == nullptr) {
            add("E003",
                "unresolved connection " + std::string(which) + ": unknown node " +
                    quoted(endpoint.node),
                key, path);
            return nullptr;
        }
        const DataPort* port = find_port(*node, endpoint.port);
        if (port == nullptr) {
            add("E003",
                "unresolved connection " + std::string(which) + ": node " + quoted(endpoint.node) +
                    " has no port \"" + endpoint.port + "\"",
                key, path);
            return nullptr;
        }
        return port;
    }

    // E006..E010, W101, W103
    void check_behaviors() {
        for (std::size_t i = 0; i < model_.nodes.size(); ++i) {
            const DataNode& node = model_.nodes[i];
            if (!node.behavior) continue;
            int ni = static_cast<int>(i);

            check_port_bindings(node, ni);
            check_element_names(node, ni);
            check_links(node, ni);
            check_link_cycle(node, ni);
            check_unreachable_actions(node, ni);
            check_store_without_storage(node, ni);
        }
    }

    // E006
    void check_port_bindings(const DataNode& node, int ni) {
        const NodeBehavior& behavior = *node.behavior;
        for (std::size_t e = 0; e < behavior.elements.size(); ++e) {
            const BehaviorElement& element = behavior.elements[e];
            EntityKey key = EntityKey::element_at(ni, static_cast<int>(e));
            std::vector<std::string> path{node.name, element.name};
            if (const auto* receive = std::get_if<ReceiveEvent>(&element.kind)) {
                const DataPort* port = find_port(node, receive->port);
                if (port == nullptr) {
                    add("E006",
                        "receive event \"" + element.name + "\" names missing port \"" +
                            receive->port + "\"",
                        key, path);
                } else if (port->direction != PortDirection::In) {
                    add("E006",
                        "receive event \"" + element.name + "\" must be bound to an in port, "
                        "but \"" + receive->port + "\" is an out port",
                        key, path);
                }
            } else if (const auto* send = std::get_if<SendAction>(&element.kind)) {
                const DataPort* port = find_port(node, send->port);
                if (port == nullptr) {
                    add("E006",
                        "send action \"" + element.name + "\" names missing port \"" + send->port +
                            "\"",
                        key, path);
                } else if (port->direction != PortDirection::Out) {
                    add("E006",
                        "send action \"" + element.name + "\" must be bound to an out port, "
                        "but \"" + send->port + "\" is an in port",
                        key, path);
                }
            }
        }
    }

    // E010
    void check_element_names(const DataNode& node, int ni) {
        const auto& elements = node.behavior->elements;
        for (std::size_t e = 0; e < elements.size(); ++e) {
            for (std::size_t f = 0; f < e; ++f) {
                if (elements[f].name == elements[e].name) {
                    add("E010",
                        "duplicate behavior element name \"" + elements[e].name + "\" in node " +
                            quoted(node.name),
                        EntityKey::element_at(ni, static_cast<int>(e)),
                        {node.name, elements[e].name});
                    break;
                }
            }
        }
    }

    const BehaviorElement* find_element(const NodeBehavior& behavior,
                                        std::string_view name) const {
        for (const BehaviorElement& element : behavior.elements) {
            if (element.name == name) return &element;
        }
        return nullptr;
    }

    // E007, E009
    void check_links(const DataNode& node, int ni) {
        const NodeBehavior& behavior = *node.behavior;
        for (std::size_t l = 0; l < behavior.links.size(); ++l) {
            const Link& link = behavior.links[l];
            EntityKey key = EntityKey::link_at(ni, static_cast<int>(l));
            std::vector<std::string> path{node.name};
            if (find_element(behavior, link.from) == nullptr) {
                add("E007",
                    "link endpoint \"" + link.from + "\" does not name a behavior element", key,
                    path);
            }
            const BehaviorElement* to = find_element(behavior, link.to);
            if (to == nullptr) {
                add("E007", "link endpoint \"" + link.to + "\" does not name a behavior element",
                    key, path);
            } else if (to->is_event()) {
                add("E009",
                    "link targets event \"" + link.to + "\"; events cannot be triggered by links",
                    key, path);
            }
        }
    }

    // E008 — one report per behavior, at the first declared link on the cycle.
    void check_link_cycle(const DataNode& node, int ni) {
        const NodeBehavior& behavior = *node.behavior;
        const auto& elements = behavior.elements;
        auto index_of = [&](std::string_view name) -> int {
            for (std::size_t e = 0; e < elements.size(); ++e) {
                if (elements[e].name == name) return static_cast<int>(e);
            }
            return -1;
        };

        std::vector<std::vector<int>> adj(elements.size());
        for (const Link& link : behavior.links) {
            int from = index_of(link.from);
            int to = index_of(link.to);
            if (from >= 0 && to >= 0) adj[static_cast<std::size_t>(from)].push_back(to);
        }

        // DFS in declaration order; the first back edge found identifies a cycle.
        enum class Color { White, Gray, Black };
        std::vector<Color> color(elements.size(), Color::White);
        std::vector<int> trail;
        std::vector<int> cycle;

        auto dfs = [&](auto&& self, int v) -> bool {
            color[static_cast<std::size_t>(v)] = Color::Gray;
            trail.push_back(v);
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == Color::Gray) {
                    auto start = std::find(trail.begin(), trail.end(), w);
                    cycle.assign(start, trail.end());
                    return true;
                }
                if (color[static_cast<std::size_t>(w)] == Color::White && self(self, w)) {
                    return true;
                }
            }
            color[static_cast<std::size_t>(v)] = Color::Black;
            trail.pop_back();
            return false;
        };

        for (std::size_t e = 0; e < elements.size() && cycle.empty(); ++e) {
            if (color[e] == Color::White) dfs(dfs, static_cast<int>(e));
        }
        if (cycle.empty()) return;

        // Describe the cycle and blame the first declared link lying on it.
        std::set<std::pair<std::string, std::string>> cycle_edges;
        std::string description;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const std::string& from = elements[static_cast<std::size_t>(cycle[k])].name;
            const std::string& to =
                elements[static_cast<std::size_t>(cycle[(k + 1) % cycle.size()])].name;
            cycle_edges.insert({from, to});
            description += from;
            description += " -> ";
        }
        description += elements[static_cast<std::size_t>(cycle[0])].name;

        int blame = 0;
        for (std::size_t l = 0; l < behavior.links.size(); ++l) {
            if (cycle_edges.count({behavior.links[l].from, behavior.links[l].to})) {
                blame = static_cast<int>(l);
                break;
            }
        }
        add("E008", "behavior links form a cycle: " + description, EntityKey::link_at(ni, blame),
            {node.name});
    }

    // W101
    void check_unreachable_actions(const DataNode& node, int ni) {
        const NodeBehavior& behavior = *node.behavior;
        bool has_event = std::any_of(behavior.elements.begin(), behavior.elements.end(),
                                     [](const BehaviorElement& e) { return e.is_event(); });
        if (!has_event) return;
        for (std::size_t e = 0; e < behavior.elements.size(); ++e) {
            const BehaviorElement& element = behavior.elements[e];
            if (element.is_event()) continue;
            bool linked = std::any_of(behavior.links.begin(), behavior.links.end(),
                                      [&](const Link& l) { return l.to == element.name; });
            if (!linked) {
                add("W101",
                    "action \"" + element.name + "\" has no incoming link and is unreachable "
                    "from the node's events",
                    EntityKey::element_at(ni, static_cast<int>(e)), {node.name, element.name});
            }
        }
    }

    // W103
    void check_store_without_storage(const DataNode& node, int ni) {
        if (node.representation && node.representation->storage) return;
        const auto& elements = node.behavior->elements;
        for (std::size_t e = 0; e < elements.size(); ++e) {
            if (std::holds_alternative<StoreAction>(elements[e].kind)) {
                add("W103",
                    "node " + quoted(node.name) +
                        " has a store action but declares no storage technology",
                    EntityKey::element_at(ni, static_cast<int>(e)), {node.name});
                return;
            }
        }
    }

    // W102
    void check_unused_ports() {
        for (std::size_t i = 0; i < model_.nodes.size(); ++i) {
            const DataNode& node = model_.nodes[i];
            for (std::size_t p = 0; p < node.ports.size(); ++p) {
                const DataPort& port = node.ports[p];
                bool used = false;
                for (const Connection& connection : model_.connections) {
                    if ((connection.source.node == node.name &&
                         connection.source.port == port.name) ||
                        (connection.target.node == node.name &&
                         connection.target.port == port.name)) {
                        used = true;
                        break;
                    }
                }
                if (!used) {
                    add("W102",
                        "port \"" + port.name + "\" of node " + quoted(node.name) +
                            " is not used by any connection",
                        EntityKey::port_at(static_cast<int>(i), static_cast<int>(p)),
                        {node.name, port.name});
                }
            }
        }
    }

    // W104
    void check_format_compatibility() {
        for (std::size_t c = 0; c < model_.connections.size(); ++c) {
            const Connection& connection = model_.connections[c];
            const DataNode* source = find_node(model_, connection.source.node);
            const DataNode* target = find_node(model_, connection.target.node);
            if (!source || !target) continue;
            if (!source->representation || !target->representation) continue;
            const auto& a = source->representation->formats;
            const auto& b = target->representation->formats;
            if (a.empty() || b.empty()) continue;
            bool shared = std::any_of(a.begin(), a.end(), [&](const DataFormat& f) {
                return std::find(b.begin(), b.end(), f) != b.end();
            });
            if (!shared) {
                add("W104",
                    "nodes " + quoted(source->name) + " and " + quoted(target->name) +
                        " declare formats with no common member",
                    EntityKey::connection_at(static_cast<int>(c)),
                    {connection_label(static_cast<int>(c))});
            }
        }
    }

    // W105
    void check_node_graph_cycle() {
        if (node_graph(model_).has_cycle()) {
            add("W105", "the node graph contains a cycle", EntityKey::model(), {});
        }
    }

    const Model& model_;
    const SpanMap& spans_;
    std::vector<Diagnostic> out_;
};

} // namespace

std::vector<Diagnostic> validate(const Model& model, const SpanMap& spans) {
    return Validation(model, spans).run();
}

bool is_valid(const Model& model) {
    return !has_errors(validate(model));
}

Result<std::string> explain(std::string_view rule) {
    for (const RuleInfo& info : kCatalog) {
        if (info.id == rule) return std::string(info.description);
    }
    return Error{"unknown-rule", "unknown rule '" + std::string(rule) + "'"};
}

std::vector<std::string> rule_ids() {
    std::vector<std::string> ids;
    ids.reserve(kCatalog.size());
    for (const RuleInfo& info : kCatalog) ids.emplace_back(info.id);
    return ids;
}

} // namespace daml
