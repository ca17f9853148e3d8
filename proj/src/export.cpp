#include "daml/export.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

#include "json.hpp"

namespace daml {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// to_json
// ---------------------------------------------------------------------------

json format_to_json(const DataFormat& format) {
    json j;
    j["category"] = to_string(format.category());
    j["kind"] = to_string(format.kind());
    if (format.kind() == FormatKind::Other) j["label"] = format.label();
    return j;
}

json storage_to_json(const StorageTech& storage) {
    json j;
    j["family"] = to_string(storage.family());
    j["kind"] = to_string(storage.kind());
    if (storage.kind() == StorageKind::Other) j["label"] = storage.label();
    return j;
}

json element_to_json(const BehaviorElement& element) {
    json j;
    j["name"] = element.name;
    j["kind"] = element_verb(element.kind);
    struct Visitor {
        json& j;
        void operator()(const ReceiveEvent& e) const { j["port"] = e.port; }
        void operator()(const ExternalEvent& e) const { j["label"] = e.label; }
        void operator()(const GenerateAction& a) const {
            j["source"] = a.source;
            j["format"] = format_to_json(a.format);
        }
        void operator()(const IngestAction& a) const { j["steps"] = a.steps; }
        void operator()(const ProcessAction& a) const { j["subprocesses"] = a.subprocesses; }
        void operator()(const StoreAction& a) const {
            json tasks = json::array();
            for (StoreTask task : a.tasks) tasks.push_back(to_string(task));
            j["tasks"] = std::move(tasks);
        }
        void operator()(const AnalyzeAction& a) const { j["technique"] = a.technique; }
        void operator()(const ConsumeAction& a) const { j["mode"] = to_string(a.mode); }
        void operator()(const SendAction& a) const { j["port"] = a.port; }
    };
    std::visit(Visitor{j}, element.kind);
    return j;
}

json endpoint_to_json(const Endpoint& endpoint) {
    json j;
    j["node"] = endpoint.node;
    j["port"] = endpoint.port;
    return j;
}

// ---------------------------------------------------------------------------
// from_json
// ---------------------------------------------------------------------------

struct SchemaError {
    std::string message; // includes the JSON path
};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw SchemaError{path + ": " + what};
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(path, "unknown field \"" + key + "\"");
        }
    }
}

const json& require(const json& obj, const std::string& path, std::string_view key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field \"" + std::string(key) + "\"");
    return *it;
}

std::string as_string(const json& value, const std::string& path) {
    if (!value.is_string()) fail(path, "expected a string");
    return value.get<std::string>();
}

const json& as_object(const json& value, const std::string& path) {
    if (!value.is_object()) fail(path, "expected an object");
    return value;
}

const json& as_array(const json& value, const std::string& path) {
    if (!value.is_array()) fail(path, "expected an array");
    return value;
}

std::vector<std::string> string_list(const json& value, const std::string& path) {
    std::vector<std::string> items;
    std::size_t i = 0;
    for (const json& entry : as_array(value, path)) {
        items.push_back(as_string(entry, path + "[" + std::to_string(i++) + "]"));
    }
    return items;
}

DataFormat format_from_json(const json& value, const std::string& path) {
    const json& obj = as_object(value, path);
    check_keys(obj, path, {"category", "kind", "label"});
    auto category = format_category_from_string(
        as_string(require(obj, path, "category"), path + ".category"));
    if (!category) fail(path + ".category", "unknown format category");
    auto kind = format_kind_from_string(as_string(require(obj, path, "kind"), path + ".kind"));
    if (!kind) fail(path + ".kind", "unknown format kind");
    std::string label;
    if (obj.contains("label")) label = as_string(obj["label"], path + ".label");
    auto format = DataFormat::make(*category, *kind, std::move(label));
    if (!format) fail(path, "illegal format category/kind combination");
    return *format;
}

StorageTech storage_from_json(const json& value, const std::string& path) {
    const json& obj = as_object(value, path);
    check_keys(obj, path, {"family", "kind", "label"});
    auto family =
        storage_family_from_string(as_string(require(obj, path, "family"), path + ".family"));
    if (!family) fail(path + ".family", "unknown storage family");
    auto kind = storage_kind_from_string(as_string(require(obj, path, "kind"), path + ".kind"));
    if (!kind) fail(path + ".kind", "unknown storage kind");
    std::string label;
    if (obj.contains("label")) label = as_string(obj["label"], path + ".label");
    auto storage = StorageTech::make(*family, *kind, std::move(label));
    if (!storage) fail(path, "illegal storage family/kind combination");
    return *storage;
}

DataRepresentation representation_from_json(const json& value, const std::string& path) {
    const json& obj = as_object(value, path);
    check_keys(obj, path, {"formats", "processing", "storage", "location"});
    DataRepresentation repr;
    if (obj.contains("formats")) {
        std::size_t i = 0;
        for (const json& entry : as_array(obj["formats"], path + ".formats")) {
            repr.formats.push_back(
                format_from_json(entry, path + ".formats[" + std::to_string(i++) + "]"));
        }
    }
    if (obj.contains("processing")) {
        auto processing =
            processing_from_string(as_string(obj["processing"], path + ".processing"));
        if (!processing) fail(path + ".processing", "unknown processing type");
        repr.processing = *processing;
    }
    if (obj.contains("storage")) {
        repr.storage = storage_from_json(obj["storage"], path + ".storage");
    }
    if (obj.contains("location")) {
        auto location = location_from_string(as_string(obj["location"], path + ".location"));
        if (!location) fail(path + ".location", "unknown location");
        repr.location = *location;
    }
    return repr;
}

BehaviorElement element_from_json(const json& value, const std::string& path) {
    const json& obj = as_object(value, path);
    std::string name = as_string(require(obj, path, "name"), path + ".name");
    std::string kind = as_string(require(obj, path, "kind"), path + ".kind");

    if (kind == "receive") {
        check_keys(obj, path, {"name", "kind", "port"});
        return {std::move(name),
                ReceiveEvent{as_string(require(obj, path, "port"), path + ".port")}};
    }
    if (kind == "external") {
        check_keys(obj, path, {"name", "kind", "label"});
        return {std::move(name),
                ExternalEvent{as_string(require(obj, path, "label"), path + ".label")}};
    }
    if (kind == "generate") {
        check_keys(obj, path, {"name", "kind", "source", "format"});
        return {std::move(name),
                GenerateAction{as_string(require(obj, path, "source"), path + ".source"),
                               format_from_json(require(obj, path, "format"), path + ".format")}};
    }
    if (kind == "ingest") {
        check_keys(obj, path, {"name", "kind", "steps"});
        return {std::move(name),
                IngestAction{string_list(require(obj, path, "steps"), path + ".steps")}};
    }
    if (kind == "process") {
        check_keys(obj, path, {"name", "kind", "subprocesses"});
        return {std::move(name), ProcessAction{string_list(require(obj, path, "subprocesses"),
                                                           path + ".subprocesses")}};
    }
    if (kind == "store") {
        check_keys(obj, path, {"name", "kind", "tasks"});
        std::vector<StoreTask> tasks;
        std::size_t i = 0;
        for (const json& entry : as_array(require(obj, path, "tasks"), path + ".tasks")) {
            std::string entry_path = path + ".tasks[" + std::to_string(i++) + "]";
            auto task = store_task_from_string(as_string(entry, entry_path));
            if (!task) fail(entry_path, "unknown store task");
            tasks.push_back(*task);
        }
        return {std::move(name), StoreAction{std::move(tasks)}};
    }
    if (kind == "analyze") {
        check_keys(obj, path, {"name", "kind", "technique"});
        return {std::move(name),
                AnalyzeAction{as_string(require(obj, path, "technique"), path + ".technique")}};
    }
    if (kind == "consume") {
        check_keys(obj, path, {"name", "kind", "mode"});
        auto mode = consume_mode_from_string(as_string(require(obj, path, "mode"), path + ".mode"));
        if (!mode) fail(path + ".mode", "unknown consume mode");
        return {std::move(name), ConsumeAction{*mode}};
    }
    if (kind == "send") {
        check_keys(obj, path, {"name", "kind", "port"});
        return {std::move(name), SendAction{as_string(require(obj, path, "port"), path + ".port")}};
    }
    fail(path + ".kind", "unknown element kind \"" + kind + "\"");
}

DataNode node_from_json(const json& value, const std::string& path) {
    const json& obj = as_object(value, path);
    check_keys(obj, path, {"name", "ports", "representation", "behavior"});
    DataNode node;
    node.name = as_string(require(obj, path, "name"), path + ".name");
    if (obj.contains("ports")) {
        std::size_t i = 0;
        for (const json& entry : as_array(obj["ports"], path + ".ports")) {
            std::string port_path = path + ".ports[" + std::to_string(i++) + "]";
            const json& port_obj = as_object(entry, port_path);
            check_keys(port_obj, port_path, {"name", "direction"});
            std::string direction =
                as_string(require(port_obj, port_path, "direction"), port_path + ".direction");
            if (direction != "In" && direction != "Out") {
                fail(port_path + ".direction", "expected \"In\" or \"Out\"");
            }
            node.ports.push_back(
                DataPort{as_string(require(port_obj, port_path, "name"), port_path + ".name"),
                         direction == "In" ? PortDirection::In : PortDirection::Out});
        }
    }
    if (obj.contains("representation")) {
        node.representation =
            representation_from_json(obj["representation"], path + ".representation");
    }
    if (obj.contains("behavior")) {
        std::string behavior_path = path + ".behavior";
        const json& behavior_obj = as_object(obj["behavior"], behavior_path);
        check_keys(behavior_obj, behavior_path, {"elements", "links"});
        NodeBehavior behavior;
        if (behavior_obj.contains("elements")) {
            std::size_t i = 0;
            for (const json& entry :
                 as_array(behavior_obj["elements"], behavior_path + ".elements")) {
                behavior.elements.push_back(element_from_json(
                    entry, behavior_path + ".elements[" + std::to_string(i++) + "]"));
            }
        }
        if (behavior_obj.contains("links")) {
            std::size_t i = 0;
            for (const json& entry : as_array(behavior_obj["links"], behavior_path + ".links")) {
                std::string link_path = behavior_path + ".links[" + std::to_string(i++) + "]";
                const json& link_obj = as_object(entry, link_path);
                check_keys(link_obj, link_path, {"from", "to"});
                behavior.links.push_back(
                    Link{as_string(require(link_obj, link_path, "from"), link_path + ".from"),
                         as_string(require(link_obj, link_path, "to"), link_path + ".to")});
            }
        }
        node.behavior = std::move(behavior);
    }
    return node;
}

Endpoint endpoint_from_json(const json& value, const std::string& path) {
    const json& obj = as_object(value, path);
    check_keys(obj, path, {"node", "port"});
    return Endpoint{as_string(require(obj, path, "node"), path + ".node"),
                    as_string(require(obj, path, "port"), path + ".port")};
}

// ---------------------------------------------------------------------------
// to_dot
// ---------------------------------------------------------------------------

std::string dot_quoted(std::string_view s) {
    std::string out;
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// Label lines: name, then (processing, storage) when declared, then the
// node's action verbs. Lines are escaped individually and joined with the
// two-character \n sequence Graphviz uses for line breaks.
std::string node_statement(const DataNode& node, int indent) {
    std::vector<std::string> lines{node.name};
    if (node.representation &&
        (node.representation->processing || node.representation->storage)) {
        std::string line = "(";
        if (node.representation->processing) {
            line += to_string(*node.representation->processing);
            if (node.representation->storage) line += ", ";
        }
        if (node.representation->storage) line += node.representation->storage->display();
        line += ")";
        lines.push_back(std::move(line));
    }
    if (node.behavior) {
        std::vector<std::string_view> verbs;
        for (const BehaviorElement& element : node.behavior->elements) {
            if (element.is_event()) continue;
            std::string_view verb = element_verb(element.kind);
            if (std::find(verbs.begin(), verbs.end(), verb) == verbs.end()) {
                verbs.push_back(verb);
            }
        }
        if (!verbs.empty()) {
            std::string line = "[";
            for (std::size_t i = 0; i < verbs.size(); ++i) {
                if (i > 0) line += ", ";
                line += verbs[i];
            }
            line += "]";
            lines.push_back(std::move(line));
        }
    }

    std::string label;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) label += "\\n";
        label += dot_escape(lines[i]);
    }
    std::string out(static_cast<std::size_t>(indent), ' ');
    out += dot_quoted(node.name);
    out += " [shape=box, label=\"";
    out += label;
    out += "\"];\n";
    return out;
}

} // namespace

std::string to_json(const Model& model) {
    json doc;
    doc["version"] = "daml-json/1";
    doc["name"] = model.name;
    doc["level"] = to_string(model.level);

    json nodes = json::array();
    for (const DataNode& node : model.nodes) {
        json n;
        n["name"] = node.name;
        json ports = json::array();
        for (const DataPort& port : node.ports) {
            json p;
            p["name"] = port.name;
            p["direction"] = to_string(port.direction);
            ports.push_back(std::move(p));
        }
        n["ports"] = std::move(ports);
        if (node.representation) {
            const DataRepresentation& repr = *node.representation;
            json r;
            json formats = json::array();
            for (const DataFormat& format : repr.formats) {
                formats.push_back(format_to_json(format));
            }
            r["formats"] = std::move(formats);
            if (repr.processing) r["processing"] = to_string(*repr.processing);
            if (repr.storage) r["storage"] = storage_to_json(*repr.storage);
            if (repr.location) r["location"] = to_string(*repr.location);
            n["representation"] = std::move(r);
        }
        if (node.behavior) {
            json b;
            json elements = json::array();
            for (const BehaviorElement& element : node.behavior->elements) {
                elements.push_back(element_to_json(element));
            }
            b["elements"] = std::move(elements);
            json links = json::array();
            for (const Link& link : node.behavior->links) {
                json l;
                l["from"] = link.from;
                l["to"] = link.to;
                links.push_back(std::move(l));
            }
            b["links"] = std::move(links);
            n["behavior"] = std::move(b);
        }
        nodes.push_back(std::move(n));
    }
    doc["nodes"] = std::move(nodes);

    json connections = json::array();
    for (const Connection& connection : model.connections) {
        json c;
        if (connection.name) c["name"] = *connection.name;
        c["source"] = endpoint_to_json(connection.source);
        c["target"] = endpoint_to_json(connection.target);
        connections.push_back(std::move(c));
    }
    doc["connections"] = std::move(connections);

    return doc.dump();
}

Result<Model> from_json(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        return Error{"schema-violation", "$: not a valid JSON document"};
    }
    if (!doc.is_object()) {
        return Error{"schema-violation", "$: expected an object"};
    }
    auto version = doc.find("version");
    if (version == doc.end() || !version->is_string() ||
        version->get<std::string>() != "daml-json/1") {
        return Error{"bad-version", "expected version tag \"daml-json/1\""};
    }

    try {
        check_keys(doc, "$", {"version", "name", "level", "nodes", "connections"});
        std::string name = as_string(require(doc, "$", "name"), "$.name");
        Level level = Level::HLA;
        if (doc.contains("level")) {
            auto parsed = level_from_string(as_string(doc["level"], "$.level"));
            if (!parsed) fail("$.level", "expected \"HLA\" or \"LLA\"");
            level = *parsed;
        }
        std::vector<DataNode> nodes;
        if (doc.contains("nodes")) {
            std::size_t i = 0;
            for (const json& entry : as_array(doc["nodes"], "$.nodes")) {
                nodes.push_back(node_from_json(entry, "$.nodes[" + std::to_string(i++) + "]"));
            }
        }
        std::vector<Connection> connections;
        if (doc.contains("connections")) {
            std::size_t i = 0;
            for (const json& entry : as_array(doc["connections"], "$.connections")) {
                std::string path = "$.connections[" + std::to_string(i++) + "]";
                const json& obj = as_object(entry, path);
                check_keys(obj, path, {"name", "source", "target"});
                Connection connection;
                if (obj.contains("name")) connection.name = as_string(obj["name"], path + ".name");
                connection.source =
                    endpoint_from_json(require(obj, path, "source"), path + ".source");
                connection.target =
                    endpoint_from_json(require(obj, path, "target"), path + ".target");
                connections.push_back(std::move(connection));
            }
        }

        Result<Model> model =
            make_model(std::move(name), level, std::move(nodes), std::move(connections));
        if (!model) {
            return Error{"schema-violation", "$: " + model.error().message};
        }
        return model;
    } catch (const SchemaError& e) {
        return Error{"schema-violation", e.message};
    }
}

std::string to_dot(const Model& model, const DotOptions& options) {
    std::string out = "digraph ";
    out += dot_quoted(model.name);
    out += " {\n  rankdir=";
    out += options.rankdir == RankDir::LR ? "LR" : "TB";
    out += ";\n";

    if (options.cluster_by_location) {
        auto emit_cluster = [&](Location location, std::string_view id, std::string_view title) {
            bool any = std::any_of(model.nodes.begin(), model.nodes.end(), [&](const DataNode& n) {
                return n.representation && n.representation->location == location;
            });
            if (!any) return;
            out += "  subgraph \"cluster_";
            out += id;
            out += "\" {\n    label=\"";
            out += title;
            out += "\";\n";
            for (const DataNode& node : model.nodes) {
                if (node.representation && node.representation->location == location) {
                    out += node_statement(node, 4);
                }
            }
            out += "  }\n";
        };
        emit_cluster(Location::Cloud, "cloud", "Cloud");
        emit_cluster(Location::Local, "local", "Local");
        for (const DataNode& node : model.nodes) {
            if (!node.representation || !node.representation->location) {
                out += node_statement(node, 2);
            }
        }
    } else {
        for (const DataNode& node : model.nodes) out += node_statement(node, 2);
    }

    for (const Connection& connection : model.connections) {
        out += "  ";
        out += dot_quoted(connection.source.node);
        out += " -> ";
        out += dot_quoted(connection.target.node);
        if (options.formats_on_edges) {
            const DataNode* source = find_node(model, connection.source.node);
            if (source && source->representation && !source->representation->formats.empty()) {
                std::string label;
                const auto& formats = source->representation->formats;
                for (std::size_t i = 0; i < formats.size(); ++i) {
                    if (i > 0) label += ", ";
                    label += formats[i].display();
                }
                out += " [label=";
                out += dot_quoted(label);
                out += "]";
            }
        }
        out += ";\n";
    }

    out += "}\n";
    return out;
}

} // namespace daml
