#include "daml/model.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "daml/diagnostics.hpp"
#include "daml/lexer.hpp"
#include "daml/validator.hpp"

namespace daml {

// ---------------------------------------------------------------------------
// Enum spellings
// ---------------------------------------------------------------------------

std::string_view to_string(Level v) {
    return v == Level::HLA ? "HLA" : "LLA";
}

std::string_view to_string(PortDirection v) {
    return v == PortDirection::In ? "In" : "Out";
}

std::string_view to_string(ProcessingType v) {
    return v == ProcessingType::Batch ? "Batch" : "RealTime";
}

std::string_view to_string(Location v) {
    return v == Location::Cloud ? "Cloud" : "Local";
}

std::string_view to_string(StoreTask v) {
    switch (v) {
        case StoreTask::Save: return "Save";
        case StoreTask::Retrieve: return "Retrieve";
        case StoreTask::Archive: return "Archive";
        case StoreTask::Govern: return "Govern";
    }
    return "";
}

std::string_view to_string(ConsumeMode v) {
    switch (v) {
        case ConsumeMode::Visualize: return "Visualize";
        case ConsumeMode::Report: return "Report";
        case ConsumeMode::API: return "API";
    }
    return "";
}

std::string_view to_string(FormatCategory v) {
    switch (v) {
        case FormatCategory::Structured: return "Structured";
        case FormatCategory::SemiStructured: return "SemiStructured";
        case FormatCategory::Unstructured: return "Unstructured";
    }
    return "";
}

std::string_view to_string(FormatKind v) {
    switch (v) {
        case FormatKind::RelationalDB: return "RelationalDB";
        case FormatKind::Email: return "Email";
        case FormatKind::SMS: return "SMS";
        case FormatKind::CSV: return "CSV";
        case FormatKind::JSON: return "JSON";
        case FormatKind::XML: return "XML";
        case FormatKind::GPSData: return "GPSData";
        case FormatKind::Multimedia: return "Multimedia";
        case FormatKind::OfficeFiles: return "OfficeFiles";
        case FormatKind::Other: return "Other";
    }
    return "";
}

std::string_view to_string(StorageFamily v) {
    switch (v) {
        case StorageFamily::NoSQL: return "NoSQL";
        case StorageFamily::NewSQL: return "NewSQL";
        case StorageFamily::FileSystem: return "FileSystem";
    }
    return "";
}

std::string_view to_string(StorageKind v) {
    switch (v) {
        case StorageKind::Document: return "Document";
        case StorageKind::KeyValue: return "KeyValue";
        case StorageKind::Graph: return "Graph";
        case StorageKind::Column: return "Column";
        case StorageKind::Historical: return "Historical";
        case StorageKind::RealTime: return "RealTime";
        case StorageKind::Stream: return "Stream";
        case StorageKind::Timestamp: return "Timestamp";
        case StorageKind::HDF: return "HDF";
        case StorageKind::GFS: return "GFS";
        case StorageKind::AFS: return "AFS";
        case StorageKind::GPFS: return "GPFS";
        case StorageKind::Blobseer: return "Blobseer";
        case StorageKind::Other: return "Other";
    }
    return "";
}

namespace {

template <typename E>
std::optional<E> match(std::string_view s, std::initializer_list<E> values) {
    for (E v : values) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

} // namespace

std::optional<Level> level_from_string(std::string_view s) {
    return match(s, {Level::HLA, Level::LLA});
}

std::optional<ProcessingType> processing_from_string(std::string_view s) {
    return match(s, {ProcessingType::Batch, ProcessingType::RealTime});
}

std::optional<Location> location_from_string(std::string_view s) {
    return match(s, {Location::Cloud, Location::Local});
}

std::optional<StoreTask> store_task_from_string(std::string_view s) {
    return match(s, {StoreTask::Save, StoreTask::Retrieve, StoreTask::Archive, StoreTask::Govern});
}

std::optional<ConsumeMode> consume_mode_from_string(std::string_view s) {
    return match(s, {ConsumeMode::Visualize, ConsumeMode::Report, ConsumeMode::API});
}

std::optional<FormatCategory> format_category_from_string(std::string_view s) {
    return match(s, {FormatCategory::Structured, FormatCategory::SemiStructured,
                     FormatCategory::Unstructured});
}

std::optional<FormatKind> format_kind_from_string(std::string_view s) {
    return match(s, {FormatKind::RelationalDB, FormatKind::Email, FormatKind::SMS, FormatKind::CSV,
                     FormatKind::JSON, FormatKind::XML, FormatKind::GPSData, FormatKind::Multimedia,
                     FormatKind::OfficeFiles, FormatKind::Other});
}

std::optional<StorageFamily> storage_family_from_string(std::string_view s) {
    return match(s, {StorageFamily::NoSQL, StorageFamily::NewSQL, StorageFamily::FileSystem});
}

std::optional<StorageKind> storage_kind_from_string(std::string_view s) {
    return match(s, {StorageKind::Document, StorageKind::KeyValue, StorageKind::Graph,
                     StorageKind::Column, StorageKind::Historical, StorageKind::RealTime,
                     StorageKind::Stream, StorageKind::Timestamp, StorageKind::HDF,
                     StorageKind::GFS, StorageKind::AFS, StorageKind::GPFS, StorageKind::Blobseer,
                     StorageKind::Other});
}

std::string quoted(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

// ---------------------------------------------------------------------------
// DataFormat / StorageTech
// ---------------------------------------------------------------------------

bool DataFormat::is_legal(FormatCategory category, FormatKind kind) {
    switch (kind) {
        case FormatKind::RelationalDB:
            return category == FormatCategory::Structured;
        case FormatKind::Email:
        case FormatKind::SMS:
        case FormatKind::CSV:
        case FormatKind::JSON:
        case FormatKind::XML:
            return category == FormatCategory::SemiStructured;
        case FormatKind::GPSData:
        case FormatKind::Multimedia:
        case FormatKind::OfficeFiles:
            return category == FormatCategory::Unstructured;
        case FormatKind::Other:
            return category == FormatCategory::SemiStructured ||
                   category == FormatCategory::Unstructured;
    }
    return false;
}

std::optional<DataFormat> DataFormat::make(FormatCategory category, FormatKind kind,
                                           std::string label) {
    if (!is_legal(category, kind)) return std::nullopt;
    if (kind != FormatKind::Other && !label.empty()) return std::nullopt;
    return DataFormat(category, kind, std::move(label));
}

DataFormat DataFormat::of(FormatKind kind) {
    assert(kind != FormatKind::Other);
    FormatCategory category = FormatCategory::Structured;
    switch (kind) {
        case FormatKind::RelationalDB:
            category = FormatCategory::Structured;
            break;
        case FormatKind::Email:
        case FormatKind::SMS:
        case FormatKind::CSV:
        case FormatKind::JSON:
        case FormatKind::XML:
            category = FormatCategory::SemiStructured;
            break;
        case FormatKind::GPSData:
        case FormatKind::Multimedia:
        case FormatKind::OfficeFiles:
        case FormatKind::Other:
            category = FormatCategory::Unstructured;
            break;
    }
    return DataFormat(category, kind, {});
}

std::string DataFormat::display() const {
    if (kind_ != FormatKind::Other) return std::string(to_string(kind_));
    // Bare Other(...) reads as Unstructured; the SemiStructured variant needs
    // its category spelled out.
    std::string out;
    if (category_ == FormatCategory::SemiStructured) {
        out += to_string(category_);
        out += '.';
    }
    out += "Other(";
    out += quoted(label_);
    out += ')';
    return out;
}

bool StorageTech::is_legal(StorageFamily family, StorageKind kind) {
    switch (kind) {
        case StorageKind::Document:
        case StorageKind::KeyValue:
        case StorageKind::Graph:
        case StorageKind::Column:
            return family == StorageFamily::NoSQL;
        case StorageKind::Historical:
        case StorageKind::RealTime:
        case StorageKind::Stream:
        case StorageKind::Timestamp:
            return family == StorageFamily::NewSQL;
        case StorageKind::HDF:
        case StorageKind::GFS:
        case StorageKind::AFS:
        case StorageKind::GPFS:
        case StorageKind::Blobseer:
        case StorageKind::Other:
            return family == StorageFamily::FileSystem;
    }
    return false;
}

std::optional<StorageTech> StorageTech::make(StorageFamily family, StorageKind kind,
                                             std::string label) {
    if (!is_legal(family, kind)) return std::nullopt;
    if (kind != StorageKind::Other && !label.empty()) return std::nullopt;
    return StorageTech(family, kind, std::move(label));
}

std::string StorageTech::display() const {
    std::string out(to_string(family_));
    out += '.';
    out += to_string(kind_);
    if (kind_ == StorageKind::Other) {
        out += '(';
        out += quoted(label_);
        out += ')';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lookups and the node graph
// ---------------------------------------------------------------------------

const DataNode* find_node(const Model& model, std::string_view name) {
    for (const DataNode& node : model.nodes) {
        if (node.name == name) return &node;
    }
    return nullptr;
}

const DataPort* find_port(const DataNode& node, std::string_view name) {
    for (const DataPort& port : node.ports) {
        if (port.name == name) return &port;
    }
    return nullptr;
}

Result<DataPort> lookup_port(const Model& model, std::string_view node, std::string_view port) {
    const DataNode* n = find_node(model, node);
    if (n == nullptr) {
        return Error{"unknown-node", "unknown node " + quoted(node)};
    }
    const DataPort* p = find_port(*n, port);
    if (p == nullptr) {
        return Error{"unknown-port",
                     "node " + quoted(node) + " has no port \"" + std::string(port) + "\""};
    }
    return *p;
}

std::optional<std::size_t> NodeGraph::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == name) return i;
    }
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> NodeGraph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (const auto& [from, to] : edges) adj[from].push_back(to);
    return adj;
}

std::vector<std::size_t> NodeGraph::in_degrees() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& edge : edges) ++deg[edge.second];
    return deg;
}

std::vector<std::size_t> NodeGraph::out_degrees() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& edge : edges) ++deg[edge.first];
    return deg;
}

bool NodeGraph::has_cycle() const {
    enum class Color { White, Gray, Black };
    std::vector<Color> color(vertices.size(), Color::White);
    auto adj = adjacency();

    // Iterative DFS; gray-on-stack means a back edge closes a cycle.
    for (std::size_t root = 0; root < vertices.size(); ++root) {
        if (color[root] != Color::White) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        color[root] = Color::Gray;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                std::size_t w = adj[v][next++];
                if (color[w] == Color::Gray) return true;
                if (color[w] == Color::White) {
                    color[w] = Color::Gray;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = Color::Black;
                stack.pop_back();
            }
        }
    }
    return false;
}

NodeGraph node_graph(const Model& model) {
    NodeGraph graph;
    for (const DataNode& node : model.nodes) {
        if (!graph.index_of(node.name)) graph.vertices.push_back(node.name);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Connection& connection : model.connections) {
        auto from = graph.index_of(connection.source.node);
        auto to = graph.index_of(connection.target.node);
        if (!from || !to) continue; // unresolved endpoints are a validator concern
        if (seen.insert({*from, *to}).second) graph.edges.emplace_back(*from, *to);
    }
    return graph;
}

// ---------------------------------------------------------------------------
// Checked construction
// ---------------------------------------------------------------------------

namespace {

bool usable_name(const std::string& s) {
    return is_identifier(s) && !is_reserved_word(s);
}

std::optional<std::string> element_shape_error(const DataNode& node,
                                               const BehaviorElement& element) {
    std::string where = "node " + quoted(node.name) + " element \"" + element.name + "\"";
    if (!usable_name(element.name)) {
        return "invalid element name in node " + quoted(node.name) + ": \"" + element.name + "\"";
    }
    if (const auto* ingest = std::get_if<IngestAction>(&element.kind)) {
        if (ingest->steps.empty()) return where + ": ingest needs at least one step";
    }
    if (const auto* process = std::get_if<ProcessAction>(&element.kind)) {
        if (process->subprocesses.empty()) {
            return where + ": process needs at least one subprocess";
        }
    }
    if (const auto* store = std::get_if<StoreAction>(&element.kind)) {
        if (store->tasks.empty()) return where + ": store needs at least one task";
    }
    return std::nullopt;
}

} // namespace

Result<Model> make_model(std::string name, Level level, std::vector<DataNode> nodes,
                         std::vector<Connection> connections) {
    auto reject = [](std::string message) {
        return Error{"invalid-model", std::move(message)};
    };

    if (!usable_name(name)) {
        return reject("invalid architecture name: \"" + name + "\"");
    }
    for (DataNode& node : nodes) {
        if (node.name.empty()) return reject("node names must be non-empty");
        for (const DataPort& port : node.ports) {
            if (!usable_name(port.name)) {
                return reject("invalid port name in node " + quoted(node.name) + ": \"" +
                              port.name + "\"");
            }
        }
        if (node.representation) {
            const auto& formats = node.representation->formats;
            for (std::size_t i = 0; i < formats.size(); ++i) {
                for (std::size_t j = i + 1; j < formats.size(); ++j) {
                    if (formats[i] == formats[j]) {
                        return reject("duplicate format " + formats[i].display() + " in node " +
                                      quoted(node.name));
                    }
                }
            }
        }
        if (node.behavior) {
            for (BehaviorElement& element : node.behavior->elements) {
                if (auto message = element_shape_error(node, element)) {
                    return reject(std::move(*message));
                }
                if (auto* store = std::get_if<StoreAction>(&element.kind)) {
                    std::sort(store->tasks.begin(), store->tasks.end());
                    store->tasks.erase(std::unique(store->tasks.begin(), store->tasks.end()),
                                       store->tasks.end());
                }
            }
            for (const Link& link : node.behavior->links) {
                if (link.from == link.to) {
                    return reject("link from \"" + link.from + "\" to itself in node " +
                                  quoted(node.name));
                }
            }
        }
    }
    for (const Connection& connection : connections) {
        if (connection.name && !usable_name(*connection.name)) {
            return reject("invalid connection name: \"" + *connection.name + "\"");
        }
    }

    Model model{std::move(name), level, std::move(nodes), std::move(connections)};
    for (const Diagnostic& diagnostic : validate(model)) {
        if (diagnostic.severity == Severity::Error) {
            return reject(diagnostic.rule + ": " + diagnostic.message);
        }
    }
    return model;
}

// ---------------------------------------------------------------------------
// Misc
// ---------------------------------------------------------------------------

std::string_view element_verb(const ElementKind& kind) {
    struct Visitor {
        std::string_view operator()(const ReceiveEvent&) const { return "receive"; }
        std::string_view operator()(const ExternalEvent&) const { return "external"; }
        std::string_view operator()(const GenerateAction&) const { return "generate"; }
        std::string_view operator()(const IngestAction&) const { return "ingest"; }
        std::string_view operator()(const ProcessAction&) const { return "process"; }
        std::string_view operator()(const StoreAction&) const { return "store"; }
        std::string_view operator()(const AnalyzeAction&) const { return "analyze"; }
        std::string_view operator()(const ConsumeAction&) const { return "consume"; }
        std::string_view operator()(const SendAction&) const { return "send"; }
    };
    return std::visit(Visitor{}, kind);
}

} // namespace daml
