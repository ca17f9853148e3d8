#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "daml/error.hpp"

namespace daml {

enum class Level { HLA, LLA };
enum class PortDirection { In, Out };
enum class ProcessingType { Batch, RealTime };
enum class Location { Cloud, Local };
enum class StoreTask { Save, Retrieve, Archive, Govern };
enum class ConsumeMode { Visualize, Report, API };

enum class FormatCategory { Structured, SemiStructured, Unstructured };
enum class FormatKind {
    RelationalDB,                       // Structured
    Email, SMS, CSV, JSON, XML,         // SemiStructured
    GPSData, Multimedia, OfficeFiles,   // Unstructured
    Other,                              // SemiStructured or Unstructured
};

enum class StorageFamily { NoSQL, NewSQL, FileSystem };
enum class StorageKind {
    Document, KeyValue, Graph, Column,       // NoSQL
    Historical, RealTime, Stream, Timestamp, // NewSQL
    HDF, GFS, AFS, GPFS, Blobseer, Other,    // FileSystem
};

/// A data format. Illegal (category, kind) pairs are unconstructible; the
/// `Other` escape kind exists under SemiStructured and Unstructured only and
/// carries a free-form label.
class DataFormat {
  public:
    static bool is_legal(FormatCategory category, FormatKind kind);
    static std::optional<DataFormat> make(FormatCategory category, FormatKind kind,
                                          std::string label = {});
    /// Category inferred from the kind; `kind` must not be Other.
    static DataFormat of(FormatKind kind);

    FormatCategory category() const { return category_; }
    FormatKind kind() const { return kind_; }
    const std::string& label() const { return label_; }

    /// Concrete-syntax spelling, e.g. `JSON` or `SemiStructured.Other("x")`.
    std::string display() const;

    bool operator==(const DataFormat&) const = default;

  private:
    DataFormat(FormatCategory category, FormatKind kind, std::string label)
        : category_(category), kind_(kind), label_(std::move(label)) {}

    FormatCategory category_;
    FormatKind kind_;
    std::string label_;
};

/// A storage technology; same construction discipline as DataFormat. The
/// `Other` escape kind exists under FileSystem only.
class StorageTech {
  public:
    static bool is_legal(StorageFamily family, StorageKind kind);
    static std::optional<StorageTech> make(StorageFamily family, StorageKind kind,
                                           std::string label = {});

    StorageFamily family() const { return family_; }
    StorageKind kind() const { return kind_; }
    const std::string& label() const { return label_; }

    /// Concrete-syntax spelling, e.g. `NoSQL.Column` or `FileSystem.Other("x")`.
    std::string display() const;

    bool operator==(const StorageTech&) const = default;

  private:
    StorageTech(StorageFamily family, StorageKind kind, std::string label)
        : family_(family), kind_(kind), label_(std::move(label)) {}

    StorageFamily family_;
    StorageKind kind_;
    std::string label_;
};

struct DataPort {
    std::string name;
    PortDirection direction = PortDirection::In;
    bool operator==(const DataPort&) const = default;
};

struct DataRepresentation {
    std::vector<DataFormat> formats; // declaration order, duplicate-free
    std::optional<ProcessingType> processing;
    std::optional<StorageTech> storage;
    std::optional<Location> location;
    bool operator==(const DataRepresentation&) const = default;
};

// Behavior elements. Events are entry stimuli; actions are atomic tasks.

struct ReceiveEvent {
    std::string port; // an in port of the owning node
    bool operator==(const ReceiveEvent&) const = default;
};
struct ExternalEvent {
    std::string label;
    bool operator==(const ExternalEvent&) const = default;
};
struct GenerateAction {
    std::string source;
    DataFormat format;
    bool operator==(const GenerateAction&) const = default;
};
struct IngestAction {
    std::vector<std::string> steps;
    bool operator==(const IngestAction&) const = default;
};
struct ProcessAction {
    std::vector<std::string> subprocesses;
    bool operator==(const ProcessAction&) const = default;
};
struct StoreAction {
    std::vector<StoreTask> tasks; // canonical enum order, duplicate-free, non-empty
    bool operator==(const StoreAction&) const = default;
};
struct AnalyzeAction {
    std::string technique;
    bool operator==(const AnalyzeAction&) const = default;
};
struct ConsumeAction {
    ConsumeMode mode = ConsumeMode::Visualize;
    bool operator==(const ConsumeAction&) const = default;
};
struct SendAction {
    std::string port; // an out port of the owning node
    bool operator==(const SendAction&) const = default;
};

using ElementKind = std::variant<ReceiveEvent, ExternalEvent, GenerateAction, IngestAction,
                                 ProcessAction, StoreAction, AnalyzeAction, ConsumeAction,
                                 SendAction>;

struct BehaviorElement {
    std::string name;
    ElementKind kind;

    bool is_event() const {
        return std::holds_alternative<ReceiveEvent>(kind) ||
               std::holds_alternative<ExternalEvent>(kind);
    }
    bool operator==(const BehaviorElement&) const = default;
};

/// Ordering edge between two behavior elements of one node.
struct Link {
    std::string from;
    std::string to;
    bool operator==(const Link&) const = default;
};

struct NodeBehavior {
    std::vector<BehaviorElement> elements;
    std::vector<Link> links;
    bool operator==(const NodeBehavior&) const = default;
};

struct DataNode {
    std::string name; // display string, non-empty, may contain spaces
    std::vector<DataPort> ports;
    std::optional<DataRepresentation> representation;
    std::optional<NodeBehavior> behavior;
    bool operator==(const DataNode&) const = default;
};

struct Endpoint {
    std::string node;
    std::string port;
    bool operator==(const Endpoint&) const = default;
};

/// Unidirectional channel from an out port to an in port of another node.
struct Connection {
    std::optional<std::string> name;
    Endpoint source;
    Endpoint target;
    bool operator==(const Connection&) const = default;
};

struct Model {
    std::string name; // identifier
    Level level = Level::HLA;
    std::vector<DataNode> nodes;
    std::vector<Connection> connections;
    bool operator==(const Model&) const = default;
};

/// Checked whole-model construction: enforces name validity plus every
/// structural invariant (unique names, endpoint resolution, port directions,
/// link shape). Parser output bypasses this so the validator can report the
/// same defects as diagnostics; everything else goes through here.
Result<Model> make_model(std::string name, Level level, std::vector<DataNode> nodes,
                         std::vector<Connection> connections);

/// Directed graph over node names derived from the connections: one vertex
/// per node in declaration order, one edge per connected node pair with
/// parallel connections collapsed (first-occurrence order).
struct NodeGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::vector<std::vector<std::size_t>> adjacency() const;
    std::vector<std::size_t> in_degrees() const;
    std::vector<std::size_t> out_degrees() const;
    bool has_cycle() const;

    bool operator==(const NodeGraph&) const = default;
};

NodeGraph node_graph(const Model& model);

/// Errors: `unknown-node`, `unknown-port`.
Result<DataPort> lookup_port(const Model& model, std::string_view node, std::string_view port);

const DataNode* find_node(const Model& model, std::string_view name);
const DataPort* find_port(const DataNode& node, std::string_view name);

// Enum spellings as used by the concrete syntax and the interchange format.
std::string_view to_string(Level v);
std::string_view to_string(PortDirection v);
std::string_view to_string(ProcessingType v);
std::string_view to_string(Location v);
std::string_view to_string(StoreTask v);
std::string_view to_string(ConsumeMode v);
std::string_view to_string(FormatCategory v);
std::string_view to_string(FormatKind v);
std::string_view to_string(StorageFamily v);
std::string_view to_string(StorageKind v);

std::optional<Level> level_from_string(std::string_view s);
std::optional<ProcessingType> processing_from_string(std::string_view s);
std::optional<Location> location_from_string(std::string_view s);
std::optional<StoreTask> store_task_from_string(std::string_view s);
std::optional<ConsumeMode> consume_mode_from_string(std::string_view s);
std::optional<FormatCategory> format_category_from_string(std::string_view s);
std::optional<FormatKind> format_kind_from_string(std::string_view s);
std::optional<StorageFamily> storage_family_from_string(std::string_view s);
std::optional<StorageKind> storage_kind_from_string(std::string_view s);

/// Name of the element's concrete-syntax verb: receive, external, generate,
/// ingest, process, store, analyze, consume, send.
std::string_view element_verb(const ElementKind& kind);

/// `s` wrapped in double quotes with `\` and `"` escaped — the only escapes
/// the concrete syntax defines.
std::string quoted(std::string_view s);

} // namespace daml
