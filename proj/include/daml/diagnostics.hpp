#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace daml {

/// 1-based position; columns count Unicode code points, not bytes.
struct SourcePos {
    int line = 1;
    int col = 1;
    auto operator<=>(const SourcePos&) const = default;
};

/// Half-open range: start is inclusive, end exclusive.
struct SourceSpan {
    std::string file;
    SourcePos start;
    SourcePos end;
    bool operator==(const SourceSpan&) const = default;
};

enum class Severity { Error, Warning };

/// One finding from the lexer, parser, or validator.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string rule;                    // e.g. "E004", "P001"
    std::string message;
    std::optional<SourceSpan> span;
    std::vector<std::string> path;       // entity path: node / port / element names

    bool operator==(const Diagnostic&) const = default;
};

/// Identity of a model entity for span lookup. Index-based so that entities
/// with colliding names (the duplicates the validator reports) stay distinct.
struct EntityKey {
    enum class Kind { Model, Node, Port, Connection, Representation, Element, Link };

    Kind kind = Kind::Model;
    int node = -1; // owning node index, -1 for model-level entities
    int item = -1; // index within the owner

    auto operator<=>(const EntityKey&) const = default;

    static EntityKey model() { return {Kind::Model, -1, -1}; }
    static EntityKey node_at(int i) { return {Kind::Node, i, -1}; }
    static EntityKey port_at(int node, int i) { return {Kind::Port, node, i}; }
    static EntityKey connection_at(int i) { return {Kind::Connection, -1, i}; }
    static EntityKey representation_of(int node) { return {Kind::Representation, node, -1}; }
    static EntityKey element_at(int node, int i) { return {Kind::Element, node, i}; }
    static EntityKey link_at(int node, int i) { return {Kind::Link, node, i}; }
};

using SpanMap = std::map<EntityKey, SourceSpan>;

std::optional<SourceSpan> span_of(const SpanMap& spans, const EntityKey& key);

std::string render_path(const std::vector<std::string>& path);

/// Text form: `SEVERITY RULEID file:line:col path — message`.
std::string render_text(const Diagnostic& diag, bool color = false);

/// One-line JSON form with the documented key order.
std::string render_json(const Diagnostic& diag);

/// Stable order: source position, then rule id, then path, then message.
void sort_diagnostics(std::vector<Diagnostic>& diags);

bool has_errors(const std::vector<Diagnostic>& diags);

} // namespace daml
