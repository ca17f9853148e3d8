#include "daml/parser.hpp"

#include <algorithm>
#include <utility>

#include "daml/lexer.hpp"

namespace daml {

namespace {

class Parser {
  public:
    Parser(std::string_view source, std::string file) : file_(std::move(file)) {
        LexResult lexed = lex(source, file_);
        tokens_ = std::move(lexed.tokens);
        diagnostics_ = std::move(lexed.diagnostics);
        if (!tokens_.empty()) eof_pos_ = tokens_.back().span.end;
    }

    ParseResult run() {
        parse_model();
        sort_diagnostics(diagnostics_);
        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        if (!has_errors(result.diagnostics)) {
            result.model = std::move(model_);
            result.spans = std::move(spans_);
        }
        return result;
    }

  private:
    // --- token stream -----------------------------------------------------

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek(std::size_t ahead = 0) const { return tokens_[pos_ + ahead]; }
    bool check_keyword(std::string_view kw, std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() && peek(ahead).is_keyword(kw);
    }
    bool check_punct(std::string_view p, std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() && peek(ahead).is_punct(p);
    }
    bool check_kind(TokenKind kind, std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() && peek(ahead).kind == kind;
    }
    bool check_arrow() const { return check_kind(TokenKind::Arrow); }
    const Token& advance() { return tokens_[pos_++]; }

    SourceSpan here() const {
        if (at_end()) return SourceSpan{file_, eof_pos_, eof_pos_};
        return peek().span;
    }

    // --- diagnostics --------------------------------------------------------

    void syntax_error(std::string what, std::optional<SourceSpan> span = std::nullopt) {
        diagnostics_.push_back(Diagnostic{Severity::Error, "P001", "expected " + std::move(what),
                                          span ? *span : here(), {}});
    }

    void construction_error(std::string message, SourceSpan span) {
        diagnostics_.push_back(
            Diagnostic{Severity::Error, "P002", std::move(message), std::move(span), {}});
    }

    const Token* expect_keyword(std::string_view kw, std::string what) {
        if (check_keyword(kw)) return &advance();
        syntax_error(std::move(what));
        return nullptr;
    }
    const Token* expect_punct(std::string_view p, std::string what) {
        if (check_punct(p)) return &advance();
        syntax_error(std::move(what));
        return nullptr;
    }
    const Token* expect_ident(std::string what) {
        if (check_kind(TokenKind::Ident)) return &advance();
        syntax_error(std::move(what));
        return nullptr;
    }
    const Token* expect_arrow(std::string what) {
        if (check_arrow()) return &advance();
        syntax_error(std::move(what));
        return nullptr;
    }
    const Token* expect_string(std::string what) {
        if (check_kind(TokenKind::String)) return &advance();
        syntax_error(std::move(what));
        return nullptr;
    }

    // --- recovery -----------------------------------------------------------

    // Skips forward to the next top-level item boundary. Braces opened while
    // skipping are matched with their closers so an enclosing `}` is never
    // mistaken for the boundary of a discarded construct.
    void sync_top() {
        int depth = 0;
        while (!at_end()) {
            if (depth == 0 &&
                (check_keyword("node") || check_keyword("connection") || check_punct("}"))) {
                return;
            }
            if (check_punct("{")) ++depth;
            if (check_punct("}")) --depth;
            advance();
        }
    }

    // Skips forward to the next node-part boundary; stops (without consuming)
    // at anything that ends the node.
    void sync_node_body() {
        int depth = 0;
        while (!at_end()) {
            if (depth == 0 &&
                (check_keyword("in") || check_keyword("out") || check_keyword("representation") ||
                 check_keyword("behavior") || check_keyword("node") ||
                 check_keyword("connection") || check_punct("}"))) {
                return;
            }
            if (check_punct("{")) ++depth;
            if (check_punct("}")) --depth;
            advance();
        }
    }

    void sync_behavior_body() {
        int depth = 0;
        while (!at_end()) {
            if (depth == 0 &&
                (check_keyword("event") || check_keyword("action") || check_keyword("link") ||
                 check_keyword("node") || check_keyword("connection") || check_punct("}"))) {
                return;
            }
            if (check_punct("{")) ++depth;
            if (check_punct("}")) --depth;
            advance();
        }
    }

    // After a failure inside `{ ... }` payloads (which never nest braces):
    // consume through the closing brace if it is still ahead.
    void sync_payload() {
        while (!at_end()) {
            if (check_punct("}")) {
                advance();
                return;
            }
            if (check_keyword("node") || check_keyword("connection") || check_keyword("event") ||
                check_keyword("action") || check_keyword("link")) {
                return;
            }
            advance();
        }
    }

    // --- grammar ------------------------------------------------------------

    void parse_model() {
        if (!expect_keyword("architecture", "'architecture'")) return;
        const Token* name = expect_ident("architecture name");
        if (!name) return;
        model_.name = name->value;
        spans_[EntityKey::model()] = name->span;
        if (check_keyword("level")) {
            advance();
            if (check_kind(TokenKind::Ident)) {
                if (auto level = level_from_string(peek().lexeme)) {
                    model_.level = *level;
                    advance();
                } else {
                    syntax_error("'HLA' or 'LLA' after 'level'");
                    advance();
                }
            } else {
                syntax_error("'HLA' or 'LLA' after 'level'");
            }
        }
        if (!expect_punct("{", "'{'")) return;
        while (!at_end() && !check_punct("}")) {
            if (check_keyword("node")) {
                parse_node();
            } else if (check_keyword("connection")) {
                parse_connection();
            } else {
                syntax_error("'node' or 'connection'");
                advance();
                sync_top();
            }
        }
        if (!at_end()) {
            advance(); // closing brace
            if (!at_end()) syntax_error("end of input after '}'");
        } else {
            syntax_error("'}'");
        }
    }

    void parse_node() {
        advance(); // node
        const Token* name = expect_string("string after 'node'");
        if (!name) {
            sync_top();
            return;
        }
        DataNode node;
        node.name = name->value;
        if (node.name.empty()) {
            construction_error("node name must not be empty", name->span);
        }
        int node_index = static_cast<int>(model_.nodes.size());
        spans_[EntityKey::node_at(node_index)] = name->span;

        if (!expect_punct("{", "'{' after node name")) {
            sync_top();
            model_.nodes.push_back(std::move(node));
            return;
        }
        bool closed = false;
        while (!at_end()) {
            if (check_punct("}")) {
                advance();
                closed = true;
                break;
            }
            if (check_keyword("node") || check_keyword("connection")) break;
            if (check_keyword("in") || check_keyword("out")) {
                parse_port(node, node_index);
            } else if (check_keyword("representation")) {
                parse_representation(node, node_index);
            } else if (check_keyword("behavior")) {
                parse_behavior(node, node_index);
            } else {
                syntax_error("port, representation, behavior, or '}' in node body");
                advance();
                sync_node_body();
            }
        }
        if (!closed) syntax_error("'}' to close node " + quoted(node.name));
        model_.nodes.push_back(std::move(node));
    }

    void parse_port(DataNode& node, int node_index) {
        const Token& dir = advance(); // in | out
        PortDirection direction =
            dir.lexeme == "in" ? PortDirection::In : PortDirection::Out;
        if (!expect_keyword("port", "'port' after '" + dir.lexeme + "'")) {
            sync_node_body();
            return;
        }
        const Token* name = expect_ident("port name");
        if (!name) {
            sync_node_body();
            return;
        }
        spans_[EntityKey::port_at(node_index, static_cast<int>(node.ports.size()))] = name->span;
        node.ports.push_back(DataPort{name->value, direction});
    }

    void parse_representation(DataNode& node, int node_index) {
        const Token& kw = advance(); // representation
        DataRepresentation repr;
        bool duplicate = node.representation.has_value();
        if (duplicate) {
            construction_error("duplicate representation block (first one kept)", kw.span);
        }
        if (!expect_punct("{", "'{' after 'representation'")) {
            sync_node_body();
            return;
        }
        bool seen_formats = false, seen_processing = false, seen_storage = false,
             seen_location = false;
        while (!at_end() && !check_punct("}")) {
            if (check_keyword("formats")) {
                const Token& field = advance();
                if (seen_formats) {
                    construction_error("duplicate 'formats' field (first one kept)", field.span);
                }
                auto formats = parse_formats_field();
                if (formats && !seen_formats) repr.formats = std::move(*formats);
                seen_formats = true;
            } else if (check_keyword("processing")) {
                const Token& field = advance();
                if (seen_processing) {
                    construction_error("duplicate 'processing' field (first one kept)",
                                       field.span);
                }
                if (!expect_punct(":", "':' after 'processing'")) {
                    sync_payload();
                    return;
                }
                if (check_kind(TokenKind::Ident)) {
                    if (auto value = processing_from_string(peek().lexeme)) {
                        advance();
                        if (!seen_processing) repr.processing = *value;
                        seen_processing = true;
                        if (!expect_punct(";", "';' after processing value")) {
                            sync_payload();
                            return;
                        }
                        continue;
                    }
                }
                syntax_error("'Batch' or 'RealTime'");
                sync_payload();
                return;
            } else if (check_keyword("storage")) {
                const Token& field = advance();
                if (seen_storage) {
                    construction_error("duplicate 'storage' field (first one kept)", field.span);
                }
                if (!expect_punct(":", "':' after 'storage'")) {
                    sync_payload();
                    return;
                }
                auto tech = parse_storage_tech();
                if (!tech) {
                    sync_payload();
                    return;
                }
                if (!seen_storage) repr.storage = *tech;
                seen_storage = true;
                if (!expect_punct(";", "';' after storage value")) {
                    sync_payload();
                    return;
                }
            } else if (check_keyword("location")) {
                const Token& field = advance();
                if (seen_location) {
                    construction_error("duplicate 'location' field (first one kept)", field.span);
                }
                if (!expect_punct(":", "':' after 'location'")) {
                    sync_payload();
                    return;
                }
                if (check_kind(TokenKind::Ident)) {
                    if (auto value = location_from_string(peek().lexeme)) {
                        advance();
                        if (!seen_location) repr.location = *value;
                        seen_location = true;
                        if (!expect_punct(";", "';' after location value")) {
                            sync_payload();
                            return;
                        }
                        continue;
                    }
                }
                syntax_error("'Cloud' or 'Local'");
                sync_payload();
                return;
            } else {
                syntax_error("representation field or '}'");
                sync_payload();
                return;
            }
        }
        if (!expect_punct("}", "'}' to close representation")) return;
        if (!duplicate) {
            spans_[EntityKey::representation_of(node_index)] = kw.span;
            node.representation = std::move(repr);
        }
    }

    // formats ":" "[" format {"," format} "]" ";"
    std::optional<std::vector<DataFormat>> parse_formats_field() {
        if (!expect_punct(":", "':' after 'formats'")) {
            sync_payload();
            return std::nullopt;
        }
        if (!expect_punct("[", "'[' to open formats list")) {
            sync_payload();
            return std::nullopt;
        }
        std::vector<DataFormat> formats;
        while (true) {
            SourceSpan at = here();
            auto format = parse_format();
            if (!format) {
                sync_payload();
                return std::nullopt;
            }
            if (std::find(formats.begin(), formats.end(), *format) != formats.end()) {
                construction_error("duplicate format " + format->display() + " in formats list",
                                   at);
            } else {
                formats.push_back(std::move(*format));
            }
            if (check_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        if (!expect_punct("]", "']' to close formats list")) {
            sync_payload();
            return std::nullopt;
        }
        if (!expect_punct(";", "';' after formats list")) {
            sync_payload();
            return std::nullopt;
        }
        return formats;
    }

    std::optional<DataFormat> parse_format() {
        if (!check_kind(TokenKind::Ident)) {
            syntax_error("format");
            return std::nullopt;
        }
        const Token& head = advance();
        // Category-qualified escape kind: SemiStructured.Other("x") or
        // Unstructured.Other("x"). Bare Other("x") reads as Unstructured.
        if (head.lexeme == "SemiStructured" || head.lexeme == "Unstructured") {
            FormatCategory category = head.lexeme == "SemiStructured"
                                          ? FormatCategory::SemiStructured
                                          : FormatCategory::Unstructured;
            if (!expect_punct(".", "'.' after '" + head.lexeme + "'")) return std::nullopt;
            if (!check_kind(TokenKind::Ident) || peek().lexeme != "Other") {
                syntax_error("'Other' after '" + head.lexeme + ".'");
                return std::nullopt;
            }
            advance();
            auto label = parse_parenthesized_label();
            if (!label) return std::nullopt;
            return DataFormat::make(category, FormatKind::Other, std::move(*label));
        }
        if (head.lexeme == "Other") {
            auto label = parse_parenthesized_label();
            if (!label) return std::nullopt;
            return DataFormat::make(FormatCategory::Unstructured, FormatKind::Other,
                                    std::move(*label));
        }
        auto kind = format_kind_from_string(head.lexeme);
        if (!kind) {
            syntax_error("format", head.span);
            return std::nullopt;
        }
        return DataFormat::of(*kind);
    }

    std::optional<std::string> parse_parenthesized_label() {
        if (!expect_punct("(", "'(' after 'Other'")) return std::nullopt;
        const Token* label = expect_string("label string");
        if (!label) return std::nullopt;
        if (!expect_punct(")", "')' after label")) return std::nullopt;
        return label->value;
    }

    std::optional<StorageTech> parse_storage_tech() {
        if (!check_kind(TokenKind::Ident)) {
            syntax_error("storage family");
            return std::nullopt;
        }
        const Token& family_tok = advance();
        auto family = storage_family_from_string(family_tok.lexeme);
        if (!family) {
            syntax_error("storage family", family_tok.span);
            return std::nullopt;
        }
        if (!expect_punct(".", "'.' after '" + family_tok.lexeme + "'")) return std::nullopt;
        if (!check_kind(TokenKind::Ident)) {
            syntax_error("storage kind");
            return std::nullopt;
        }
        const Token& kind_tok = advance();
        auto kind = storage_kind_from_string(kind_tok.lexeme);
        if (!kind || !StorageTech::is_legal(*family, *kind)) {
            syntax_error("storage kind for family '" + family_tok.lexeme + "'", kind_tok.span);
            return std::nullopt;
        }
        std::string label;
        if (*kind == StorageKind::Other) {
            auto parsed = parse_parenthesized_label();
            if (!parsed) return std::nullopt;
            label = std::move(*parsed);
        }
        return StorageTech::make(*family, *kind, std::move(label));
    }

    void parse_behavior(DataNode& node, int node_index) {
        const Token& kw = advance(); // behavior
        if (node.behavior) {
            construction_error("duplicate behavior block (first one kept)", kw.span);
            // Parse into a scratch behavior so errors are still reported.
        }
        NodeBehavior scratch;
        NodeBehavior& behavior = node.behavior ? scratch : node.behavior.emplace();
        bool keep = &behavior != &scratch;

        if (!expect_punct("{", "'{' after 'behavior'")) {
            sync_node_body();
            return;
        }
        while (!at_end()) {
            if (check_punct("}")) {
                advance();
                return;
            }
            if (check_keyword("node") || check_keyword("connection")) break;
            if (check_keyword("event")) {
                parse_event(behavior, node_index, keep);
            } else if (check_keyword("action")) {
                parse_action(behavior, node_index, keep);
            } else if (check_keyword("link")) {
                parse_link(behavior, node_index, keep);
            } else {
                syntax_error("event, action, link, or '}' in behavior");
                advance();
                sync_behavior_body();
            }
        }
        syntax_error("'}' to close behavior");
    }

    void add_element(NodeBehavior& behavior, int node_index, bool keep, BehaviorElement element,
                     SourceSpan span) {
        if (!keep) return;
        spans_[EntityKey::element_at(node_index, static_cast<int>(behavior.elements.size()))] =
            std::move(span);
        behavior.elements.push_back(std::move(element));
    }

    void parse_event(NodeBehavior& behavior, int node_index, bool keep) {
        advance(); // event
        if (check_keyword("receive")) {
            advance();
            const Token* name = expect_ident("event name");
            if (!name) {
                sync_behavior_body();
                return;
            }
            if (!expect_keyword("via", "'via' after event name")) {
                sync_behavior_body();
                return;
            }
            const Token* port = expect_ident("port name after 'via'");
            if (!port) {
                sync_behavior_body();
                return;
            }
            add_element(behavior, node_index, keep,
                        BehaviorElement{name->value, ReceiveEvent{port->value}}, name->span);
            return;
        }
        if (check_keyword("external")) {
            advance();
            const Token* name = expect_ident("event name");
            if (!name) {
                sync_behavior_body();
                return;
            }
            const Token* label = expect_string("label string after event name");
            if (!label) {
                sync_behavior_body();
                return;
            }
            add_element(behavior, node_index, keep,
                        BehaviorElement{name->value, ExternalEvent{label->value}}, name->span);
            return;
        }
        syntax_error("'receive' or 'external' after 'event'");
        sync_behavior_body();
    }

    void parse_action(NodeBehavior& behavior, int node_index, bool keep) {
        advance(); // action
        static constexpr std::string_view kVerbs[] = {"generate", "ingest",  "process", "store",
                                                      "analyze",  "consume", "send"};
        std::string verb;
        for (std::string_view v : kVerbs) {
            if (check_keyword(v)) {
                verb = v;
                break;
            }
        }
        if (verb.empty()) {
            syntax_error("action verb after 'action'");
            sync_behavior_body();
            return;
        }
        advance();
        const Token* name = expect_ident("action name");
        if (!name) {
            sync_behavior_body();
            return;
        }

        if (verb == "send") {
            if (!expect_keyword("via", "'via' after action name")) {
                sync_behavior_body();
                return;
            }
            const Token* port = expect_ident("port name after 'via'");
            if (!port) {
                sync_behavior_body();
                return;
            }
            add_element(behavior, node_index, keep,
                        BehaviorElement{name->value, SendAction{port->value}}, name->span);
            return;
        }

        if (!expect_punct("{", "'{' after action name")) {
            sync_behavior_body();
            return;
        }
        std::optional<ElementKind> kind;
        if (verb == "generate") {
            kind = parse_generate_payload();
        } else if (verb == "ingest") {
            if (auto steps = parse_strlist_payload("steps")) kind = IngestAction{std::move(*steps)};
        } else if (verb == "process") {
            if (auto subs = parse_strlist_payload("subprocesses")) {
                kind = ProcessAction{std::move(*subs)};
            }
        } else if (verb == "store") {
            kind = parse_store_payload();
        } else if (verb == "analyze") {
            kind = parse_analyze_payload();
        } else if (verb == "consume") {
            kind = parse_consume_payload();
        }
        if (!kind) return; // payload parser already synced
        if (!expect_punct("}", "'}' to close action payload")) {
            sync_payload();
            return;
        }
        add_element(behavior, node_index, keep, BehaviorElement{name->value, std::move(*kind)},
                    name->span);
    }

    std::optional<ElementKind> parse_generate_payload() {
        if (!expect_keyword("source", "'source' in generate payload") ||
            !expect_punct(":", "':' after 'source'")) {
            sync_payload();
            return std::nullopt;
        }
        const Token* source = expect_string("source string");
        if (!source || !expect_punct(";", "';' after source value") ||
            !expect_keyword("format", "'format' in generate payload") ||
            !expect_punct(":", "':' after 'format'")) {
            sync_payload();
            return std::nullopt;
        }
        auto format = parse_format();
        if (!format || !expect_punct(";", "';' after format value")) {
            sync_payload();
            return std::nullopt;
        }
        return GenerateAction{source->value, std::move(*format)};
    }

    std::optional<std::vector<std::string>> parse_strlist_payload(std::string_view field) {
        if (!expect_keyword(field, "'" + std::string(field) + "' in action payload") ||
            !expect_punct(":", "':' after '" + std::string(field) + "'") ||
            !expect_punct("[", "'[' to open list")) {
            sync_payload();
            return std::nullopt;
        }
        std::vector<std::string> items;
        while (true) {
            const Token* item = expect_string("list entry string");
            if (!item) {
                sync_payload();
                return std::nullopt;
            }
            items.push_back(item->value);
            if (check_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        if (!expect_punct("]", "']' to close list") || !expect_punct(";", "';' after list")) {
            sync_payload();
            return std::nullopt;
        }
        return items;
    }

    std::optional<ElementKind> parse_store_payload() {
        if (!expect_keyword("tasks", "'tasks' in store payload") ||
            !expect_punct(":", "':' after 'tasks'") ||
            !expect_punct("[", "'[' to open tasks list")) {
            sync_payload();
            return std::nullopt;
        }
        std::vector<StoreTask> tasks;
        while (true) {
            if (!check_kind(TokenKind::Ident)) {
                syntax_error("store task");
                sync_payload();
                return std::nullopt;
            }
            const Token& tok = advance();
            auto task = store_task_from_string(tok.lexeme);
            if (!task) {
                syntax_error("store task", tok.span);
                sync_payload();
                return std::nullopt;
            }
            if (std::find(tasks.begin(), tasks.end(), *task) != tasks.end()) {
                construction_error("duplicate task " + std::string(to_string(*task)) +
                                       " in tasks list",
                                   tok.span);
            } else {
                tasks.push_back(*task);
            }
            if (check_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        if (!expect_punct("]", "']' to close tasks list") ||
            !expect_punct(";", "';' after tasks list")) {
            sync_payload();
            return std::nullopt;
        }
        std::sort(tasks.begin(), tasks.end());
        return StoreAction{std::move(tasks)};
    }

    std::optional<ElementKind> parse_analyze_payload() {
        if (!expect_keyword("technique", "'technique' in analyze payload") ||
            !expect_punct(":", "':' after 'technique'")) {
            sync_payload();
            return std::nullopt;
        }
        const Token* technique = expect_string("technique string");
        if (!technique || !expect_punct(";", "';' after technique value")) {
            sync_payload();
            return std::nullopt;
        }
        return AnalyzeAction{technique->value};
    }

    std::optional<ElementKind> parse_consume_payload() {
        if (!expect_keyword("mode", "'mode' in consume payload") ||
            !expect_punct(":", "':' after 'mode'")) {
            sync_payload();
            return std::nullopt;
        }
        if (check_kind(TokenKind::Ident)) {
            if (auto mode = consume_mode_from_string(peek().lexeme)) {
                advance();
                if (!expect_punct(";", "';' after mode value")) {
                    sync_payload();
                    return std::nullopt;
                }
                return ConsumeAction{*mode};
            }
        }
        syntax_error("'Visualize', 'Report', or 'API'");
        sync_payload();
        return std::nullopt;
    }

    void parse_link(NodeBehavior& behavior, int node_index, bool keep) {
        const Token& kw = advance(); // link
        const Token* from = expect_ident("element name after 'link'");
        if (!from) {
            sync_behavior_body();
            return;
        }
        if (!expect_arrow("'->' in link")) {
            sync_behavior_body();
            return;
        }
        const Token* to = expect_ident("element name after '->'");
        if (!to) {
            sync_behavior_body();
            return;
        }
        if (from->value == to->value) {
            construction_error("link from '" + from->value + "' to itself",
                               SourceSpan{file_, kw.span.start, to->span.end});
            return;
        }
        if (keep) {
            spans_[EntityKey::link_at(node_index, static_cast<int>(behavior.links.size()))] =
                SourceSpan{file_, kw.span.start, to->span.end};
            behavior.links.push_back(Link{from->value, to->value});
        }
    }

    void parse_connection() {
        const Token& kw = advance(); // connection
        Connection connection;
        if (check_kind(TokenKind::Ident) && check_punct(":", 1)) {
            connection.name = advance().value;
            advance(); // :
        }
        auto source = parse_endpoint("source");
        if (!source) {
            sync_top();
            return;
        }
        if (!expect_arrow("'->' between connection endpoints")) {
            sync_top();
            return;
        }
        auto target = parse_endpoint("target");
        if (!target) {
            sync_top();
            return;
        }
        connection.source = std::move(source->first);
        connection.target = std::move(target->first);
        spans_[EntityKey::connection_at(static_cast<int>(model_.connections.size()))] =
            SourceSpan{file_, kw.span.start, target->second};
        model_.connections.push_back(std::move(connection));
    }

    // STRING "." IDENT; second pair member is the end position.
    std::optional<std::pair<Endpoint, SourcePos>> parse_endpoint(std::string_view which) {
        const Token* node = expect_string(std::string(which) + " node name string");
        if (!node) return std::nullopt;
        if (!expect_punct(".", "'.' after node name")) return std::nullopt;
        const Token* port = expect_ident("port name after '.'");
        if (!port) return std::nullopt;
        return std::make_pair(Endpoint{node->value, port->value}, port->span.end);
    }

    std::string file_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    SourcePos eof_pos_{1, 1};
    Model model_;
    std::vector<Diagnostic> diagnostics_;
    SpanMap spans_;
};

} // namespace

ParseResult parse(std::string_view source, std::string file) {
    return Parser(source, std::move(file)).run();
}

} // namespace daml
