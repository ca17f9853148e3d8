#include "daml/diagnostics.hpp"

#include <algorithm>
#include <tuple>

#include "json.hpp"

namespace daml {

std::optional<SourceSpan> span_of(const SpanMap& spans, const EntityKey& key) {
    auto it = spans.find(key);
    if (it == spans.end()) return std::nullopt;
    return it->second;
}

std::string render_path(const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) out += '/';
        out += path[i];
    }
    return out;
}

std::string render_text(const Diagnostic& diag, bool color) {
    const char* name = diag.severity == Severity::Error ? "error" : "warning";
    std::string out;
    if (color) {
        out += diag.severity == Severity::Error ? "\x1b[31m" : "\x1b[33m";
        out += name;
        out += "\x1b[0m";
    } else {
        out += name;
    }
    out += ' ';
    out += diag.rule;
    if (diag.span) {
        out += ' ';
        out += diag.span->file;
        out += ':';
        out += std::to_string(diag.span->start.line);
        out += ':';
        out += std::to_string(diag.span->start.col);
    }
    if (!diag.path.empty()) {
        out += ' ';
        out += render_path(diag.path);
    }
    out += " \xE2\x80\x94 "; // em dash
    out += diag.message;
    return out;
}

std::string render_json(const Diagnostic& diag) {
    nlohmann::ordered_json j;
    j["severity"] = diag.severity == Severity::Error ? "error" : "warning";
    j["rule"] = diag.rule;
    j["file"] = diag.span ? diag.span->file : "";
    j["line"] = diag.span ? diag.span->start.line : 0;
    j["col"] = diag.span ? diag.span->start.col : 0;
    j["path"] = diag.path;
    j["message"] = diag.message;
    return j.dump();
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    auto key = [](const Diagnostic& d) {
        int line = d.span ? d.span->start.line : 0;
        int col = d.span ? d.span->start.col : 0;
        return std::make_tuple(line, col, std::cref(d.rule), std::cref(d.path),
                               std::cref(d.message));
    };
    std::stable_sort(diags.begin(), diags.end(),
                     [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

} // namespace daml
