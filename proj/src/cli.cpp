#include "daml/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "daml/analysis.hpp"
#include "daml/export.hpp"
#include "daml/parser.hpp"
#include "daml/printer.hpp"
#include "daml/templates.hpp"
#include "daml/validator.hpp"

#if defined(_WIN32)
#include <io.h>
#define DAML_ISATTY _isatty
#define DAML_FILENO _fileno
#else
#include <unistd.h>
#define DAML_ISATTY isatty
#define DAML_FILENO fileno
#endif

namespace daml {

namespace {

// Exit codes; the worst (highest) outcome wins across files.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParseFailure = 2;
constexpr int kUsage = 3;

bool color_enabled() {
    if (std::getenv("DAMLC_NO_COLOR") != nullptr) return false;
    return DAML_ISATTY(DAML_FILENO(stderr)) != 0;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return std::move(buffer).str();
}

void emit_diagnostics(const std::vector<Diagnostic>& diagnostics, bool json_mode) {
    if (json_mode) {
        for (const Diagnostic& diagnostic : diagnostics) {
            std::cout << render_json(diagnostic) << '\n';
        }
        return;
    }
    bool color = color_enabled();
    for (const Diagnostic& diagnostic : diagnostics) {
        std::cerr << render_text(diagnostic, color) << '\n';
    }
}

// Shared front half of export/analyze: parse, validate, refuse on errors.
std::optional<Model> load_valid_model(const std::string& path, int& status) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "damlc: cannot read '" << path << "'\n";
        status = kUsage;
        return std::nullopt;
    }
    ParseResult parsed = parse(*text, path);
    if (!parsed.model) {
        emit_diagnostics(parsed.diagnostics, false);
        status = kParseFailure;
        return std::nullopt;
    }
    auto diagnostics = validate(*parsed.model, parsed.spans);
    emit_diagnostics(diagnostics, false);
    if (has_errors(diagnostics)) {
        status = kInvalid;
        return std::nullopt;
    }
    status = kOk;
    return std::move(parsed.model);
}

// --- check -----------------------------------------------------------------

int check_one(const std::string& path, bool deny_warnings, bool json_mode) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "damlc: cannot read '" << path << "'\n";
        return kUsage;
    }
    ParseResult parsed = parse(*text, path);
    if (!parsed.model) {
        emit_diagnostics(parsed.diagnostics, json_mode);
        return kParseFailure;
    }
    auto diagnostics = validate(*parsed.model, parsed.spans);
    emit_diagnostics(diagnostics, json_mode);
    if (has_errors(diagnostics)) return kInvalid;
    if (deny_warnings && !diagnostics.empty()) return kInvalid;
    return kOk;
}

int cmd_check(const std::vector<std::string>& files, bool deny_warnings, bool json_mode) {
    int worst = kOk;
    for (const std::string& path : files) {
        worst = std::max(worst, check_one(path, deny_warnings, json_mode));
    }
    return worst;
}

// --- fmt ---------------------------------------------------------------------

int cmd_fmt(const std::string& path, bool write, bool check_only) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "damlc: cannot read '" << path << "'\n";
        return kUsage;
    }
    ParseResult parsed = parse(*text, path);
    if (!parsed.model) {
        emit_diagnostics(parsed.diagnostics, false);
        return kParseFailure;
    }
    std::string canonical = print(*parsed.model);
    if (check_only) {
        if (canonical == *text) return kOk;
        std::cerr << path << ": not canonical\n";
        return kInvalid;
    }
    if (write) {
        if (canonical != *text) {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out || !(out << canonical) || !out.flush()) {
                std::cerr << "damlc: cannot write '" << path << "'\n";
                return kUsage;
            }
        }
        return kOk;
    }
    std::cout << canonical;
    return kOk;
}

// --- export ------------------------------------------------------------------

int cmd_export(const std::string& path, const std::string& format,
               const std::string& out_path) {
    int status = kOk;
    auto model = load_valid_model(path, status);
    if (!model) return status;

    std::string output = format == "dot" ? to_dot(*model) : to_json(*model) + "\n";
    if (out_path.empty()) {
        std::cout << output;
        return kOk;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << output) || !out.flush()) {
        std::cerr << "damlc: cannot write '" << out_path << "'\n";
        return kUsage;
    }
    return kOk;
}

// --- analyze -------------------------------------------------------------------

std::string join_path(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += " -> ";
        out += names[i];
    }
    return out;
}

void print_pattern(const Model& model) {
    PatternClass result = classify(model);
    std::cout << "pattern: " << to_string(result.value) << '\n';
    if (result.lambda) {
        std::cout << "fork: " << result.lambda->fork << '\n';
        std::cout << "join: " << result.lambda->join << '\n';
        std::cout << "batch path: " << join_path(result.lambda->batch_path) << '\n';
        std::cout << "realtime path: " << join_path(result.lambda->realtime_path) << '\n';
    }
    if (result.covering_paths) {
        for (const auto& path : *result.covering_paths) {
            std::cout << "path: " << join_path(path) << '\n';
        }
    }
}

void print_summary(const Model& model) {
    for (const NodeFlow& flow : flow_summary(model)) {
        std::cout << flow.name << ": in=" << flow.in_degree << " out=" << flow.out_degree
                  << " roles=[";
        std::string roles;
        if (flow.source) roles += "source";
        if (flow.sink) roles += roles.empty() ? "sink" : ",sink";
        if (flow.serving) roles += roles.empty() ? "serving" : ",serving";
        std::cout << roles << "]";
        if (flow.processing) std::cout << " processing=" << to_string(*flow.processing);
        if (flow.storage) std::cout << " storage=" << flow.storage->display();
        if (!flow.formats.empty()) {
            std::cout << " formats=[";
            for (std::size_t i = 0; i < flow.formats.size(); ++i) {
                if (i > 0) std::cout << ", ";
                std::cout << flow.formats[i].display();
            }
            std::cout << "]";
        }
        std::cout << '\n';
    }
}

int cmd_analyze(const std::string& path, bool pattern, const std::string& reachability,
                bool summary) {
    if (!pattern && !summary && reachability.empty()) {
        std::cerr << "damlc: analyze needs --pattern, --reachability, or --summary\n";
        return kUsage;
    }
    int status = kOk;
    auto model = load_valid_model(path, status);
    if (!model) return status;

    if (pattern) print_pattern(*model);
    if (!reachability.empty()) {
        auto result = reachable(*model, reachability);
        if (!result) {
            std::cerr << "damlc: " << result.error().message << '\n';
            return kUsage;
        }
        for (const std::string& name : result.value()) std::cout << name << '\n';
    }
    if (summary) print_summary(*model);
    return kOk;
}

// --- init ----------------------------------------------------------------------

int cmd_init(const std::string& template_name, const std::string& directory) {
    auto content = template_content(template_name);
    if (!content) {
        std::cerr << "damlc: unknown template '" << template_name << "'\n";
        return kUsage;
    }
    std::filesystem::path target =
        std::filesystem::path(directory) / (template_name + std::string(".daml"));
    std::error_code ec;
    if (std::filesystem::exists(target, ec)) {
        std::cerr << "damlc: refusing to overwrite '" << target.string() << "'\n";
        return kUsage;
    }
    if (!directory.empty()) {
        std::filesystem::create_directories(directory, ec);
        if (ec) {
            std::cerr << "damlc: cannot create directory '" << directory << "'\n";
            return kUsage;
        }
    }
    std::ofstream out(target, std::ios::binary);
    if (!out || !(out << *content) || !out.flush()) {
        std::cerr << "damlc: cannot write '" << target.string() << "'\n";
        return kUsage;
    }
    std::cerr << "initialized " << target.string() << '\n';
    return kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"daml-kit: parse, validate, analyze, and export data-architecture models"};
    app.name("damlc");
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "Parse and validate models");
    std::vector<std::string> check_files;
    bool deny_warnings = false;
    std::string diagnostics_mode = "text";
    check->add_option("files", check_files, "Input .daml files")->required();
    check->add_flag("--deny-warnings", deny_warnings, "Treat warnings as errors");
    check->add_option("--diagnostics", diagnostics_mode, "Diagnostics format")
        ->check(CLI::IsMember({"text", "json"}));

    // fmt
    auto* fmt = app.add_subcommand("fmt", "Print or apply the canonical format");
    std::string fmt_file;
    bool fmt_write = false;
    bool fmt_check = false;
    fmt->add_option("file", fmt_file, "Input .daml file")->required();
    auto* write_flag = fmt->add_flag("--write", fmt_write, "Rewrite the file in place");
    auto* check_flag = fmt->add_flag("--check", fmt_check, "Exit 1 when not canonical");
    write_flag->excludes(check_flag);

    // export
    auto* exp = app.add_subcommand("export", "Export a valid model as DOT or JSON");
    std::string export_file;
    std::string export_format;
    std::string export_out;
    exp->add_option("file", export_file, "Input .daml file")->required();
    exp->add_option("--format", export_format, "Output format")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--out", export_out, "Output path (stdout when absent)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Run graph analyses on a valid model");
    std::string analyze_file;
    bool analyze_pattern = false;
    std::string analyze_reachability;
    bool analyze_summary = false;
    analyze->add_option("file", analyze_file, "Input .daml file")->required();
    analyze->add_flag("--pattern", analyze_pattern, "Classify the architecture");
    analyze->add_option("--reachability", analyze_reachability,
                        "List nodes reachable from the given node");
    analyze->add_flag("--summary", analyze_summary, "Per-node flow summary");

    // init
    auto* init = app.add_subcommand("init", "Write a starter model into a directory");
    std::string init_template;
    std::string init_dir = ".";
    init->add_option("--template", init_template, "Starter model name")
        ->required()
        ->check(CLI::IsMember({"dosm", "lambda", "kappa", "pipeline"}));
    init->add_option("dir", init_dir, "Target directory (default: current)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "damlc: " << e.what() << '\n';
        return kUsage;
    }

    if (check->parsed()) {
        return cmd_check(check_files, deny_warnings, diagnostics_mode == "json");
    }
    if (fmt->parsed()) return cmd_fmt(fmt_file, fmt_write, fmt_check);
    if (exp->parsed()) return cmd_export(export_file, export_format, export_out);
    if (analyze->parsed()) {
        return cmd_analyze(analyze_file, analyze_pattern, analyze_reachability, analyze_summary);
    }
    if (init->parsed()) return cmd_init(init_template, init_dir);
    return kUsage;
}

} // namespace daml
