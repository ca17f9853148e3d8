#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "daml/analysis.hpp"
#include "daml/export.hpp"
#include "daml/parser.hpp"
#include "daml/printer.hpp"
#include "daml/templates.hpp"
#include "daml/validator.hpp"

namespace py = pybind11;

namespace {

py::dict diagnostic_to_dict(const daml::Diagnostic& diagnostic) {
    py::dict d;
    d["severity"] = diagnostic.severity == daml::Severity::Error ? "error" : "warning";
    d["rule"] = diagnostic.rule;
    d["file"] = diagnostic.span ? diagnostic.span->file : "";
    d["line"] = diagnostic.span ? diagnostic.span->start.line : 0;
    d["col"] = diagnostic.span ? diagnostic.span->start.col : 0;
    d["path"] = diagnostic.path;
    d["message"] = diagnostic.message;
    return d;
}

daml::Model parse_or_throw(const std::string& text, const std::string& file) {
    daml::ParseResult parsed = daml::parse(text, file);
    if (!parsed.model) {
        std::string message = "parse failed";
        if (!parsed.diagnostics.empty()) {
            message = daml::render_text(parsed.diagnostics.front());
        }
        throw py::value_error(message);
    }
    return *std::move(parsed.model);
}

daml::Model valid_or_throw(const std::string& text, const std::string& file) {
    daml::Model model = parse_or_throw(text, file);
    auto diagnostics = daml::validate(model);
    if (daml::has_errors(diagnostics)) {
        for (const daml::Diagnostic& diagnostic : diagnostics) {
            if (diagnostic.severity == daml::Severity::Error) {
                throw py::value_error(daml::render_text(diagnostic));
            }
        }
    }
    return model;
}

} // namespace

PYBIND11_MODULE(_daml, m) {
    m.doc() = "Core operations of the daml-kit toolchain";

    m.def(
        "check_text",
        [](const std::string& text, const std::string& file) {
            daml::ParseResult parsed = daml::parse(text, file);
            py::list out;
            for (const auto& diagnostic : parsed.diagnostics) {
                out.append(diagnostic_to_dict(diagnostic));
            }
            if (parsed.model) {
                for (const auto& diagnostic : daml::validate(*parsed.model, parsed.spans)) {
                    out.append(diagnostic_to_dict(diagnostic));
                }
            }
            return out;
        },
        py::arg("text"), py::arg("file") = "<input>",
        "Parse and validate, returning every diagnostic as a dict");

    m.def(
        "format_text",
        [](const std::string& text, const std::string& file) {
            return daml::print(parse_or_throw(text, file));
        },
        py::arg("text"), py::arg("file") = "<input>", "Canonical formatting of DAML text");

    m.def(
        "daml_to_json",
        [](const std::string& text, const std::string& file) {
            return daml::to_json(valid_or_throw(text, file));
        },
        py::arg("text"), py::arg("file") = "<input>", "Interchange JSON for a valid model");

    m.def(
        "json_to_daml",
        [](const std::string& text) {
            daml::Result<daml::Model> model = daml::from_json(text);
            if (!model) {
                throw py::value_error(model.error().code + ": " + model.error().message);
            }
            return daml::print(model.value());
        },
        py::arg("text"), "Canonical DAML text for an interchange JSON document");

    m.def(
        "to_dot",
        [](const std::string& text, const std::string& rankdir, bool formats_on_edges,
           bool cluster_by_location, const std::string& file) {
            daml::DotOptions options;
            if (rankdir == "TB") {
                options.rankdir = daml::RankDir::TB;
            } else if (rankdir != "LR") {
                throw py::value_error("rankdir must be \"LR\" or \"TB\"");
            }
            options.formats_on_edges = formats_on_edges;
            options.cluster_by_location = cluster_by_location;
            return daml::to_dot(valid_or_throw(text, file), options);
        },
        py::arg("text"), py::arg("rankdir") = "LR", py::arg("formats_on_edges") = false,
        py::arg("cluster_by_location") = false, py::arg("file") = "<input>",
        "Graphviz rendering of a valid model");

    m.def(
        "classify_text",
        [](const std::string& text, const std::string& file) {
            daml::PatternClass result = daml::classify(valid_or_throw(text, file));
            py::dict d;
            d["pattern"] = std::string(daml::to_string(result.value));
            if (result.lambda) {
                d["fork"] = result.lambda->fork;
                d["join"] = result.lambda->join;
                d["batch_path"] = result.lambda->batch_path;
                d["realtime_path"] = result.lambda->realtime_path;
            }
            if (result.covering_paths) d["paths"] = *result.covering_paths;
            return d;
        },
        py::arg("text"), py::arg("file") = "<input>",
        "Architecture pattern (Lambda, Kappa, Pipeline, or Unknown) with evidence");

    m.def(
        "reachable",
        [](const std::string& text, const std::string& node, const std::string& file) {
            auto result = daml::reachable(valid_or_throw(text, file), node);
            if (!result) throw py::value_error(result.error().message);
            return result.value();
        },
        py::arg("text"), py::arg("node"), py::arg("file") = "<input>",
        "Nodes reachable from the given node, in declaration order");

    m.def(
        "source_sink_paths",
        [](const std::string& text, std::size_t cap, const std::string& file) {
            auto result = daml::source_sink_paths(valid_or_throw(text, file), cap);
            if (!result) throw py::value_error(result.error().message);
            py::dict d;
            d["paths"] = result.value().paths;
            d["truncated"] = result.value().truncated;
            return d;
        },
        py::arg("text"), py::arg("cap") = std::size_t{10000}, py::arg("file") = "<input>",
        "All source-to-sink simple paths of an acyclic model");

    m.def(
        "flow_summary",
        [](const std::string& text, const std::string& file) {
            py::list out;
            for (const daml::NodeFlow& flow : daml::flow_summary(valid_or_throw(text, file))) {
                py::dict d;
                d["name"] = flow.name;
                d["in_degree"] = flow.in_degree;
                d["out_degree"] = flow.out_degree;
                py::list formats;
                for (const daml::DataFormat& format : flow.formats) {
                    formats.append(format.display());
                }
                d["formats"] = std::move(formats);
                d["processing"] =
                    flow.processing
                        ? py::cast(std::string(daml::to_string(*flow.processing)))
                        : py::none().cast<py::object>();
                d["storage"] = flow.storage ? py::cast(flow.storage->display())
                                            : py::none().cast<py::object>();
                d["source"] = flow.source;
                d["sink"] = flow.sink;
                d["serving"] = flow.serving;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("text"), py::arg("file") = "<input>", "Per-node degrees, attributes, and roles");

    m.def(
        "explain",
        [](const std::string& rule) {
            auto result = daml::explain(rule);
            if (!result) throw py::value_error(result.error().message);
            return result.value();
        },
        py::arg("rule"), "Catalog description of a validation rule id");

    m.def("rule_ids", &daml::rule_ids, "Every rule id in the validation catalog");

    m.def(
        "template_names",
        [] {
            std::vector<std::string> names;
            for (std::string_view name : daml::template_names()) names.emplace_back(name);
            return names;
        },
        "Names of the bundled starter models");

    m.def(
        "template",
        [](const std::string& name) {
            auto content = daml::template_content(name);
            if (!content) throw py::value_error("unknown template '" + name + "'");
            return std::string(*content);
        },
        py::arg("name"), "Text of a bundled starter model");
}
