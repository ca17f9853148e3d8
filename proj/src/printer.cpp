#include "daml/printer.hpp"

#include <string_view>

namespace daml {

namespace {

class Printer {
  public:
    std::string render(const Model& model) {
        out_ += "architecture ";
        out_ += model.name;
        out_ += " level ";
        out_ += to_string(model.level);
        out_ += " {\n";
        indent_ = 1;
        for (const DataNode& node : model.nodes) print_node(node);
        for (const Connection& connection : model.connections) print_connection(connection);
        out_ += "}\n";
        return std::move(out_);
    }

  private:
    void line(std::string_view text) {
        for (int i = 0; i < indent_; ++i) out_ += "  ";
        out_ += text;
        out_ += '\n';
    }

    void print_node(const DataNode& node) {
        line("node " + quoted(node.name) + " {");
        ++indent_;
        for (const DataPort& port : node.ports) {
            line(std::string(port.direction == PortDirection::In ? "in" : "out") + " port " +
                 port.name);
        }
        if (node.representation) print_representation(*node.representation);
        if (node.behavior) print_behavior(*node.behavior);
        --indent_;
        line("}");
    }

    void print_representation(const DataRepresentation& repr) {
        line("representation {");
        ++indent_;
        if (!repr.formats.empty()) {
            std::string text = "formats: [";
            for (std::size_t i = 0; i < repr.formats.size(); ++i) {
                if (i > 0) text += ", ";
                text += repr.formats[i].display();
            }
            text += "];";
            line(text);
        }
        if (repr.processing) {
            line("processing: " + std::string(to_string(*repr.processing)) + ";");
        }
        if (repr.storage) line("storage: " + repr.storage->display() + ";");
        if (repr.location) line("location: " + std::string(to_string(*repr.location)) + ";");
        --indent_;
        line("}");
    }

    void print_behavior(const NodeBehavior& behavior) {
        line("behavior {");
        ++indent_;
        for (const BehaviorElement& element : behavior.elements) print_element(element);
        for (const Link& link : behavior.links) line("link " + link.from + " -> " + link.to);
        --indent_;
        line("}");
    }

    void print_element(const BehaviorElement& element) {
        struct Visitor {
            const std::string& name;
            std::string operator()(const ReceiveEvent& e) const {
                return "event receive " + name + " via " + e.port;
            }
            std::string operator()(const ExternalEvent& e) const {
                return "event external " + name + " " + quoted(e.label);
            }
            std::string operator()(const GenerateAction& a) const {
                return "action generate " + name + " { source: " + quoted(a.source) +
                       "; format: " + a.format.display() + "; }";
            }
            std::string operator()(const IngestAction& a) const {
                return "action ingest " + name + " { steps: " + strlist(a.steps) + "; }";
            }
            std::string operator()(const ProcessAction& a) const {
                return "action process " + name + " { subprocesses: " + strlist(a.subprocesses) +
                       "; }";
            }
            std::string operator()(const StoreAction& a) const {
                std::string tasks;
                for (std::size_t i = 0; i < a.tasks.size(); ++i) {
                    if (i > 0) tasks += ", ";
                    tasks += to_string(a.tasks[i]);
                }
                return "action store " + name + " { tasks: [" + tasks + "]; }";
            }
            std::string operator()(const AnalyzeAction& a) const {
                return "action analyze " + name + " { technique: " + quoted(a.technique) + "; }";
            }
            std::string operator()(const ConsumeAction& a) const {
                return "action consume " + name +
                       " { mode: " + std::string(to_string(a.mode)) + "; }";
            }
            std::string operator()(const SendAction& a) const {
                return "action send " + name + " via " + a.port;
            }
            static std::string strlist(const std::vector<std::string>& items) {
                std::string text = "[";
                for (std::size_t i = 0; i < items.size(); ++i) {
                    if (i > 0) text += ", ";
                    text += quoted(items[i]);
                }
                text += "]";
                return text;
            }
        };
        line(std::visit(Visitor{element.name}, element.kind));
    }

    void print_connection(const Connection& connection) {
        std::string text = "connection ";
        if (connection.name) {
            text += *connection.name;
            text += ": ";
        }
        text += quoted(connection.source.node) + "." + connection.source.port + " -> " +
                quoted(connection.target.node) + "." + connection.target.port;
        line(text);
    }

    std::string out_;
    int indent_ = 0;
};

} // namespace

std::string print(const Model& model) {
    return Printer().render(model);
}

} // namespace daml
