#include <fstream>
#include <sstream>
#include <string>

#include "daml/model.hpp"
#include "daml/parser.hpp"
#include "doctest.h"

using namespace daml;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// All its diagnostics rendered compactly, for one-line assertions.
std::string rules_of(const ParseResult& r) {
    std::string out;
    for (const auto& d : r.diagnostics) {
        if (!out.empty()) out += " ";
        out += d.rule;
    }
    return out;
}

}  // namespace

TEST_CASE("the bundled reference model parses cleanly") {
    auto text = read_file(std::string(DAML_MODELS_DIR) + "/dosm.daml");
    auto r = parse(text, "dosm.daml");
    REQUIRE(r.diagnostics.empty());
    REQUIRE(r.model.has_value());
    const Model& m = *r.model;
    CHECK(m.name == "dosm");
    CHECK(m.level == Level::HLA);
    REQUIRE(m.nodes.size() == 7);
    CHECK(m.nodes[0].name == "Data Sources");
    CHECK(m.nodes[6].name == "Visualize and Serve");
    CHECK(m.connections.size() == 7);
}

TEST_CASE("the level clause is optional and defaults to HLA") {
    auto bare = parse("architecture a {\n}\n");
    REQUIRE(bare.model.has_value());
    CHECK(bare.model->level == Level::HLA);

    auto lla = parse("architecture a level LLA {\n}\n");
    REQUIRE(lla.model.has_value());
    CHECK(lla.model->level == Level::LLA);

    auto bad = parse("architecture a level MID {\n}\n");
    CHECK(!bad.model.has_value());
    REQUIRE(!bad.diagnostics.empty());
    CHECK(bad.diagnostics[0].message == "expected 'HLA' or 'LLA' after 'level'");
}

TEST_CASE("node names must be strings") {
    auto r = parse("architecture a {\n  node missing {}\n}\n");
    CHECK(!r.model.has_value());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].rule == "P001");
    CHECK(r.diagnostics[0].message == "expected string after 'node'");
    CHECK(r.diagnostics[0].span->start.line == 2);
    CHECK(r.diagnostics[0].span->start.col == 8);
}

TEST_CASE("empty node names are a construction violation") {
    auto r = parse("architecture a {\n  node \"\" {}\n}\n");
    CHECK(!r.model.has_value());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].rule == "P002");
    CHECK(r.diagnostics[0].message == "node name must not be empty");
}

TEST_CASE("every behavior element form parses into its kind") {
    const char* text = R"(architecture full level LLA {
  node "N" {
    in port intake
    out port feed
    representation {
      formats: [RelationalDB, JSON, Other("notes"), SemiStructured.Other("front")];
      processing: Batch;
      storage: FileSystem.Other("lustre");
      location: Cloud;
    }
    behavior {
      event receive r via intake
      event external x "something happened"
      action generate g { source: "sensors"; format: XML; }
      action ingest i { steps: ["a", "b"]; }
      action process p { subprocesses: ["c"]; }
      action store s { tasks: [Save, Govern]; }
      action analyze a { technique: "clustering"; }
      action consume c { mode: Report; }
      action send out_step via feed
      link r -> g
      link x -> p
    }
  }
}
)";
    auto r = parse(text);
    REQUIRE(r.diagnostics.empty());
    REQUIRE(r.model.has_value());
    const DataNode& n = r.model->nodes.at(0);

    REQUIRE(n.representation.has_value());
    REQUIRE(n.representation->formats.size() == 4);
    CHECK(n.representation->formats[0] == DataFormat::of(FormatKind::RelationalDB));
    // Bare Other(...) is the unstructured escape; the qualified spellings pin
    // the category explicitly.
    CHECK(n.representation->formats[2] ==
          *DataFormat::make(FormatCategory::Unstructured, FormatKind::Other, "notes"));
    CHECK(n.representation->formats[3] ==
          *DataFormat::make(FormatCategory::SemiStructured, FormatKind::Other, "front"));
    CHECK(n.representation->processing == ProcessingType::Batch);
    CHECK(n.representation->storage ==
          StorageTech::make(StorageFamily::FileSystem, StorageKind::Other, "lustre"));
    CHECK(n.representation->location == Location::Cloud);

    REQUIRE(n.behavior.has_value());
    const auto& elements = n.behavior->elements;
    REQUIRE(elements.size() == 9);
    CHECK(std::get<ReceiveEvent>(elements[0].kind).port == "intake");
    CHECK(std::get<ExternalEvent>(elements[1].kind).label == "something happened");
    CHECK(std::get<GenerateAction>(elements[2].kind).source == "sensors");
    CHECK(std::get<GenerateAction>(elements[2].kind).format == DataFormat::of(FormatKind::XML));
    CHECK(std::get<IngestAction>(elements[3].kind).steps ==
          std::vector<std::string>{"a", "b"});
    CHECK(std::get<ProcessAction>(elements[4].kind).subprocesses ==
          std::vector<std::string>{"c"});
    CHECK(std::get<StoreAction>(elements[5].kind).tasks ==
          std::vector<StoreTask>{StoreTask::Save, StoreTask::Govern});
    CHECK(std::get<AnalyzeAction>(elements[6].kind).technique == "clustering");
    CHECK(std::get<ConsumeAction>(elements[7].kind).mode == ConsumeMode::Report);
    CHECK(std::get<SendAction>(elements[8].kind).port == "feed");
    REQUIRE(n.behavior->links.size() == 2);
    CHECK(n.behavior->links[0] == Link{"r", "g"});
}

TEST_CASE("store tasks are normalized to enum order at parse time") {
    auto r = parse(
        "architecture a {\n  node \"N\" {\n    behavior {\n"
        "      action store s { tasks: [Govern, Save]; }\n    }\n  }\n}\n");
    REQUIRE(r.model.has_value());
    const auto& store = std::get<StoreAction>(r.model->nodes[0].behavior->elements[0].kind);
    CHECK(store.tasks == std::vector<StoreTask>{StoreTask::Save, StoreTask::Govern});
}

TEST_CASE("connections parse with and without a name") {
    auto r = parse(
        "architecture a {\n"
        "  node \"A\" { out port feed }\n"
        "  node \"B\" { in port intake }\n"
        "  connection uplink: \"A\".feed -> \"B\".intake\n"
        "  connection \"A\".feed -> \"B\".intake\n"
        "}\n");
    REQUIRE(r.diagnostics.empty());
    REQUIRE(r.model.has_value());
    REQUIRE(r.model->connections.size() == 2);
    CHECK(r.model->connections[0].name == "uplink");
    CHECK(!r.model->connections[1].name.has_value());
    CHECK(r.model->connections[0].source == Endpoint{"A", "feed"});
    CHECK(r.model->connections[0].target == Endpoint{"B", "intake"});
}

TEST_CASE("construction violations are P002 and drop the model") {
    SUBCASE("duplicate representation block") {
        auto r = parse(
            "architecture a {\n  node \"N\" {\n    representation { location: Local; }\n"
            "    representation { location: Cloud; }\n  }\n}\n");
        CHECK(!r.model.has_value());
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].rule == "P002");
        CHECK(r.diagnostics[0].message == "duplicate representation block (first one kept)");
    }
    SUBCASE("duplicate field in a representation") {
        auto r = parse(
            "architecture a {\n  node \"N\" {\n"
            "    representation { location: Local; location: Cloud; }\n  }\n}\n");
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].message == "duplicate 'location' field (first one kept)");
    }
    SUBCASE("duplicate format in a formats list") {
        auto r = parse(
            "architecture a {\n  node \"N\" {\n"
            "    representation { formats: [JSON, JSON]; }\n  }\n}\n");
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].message == "duplicate format JSON in formats list");
    }
    SUBCASE("duplicate store task") {
        auto r = parse(
            "architecture a {\n  node \"N\" {\n    behavior {\n"
            "      action store s { tasks: [Save, Save]; }\n    }\n  }\n}\n");
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].rule == "P002");
        CHECK(r.diagnostics[0].message == "duplicate task Save in tasks list");
    }
    SUBCASE("reflexive link") {
        auto r = parse(
            "architecture a {\n  node \"N\" {\n    behavior {\n"
            "      action process p { subprocesses: [\"x\"]; }\n"
            "      link p -> p\n    }\n  }\n}\n");
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].rule == "P002");
    }
}

TEST_CASE("recovery reports several independent errors in one pass") {
    auto r = parse(
        "architecture a {\n"
        "  node missing {}\n"
        "  node \"Ok\" { in port intake }\n"
        "  node alsoMissing {}\n"
        "}\n");
    CHECK(!r.model.has_value());
    CHECK(rules_of(r) == "P001 P001");
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].span->start.line == 2);
    CHECK(r.diagnostics[1].span->start.line == 4);
}

TEST_CASE("trailing input after the closing brace is an error") {
    auto r = parse("architecture a {\n}\nnode \"X\" {}\n");
    CHECK(!r.model.has_value());
    REQUIRE(!r.diagnostics.empty());
    CHECK(r.diagnostics[0].message == "expected end of input after '}'");
}

TEST_CASE("missing closing braces report one error per unclosed construct") {
    auto r = parse("architecture a {\n  node \"N\" {\n    in port intake\n");
    CHECK(!r.model.has_value());
    REQUIRE(r.diagnostics.size() == 2);  // the node's brace and the model's
    CHECK(r.diagnostics[0].message == "expected '}'");
    CHECK(r.diagnostics[1].message == "expected '}' to close node \"N\"");
}

TEST_CASE("spans map model entities back to source positions") {
    auto r = parse(
        "architecture demo {\n"
        "  node \"First\" {\n"
        "    in port intake\n"
        "  }\n"
        "  connection \"A\".x -> \"B\".y\n"
        "}\n",
        "spans.daml");
    REQUIRE(r.model.has_value());

    auto model_span = r.spans.find(EntityKey::model());
    REQUIRE(model_span != r.spans.end());
    CHECK(model_span->second.start.line == 1);
    CHECK(model_span->second.start.col == 14);

    auto node_span = r.spans.find(EntityKey::node_at(0));
    REQUIRE(node_span != r.spans.end());
    CHECK(node_span->second.start.line == 2);
    CHECK(node_span->second.start.col == 8);
    CHECK(node_span->second.file == "spans.daml");

    auto port_span = r.spans.find(EntityKey::port_at(0, 0));
    REQUIRE(port_span != r.spans.end());
    CHECK(port_span->second.start.line == 3);

    auto conn_span = r.spans.find(EntityKey::connection_at(0));
    REQUIRE(conn_span != r.spans.end());
    CHECK(conn_span->second.start.line == 5);
    CHECK(conn_span->second.start.col == 3);
}

TEST_CASE("keywords cannot serve as names") {
    CHECK(!parse("architecture node {\n}\n").model.has_value());
    CHECK(!parse("architecture a {\n  node \"N\" { in port store }\n}\n").model.has_value());
}

TEST_CASE("lex failures surface through parse") {
    auto r = parse("architecture a { @ }");
    CHECK(!r.model.has_value());
    REQUIRE(!r.diagnostics.empty());
    CHECK(r.diagnostics[0].message == "illegal character '@'");
}
