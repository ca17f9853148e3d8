#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "daml/model.hpp"
#include "daml/parser.hpp"
#include "daml/printer.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace daml;
using daml::test::ModelGenerator;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("canonical text of a representative model is pinned") {
    const char* source = R"(architecture demo level LLA {
  node "Source" {
    out port feed
    representation {
      formats: [JSON, Other("blob")];
      processing: RealTime;
      storage: NoSQL.KeyValue;
      location: Cloud;
    }
    behavior {
      event external tick "timer fired"
      action generate make { source: "sensors"; format: JSON; }
      action send push via feed
      link tick -> make
      link make -> push
    }
  }
  node "Sink" {
    in port intake
  }
  connection main: "Source".feed -> "Sink".intake
}
)";
    auto parsed = parse(source);
    REQUIRE(parsed.diagnostics.empty());
    REQUIRE(parsed.model.has_value());
    // The source above is already canonical, so printing reproduces it.
    CHECK(print(*parsed.model) == source);
}

TEST_CASE("the empty model prints as a bare architecture block") {
    Model m;
    m.name = "empty";
    CHECK(print(m) == "architecture empty level HLA {\n}\n");
}

TEST_CASE("present-but-empty blocks survive printing") {
    Model m;
    m.name = "edge";
    DataNode node;
    node.name = "N";
    node.representation = DataRepresentation{};
    node.behavior = NodeBehavior{};
    m.nodes.push_back(node);

    const std::string text = print(m);
    auto again = parse(text);
    REQUIRE(again.diagnostics.empty());
    REQUIRE(again.model.has_value());
    CHECK(*again.model == m);
    CHECK(again.model->nodes[0].representation.has_value());
    CHECK(again.model->nodes[0].behavior.has_value());
}

TEST_CASE("printing is idempotent on every bundled model and fixture") {
    const char* files[] = {
        DAML_MODELS_DIR "/dosm.daml",       DAML_MODELS_DIR "/lambda.daml",
        DAML_MODELS_DIR "/kappa.daml",      DAML_MODELS_DIR "/pipeline.daml",
        DAML_FIXTURES_DIR "/fixture-E001.daml", DAML_FIXTURES_DIR "/fixture-E002.daml",
        DAML_FIXTURES_DIR "/fixture-E003.daml", DAML_FIXTURES_DIR "/fixture-E004.daml",
        DAML_FIXTURES_DIR "/fixture-E005.daml", DAML_FIXTURES_DIR "/fixture-E006.daml",
        DAML_FIXTURES_DIR "/fixture-E007.daml", DAML_FIXTURES_DIR "/fixture-E008.daml",
        DAML_FIXTURES_DIR "/fixture-E009.daml", DAML_FIXTURES_DIR "/fixture-E010.daml",
        DAML_FIXTURES_DIR "/fixture-W101.daml", DAML_FIXTURES_DIR "/fixture-W102.daml",
        DAML_FIXTURES_DIR "/fixture-W103.daml", DAML_FIXTURES_DIR "/fixture-W104.daml",
        DAML_FIXTURES_DIR "/fixture-W105.daml",
    };
    for (const char* file : files) {
        CAPTURE(file);
        auto first = parse(read_file(file), file);
        REQUIRE(first.model.has_value());
        const std::string once = print(*first.model);

        auto second = parse(once, file);
        REQUIRE(second.diagnostics.empty());
        REQUIRE(second.model.has_value());
        CHECK(*second.model == *first.model);
        CHECK(print(*second.model) == once);
    }
}

TEST_CASE("parse of print reproduces 200 generated models exactly") {
    ModelGenerator gen(20240901);
    for (int i = 0; i < 200; ++i) {
        const Model m = gen.next();
        CAPTURE(i);
        const std::string text = print(m);
        auto r = parse(text, "generated.daml");
        REQUIRE_MESSAGE(r.diagnostics.empty(), text);
        REQUIRE(r.model.has_value());
        CHECK_MESSAGE(*r.model == m, text);
    }
}

TEST_CASE("the generator corpus covers the whole taxonomy") {
    ModelGenerator gen(20240901);
    std::set<std::string> formats, storages, verbs;
    std::set<std::size_t> node_counts, connection_counts, element_counts;
    bool saw_level[2] = {false, false};

    for (int i = 0; i < 200; ++i) {
        const Model m = gen.next();
        node_counts.insert(m.nodes.size());
        connection_counts.insert(m.connections.size());
        saw_level[m.level == Level::HLA ? 0 : 1] = true;
        for (const DataNode& node : m.nodes) {
            if (node.representation) {
                for (const DataFormat& f : node.representation->formats) {
                    formats.insert(f.display());
                }
                if (node.representation->storage) {
                    storages.insert(node.representation->storage->display());
                }
            }
            if (node.behavior) {
                element_counts.insert(node.behavior->elements.size());
                for (const BehaviorElement& e : node.behavior->elements) {
                    verbs.insert(std::string(element_verb(e.kind)));
                }
            }
        }
    }

    CHECK(formats.size() == daml::test::format_pool().size());
    CHECK(storages.size() == daml::test::storage_pool().size());
    CHECK(verbs.size() == 9);
    CHECK(node_counts.count(0) == 1);
    CHECK(node_counts.count(8) == 1);
    CHECK(*connection_counts.rbegin() >= 10);
    CHECK(element_counts.count(0) == 1);
    CHECK(element_counts.count(6) == 1);
    CHECK(saw_level[0]);
    CHECK(saw_level[1]);
}
