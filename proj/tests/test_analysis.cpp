#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "daml/analysis.hpp"
#include "daml/model.hpp"
#include "daml/parser.hpp"
#include "doctest.h"
#include "support/classify_cases.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace daml;
using namespace daml::test;

namespace {

Model parse_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto r = parse(buffer.str(), path);
    REQUIRE(r.model.has_value());
    return *r.model;
}

std::vector<std::string> names_for(const std::vector<std::size_t>& indices,
                                   const std::string& prefix = "n") {
    std::vector<std::string> names;
    for (std::size_t v : indices) names.push_back(prefix + std::to_string(v));
    return names;
}

}  // namespace

TEST_CASE("reachable agrees with a fixed-point oracle on 100 random digraphs") {
    std::mt19937 rng(412001);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        const Edges edges = random_digraph(rng, n);
        const Model m = graph_model(n, edges);
        CAPTURE(trial);
        for (std::size_t start = 0; start < n; ++start) {
            auto got = reachable(m, "n" + std::to_string(start));
            REQUIRE(got.ok());
            CHECK(got.value() == names_for(reachable_fixed_point(n, edges, start)));
        }
    }
}

TEST_CASE("source_sink_paths agrees with exhaustive enumeration on 100 random DAGs") {
    std::mt19937 rng(412002);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const Edges edges = random_dag(rng, n);
        const Model m = graph_model(n, edges);
        CAPTURE(trial);

        auto got = source_sink_paths(m);
        REQUIRE(got.ok());
        CHECK(!got.value().truncated);

        std::vector<std::vector<std::string>> expected;
        for (const auto& path : paths_by_enumeration(n, edges)) {
            expected.push_back(names_for(path));
        }
        std::sort(expected.begin(), expected.end());
        CHECK(got.value().paths == expected);
    }
}

TEST_CASE("reachable on the reference model matches the known closure") {
    const Model dosm = parse_model_file(DAML_MODELS_DIR "/dosm.daml");

    auto from_sources = reachable(dosm, "Data Sources");
    REQUIRE(from_sources.ok());
    CHECK(from_sources.value() ==
          std::vector<std::string>{"Data Sources", "Data Ingestion", "Raw Data",
                                   "Real-Time Processing", "Batch Processing",
                                   "Storage and Analyze", "Visualize and Serve"});

    auto from_sink = reachable(dosm, "Visualize and Serve");
    REQUIRE(from_sink.ok());
    CHECK(from_sink.value() == std::vector<std::string>{"Visualize and Serve"});

    auto missing = reachable(dosm, "Nope");
    REQUIRE(!missing.ok());
    CHECK(missing.error().code == "unknown-node");
    CHECK(missing.error().message == "unknown node \"Nope\"");
}

TEST_CASE("source_sink_paths on the reference model yields its two branches") {
    const Model dosm = parse_model_file(DAML_MODELS_DIR "/dosm.daml");
    auto r = source_sink_paths(dosm);
    REQUIRE(r.ok());
    CHECK(!r.value().truncated);
    REQUIRE(r.value().paths.size() == 2);
    CHECK(r.value().paths[0] ==
          std::vector<std::string>{"Data Sources", "Data Ingestion", "Raw Data",
                                   "Batch Processing", "Storage and Analyze",
                                   "Visualize and Serve"});
    CHECK(r.value().paths[1] ==
          std::vector<std::string>{"Data Sources", "Data Ingestion", "Real-Time Processing",
                                   "Storage and Analyze", "Visualize and Serve"});
}

TEST_CASE("source_sink_paths refuses cyclic graphs and honors the cap exactly") {
    const Model cyclic = graph_model(2, {{0, 1}, {1, 0}});
    auto r = source_sink_paths(cyclic);
    REQUIRE(!r.ok());
    CHECK(r.error().code == "cyclic-graph");

    // A diamond has exactly two source->sink paths.
    const Model diamond = graph_model(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto capped = source_sink_paths(diamond, 1);
    REQUIRE(capped.ok());
    CHECK(capped.value().paths.size() == 1);
    CHECK(capped.value().truncated);

    auto exact = source_sink_paths(diamond, 2);
    REQUIRE(exact.ok());
    CHECK(exact.value().paths.size() == 2);
    CHECK(!exact.value().truncated);  // cap == path count is not truncation

    auto empty = source_sink_paths(Model{});
    REQUIRE(empty.ok());
    CHECK(empty.value().paths.empty());
    CHECK(!empty.value().truncated);
}

TEST_CASE("twenty hand-labeled graphs classify exactly") {
    for (const ClassifyCase& c : classify_cases()) {
        CAPTURE(c.title);
        const Model m = classify_case_model(c);
        CHECK(classify(m).value == c.expected);
    }
    REQUIRE(classify_cases().size() == 20);
}

TEST_CASE("lambda evidence names the reference model's fork and join") {
    const Model dosm = parse_model_file(DAML_MODELS_DIR "/dosm.daml");
    auto result = classify(dosm);
    REQUIRE(result.value == Pattern::Lambda);
    REQUIRE(result.lambda.has_value());
    CHECK(result.lambda->fork == "Data Ingestion");
    CHECK(result.lambda->join == "Storage and Analyze");
    CHECK(result.lambda->batch_path ==
          std::vector<std::string>{"Data Ingestion", "Raw Data", "Batch Processing",
                                   "Storage and Analyze"});
    CHECK(result.lambda->realtime_path ==
          std::vector<std::string>{"Data Ingestion", "Real-Time Processing",
                                   "Storage and Analyze"});
    CHECK(!result.covering_paths.has_value());
}

TEST_CASE("kappa and pipeline evidence carries covering paths") {
    const Model kappa = parse_model_file(DAML_MODELS_DIR "/kappa.daml");
    auto k = classify(kappa);
    REQUIRE(k.value == Pattern::Kappa);
    REQUIRE(k.covering_paths.has_value());
    CHECK(*k.covering_paths ==
          std::vector<std::vector<std::string>>{
              {"Event Source", "Stream Processing", "Serving Store"}});

    const Model pipeline = parse_model_file(DAML_MODELS_DIR "/pipeline.daml");
    auto p = classify(pipeline);
    REQUIRE(p.value == Pattern::Pipeline);
    REQUIRE(p.covering_paths.has_value());
    CHECK(*p.covering_paths ==
          std::vector<std::vector<std::string>>{{"Extract", "Transform", "Load"}});
    CHECK(!p.lambda.has_value());
}

TEST_CASE("classification does not depend on declaration order") {
    for (const ClassifyCase& c : classify_cases()) {
        CAPTURE(c.title);
        Model m = classify_case_model(c);
        std::mt19937 rng(99);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::shuffle(m.nodes.begin(), m.nodes.end(), rng);
            std::shuffle(m.connections.begin(), m.connections.end(), rng);
            CHECK(classify(m).value == c.expected);
        }
    }
}

TEST_CASE("pattern names render for reports") {
    CHECK(to_string(Pattern::Lambda) == std::string("Lambda"));
    CHECK(to_string(Pattern::Kappa) == std::string("Kappa"));
    CHECK(to_string(Pattern::Pipeline) == std::string("Pipeline"));
    CHECK(to_string(Pattern::Unknown) == std::string("Unknown"));
}

TEST_CASE("flow_summary reproduces the reference model's table") {
    const Model dosm = parse_model_file(DAML_MODELS_DIR "/dosm.daml");
    auto rows = flow_summary(dosm);
    REQUIRE(rows.size() == 7);

    CHECK(rows[0].name == "Data Sources");
    CHECK(rows[0].in_degree == 0);
    CHECK(rows[0].out_degree == 1);
    CHECK(rows[0].source);
    CHECK(!rows[0].sink);
    CHECK(!rows[0].serving);
    REQUIRE(rows[0].formats.size() == 1);
    CHECK(rows[0].formats[0] == DataFormat::of(FormatKind::JSON));

    CHECK(rows[1].name == "Data Ingestion");
    CHECK(rows[1].in_degree == 1);
    CHECK(rows[1].out_degree == 2);
    CHECK(!rows[1].source);
    CHECK(!rows[1].sink);

    CHECK(rows[2].name == "Raw Data");
    CHECK(rows[2].serving);  // it stores
    REQUIRE(rows[2].storage.has_value());
    CHECK(rows[2].storage->display() == "FileSystem.HDF");

    CHECK(rows[3].name == "Real-Time Processing");
    CHECK(rows[3].processing == ProcessingType::RealTime);
    CHECK(rows[4].name == "Batch Processing");
    CHECK(rows[4].processing == ProcessingType::Batch);

    CHECK(rows[5].name == "Storage and Analyze");
    CHECK(rows[5].in_degree == 2);
    CHECK(rows[5].serving);

    CHECK(rows[6].name == "Visualize and Serve");
    CHECK(rows[6].sink);
    CHECK(!rows[6].source);
}

TEST_CASE("flow_summary marks generators as sources even with inbound edges") {
    // A node with a generate action counts as a source regardless of degree.
    auto r = parse(
        "architecture g {\n"
        "  node \"A\" { out port feed }\n"
        "  node \"B\" {\n"
        "    in port intake\n"
        "    behavior {\n"
        "      action generate make { source: \"x\"; format: JSON; }\n"
        "    }\n"
        "  }\n"
        "  connection \"A\".feed -> \"B\".intake\n"
        "}\n");
    REQUIRE(r.model.has_value());
    auto rows = flow_summary(*r.model);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].name == "B");
    CHECK(rows[1].in_degree == 1);
    CHECK(rows[1].source);
    CHECK(rows[1].sink);
}

TEST_CASE("empty model analyses are empty but well-defined") {
    Model m;
    m.name = "void";
    CHECK(classify(m).value == Pattern::Unknown);
    CHECK(flow_summary(m).empty());
}
