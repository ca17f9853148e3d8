#pragma once

// Hand-labeled topology classification cases, including near-misses that a
// naive classifier would mislabel. Each case is a small node graph with the
// processing annotations that matter for the Lambda/Kappa/Pipeline rules.

#include <string>
#include <utility>
#include <vector>

#include "daml/analysis.hpp"
#include "daml/model.hpp"

namespace daml::test {

struct ClassifyCase {
    std::string title;
    // node name -> "", "Batch", or "RealTime"
    std::vector<std::pair<std::string, std::string>> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    Pattern expected;
};

inline Model classify_case_model(const ClassifyCase& c) {
    Model m;
    m.name = "case_model";
    for (const auto& [name, processing] : c.nodes) {
        DataNode node;
        node.name = name;
        node.ports.push_back(DataPort{"o", PortDirection::Out});
        node.ports.push_back(DataPort{"i", PortDirection::In});
        if (!processing.empty()) {
            DataRepresentation repr;
            repr.processing =
                processing == "Batch" ? ProcessingType::Batch : ProcessingType::RealTime;
            node.representation = repr;
        }
        m.nodes.push_back(std::move(node));
    }
    for (const auto& [from, to] : c.edges) {
        m.connections.push_back(Connection{std::nullopt, Endpoint{from, "o"}, Endpoint{to, "i"}});
    }
    return m;
}

inline const std::vector<ClassifyCase>& classify_cases() {
    static const std::vector<ClassifyCase> cases = {
        {"empty model", {}, {}, Pattern::Unknown},
        {"single plain node", {{"A", ""}}, {}, Pattern::Pipeline},
        {"single realtime node", {{"A", "RealTime"}}, {}, Pattern::Kappa},
        {"plain two-node chain", {{"A", ""}, {"B", ""}}, {{"A", "B"}}, Pattern::Pipeline},
        {"batch-only chain stays a pipeline",
         {{"A", ""}, {"B", "Batch"}, {"C", ""}},
         {{"A", "B"}, {"B", "C"}},
         Pattern::Pipeline},
        {"realtime chain is kappa before pipeline",
         {{"A", ""}, {"B", "RealTime"}, {"C", ""}},
         {{"A", "B"}, {"B", "C"}},
         Pattern::Kappa},
        {"classic lambda diamond",
         {{"F", ""}, {"B", "Batch"}, {"R", "RealTime"}, {"J", ""}},
         {{"F", "B"}, {"F", "R"}, {"B", "J"}, {"R", "J"}},
         Pattern::Lambda},
        {"fork with two batch branches is not lambda",
         {{"F", ""}, {"B1", "Batch"}, {"B2", "Batch"}, {"J", ""}},
         {{"F", "B1"}, {"F", "B2"}, {"B1", "J"}, {"B2", "J"}},
         Pattern::Unknown},
        {"fork with two realtime branches is kappa",
         {{"F", ""}, {"R1", "RealTime"}, {"R2", "RealTime"}, {"J", ""}},
         {{"F", "R1"}, {"F", "R2"}, {"R1", "J"}, {"R2", "J"}},
         Pattern::Kappa},
        {"two-node cycle", {{"A", ""}, {"B", ""}}, {{"A", "B"}, {"B", "A"}}, Pattern::Unknown},
        {"lambda with source head and serving tail",
         {{"S", ""},
          {"F", ""},
          {"B", "Batch"},
          {"R", "RealTime"},
          {"J", ""},
          {"V", ""}},
         {{"S", "F"}, {"F", "B"}, {"F", "R"}, {"B", "J"}, {"R", "J"}, {"J", "V"}},
         Pattern::Lambda},
        {"lambda whose branches share a node but not an edge",
         {{"F", ""},
          {"B", "Batch"},
          {"S", ""},
          {"X", ""},
          {"R", "RealTime"},
          {"Y", ""},
          {"J", ""}},
         {{"F", "B"},
          {"B", "S"},
          {"S", "X"},
          {"X", "J"},
          {"F", "R"},
          {"R", "X"},
          {"X", "Y"},
          {"Y", "J"}},
         Pattern::Lambda},
        {"fork and join without processing annotations",
         {{"F", ""}, {"P", ""}, {"Q", ""}, {"J", ""}},
         {{"F", "P"}, {"F", "Q"}, {"P", "J"}, {"Q", "J"}},
         Pattern::Unknown},
        {"linear mix of batch and realtime is a pipeline",
         {{"S", ""}, {"R", "RealTime"}, {"B", "Batch"}, {"K", ""}},
         {{"S", "R"}, {"R", "B"}, {"B", "K"}},
         Pattern::Pipeline},
        {"two disconnected plain chains",
         {{"A", ""}, {"B", ""}, {"C", ""}, {"D", ""}},
         {{"A", "B"}, {"C", "D"}},
         Pattern::Unknown},
        {"kappa chain plus an isolated node",
         {{"S", ""}, {"R", "RealTime"}, {"K", ""}, {"X", ""}},
         {{"S", "R"}, {"R", "K"}},
         Pattern::Kappa},
        {"lambda where the fork itself is the batch node",
         {{"F", "Batch"}, {"A", ""}, {"R", "RealTime"}, {"J", ""}},
         {{"F", "A"}, {"F", "R"}, {"A", "J"}, {"R", "J"}},
         Pattern::Lambda},
        {"self-loop is cyclic", {{"A", ""}}, {{"A", "A"}}, Pattern::Unknown},
        {"diamond with one batch branch and one plain branch",
         {{"F", ""}, {"B", "Batch"}, {"P", ""}, {"J", ""}},
         {{"F", "B"}, {"F", "P"}, {"B", "J"}, {"P", "J"}},
         Pattern::Unknown},
        {"pipeline declared in reverse order",
         {{"D", ""}, {"C", ""}, {"B", ""}, {"A", ""}},
         {{"A", "B"}, {"B", "C"}, {"C", "D"}},
         Pattern::Pipeline},
    };
    return cases;
}

}  // namespace daml::test
