"""End-to-end smoke tests for the daml Python package.

Every function takes model text, so the bundled templates double as
self-contained inputs; nothing here touches the filesystem.
"""

import pytest

import daml

DUPLICATE_NODES = """\
architecture dup level HLA {
  node "Twin" {
  }
  node "Twin" {
  }
}
"""


def test_clean_model_has_no_diagnostics():
    assert daml.check_text(daml.template("dosm")) == []


def test_check_reports_rule_hits_with_positions():
    diagnostics = daml.check_text(DUPLICATE_NODES, file="dup.daml")
    assert [d["rule"] for d in diagnostics] == ["E001"]
    (hit,) = diagnostics
    assert hit["severity"] == "error"
    assert hit["file"] == "dup.daml"
    assert hit["line"] >= 1 and hit["col"] >= 1
    assert hit["path"] == ["Twin"]
    assert "Twin" in hit["message"]


def test_format_is_idempotent_on_every_template():
    for name in daml.template_names():
        once = daml.format_text(daml.template(name))
        assert daml.format_text(once) == once


def test_format_rejects_unparseable_text():
    with pytest.raises(ValueError):
        daml.format_text("architecture broken {")


def test_json_round_trip_is_stable():
    exported = daml.daml_to_json(daml.template("dosm"))
    assert exported.startswith('{"version":"daml-json/1"')
    recovered = daml.json_to_daml(exported)
    assert daml.daml_to_json(recovered) == exported


def test_json_to_daml_rejects_unknown_versions():
    with pytest.raises(ValueError, match="bad-version"):
        daml.json_to_daml('{"version":"daml-json/2"}')


def test_classify_recognises_the_bundled_patterns():
    verdict = daml.classify_text(daml.template("dosm"))
    assert verdict["pattern"] == "Lambda"
    assert verdict["fork"] == "Data Ingestion"
    assert verdict["join"] == "Storage and Analyze"
    assert daml.classify_text(daml.template("kappa"))["pattern"] == "Kappa"
    assert daml.classify_text(daml.template("pipeline"))["pattern"] == "Pipeline"


def test_classify_refuses_invalid_models():
    with pytest.raises(ValueError, match="E001"):
        daml.classify_text(DUPLICATE_NODES)


def test_reachability_in_declaration_order():
    names = daml.reachable(daml.template("dosm"), "Data Sources")
    assert names == [
        "Data Sources",
        "Data Ingestion",
        "Raw Data",
        "Real-Time Processing",
        "Batch Processing",
        "Storage and Analyze",
        "Visualize and Serve",
    ]
    with pytest.raises(ValueError, match="Nope"):
        daml.reachable(daml.template("dosm"), "Nope")


def test_source_sink_paths_of_the_reference_model():
    result = daml.source_sink_paths(daml.template("dosm"))
    assert result["truncated"] is False
    assert len(result["paths"]) == 2
    assert all(
        p[0] == "Data Sources" and p[-1] == "Visualize and Serve" for p in result["paths"]
    )


def test_flow_summary_rows():
    rows = daml.flow_summary(daml.template("dosm"))
    assert [row["name"] for row in rows][:2] == ["Data Sources", "Data Ingestion"]
    assert len(rows) == 7
    sources = rows[0]
    assert sources["in_degree"] == 0
    assert sources["out_degree"] == 1
    assert sources["source"] is True
    assert sources["formats"] == ["JSON"]


def test_rule_catalog():
    ids = daml.rule_ids()
    assert len(ids) == 15
    assert ids[0] == "E001" and ids[-1] == "W105"
    assert "two different components" in daml.explain("E005")
    with pytest.raises(ValueError):
        daml.explain("E999")


def test_templates():
    assert sorted(daml.template_names()) == ["dosm", "kappa", "lambda", "pipeline"]
    assert "architecture" in daml.template("dosm")
    with pytest.raises(ValueError):
        daml.template("warehouse")


def test_to_dot():
    dot = daml.to_dot(daml.template("dosm"))
    assert dot.startswith('digraph "dosm"')
    assert "->" in dot and dot.rstrip().endswith("}")
    assert "rankdir=TB" in daml.to_dot(daml.template("dosm"), rankdir="TB")
    with pytest.raises(ValueError):
        daml.to_dot(daml.template("dosm"), rankdir="UP")
