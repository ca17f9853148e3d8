"""Python face of daml-kit: parse, validate, analyze, and export DAML models.

Every function accepts model text (not file paths); read files yourself and
pass the contents, optionally with a ``file`` label for diagnostics.
"""

from ._daml import (
    check_text,
    classify_text,
    daml_to_json,
    explain,
    flow_summary,
    format_text,
    json_to_daml,
    reachable,
    rule_ids,
    source_sink_paths,
    template,
    template_names,
    to_dot,
)

__all__ = [
    "check_text",
    "classify_text",
    "daml_to_json",
    "explain",
    "flow_summary",
    "format_text",
    "json_to_daml",
    "reachable",
    "rule_ids",
    "source_sink_paths",
    "template",
    "template_names",
    "to_dot",
]
