"""Serialization of report documents as JSON or as a text summary."""

import json
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from ..exceptions import ConfigError
from ..models.reports import ReportDocument

templates_dir = Path(__file__).parent.parent / "templates"
_environment = Environment(
    loader=FileSystemLoader(str(templates_dir)),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def render_text(doc: ReportDocument) -> str:
    template = _environment.get_template("report.txt.j2")
    return template.render(doc=doc.to_dict(), passed=doc.passed, counts=doc.counts())


def emit_report(doc: ReportDocument, format: str = "json") -> bytes:
    """UTF-8 bytes of the document; identical documents give identical bytes."""
    if format == "json":
        text = json.dumps(doc.to_dict(), indent=2, ensure_ascii=False) + "\n"
    elif format == "text":
        text = render_text(doc)
    else:
        raise ConfigError(f"unknown report format {format!r}")
    return text.encode("utf-8")
