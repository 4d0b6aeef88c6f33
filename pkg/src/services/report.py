"""
Filename: report.py
Created Date: 2026-10-18
Description: Survey report service module.

This module renders survey results as CSV, JSON or a Markdown table,
writes them under the reports directory and loads JSON reports back with
every record re-verified.
"""

import csv
import io
import json
import os
from typing import Optional

from src.algebra.core import format_rational
from src.config.settings import config
from src.definitions import report_path
from src.models.survey import SurveyResult
from src.models.wps import PlaneRecord, Relation, Weights
from src.services.wps import check_wps_criterion
from src.utils.error_handler import ValidationError
from src.utils.helpers import utc_timestamp
from src.utils.logger import get_logger

logger = get_logger("coxcheck.services.report")

FORMATS = ("csv", "json", "md")
CSV_COLUMNS = ["a", "b", "c", "e", "f", "g", "w", "n"]


def _csv(result: SurveyResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in result.records:
        writer.writerow([
            *record.orientation.as_tuple(),
            *record.relation.as_tuple(),
            format_rational(record.report.w),
            record.report.n,
        ])
    return buffer.getvalue()


def _markdown(result: SurveyResult) -> str:
    lines = [
        f"Qualifying planes with weights up to {result.bound} ({len(result)} total)",
        "",
        "| P(a, b, c) | (e, f, -g) |",
        "|---|---|",
    ]
    lines.extend(f"| {record.orientation} | {record.relation} |" for record in result.records)
    return "\n".join(lines) + "\n"


def _json(result: SurveyResult, include_timing: bool) -> str:
    data = result.to_dict(include_timing=include_timing)
    if include_timing:
        data["generated_at"] = utc_timestamp()
    return json.dumps(data, indent=2) + "\n"


def emit_report(result: SurveyResult, fmt: str, include_timing: bool = True) -> bytes:
    """Render a survey result as UTF-8 bytes."""
    if fmt == "csv":
        text = _csv(result)
    elif fmt == "json":
        text = _json(result, include_timing)
    elif fmt == "md":
        text = _markdown(result)
    else:
        raise ValidationError(f"unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return text.encode("utf-8")


def write_report(data: bytes, filename: str) -> str:
    """Write report bytes below the configured reports directory."""
    directory = config.get("reports", {}).get("directory")
    path = report_path(filename, directory)
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "wb") as f:
        f.write(data)
    logger.info(f"Report written to {path}")
    return path


def load_report(data: bytes) -> SurveyResult:
    """Parse a JSON report and re-verify every record."""
    try:
        payload = json.loads(data.decode("utf-8"))
        bound = int(payload["bound"])
        raw_records = payload["records"]
    except (ValueError, KeyError, TypeError, UnicodeDecodeError) as e:
        raise ValidationError(f"malformed survey report: {e}") from e

    records = []
    for raw in raw_records:
        try:
            orientation = Weights(*raw["orientation"])
            relation = Relation(*raw["relation"])
            weights = tuple(raw["weights"])
        except (KeyError, TypeError) as e:
            raise ValidationError(f"malformed survey record {raw!r}: {e}") from e
        report = check_wps_criterion(*orientation.as_tuple(), relation)
        if not report.passes:
            raise ValidationError(f"{orientation} with {relation} does not pass the criterion")
        if format_rational(report.w) != raw.get("w") or report.n != raw.get("n"):
            raise ValidationError(f"stored w or n of {orientation} disagrees with recomputation")
        if tuple(sorted(weights)) != orientation.canonical():
            raise ValidationError(f"record weights {weights} do not match {orientation}")
        records.append(PlaneRecord(weights, orientation, relation, report))

    return SurveyResult(
        bound=bound,
        records=tuple(records),
        dedup_mode=payload.get("dedup_mode", "unordered"),
        elapsed=float(payload.get("elapsed", 0.0)),
    )


def default_filename(bound: int, fmt: str, stem: Optional[str] = None) -> str:
    """survey_<bound>.<fmt>, or <stem>_<bound>.<fmt>"""
    return f"{stem or 'survey'}_{bound}.{fmt}"
