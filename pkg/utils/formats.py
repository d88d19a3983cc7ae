"""
Output formats for tables and command documents.

Every command builds a plain JSON-ready document; this module turns it into
text, json, csv or md and writes report files.
"""

import csv
import io
import json
import logging
import os

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv", "md")


def to_json(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False)


def format_cell(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(format_cell(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def _text_rows(header, body):
    widths = [max(len(row[c]) for row in [header] + body) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header] + body]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _md_rows(header, body):
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in body]
    return "\n".join(lines)


def _csv_rows(header, body):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(body)
    return buffer.getvalue().rstrip("\n")


def render_rows(rows, columns, fmt="text"):
    """
    Render a list of dicts as a table restricted to the given columns.

    Args:
        rows: List of dicts
        columns: Keys to show, in order
        fmt: One of text, csv, md

    Returns:
        Rendered string
    """
    header = list(columns)
    body = [[format_cell(row.get(c)) for c in columns] for row in rows]
    if fmt == "md":
        return _md_rows(header, body)
    if fmt == "csv":
        return _csv_rows(header, body)
    if fmt == "text":
        return _text_rows(header, body)
    raise ValueError(f"unknown format '{fmt}' (expected one of {', '.join(FORMATS)})")


def _transposed(doc):
    # residues as columns, one line per shown field, like the printed table
    rows = doc["columns"]
    header = ["p-q (mod 8)"] + [str(row["residue"]) for row in rows]
    body = [[field] + [format_cell(row[field]) for row in rows] for field in doc["shown"] if field != "residue"]
    return header, body


def render_table(doc, fmt="text"):
    """Render a table document ({table, shown, columns}); real-k in md is transposed."""
    if fmt == "json":
        return to_json(doc)
    if fmt == "md" and doc["table"] == "real-k":
        return _md_rows(*_transposed(doc))
    return render_rows(doc["columns"], doc["shown"], fmt)


def render_mapping(doc, fmt="text"):
    """Render a flat document as key/value lines (text, md) or a two-line csv."""
    if fmt == "json":
        return to_json(doc)
    flat = {k: v for k, v in doc.items() if not isinstance(v, dict)}
    if fmt == "csv":
        return _csv_rows(list(flat), [[format_cell(v) for v in flat.values()]])
    if fmt == "md":
        return _md_rows(["field", "value"], [[k, format_cell(v)] for k, v in flat.items()])
    if fmt == "text":
        width = max((len(k) for k in flat), default=0)
        return "\n".join(f"{k.ljust(width)}  {format_cell(v)}" for k, v in flat.items())
    raise ValueError(f"unknown format '{fmt}' (expected one of {', '.join(FORMATS)})")


def write_report(output_folder, name, doc, overwrite=False):
    """
    Save a document as <output_folder>/<name>.json.

    Args:
        output_folder: Target folder, created when missing
        name: File stem, e.g. "table-real-k"
        doc: JSON-ready document
        overwrite: Replace an existing file instead of keeping it

    Returns:
        Path written, or None when an existing file was kept
    """
    os.makedirs(output_folder, exist_ok=True)
    path = os.path.join(output_folder, f"{name}.json")
    if os.path.exists(path) and not overwrite:
        logger.warning("keeping existing %s (use --overwrite to replace it)", path)
        return None
    with open(path, "w", encoding="utf-8") as json_file:
        json_file.write(to_json(doc))
        json_file.write("\n")
    logger.info("wrote %s", path)
    return path
