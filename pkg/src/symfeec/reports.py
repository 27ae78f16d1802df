"""Deterministic rendering of results as JSON, CSV or text."""

from __future__ import annotations

import csv
import io
import json

__all__ = ["decimal", "certificate_payload", "emit_report", "write_report"]

FORMATS = ("json", "csv", "text")


def decimal(c, digits=6):
    """Advisory decimal rendering of a Cyclo (never parsed back)."""
    z = c.to_complex()
    re = round(z.real, digits) + 0.0
    im = round(z.imag, digits) + 0.0
    if im == 0:
        return f"{re:.{digits}g}"
    sign = "+" if im >= 0 else "-"
    return f"{re:.{digits}g}{sign}{abs(im):.{digits}g}i"


def certificate_payload(cert):
    if cert is None:
        return None
    data = cert.to_json()
    for m, chi in zip(data["matches"], cert.chis):
        m["chi_decimal"] = [decimal(c) for c in chi]
    return data


def _json(payload):
    return (json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _csv(payload):
    rows = payload.get("rows") if isinstance(payload, dict) else payload
    if not rows:
        return b""
    buf = io.StringIO()
    fields = list(rows[0])
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: ("" if row[k] is None else row[k]) for k in fields})
    return buf.getvalue().encode("utf-8")


def _text(payload):
    if isinstance(payload, dict) and "text" in payload:
        return (payload["text"].rstrip("\n") + "\n").encode("utf-8")
    lines = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            val = payload[key]
            if isinstance(val, (dict, list)):
                val = json.dumps(val, sort_keys=True, ensure_ascii=False)
            lines.append(f"{key}: {val}")
    else:
        lines.append(str(payload))
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_report(payload, fmt="json"):
    """Bytes for ``payload`` (a JSON-compatible dict); identical input, identical bytes.

    ``csv`` expects a list of flat rows under ``payload["rows"]``.  ``text``
    prefers a preformatted ``payload["text"]``.
    """
    if fmt == "json":
        data = {k: v for k, v in payload.items() if k != "text"} if isinstance(payload, dict) else payload
        return _json(data)
    if fmt == "csv":
        return _csv(payload)
    if fmt == "text":
        return _text(payload)
    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def write_report(data, path):
    """Write report bytes to ``path`` (``OSError`` propagates)."""
    with open(path, "wb") as fh:
        fh.write(data)
