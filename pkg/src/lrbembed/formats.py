"""Text formats: band tables, local orders, element maps and JSON reports.

Band table format::

    # comments and blank lines are ignored
    name: B                 (optional metadata, any "key: value" header)
    elements: x1 x2 x3
    identity: auto          (or one of the labels)
    x1 x2 x3                (one row per element, row x column y = xy)
    ...

With ``identity: auto`` the rows cover only the listed elements and an
identity is adjoined as element 0.  A JSON object with the keys
``elements``, ``identity``, ``table`` (and optional ``metadata``) is accepted
as well.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .band import Band, adjoin_identity, validate_band
from .localorder import LocalLinearOrder
from .words import Word, format_word, parse_word

_HEADER = re.compile(r"^([A-Za-z_][\w-]*)\s*:\s*(.*)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = "" if line is None else f"line {line}" + ("" if column is None else f", column {column}") + ": "
        super().__init__(where + message)


@dataclass
class BandDocument:
    labels: list[str]
    identity: str  # a label or "auto"
    table: list[list[str]]
    metadata: dict[str, str] = field(default_factory=dict)


def parse_band(text: str) -> BandDocument:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    labels = identity = None
    metadata: dict[str, str] = {}
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m and not rows:
            key, value = m.group(1), m.group(2).strip()
            if key == "elements":
                labels = value.split()
                if not labels:
                    raise ParseError("empty elements list", lineno)
            elif key == "identity":
                identity = value
            else:
                metadata[key] = value
            continue
        rows.append((lineno, line.split()))
    if labels is None:
        raise ParseError("missing 'elements:' header")
    if identity is None:
        raise ParseError("missing 'identity:' header")
    return _check(BandDocument(labels, identity, [r for _, r in rows], metadata), [n for n, _ in rows])


def _parse_json(text: str) -> BandDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, err.lineno, err.colno) from None
    for key in ("elements", "identity", "table"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    labels = obj["elements"]
    if isinstance(labels, str):
        labels = labels.split()
    if not labels:
        raise ParseError("empty elements list")
    table = [r.split() if isinstance(r, str) else list(r) for r in obj["table"]]
    doc = BandDocument(list(labels), obj["identity"], table, dict(obj.get("metadata", {})))
    return _check(doc, [None] * len(table))


def _check(doc: BandDocument, linenos) -> BandDocument:
    seen = set()
    for lab in doc.labels:
        if lab in seen:
            raise ParseError(f"duplicate label {lab!r}")
        if ":" in lab or lab == "auto":
            raise ParseError(f"label {lab!r} is reserved")
        seen.add(lab)
    if doc.identity != "auto" and doc.identity not in seen:
        raise ParseError(f"identity {doc.identity!r} is not a declared label")
    n = len(doc.labels)
    if len(doc.table) != n:
        raise ParseError(f"expected {n} table rows, found {len(doc.table)}")
    for row, lineno in zip(doc.table, linenos):
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
        for col, entry in enumerate(row, 1):
            if entry not in seen:
                raise ParseError(f"unknown label {entry!r}", lineno, col)
    return doc


def serialize_band(doc: BandDocument) -> str:
    lines = [f"{k}: {v}" for k, v in doc.metadata.items()]
    lines.append("elements: " + " ".join(doc.labels))
    lines.append(f"identity: {doc.identity}")
    lines.extend(" ".join(row) for row in doc.table)
    return "\n".join(lines) + "\n"


def document_to_band(doc: BandDocument, adjoin: bool = False) -> Band:
    """Validate the document as a band; ``adjoin`` forces a new identity."""
    index = {lab: i for i, lab in enumerate(doc.labels)}
    table = [[index[e] for e in row] for row in doc.table]
    if adjoin or doc.identity == "auto":
        table, labels = adjoin_identity(table, doc.labels)
        return validate_band(table, 0, labels)
    return validate_band(table, index[doc.identity], doc.labels)


def band_to_document(band: Band, metadata: dict | None = None) -> BandDocument:
    labels = list(band.labels)
    table = [[labels[band.mul(x, y)] for y in band.elements] for x in band.elements]
    return BandDocument(labels, labels[band.identity], table, dict(metadata or {}))


def format_order(band: Band, llo: LocalLinearOrder) -> str:
    return "".join(
        f"{band.label(b)}: " + " < ".join(band.label(x) for x in llo.order_of[b]) + "\n"
        for b in sorted(llo.order_of)
    )


def parse_order(text: str, band: Band) -> LocalLinearOrder:
    order = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'b: s1 < s2 < ...'", lineno)
        try:
            b = band.index(head.strip())
            order[b] = tuple(band.index(tok.strip()) for tok in rest.split("<"))
        except ValueError:
            raise ParseError(f"unknown label in {line!r}", lineno) from None
    return LocalLinearOrder(order)


def format_map(band: Band, images) -> str:
    return "".join(
        f"{band.label(x)} = {format_word(images[x], band.labels)}".rstrip() + "\n" for x in band.elements
    )


def parse_map(text: str, band: Band) -> list[Word]:
    images: dict[int, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition("=")
        if not sep:
            raise ParseError("expected 'label = word'", lineno)
        try:
            images[band.index(head.strip())] = parse_word(rest, band.labels)
        except ValueError as err:
            raise ParseError(str(err), lineno) from None
    missing = [band.label(x) for x in band.elements if x not in images]
    if missing:
        raise ParseError(f"no image for {', '.join(missing)}")
    return [images[x] for x in band.elements]
