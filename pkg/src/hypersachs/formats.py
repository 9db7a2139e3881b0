"""Input documents and report serialization.

Two interchangeable input encodings:

* line format::

      # optional comments
      k=3 n=7
      1 2 3
      1 4 5 x2

* structured format: one JSON object with fields ``k``, ``n``, optional
  ``name``, and ``edges`` = list of ``{"vertices": [...], "mult": m}``
  (``mult`` defaults to 1).

Rationals are always rendered as strings, ``p`` or ``p/q``; nothing here
emits floats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityError, ParseError, VertexRangeError
from .hypergraph import MultiHypergraph
from .traces import CoefficientTable

_HEADER_RE = re.compile(r"^k=(\d+)\s+n=(\d+)$")
_MULT_RE = re.compile(r"^x(\d+)$")


@dataclass(frozen=True)
class HypergraphDocument:
    """A parsed input: arity, ambient vertex count, edge records, and an
    optional display name."""

    k: int
    n: int
    edges: tuple[tuple[tuple[int, ...], int], ...]
    name: str | None = None

    def to_hypergraph(self) -> MultiHypergraph:
        return MultiHypergraph.build(self.k, self.n, self.edges)

    @classmethod
    def from_hypergraph(
        cls, H: MultiHypergraph, name: str | None = None
    ) -> "HypergraphDocument":
        return cls(H.k, H.n, H.edges, name)


def _edge_from_tokens(
    tokens: list[str], k: int, n: int, line_no: int
) -> tuple[tuple[int, ...], int]:
    mult = 1
    if tokens and _MULT_RE.match(tokens[-1]):
        mult = int(_MULT_RE.match(tokens[-1]).group(1))
        tokens = tokens[:-1]
        if mult < 1:
            raise ParseError("multiplicity must be at least 1", line_no)
    verts = []
    for t in tokens:
        try:
            verts.append(int(t))
        except ValueError:
            raise ParseError(f"expected a vertex number, got {t!r}", line_no) from None
    if len(verts) != k:
        raise ArityError(
            f"line {line_no}: edge has {len(verts)} vertices, expected k={k}"
        )
    for v in verts:
        if not 1 <= v <= n:
            raise VertexRangeError(
                f"line {line_no}: vertex {v} outside 1..{n}"
            )
    if len(set(verts)) != len(verts):
        raise ParseError("edge repeats a vertex", line_no)
    return tuple(sorted(verts)), mult


def _parse_lines(text: str) -> HypergraphDocument:
    header: tuple[int, int] | None = None
    acc: dict[tuple[int, ...], int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            m = _HEADER_RE.match(line)
            if not m:
                raise ParseError('expected header "k=<int> n=<int>"', line_no)
            header = (int(m.group(1)), int(m.group(2)))
            if header[0] < 1:
                raise ParseError("k must be positive", line_no)
            continue
        verts, mult = _edge_from_tokens(line.split(), header[0], header[1], line_no)
        acc[verts] = acc.get(verts, 0) + mult
    if header is None:
        raise ParseError("empty input: no header line", None)
    edges = tuple(sorted(acc.items()))
    return HypergraphDocument(header[0], header[1], edges)


def _parse_structured(text: str) -> HypergraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad structured document: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("structured document must be a single object", None)
    unknown = set(obj) - {"k", "n", "name", "edges"}
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}", None)
    for field in ("k", "n", "edges"):
        if field not in obj:
            raise ParseError(f"missing field {field!r}", None)
    k, n = obj["k"], obj["n"]
    if not isinstance(k, int) or not isinstance(n, int) or k < 1 or n < 0:
        raise ParseError("k and n must be integers (k >= 1, n >= 0)", None)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string", None)
    if not isinstance(obj["edges"], list):
        raise ParseError("edges must be a list", None)
    acc: dict[tuple[int, ...], int] = {}
    for i, rec in enumerate(obj["edges"]):
        if not isinstance(rec, dict) or "vertices" not in rec:
            raise ParseError(f"edge record {i} needs a vertices field", None)
        verts_raw = rec["vertices"]
        mult = rec.get("mult", 1)
        if not isinstance(mult, int) or mult < 1:
            raise ParseError(f"edge record {i}: mult must be a positive integer", None)
        if not isinstance(verts_raw, list) or not all(
            isinstance(v, int) for v in verts_raw
        ):
            raise ParseError(f"edge record {i}: vertices must be integers", None)
        if len(verts_raw) != k:
            raise ArityError(
                f"edge record {i} has {len(verts_raw)} vertices, expected k={k}"
            )
        for v in verts_raw:
            if not 1 <= v <= n:
                raise VertexRangeError(f"edge record {i}: vertex {v} outside 1..{n}")
        if len(set(verts_raw)) != len(verts_raw):
            raise ParseError(f"edge record {i} repeats a vertex", None)
        key = tuple(sorted(verts_raw))
        acc[key] = acc.get(key, 0) + mult
    return HypergraphDocument(k, n, tuple(sorted(acc.items())), name)


def parse_document(text: str) -> HypergraphDocument:
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_lines(text)


def parse_hypergraph(text: str) -> MultiHypergraph:
    return parse_document(text).to_hypergraph()


def serialize_document(doc: HypergraphDocument, format: str = "line") -> str:
    if format == "line":
        lines = [f"k={doc.k} n={doc.n}"]
        for verts, mult in doc.edges:
            suffix = f" x{mult}" if mult != 1 else ""
            lines.append(" ".join(map(str, verts)) + suffix)
        return "\n".join(lines) + "\n"
    if format == "structured":
        obj: dict = {"k": doc.k, "n": doc.n}
        if doc.name is not None:
            obj["name"] = doc.name
        obj["edges"] = [
            {"vertices": list(verts), "mult": mult} for verts, mult in doc.edges
        ]
        return json.dumps(obj, indent=2) + "\n"
    raise ValueError(f"unknown serialization format {format!r}")


def serialize_hypergraph(
    H: MultiHypergraph, format: str = "line", name: str | None = None
) -> str:
    return serialize_document(HypergraphDocument.from_hypergraph(H, name), format)


def rational_str(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


TABLE_FORMATS = ("structured", "csv", "human")


def emit_table(
    table: CoefficientTable, format: str = "human", with_breakdown: bool = False
) -> str:
    """Render a coefficient table.  csv rows are "d,value"; human and
    structured renderings carry k, n, and the polynomial degree as well."""
    if format not in TABLE_FORMATS:
        raise ValueError(f"format must be one of {TABLE_FORMATS}")
    host = table.host
    degree = host.n * (host.k - 1) ** (host.n - 1) if host.n else 0
    rows = [(d, table.coefficient(d)) for d in range(table.max_codegree + 1)]
    if format == "csv":
        return "\n".join(f"{d},{rational_str(c)}" for d, c in rows) + "\n"
    if format == "human":
        out = [f"k={host.k} n={host.n} degree={degree}"]
        if table.name:
            out[0] += f" name={table.name}"
        width = max(len(str(d)) for d, _ in rows)
        for d, c in rows:
            out.append(f"c_{d:<{width}} = {rational_str(c)}")
            if with_breakdown and table.breakdown and d in table.breakdown:
                for code, val in table.breakdown[d]:
                    out.append(f"  {code.hexdigest()}  {rational_str(val)}")
        return "\n".join(out) + "\n"
    obj: dict = {"k": host.k, "n": host.n, "degree": degree}
    if table.name is not None:
        obj["name"] = table.name
    obj["max_codegree"] = table.max_codegree
    obj["coefficients"] = [
        {"d": d, "value": rational_str(c)} for d, c in rows
    ]
    if with_breakdown and table.breakdown is not None:
        obj["breakdown"] = {
            str(d): [
                {"class": code.hexdigest(), "value": rational_str(val)}
                for code, val in table.breakdown[d]
            ]
            for d in sorted(table.breakdown)
        }
    return json.dumps(obj, indent=2) + "\n"
