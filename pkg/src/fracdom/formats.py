"""Text formats: edge lists, graph6, and JSON records for certificates and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Iterator, Optional

from .config import Configuration, value
from .decomposition import EarDecomposition, StructureReport
from .graph import Graph, from_edge_list, members, to_mask


class FormatError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with ``#`` comments and an optional ``n <count>`` header."""
    n: Optional[int] = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2 and n is None and not edges:
            n = _int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return from_edge_list(edges, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _int(token: str, lineno: int) -> int:
    try:
        out = int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: {token!r} is not an integer") from None
    if out < 0:
        raise FormatError(f"line {lineno}: negative vertex id {out}")
    return out


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _graph6_n(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        vals = [c - 63 for c in data[2:8]]
        rest = data[8:]
    else:
        vals = [c - 63 for c in data[1:4]]
        rest = data[4:]
    n = 0
    for x in vals:
        n = (n << 6) | x
    return n, rest


def decode_graph6(line: str) -> Graph:
    """Decode one graph6 string (``>>graph6<<`` header allowed)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if not data or any(c < 63 or c > 126 for c in data):
        raise FormatError(f"not a graph6 string: {line.strip()!r}")
    n, body = _graph6_n(data)
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {-(-nbits // 6)}")
    bits = []
    for c in body:
        x = c - 63
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return from_edge_list(edges, n)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def looks_like_graph6(text: str) -> bool:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        return False
    first = lines[0]
    if first.startswith(">>graph6<<"):
        return True
    return len(first.split()) == 1 and first != "n" and not first.isdigit() and all(
        63 <= ord(ch) <= 126 for ch in first
    )


def parse_graph(text: str) -> Graph:
    """Auto-detect edge list or a single graph6 string."""
    if looks_like_graph6(text):
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if len(lines) != 1:
            raise FormatError("expected a single graph6 line")
        return decode_graph6(lines[0])
    return parse_edge_list(text)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield decode_graph6(line)


def fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: Any) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"{text!r} is not a rational number") from None


def graph_record(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_record(rec: Any) -> Graph:
    try:
        return from_edge_list([tuple(e) for e in rec["edges"]], int(rec["n"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph record: {exc}") from exc


def certificate_record(c: Configuration) -> dict:
    return {
        "graph": graph_record(c.graph),
        "k": c.k,
        "s": c.s,
        "sets": [members(d) for d in c.sets],
        "value": fraction_text(value(c)),
    }


def certificate_from_record(rec: Any, graph: Optional[Graph] = None) -> Configuration:
    """Rebuild a configuration, bound to ``graph`` if given, else to the embedded graph.

    Raises :class:`FormatError` for malformed records, out-of-range vertices,
    or a ``k`` field that disagrees with the set list.  The ``value`` field is
    not trusted here; see :func:`declared_value`.
    """
    if not isinstance(rec, dict):
        raise FormatError("certificate must be a JSON object")
    g = graph if graph is not None else graph_from_record(rec.get("graph"))
    try:
        raw_sets = rec["sets"]
        s = int(rec["s"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad certificate: {exc}") from exc
    sets = []
    for i, members_ in enumerate(raw_sets):
        for v in members_:
            if not isinstance(v, int) or not 0 <= v < g.n:
                raise FormatError(f"set {i} references vertex {v!r} outside 0..{g.n - 1}")
        sets.append(to_mask(members_))
    if "k" in rec and int(rec["k"]) != len(sets):
        raise FormatError(f"k={rec['k']} but {len(sets)} sets are listed")
    return Configuration(g, tuple(sets), s)


def declared_value(text: str) -> Optional[Fraction]:
    """The ``value`` field of a certificate document, if present."""
    rec = _certificate_json(text)
    return parse_fraction(rec["value"]) if isinstance(rec, dict) and "value" in rec else None


def dumps_certificate(c: Configuration) -> str:
    return json.dumps(certificate_record(c), sort_keys=True)


def _certificate_json(text: str) -> Any:
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not JSON: {exc}") from exc
    # classify --certify output wraps the certificate
    if isinstance(rec, dict) and "certificate" in rec and "sets" not in rec:
        rec = rec["certificate"]
    return rec


def loads_certificate(text: str, graph: Optional[Graph] = None) -> Configuration:
    return certificate_from_record(_certificate_json(text), graph)


def structure_record(report: StructureReport) -> dict:
    if not report.is_dumbbell:
        return {"kind": report.kind}
    return {
        "kind": report.kind,
        "plate_1": members(report.plate_1),
        "plate_2": members(report.plate_2),
        "handle": list(report.handle),
    }


def ear_record(dec: EarDecomposition) -> dict:
    return {"first_cycle": list(dec.first_cycle), "ears": [list(e) for e in dec.ears]}
