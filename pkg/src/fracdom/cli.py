"""Command-line entry point: ``fracdom classify|fd|verify|decompose|scan``.

Machine-readable JSON goes to stdout, human summaries to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, Sequence

from .config import Verdict, value, verify
from .decomposition import (
    DecompositionError,
    dumbbell_decomposition,
    find_cycle_avoiding_length_4,
    open_ear_decomposition,
)
from .domination import HARD_LIMIT, SizeLimitError
from .formats import (
    FormatError,
    certificate_record,
    declared_value,
    ear_record,
    encode_graph6,
    fraction_text,
    iter_graph6,
    loads_certificate,
    parse_graph,
    structure_record,
)
from .generators import EXHAUSTIVE_MAX_N, exhaustive_graphs, random_graphs
from .graph import Graph, members, recognize_k2p
from .oracle import default_limit, conjecture_scan, exact_fd
from .synthesis import FD_ABOVE_TWO, classify

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read(path))
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit(obj: object) -> None:
    print(json.dumps(obj, sort_keys=True))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_classify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    result = classify(g)
    out: dict = {"verdict": result.verdict, "reason": result.reason}
    if result.witness is not None:
        out["witness"] = list(result.witness)
    if result.verdict == FD_ABOVE_TWO:
        cert = result.certificate
        out["value"] = fraction_text(result.value)
        if args.certify:
            verdict = verify(cert)
            if not verdict:
                _note(f"internal error: certificate failed verification: {verdict.reason}")
                return EXIT_BUG
            out["certificate"] = certificate_record(cert)
    _emit(out)
    _note(f"{result.verdict}" + (f" (certified FD >= {out['value']})" if "value" in out else ""))
    return EXIT_OK


def cmd_fd(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    limit = args.limit if args.limit is not None else default_limit()
    try:
        fd = exact_fd(g, limit)
    except SizeLimitError as exc:
        raise UsageError(str(exc)) from exc
    _emit({
        "fd": fraction_text(fd.value),
        "weights": [{"set": members(d), "weight": fraction_text(w)} for d, w in fd.support()],
        "prices": [fraction_text(p) for p in fd.prices],
    })
    _note(f"FD = {fraction_text(fd.value)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph) if args.graph else None
    text = _read(args.certificate)
    try:
        cert = loads_certificate(text, graph)
        claimed = declared_value(text)
    except FormatError as exc:
        raise UsageError(f"{args.certificate}: {exc}") from exc
    verdict = verify(cert)
    if verdict and claimed is not None and claimed != value(cert):
        verdict = Verdict(False, f"declared value {fraction_text(claimed)} is not "
                                 f"k/s = {cert.k}/{cert.s}")
    if verdict:
        _note(f"valid ({cert.k}, {cert.s})-configuration")
        return EXIT_OK
    _note(verdict.reason)
    return EXIT_INVALID


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        report = dumbbell_decomposition(g)
    except (DecompositionError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    out = structure_record(report)
    if not report.is_dumbbell:
        start = find_cycle_avoiding_length_4(g)
        if start is None:
            pair, rest = recognize_k2p(g)
            a1, a2 = members(pair)
            b1, b2 = members(rest)[:2]
            start = [a1, b1, a2, b2]
        out["ear_decomposition"] = ear_record(open_ear_decomposition(g, start))
    _emit(out)
    return EXIT_OK


def _scan_source(args: argparse.Namespace, limit: int) -> Iterator[Graph]:
    if args.source == "exhaustive":
        if args.max_n > EXHAUSTIVE_MAX_N:
            raise UsageError(f"exhaustive scans are capped at --max-n {EXHAUSTIVE_MAX_N}")
        return exhaustive_graphs(args.max_n)
    if args.source == "random":
        if not 7 <= args.max_n <= limit:
            raise UsageError(f"random scans need 7 <= --max-n <= {limit}")
        return random_graphs(args.count, 7, args.max_n, args.seed)
    if not args.file:
        raise UsageError("--source file needs --file PATH")
    try:
        return iter(list(iter_graph6(_read(args.file).splitlines())))
    except FormatError as exc:
        raise UsageError(f"{args.file}: {exc}") from exc


def cmd_scan(args: argparse.Namespace) -> int:
    limit = args.limit if args.limit is not None else default_limit()
    report = conjecture_scan(_scan_source(args, limit), limit=limit)
    for rec in report.records:
        _emit({
            "graph6": encode_graph6(rec.graph),
            "fd_num": rec.fd.numerator,
            "fd_den": rec.fd.denominator,
            "flagged": rec.flagged,
        })
    low = report.min_above_two
    _emit({"summary": {
        "graphs": len(report.records),
        "skipped": report.skipped,
        "flagged": len(report.flagged),
        "min_above_two": None if low is None else fraction_text(low),
        "witnesses": [encode_graph6(g) for g in report.witnesses],
    }})
    _note(f"{len(report.records)} graphs, {len(report.flagged)} flagged, "
          f"min FD above 2: {'none' if low is None else fraction_text(low)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracdom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify FD as 1, 2 or above 2")
    p.add_argument("graph", help="edge-list or graph6 file, '-' for stdin")
    p.add_argument("--certify", action="store_true", help="include and self-verify the certificate")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fd", help="exact FD from the LP oracle")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, choices=range(1, HARD_LIMIT + 1), metavar="N")
    p.set_defaults(func=cmd_fd)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("certificate")
    p.add_argument("graph", nargs="?", help="defaults to the graph embedded in the certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="2-connected / dumbbell structure report")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("scan", help="search for FD strictly between 2 and 7/3")
    p.add_argument("--source", choices=["exhaustive", "random", "file"], default="exhaustive")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100, help="random graphs to draw")
    p.add_argument("--file", help="graph6 file for --source file")
    p.add_argument("--limit", type=int, choices=range(1, HARD_LIMIT + 1), metavar="N")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    except SizeLimitError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
