"""Single entry point wiring all subcommands.

Streaming subcommands read one graph per input line (graph6 by default) and
write one output record per input record, in order.  Exit codes: 0 success,
1 verification or certification failure (including catalog self-test
failures and UNKNOWN enumeration survivors), 2 input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from dataclasses import dataclass
from typing import IO, Iterator

from . import catalog
from .certify import (
    CertificateDecodeError,
    certificate_from_json,
    certificate_to_line,
    certify,
    certify_forced,
    verify,
)
from .coloring import k_color
from .critical import mn3p5_check, mn3p5_check_thorough
from .detect import find_5hole, find_dominating_clique_or_p3, find_induced_p5
from .enumeration import enumerate_mn3p5, generate_p5free_corpus
from .graphs import (
    Graph,
    GraphFormatError,
    from_dimacs,
    from_edge_list,
    from_graph6,
    to_graph6,
)
from .subiso import find_subgraph


@dataclass
class RunConfig:
    """Parsed invocation; exactly one subcommand per run."""

    command: str
    fmt: str = "g6"
    output: str = "json"
    jobs: int = 1
    seed: int = 0
    force: bool = False
    thorough: bool = False
    max_n: int | None = None
    pattern: str | None = None
    k: int = 3
    n: int | None = None
    count: int | None = None
    no_prune: bool = False
    export: str | None = None
    p5: bool = False
    c5: bool = False
    dominating: bool = False


class InputError(Exception):
    """Unreadable input stream content; maps to exit code 2."""


def _parse_graph_line(fmt: str, line: str, lineno: int) -> Graph:
    try:
        if fmt == "g6":
            return from_graph6(line)
        if fmt == "edge-list":
            fields = line.split()
            n = int(fields[0])
            edges = []
            for tok in fields[1:]:
                u, _, v = tok.partition("-")
                edges.append((int(u), int(v)))
            return from_edge_list(n, edges)
        raise InputError(f"unsupported per-line format: {fmt}")
    except (ValueError, IndexError) as exc:
        raise InputError(f"line {lineno}: {exc}") from exc


def _iter_graphs(config: RunConfig, stream: IO[str]) -> Iterator[tuple[int, Graph]]:
    if config.fmt == "dimacs":
        try:
            yield 1, from_dimacs(stream.read())
        except (GraphFormatError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        return
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        yield lineno, _parse_graph_line(config.fmt, line, lineno)


def _emit(config: RunConfig, out: IO[str], g: Graph, payload: dict) -> None:
    if config.output == "tsv":
        out.write(to_graph6(g) + "\t" + json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        record = {"schema": "p5cert/1", "graph": to_graph6(g)}
        record.update(payload)
        out.write(json.dumps(record, separators=(",", ":")) + "\n")


def _certify_line(args: tuple[str, bool]) -> str:
    g6, force = args
    g = from_graph6(g6)
    cert = certify_forced(g) if force else certify(g)
    return certificate_to_line(g, cert)


def _run_certify(config: RunConfig, stdin: IO[str], stdout: IO[str]) -> int:
    graphs = [(to_graph6(g), config.force) for _, g in _iter_graphs(config, stdin)]
    if config.jobs > 1 and len(graphs) > 1:
        with multiprocessing.get_context("fork").Pool(config.jobs) as pool:
            lines = pool.imap(_certify_line, graphs, chunksize=64)
            for line in lines:
                stdout.write(_format_certificate_line(config, line))
    else:
        for item in graphs:
            stdout.write(_format_certificate_line(config, _certify_line(item)))
    return 0


def _format_certificate_line(config: RunConfig, line: str) -> str:
    if config.output != "tsv":
        return line + "\n"
    record = json.loads(line)
    record.pop("schema", None)
    g6 = record.pop("graph")
    return g6 + "\t" + json.dumps(record, separators=(",", ":")) + "\n"


def _run_verify(config: RunConfig, stdin: IO[str], stdout: IO[str], stderr: IO[str]) -> int:
    checked = 0
    for lineno, raw in enumerate(stdin, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"line {lineno}: not JSON: {exc}") from exc
        try:
            g, cert = certificate_from_json(obj)
        except CertificateDecodeError as exc:
            stderr.write(f"line {lineno}: FAIL ({exc})\n")
            return 1
        if not verify(g, cert):
            stderr.write(f"line {lineno}: FAIL (certificate does not verify)\n")
            return 1
        checked += 1
    stdout.write(f"OK {checked}\n")
    return 0


def _run_color(config: RunConfig, stdin: IO[str], stdout: IO[str]) -> int:
    for _, g in _iter_graphs(config, stdin):
        coloring = k_color(g, config.k)
        if coloring is None:
            stdout.write("UNCOLORABLE\n")
        elif config.output == "tsv":
            stdout.write(to_graph6(g) + "\t" + json.dumps(list(coloring.colors)) + "\n")
        else:
            stdout.write(json.dumps(list(coloring.colors)) + "\n")
    return 0


def _run_detect(config: RunConfig, stdin: IO[str], stdout: IO[str]) -> int:
    wanted_all = not (config.p5 or config.c5 or config.dominating)
    for _, g in _iter_graphs(config, stdin):
        payload: dict = {}
        if config.p5 or wanted_all:
            witness = find_induced_p5(g)
            payload["p5"] = list(witness.vertices) if witness else None
        if config.c5 or wanted_all:
            hole = find_5hole(g)
            payload["c5"] = list(hole) if hole else None
        if config.dominating or wanted_all:
            try:
                ds = find_dominating_clique_or_p3(g)
            except ValueError as exc:
                raise InputError(str(exc)) from exc
            payload["dominating"] = (
                {"kind": ds.kind, "vertices": list(ds.vertices)} if ds else None
            )
        _emit(config, stdout, g, payload)
    return 0


def _pattern_graph(spec: str) -> tuple[Graph, dict[int, str] | None]:
    by_name = {entry.id.value.lower(): entry for entry in catalog.all_entries()}
    if spec.lower() in by_name:
        entry = by_name[spec.lower()]
        return entry.graph, entry.labels
    return from_graph6(spec), None


def _run_embed(config: RunConfig, stdin: IO[str], stdout: IO[str]) -> int:
    try:
        pattern, labels = _pattern_graph(config.pattern or "")
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"bad --pattern: {exc}") from exc
    for _, g in _iter_graphs(config, stdin):
        emb = find_subgraph(g, pattern)
        if emb is None:
            payload = {"embedding": None}
        elif labels is not None:
            payload = {"embedding": {labels[pv]: hv for pv, hv in enumerate(emb.mapping)}}
        else:
            payload = {"embedding": {str(pv): hv for pv, hv in enumerate(emb.mapping)}}
        _emit(config, stdout, g, payload)
    return 0


def _run_mn3p5(config: RunConfig, stdin: IO[str], stdout: IO[str]) -> int:
    for _, g in _iter_graphs(config, stdin):
        report = mn3p5_check_thorough(g) if config.thorough else mn3p5_check(g)
        payload = {
            "p5_free": report.p5_free,
            "three_colorable": report.three_colorable,
            "edge_critical": report.edge_critical,
            "verdict": report.verdict,
        }
        if report.p5_witness is not None:
            payload["p5_witness"] = list(report.p5_witness.vertices)
        if report.coloring is not None:
            payload["coloring"] = list(report.coloring.colors)
        if report.failing_edge is not None:
            payload["failing_edge"] = list(report.failing_edge)
        if report.failing_vertex is not None:
            payload["failing_vertex"] = report.failing_vertex
        if report.counterexample is not None:
            payload["counterexample"] = to_graph6(report.counterexample)
        _emit(config, stdout, g, payload)
    return 0


def _run_enumerate(config: RunConfig, stdout: IO[str]) -> int:
    result = enumerate_mn3p5(
        config.max_n or 7, prune=not config.no_prune, jobs=config.jobs
    )
    for found in result.found:
        stdout.write(to_graph6(found.graph) + "\n")
    summary = {
        "schema": "p5cert/1",
        "max_n": result.max_order,
        "generated": result.generated,
        "survivors": result.survivors,
        "found": [
            {"graph": to_graph6(f.graph), "order": f.graph.n, "matched": f.matched}
            for f in result.found
        ],
    }
    stdout.write(json.dumps(summary, separators=(",", ":")) + "\n")
    return 1 if result.has_unknown else 0


def _run_check_catalog(config: RunConfig, stdout: IO[str]) -> int:
    ok = True
    rows = []
    for entry in catalog.all_entries():
        report = mn3p5_check(entry.graph)
        ok = ok and report.verdict
        degrees = ",".join(str(d) for d in entry.graph.degree_sequence())
        rows.append(
            (
                entry.id.value,
                str(entry.order),
                str(entry.size),
                degrees,
                "yes" if report.p5_free else "NO",
                "no" if not report.three_colorable else "YES",
                "yes" if report.edge_critical else "NO",
                "PASS" if report.verdict else "FAIL",
            )
        )
    header = ("id", "order", "size", "degrees", "p5-free", "3-colorable", "edge-critical", "mn3p5")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    for row in [header] + rows:
        stdout.write("  ".join(f"{cell:<{w}}" for cell, w in zip(row, widths)).rstrip() + "\n")
    stdout.write(f"OVERALL: {'PASS' if ok else 'FAIL'}\n")
    if config.export:
        with open(config.export, "w") as fh:
            fh.write("\n".join(catalog.export_graph6()) + "\n")
    return 0 if ok else 1


def _run_gen(config: RunConfig, stdout: IO[str]) -> int:
    if config.n is None or config.count is None:
        raise InputError("gen requires --n and --count")
    try:
        graphs = generate_p5free_corpus(config.n, config.count, config.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    for g in graphs:
        stdout.write(to_graph6(g) + "\n")
    return 0


def run(
    config: RunConfig,
    stdin: IO[str] = sys.stdin,
    stdout: IO[str] = sys.stdout,
    stderr: IO[str] = sys.stderr,
) -> int:
    """Execute one subcommand; returns the process exit code."""
    try:
        if config.command == "certify":
            return _run_certify(config, stdin, stdout)
        if config.command == "verify":
            return _run_verify(config, stdin, stdout, stderr)
        if config.command == "color":
            return _run_color(config, stdin, stdout)
        if config.command == "detect":
            return _run_detect(config, stdin, stdout)
        if config.command == "embed":
            return _run_embed(config, stdin, stdout)
        if config.command == "mn3p5":
            return _run_mn3p5(config, stdin, stdout)
        if config.command == "enumerate":
            return _run_enumerate(config, stdout)
        if config.command == "check-catalog":
            return _run_check_catalog(config, stdout)
        if config.command == "gen":
            return _run_gen(config, stdout)
        raise InputError(f"unknown subcommand: {config.command}")
    except (InputError, GraphFormatError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p5cert",
        description="Certifying 3-colorability decisions for P5-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=["g6", "dimacs", "edge-list"], default="g6")
        p.add_argument("--output", choices=["json", "tsv"], default="json")

    p = sub.add_parser("certify", help="emit a certificate per input graph")
    add_io(p)
    p.add_argument("--force", action="store_true", help="skip the P5-freeness gate")
    p.add_argument("--jobs", type=int, default=1)

    sub.add_parser("verify", help="check graph+certificate JSON lines")

    p = sub.add_parser("color", help="exact k-coloring")
    add_io(p)
    p.add_argument("--k", type=int, default=3)

    p = sub.add_parser("detect", help="induced P5 / 5-hole / dominating structure")
    add_io(p)
    p.add_argument("--p5", action="store_true")
    p.add_argument("--c5", action="store_true")
    p.add_argument("--dominating", action="store_true")

    p = sub.add_parser("embed", help="find a pattern subgraph embedding")
    add_io(p)
    p.add_argument("--pattern", required=True, help="k4|w5|s1|s2|t|b or a graph6 string")

    p = sub.add_parser("mn3p5", help="minimal-obstruction predicate report")
    add_io(p)
    p.add_argument("--thorough", action="store_true")

    p = sub.add_parser("enumerate", help="isomorph-free obstruction census")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-prune", action="store_true")

    p = sub.add_parser("check-catalog", help="self-test the obstruction catalog")
    p.add_argument("--export", help="also write the catalog as graph6 lines")

    p = sub.add_parser("gen", help="pseudo-random connected P5-free corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    for name in vars(config):
        if hasattr(args, name):
            setattr(config, name, getattr(args, name))
    if config.jobs < 1:
        raise InputError("--jobs must be at least 1")
    return config


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
