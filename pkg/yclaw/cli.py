# yclaw/cli.py
"""yclaw: recognize, certify, generate and count graphs without the subdivided claw Y.

Exit codes: 0 success (check: every component Y-free), 1 a component
contains Y or a certificate fails, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from yclaw.certificates import (
    InvalidCertificateError,
    dump_certificate,
    load_certificate,
    realize,
    verify_certificate,
)
from yclaw.config import settings
from yclaw.enumerator import census_csv, census_json, census_rows, solve_delta
from yclaw.formats import emit_graph6, parse_graphs, read_graph
from yclaw.generator import GeneratorParams, random_certificate, thick_caterpillar
from yclaw.graph import Graph
from yclaw.pathdecomp import NotYFreeError, decompose, decompose_graph, verify_decomposition
from yclaw.prooflab import LemmaHypothesisError, check_structural_lemmas
from yclaw.recognizer import recognize, recognize_components

logger = logging.getLogger(__name__)


class UsageError(ValueError):
    """Raised for argument combinations argparse cannot express."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _dumps(obj: Any) -> str:
    if isinstance(obj, BaseModel):
        obj = obj.model_dump(mode="json", exclude_none=True)
    return json.dumps(obj, sort_keys=True)


def _read_bytes(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    return Path(source).read_bytes()


def _read_one(source: str, fmt: str = "auto") -> Graph:
    return read_graph(_read_bytes(source), fmt)


# ------------------------- commands -------------------------


def cmd_check(args: argparse.Namespace) -> int:
    data = _read_bytes(args.file)
    if args.format == "graph6" and len(data.split()) > 1:
        graphs = list(parse_graphs(data))
    else:
        graphs = [read_graph(data, args.format)]
    code = 0
    for g in graphs:
        results = recognize_components(g)
        print(_dumps([r.model_dump(mode="json", exclude_none=True) for r in results]))
        if not all(r.y_free for r in results):
            code = 1
    return code


def cmd_cert_verify(args: argparse.Namespace) -> int:
    cert = load_certificate(_read_bytes(args.cert))
    g = _read_one(args.graph)
    ok = verify_certificate(cert, g)
    print(_dumps({"ok": ok, "type": cert.type}))
    return 0 if ok else 1


def cmd_gen(args: argparse.Namespace) -> int:
    if args.thick_caterpillar:
        spine, mask = args.thick_caterpillar
        g = thick_caterpillar(spine, mask)
        cert = recognize(g).certificate
        sidecar = f"thick-{spine}-{mask}.cert.json"
    else:
        if args.n is None:
            raise UsageError("gen needs --n or --thick-caterpillar")
        picked = [f for f in ("kernel", "strand", "necklace") if getattr(args, f)]
        params = GeneratorParams(
            n_target=args.n,
            allow_kernel=not picked or "kernel" in picked,
            allow_strand=not picked or "strand" in picked,
            allow_necklace=not picked or "necklace" in picked,
            max_t=args.max_t,
        )
        cert = random_certificate(args.seed, params)
        g = realize(cert)
        sidecar = "-".join(["gen", f"s{args.seed}", f"n{args.n}", *picked]) + ".cert.json"
    print(emit_graph6(g).decode("ascii"))
    if cert is not None:
        out = Path(args.cert_out or sidecar)
        out.write_text(_dumps(dump_certificate(cert)) + "\n")
        logger.info("certificate written to %s", out)
    return 0


def cmd_enum(args: argparse.Namespace) -> int:
    rows = census_rows(args.max_n, oracle=args.oracle_census, jobs=args.jobs)
    if args.json:
        print(census_json(rows))
    else:
        sys.stdout.write(census_csv(rows))
    return 0


def cmd_pathdecomp(args: argparse.Namespace) -> int:
    g = _read_one(args.graph)
    if args.cert:
        cert = load_certificate(_read_bytes(args.cert))
        if not verify_certificate(cert, g):
            print("certificate does not match the graph", file=sys.stderr)
            return 1
        pd = decompose(cert)
    else:
        cert, pd = decompose_graph(g)
    report = verify_decomposition(g, pd)
    if not report.ok:
        print("; ".join(report.violations), file=sys.stderr)
        return 1
    print(_dumps({"bags": pd.bags, "type": cert.type, "width": pd.width}))
    return 0


def cmd_delta(args: argparse.Namespace) -> int:
    print(f"{solve_delta():.10f}")
    return 0


def cmd_prooflab(args: argparse.Namespace) -> int:
    report = check_structural_lemmas(_read_one(args.graph))
    print(_dumps(report))
    return 0 if report.all_pass else 1


# ------------------------- wiring -------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="yclaw", description=__doc__,
                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("-v", "--verbose", action="store_true", help="log at INFO on stderr")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="Y witness or certificate per component")
    p.add_argument("--format", choices=["auto", "graph6", "edges"], default="auto")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cert-verify", help="check a certificate against a graph")
    p.add_argument("cert")
    p.add_argument("graph")
    p.set_defaults(func=cmd_cert_verify)

    p = sub.add_parser("gen", help="seeded Y-free graph plus certificate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    fam = p.add_mutually_exclusive_group()
    fam.add_argument("--kernel", action="store_true")
    fam.add_argument("--strand", action="store_true")
    fam.add_argument("--necklace", action="store_true")
    p.add_argument("--max-t", type=int, default=4)
    p.add_argument("--thick-caterpillar", type=int, nargs=2, metavar=("SPINE", "MASK"))
    p.add_argument(
        "--cert-out", help="certificate JSON path (default: sidecar file in the working dir)"
    )
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enum", help="census table of connected Y-free graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--oracle-census", action="store_true")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--csv", action="store_true")
    out.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=settings.jobs)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("pathdecomp", help="path decomposition from a certificate")
    p.add_argument("graph")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_pathdecomp)

    p = sub.add_parser("delta", help="print the growth constant candidate")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("prooflab", help="longest-path structure checks")
    p.add_argument("graph")
    p.set_defaults(func=cmd_prooflab)
    return ap


def _configure_logging(verbose: bool) -> None:
    level = logging.INFO if verbose else settings.log_level
    logging.basicConfig(level=level, format="[%(name)s] %(message)s", stream=sys.stderr)


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"yclaw: {exc}", file=sys.stderr)
        return 2
    _configure_logging(args.verbose)
    try:
        return int(args.func(args))
    except (InvalidCertificateError, NotYFreeError, LemmaHypothesisError) as exc:
        print(f"yclaw: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"yclaw: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
