"""Command-line front end.

Subcommands expose every capability with table and JSON output:

    eigenvalue   invariant eigenvalue of a diagram
    reconstruct  diagram back from an eigenvalue polynomial
    characters   S_n character table (projector route, MN route, or both)
    traces       Murphy, connected, product, and doubly-connected traces
    verify       regular-representation oracle suite at a rational q0
    suq          quantum-group Casimir spectra and the correspondence

JSON output is deterministic (sorted keys, canonical polynomial
strings).  Exit status is 0 exactly when the command succeeded; failed
verification or validation errors exit nonzero, with a machine-readable
``error`` field in JSON mode.  If HECKEQ_CACHE_DIR is set, structure
constants and dimension memos persist there between invocations as
versioned JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import diagrams, symgroup
from .diagrams import YoungDiagram, dimension, partitions
from .hecke_oracle import (
    MAX_ORACLE_N,
    fundamental_invariant,
    hecke_projector,
    irreducible_trace,
    projector_element,
    regular_trace,
    word_element,
)
from .invariant import invariant_eigenvalue, reconstruct_diagram
from .laurent import LaurentPoly
from .suq import (
    SuqIrrep,
    casimir_eigenvalue,
    gz_patterns,
    hecke_casimir_correspondence,
    irrep_from_casimir,
)
from .symgroup import (
    MAX_PROJECTOR_N,
    build_projector,
    character_table_json,
    cycle_type_to_string,
)
from .traces import (
    doubly_connected_traces,
    murphy_product_trace,
    murphy_trace_table_json,
    murphy_traces,
    simply_connected_trace,
)

CACHE_ENV = "HECKEQ_CACHE_DIR"
CACHE_FILE = "heckeq_cache.json"
CACHE_VERSION = 1

MAX_VERIFY_N = 6
MAX_CHARACTER_TABLE_N = 8


class CommandError(ValueError):
    """A validation failure surfaced to the user."""


def _parse_q0(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CommandError(f"cannot parse q0 {text!r} (expected an integer or p/q)") from exc


def _parse_diagram(text: str, n: int | None = None) -> YoungDiagram:
    try:
        g = YoungDiagram.from_string(text)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    if n is not None and g.n != n:
        raise CommandError(f"diagram {g} has {g.n} boxes, expected n={n}")
    return g


def _parse_poly(text: str) -> LaurentPoly:
    return LaurentPoly.from_string(text)


# -- persistent memo cache ---------------------------------------------


def _cache_path() -> str | None:
    directory = os.environ.get(CACHE_ENV)
    if not directory:
        return None
    return os.path.join(directory, CACHE_FILE)


def load_caches() -> None:
    path = _cache_path()
    if not path or not os.path.exists(path):
        return
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
            return
        symgroup.import_structure_constants(data.get("structure_constants", {}))
        diagrams.import_dimension_memo(data.get("dimensions", {}))
    except (OSError, json.JSONDecodeError, TypeError) as exc:
        print(f"warning: ignoring unreadable cache at {path}: {exc}", file=sys.stderr)


def save_caches() -> None:
    path = _cache_path()
    if not path:
        return
    payload = {
        "version": CACHE_VERSION,
        "structure_constants": symgroup.export_structure_constants(),
        "dimensions": diagrams.export_dimension_memo(),
    }
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, sort_keys=True)
        os.replace(tmp, path)
    except OSError as exc:
        print(f"warning: could not persist cache at {path}: {exc}", file=sys.stderr)


# -- oracle verification suite ------------------------------------------


def oracle_checks(n: int, q0: Fraction) -> dict[str, bool]:
    """Run the oracle invariants at (n, q0) and report each outcome.

    Covers centrality of the fundamental invariant, the projector
    algebra (idempotence, orthogonality, resolution of the identity,
    regular traces equal to squared dimensions), and agreement of the
    symbolic connected and doubly-connected traces with the oracle.
    """
    from .traces import doubly_connected_traces as _doubly  # local alias for clarity

    parts = partitions(n)
    invariant = fundamental_invariant(n, q0)
    checks: dict[str, bool] = {}

    centrality = True
    for i in range(1, n):
        gi = word_element(n, q0, (i,))
        if gi * invariant != invariant * gi:
            centrality = False
            break
    checks["fundamental_invariant_central"] = centrality

    projectors = {g: projector_element(hecke_projector(g, n, q0)) for g in parts}
    checks["projector_idempotent"] = all(p * p == p for p in projectors.values())
    orthogonal = True
    for g, p in projectors.items():
        for h, p2 in projectors.items():
            if g != h and (p * p2).coeffs:
                orthogonal = False
    checks["projector_pairwise_orthogonal"] = orthogonal
    total = None
    for p in projectors.values():
        total = p if total is None else total + p
    checks["projector_resolution_of_identity"] = total is not None and total.coeffs == {
        tuple(range(1, n + 1)): Fraction(1)
    }
    checks["projector_regular_trace_dimension"] = all(
        regular_trace(p) == Fraction(dimension(g)) ** 2 for g, p in projectors.items()
    )

    simply_ok = True
    for g in parts:
        for k in range(2, n + 1):
            symbolic = simply_connected_trace(g, k).evaluate(q0)
            oracle = irreducible_trace(g, tuple(range(1, k)), n, q0)
            if symbolic != oracle:
                simply_ok = False
    checks["simply_connected_traces_agree"] = simply_ok

    if n >= 4:
        doubly_ok = True
        for g in parts:
            solved = _doubly(g)
            if solved["g1*g3"].evaluate(q0) != irreducible_trace(g, (1, 3), n, q0):
                doubly_ok = False
            if n >= 5 and solved["g1*g3*g4"].evaluate(q0) != irreducible_trace(g, (1, 3, 4), n, q0):
                doubly_ok = False
        checks["doubly_connected_traces_agree"] = doubly_ok
    return checks


# -- command handlers -----------------------------------------------------


def _cmd_eigenvalue(args) -> tuple[dict, int]:
    g = _parse_diagram(args.diagram, args.n)
    return {"eigenvalue": str(invariant_eigenvalue(g)), "diagram": str(g), "n": args.n}, 0


def _cmd_reconstruct(args) -> tuple[dict, int]:
    poly = _parse_poly(args.poly)
    g = reconstruct_diagram(poly, args.n)
    return {"diagram": str(g), "eigenvalue": str(poly), "n": args.n}, 0


def _cmd_characters(args) -> tuple[dict, int]:
    n, method = args.n, args.method
    if method in ("projector", "both") and n > MAX_PROJECTOR_N and not args.unsafe_large_n:
        raise CommandError(
            f"projector-based extraction is capped at n <= {MAX_PROJECTOR_N} "
            "(pass --unsafe-large-n to override)"
        )
    if n > MAX_CHARACTER_TABLE_N and not args.unsafe_large_n:
        raise CommandError(
            f"character tables are capped at n <= {MAX_CHARACTER_TABLE_N} "
            "(pass --unsafe-large-n to override)"
        )
    result: dict = {"n": n, "method": method}
    if method in ("mn", "both"):
        result["mn"] = character_table_json(n, "mn")
    if method in ("projector", "both"):
        result["projector"] = character_table_json(n, "projector")
    if method == "both":
        result["agreement"] = result["mn"]["rows"] == result["projector"]["rows"]
    return result, 0


def _cmd_traces(args) -> tuple[dict, int]:
    n, kind = args.n, args.kind
    if kind == "murphy" and args.diagram is None:
        return {"n": n, "kind": kind, **murphy_trace_table_json(n)}, 0
    if args.diagram is None:
        raise CommandError(f"--diagram is required for kind={kind}")
    g = _parse_diagram(args.diagram, n)
    doc: dict = {"n": n, "kind": kind, "diagram": str(g)}
    if kind == "murphy":
        entries = murphy_traces(g).entries
        doc["murphy_traces"] = {str(i): str(entries[i]) for i in sorted(entries)}
    elif kind == "simply":
        doc["connected_traces"] = {str(k): str(simply_connected_trace(g, k)) for k in range(2, n + 1)}
    elif kind == "products":
        if not args.alphas:
            raise CommandError("--alphas is required for kind=products (e.g. --alphas 2,4)")
        try:
            alphas = tuple(int(a) for a in args.alphas.split(","))
        except ValueError as exc:
            raise CommandError(f"cannot parse --alphas {args.alphas!r}") from exc
        doc["alphas"] = list(alphas)
        doc["trace"] = str(murphy_product_trace(g, alphas))
    elif kind == "doubly":
        doc["doubly_connected_traces"] = {
            label: str(poly) for label, poly in doubly_connected_traces(g).items()
        }
    return doc, 0


def _cmd_verify(args) -> tuple[dict, int]:
    n = args.n
    q0 = _parse_q0(args.q0)
    limit = MAX_ORACLE_N if args.unsafe_large_n else MAX_VERIFY_N
    if not 2 <= n <= limit:
        raise CommandError(
            f"verify runs for 2 <= n <= {limit}"
            + ("" if args.unsafe_large_n else " (pass --unsafe-large-n for 7)")
        )
    if q0 in (0, 1, -1):
        raise CommandError(f"q0 = {q0} is a degenerate specialization; pick any other rational")
    checks = oracle_checks(n, q0)
    all_pass = all(checks.values())
    return {"n": n, "q0": str(q0), "checks": checks, "all_pass": all_pass}, 0 if all_pass else 1


def _cmd_suq(args) -> tuple[dict, int]:
    N, action = args.N, args.action
    doc: dict = {"N": N, "action": action}
    if action == "casimir":
        irrep = _suq_irrep_from_args(args, N)
        doc["irrep"] = str(irrep)
        doc["casimir"] = str(casimir_eigenvalue(irrep))
    elif action == "dimension":
        irrep = _suq_irrep_from_args(args, N)
        doc["irrep"] = str(irrep)
        doc["dimension"] = len(gz_patterns(irrep))
    elif action == "reconstruct":
        if not args.poly:
            raise CommandError("--poly is required for action=reconstruct")
        irrep = irrep_from_casimir(_parse_poly(args.poly), N)
        doc["irrep"] = str(irrep)
        doc["row_lengths"] = ",".join(str(h) for h in irrep.row_lengths)
    elif action == "check":
        if args.diagram:
            g = _parse_diagram(args.diagram)
            doc["diagram"] = str(g)
            doc["holds"] = hecke_casimir_correspondence(g, N)
        elif args.sweep_n:
            holds = True
            checked = 0
            for n in range(1, args.sweep_n + 1):
                for g in partitions(n):
                    for big_n in range(len(g.rows) + 1, 7):
                        holds = holds and hecke_casimir_correspondence(g, big_n)
                        checked += 1
            doc["sweep_n"] = args.sweep_n
            doc["checked"] = checked
            doc["holds"] = holds
        else:
            raise CommandError("action=check needs --diagram or --sweep-n")
        if not doc["holds"]:
            return doc, 1
    return doc, 0


def _suq_irrep_from_args(args, N: int) -> SuqIrrep:
    if not args.diagram:
        raise CommandError(f"--diagram is required for action={args.action}")
    text = args.diagram
    try:
        rows = tuple(int(p) for p in text.split(","))
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        return SuqIrrep.from_rows(N, rows)
    except ValueError as exc:
        raise CommandError(f"cannot build an SU_q({N}) irrep from {text!r}: {exc}") from exc


# -- rendering ------------------------------------------------------------


def _render_table(doc: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_table(value, indent + 1))
        elif isinstance(value, bool):
            lines.append(f"{pad}{key}: {'PASS' if value else 'FAIL'}")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(str(v) for v in value))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def _emit(command: str, payload: dict, fmt: str) -> None:
    document = {"command": command, "format": fmt, "result": payload}
    if fmt == "json":
        print(json.dumps(document, sort_keys=True, indent=2))
    else:
        print(_render_table(payload))


def _emit_error(command: str, exc: Exception, fmt: str) -> None:
    if fmt == "json":
        document = {
            "command": command,
            "format": fmt,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(json.dumps(document, sort_keys=True, indent=2))
    else:
        print(f"error: {exc}", file=sys.stderr)


# -- argument parsing -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckeq",
        description="Exact Hecke-algebra invariants, characters, traces, and Casimir spectra.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--q0", default="2", help="rational specialization point (default 2)")
    common.add_argument(
        "--unsafe-large-n",
        action="store_true",
        help="lift the default scale guards (factorial growth ahead)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eigenvalue", parents=[common], help="invariant eigenvalue of a diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diagram", required=True, help="comma-separated rows, e.g. 3,3")
    p.set_defaults(handler=_cmd_eigenvalue)

    p = sub.add_parser("reconstruct", parents=[common], help="diagram from an eigenvalue polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", required=True, help="e.g. 'q^2+3*q-1'")
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("characters", parents=[common], help="S_n character table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("projector", "mn", "both"), default="both")
    p.set_defaults(handler=_cmd_characters)

    p = sub.add_parser("traces", parents=[common], help="symbolic Hecke trace tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diagram")
    p.add_argument("--kind", choices=("murphy", "simply", "products", "doubly"), required=True)
    p.add_argument("--alphas", help="Murphy indices for kind=products, e.g. 2,4")
    p.set_defaults(handler=_cmd_traces)

    p = sub.add_parser("verify", parents=[common], help="run the oracle suite")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("suq", parents=[common], help="quantum-group Casimir machinery")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--action", choices=("casimir", "reconstruct", "check", "dimension"), required=True)
    p.add_argument("--diagram", help="Young-diagram rows, trailing zeros optional")
    p.add_argument("--poly", help="Casimir spectrum polynomial for action=reconstruct")
    p.add_argument("--sweep-n", type=int, help="for action=check: verify all diagrams up to this size")
    p.set_defaults(handler=_cmd_suq)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    load_caches()
    try:
        payload, code = args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        _emit_error(args.command, exc, args.format)
        return 1
    save_caches()
    if args.format == "json":
        _emit(args.command, payload, "json")
    else:
        _emit(args.command, payload, "table")
    return code


if __name__ == "__main__":
    sys.exit(main())
