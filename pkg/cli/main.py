"""
Command-line surface
check / invariants / scan / series / fitd3 / verify
"""
import argparse
import json
import logging
import sys
from functools import partial
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from cli.records import VERDICT_COLUMNS, compute_record, render, verdict_row
from cli.verify import render_report, verify
from cli.workers import map_in_order
from config import DEFAULT_JOBS, DEFAULT_MAX_DEGREE, FIT_MIN_DEGREE, LOG_LEVEL
from conifold import check_conditions
from d3 import (
    apply,
    fit,
    matrix_from_operator,
    matrix_to_text,
    operator_to_polynomial,
    operator_to_text,
)
from dataset import format_polytope, load_ground_truth, parse
from errors import ConifoldError, NoOperatorError, NotCountingShapeError
from gkz import SeriesTable, kappa_form, phi0, phi_multi, relation_lattice
from invariants import analyze
from polytope import Polytope

logger = logging.getLogger(__name__)

Block = Tuple[str, Polytope]


def _record_job(item: Block, max_degree: Optional[int], with_fit: bool):
    id, P = item
    return compute_record(id, P, max_degree=max_degree, with_fit=with_fit)


def _verdict_job(item: Block):
    return verdict_row(*item)


def _accepted_job(item: Block) -> bool:
    id, P = item
    try:
        return check_conditions(P).accepted
    except ConifoldError as exc:
        logger.info("%s dropped: %s", id, exc)
        return False


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _blocks(args) -> List[Block]:
    return parse(Path(args.file), orientation=args.orientation)


def cmd_check(args) -> int:
    rows = map_in_order(_verdict_job, _blocks(args), args.jobs)
    _emit(render(rows, args.format, VERDICT_COLUMNS), args.out)
    return 0


def cmd_invariants(args) -> int:
    job = partial(_record_job, max_degree=args.max_degree, with_fit=args.fit)
    records = map_in_order(job, _blocks(args), args.jobs)
    _emit(render(records, args.format), args.out)
    failed = [r.id for r in records if r.failed]
    if failed:
        print(f"error: ComputationError: {len(failed)} block(s) failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def cmd_scan(args) -> int:
    blocks = _blocks(args)
    flags = map_in_order(_accepted_job, blocks, args.jobs)
    kept = [(id, P) for (id, P), ok in zip(blocks, flags) if ok]
    logger.info("scan kept %d of %d polytopes", len(kept), len(blocks))
    _emit("\n".join(format_polytope(P, id) for id, P in kept), args.out)
    return 0


def _series_lines(id: str, table: SeriesTable, fmt: str) -> List[str]:
    lines = []
    for degree, c in table.items():
        if fmt == "json-lines":
            lines.append(json.dumps({
                "id": id,
                "degree": list(degree),
                "numerator": c.numerator,
                "denominator": c.denominator,
            }))
        else:
            lines.append(f"{id}\t{','.join(str(d) for d in degree)}\t{c.numerator}\t{c.denominator}")
    return lines


def cmd_series(args) -> int:
    lines = [] if args.format == "json-lines" else ["# id\tdegree\tnumerator\tdenominator"]
    for id, P in _blocks(args):
        L = relation_lattice(P)
        if args.multi:
            group = analyze(P, id=id).picard
            table = phi_multi(L, group, args.max_degree)
            if args.format != "json-lines":
                lines.append(f"# {id} kappa = {' + '.join(f'{c}*t{j + 1}' for j, c in enumerate(kappa_form(table)))}")
        else:
            table = phi0(L, args.max_degree, method=args.method)
        lines += _series_lines(id, table, args.format)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _fit_block(id: str, P: Polytope, max_degree: int) -> dict:
    series = phi0(relation_lattice(P), max(max_degree, FIT_MIN_DEGREE))
    try:
        result = fit(series)
    except NoOperatorError as exc:
        logger.info("%s: %s", id, exc)
        return {"id": id, "error": f"NoOperatorError: {exc}"}
    image = apply(result.operator, series, max_degree)
    try:
        matrix = matrix_to_text(matrix_from_operator(result.operator))
    except NotCountingShapeError as exc:
        logger.info("%s: %s", id, exc)
        matrix = None
    return {
        "id": id,
        "operator": operator_to_polynomial(result.operator),
        "exact": operator_to_text(result.operator),
        "free_directions": len(result.nullspace),
        "matrix": matrix,
        "annihilated_through": max_degree if not image.coefficients else None,
    }


def _fit_lines(r: dict) -> List[str]:
    if "error" in r:
        return [f"# {r['id']}", f"fit: FAILED ({r['error']})"]
    lines = [f"# {r['id']}", f"operator: {r['operator']}", f"exact: {r['exact']}"]
    if r["free_directions"]:
        lines.append(f"underdetermined: {r['free_directions']} free direction(s), free coefficients set to 0")
    if r["matrix"] is None:
        lines.append("matrix: not of counting shape")
    else:
        lines.append("matrix:")
        lines += ["  " + row for row in r["matrix"].splitlines()]
    if r["annihilated_through"] is None:
        lines.append("annihilation: FAILED")
    else:
        lines.append(f"annihilation: ok through t^{r['annihilated_through']}")
    return lines


def cmd_fitd3(args) -> int:
    results = [_fit_block(id, P, args.max_degree) for id, P in _blocks(args)]
    if args.format == "json-lines":
        _emit("".join(json.dumps(r) + "\n" for r in results), args.out)
    else:
        _emit("\n".join("\n".join(_fit_lines(r)) + "\n" for r in results), args.out)
    failed = [r["id"] for r in results if "error" in r or r["annihilated_through"] is None]
    if failed:
        print(f"error: {len(failed)} block(s) without a D3 operator: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    ids = args.ids.split(",") if args.ids else None
    report = verify(load_ground_truth(args.dataset, ids=ids), jobs=args.jobs)
    if args.format == "json-lines":
        _emit(report.model_dump_json() + "\n", args.out)
    else:
        _emit(render_report(report), args.out)
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=str, help="Write output to this file instead of stdout")
    common.add_argument("--format", choices=("tsv", "json-lines"), default="tsv", help="Output format")
    common.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="Worker processes for per-block work")
    common.add_argument("--orientation", choices=("auto", "columns", "rows"), default="auto",
                        help="Which side of each block lists the vertices")
    common.add_argument("--log-level", default=LOG_LEVEL, help="Logging level (written to stderr)")

    parser = argparse.ArgumentParser(
        prog="conifold",
        description="Conifold degenerations of Fano 3-folds from reflexive 4-polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Conifold verdict per polytope")
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("invariants", parents=[common], help="Result records per polytope")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None, help="Also hash Phi_0 to this degree")
    p.add_argument("--fit", action="store_true", help="Also fit the D3 operator")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("scan", parents=[common], help="Keep only accepted polytopes")
    p.add_argument("file")
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("series", parents=[common], help="Phi_0 (or Phi with --multi) coefficients")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--multi", action="store_true", help="Grade by the Picard basis")
    p.add_argument("--method", choices=("constant-term", "lattice"), default="constant-term")
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("fitd3", parents=[common], help="Fit the D3 operator and counting matrix")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                   help="Check the annihilation through this degree")
    p.set_defaults(handler=cmd_fitd3)

    p = sub.add_parser("verify", parents=[common], help="Recompute the bundled ground truth")
    p.add_argument("--dataset", type=str, default=None, help="Dataset file (default: bundled)")
    p.add_argument("--ids", type=str, default=None, help="Comma-separated ids, e.g. V(1),V(2)")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        logging.basicConfig(
            level=args.log_level.upper(),
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
        return args.handler(args)
    except (ConifoldError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
