"""Thin command-line client for the solver service.

Subcommands (solve, chebyshev, learn, rules, oracle-check) load a JSON
problem document, validate it into the service request models, run the
matching service handler (in-process by default, over HTTP with --server)
and print a text or canonical-JSON report.

Exit codes: 0 success (and consistent, for solve), 1 inconsistent system /
failed oracle check, 2 invalid input, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    DomainError,
    EnumerationBudgetExceeded,
    SubsetCapExceeded,
)
from .service import handlers, models

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def fmt_num(x: float) -> str:
    """Up to 9 fractional digits, trailing zeros trimmed."""
    s = f"{float(x):.9f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def fmt_vec(v) -> str:
    return "[" + ", ".join(fmt_num(x) for x in v) + "]"


def _round9(obj):
    if isinstance(obj, float):
        r = round(obj, 9)
        return 0.0 if r == 0 else r
    if isinstance(obj, dict):
        return {k: _round9(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round9(v) for v in obj]
    return obj


def canonical_json(data) -> str:
    """Deterministic JSON: keys sorted, floats rounded to 9 decimals.

    Idempotent, so re-parsing and re-emitting is byte-identical.
    """
    return json.dumps(_round9(data), sort_keys=True, indent=2)


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SystemExit(_input_error(f"cannot read {path}: {exc}"))
    except json.JSONDecodeError as exc:
        raise SystemExit(_input_error(f"{path} is not valid JSON: {exc}"))
    if not isinstance(doc, dict):
        raise SystemExit(_input_error(f"{path}: expected a JSON object at top level"))
    return doc


def _input_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _validate(model_cls, doc: dict, args):
    # explicit flags beat file-embedded options, which beat model defaults
    doc = dict(doc)
    if args.tolerance is not None:
        doc["tolerance"] = args.tolerance
    if args.max_enumeration is not None:
        doc["max_enumeration"] = args.max_enumeration
    try:
        return model_cls.model_validate(doc)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(p) for p in first["loc"]) or "<document>"
        raise SystemExit(_input_error(f"field '{field}': {first['msg']}"))


def _run(args, endpoint: str, request_model) -> dict:
    """Run one request, in-process or against a remote server; return the report dict."""
    if args.server:
        return _run_remote(args.server, endpoint, request_model)
    try:
        handler = {
            "/solve": handlers.solve_system,
            "/chebyshev": handlers.chebyshev_system,
            "/learn": handlers.learn_weights,
            "/rules": handlers.learn_rules,
            "/oracle-check": handlers.oracle_check,
        }[endpoint]
        response = handler(request_model)
    except (DomainError, DimensionMismatch) as exc:
        raise SystemExit(_input_error(str(exc)))
    except (EnumerationBudgetExceeded, BudgetExceeded, SubsetCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_BUDGET)
    return response.model_dump(exclude_none=True)


def _run_remote(server: str, endpoint: str, request_model) -> dict:
    import httpx

    url = server.rstrip("/") + endpoint
    try:
        reply = httpx.post(url, json=request_model.model_dump(), timeout=60.0)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach {url}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)
    body = reply.json()
    if reply.status_code == 200:
        return {k: v for k, v in body.items() if v is not None}
    if isinstance(body, dict) and body.get("error") == "budget_exceeded":
        print(f"error: {body.get('detail')}", file=sys.stderr)
        raise SystemExit(EXIT_BUDGET)
    detail = body.get("detail") if isinstance(body, dict) else body
    raise SystemExit(_input_error(f"server rejected request: {detail}"))


def _emit(args, report: dict, text_lines) -> None:
    if args.format == "json":
        print(canonical_json(report))
    else:
        for line in text_lines(report):
            print(line)


def cmd_solve(args) -> int:
    req = _validate(models.ProblemRequest, load_document(args.problem), args)
    report = _run(args, "/solve", req)

    def lines(r):
        yield f"kind: {r['kind']}"
        yield f"consistent: {'yes' if r['consistent'] else 'no'}"
        if r["consistent"]:
            if r["kind"] == "maxmin":
                yield f"greatest solution: {fmt_vec(r['greatest'])}"
                yield from _vector_block("minimal solutions", r["minimal_solutions"])
            else:
                yield f"lowest solution: {fmt_vec(r['lowest'])}"
                yield from _vector_block("maximal solutions", r["maximal_solutions"])

    _emit(args, report, lines)
    return EXIT_OK if report["consistent"] else EXIT_INCONSISTENT


def cmd_chebyshev(args) -> int:
    doc = load_document(args.problem)
    if args.skip_minimal:
        doc["skip_minimal"] = True
    req = _validate(models.ChebyshevRequest, doc, args)
    report = _run(args, "/chebyshev", req)
    primal = report["kind"] == "maxmin"

    def lines(r):
        yield f"kind: {r['kind']}"
        yield f"Chebyshev distance: {fmt_num(r['distance'])}"
        if r["consistent"]:
            yield "system is consistent"
        yield f"per-row distances: {fmt_vec(r['per_row'])}"
        yield f"shifted window: {fmt_vec(r['lower_shift'])} .. {fmt_vec(r['upper_shift'])}"
        if primal:
            yield f"greatest Chebyshev approximation: {fmt_vec(r['greatest_cheb'])}"
            yield f"greatest approximate solution: {fmt_vec(r['greatest_approx'])}"
            if "minimal_chebs" in r:
                yield from _vector_block("minimal Chebyshev approximations", r["minimal_chebs"])
                yield from _vector_block("minimal approximate solutions", r["minimal_approx"])
        else:
            yield f"lowest Chebyshev approximation: {fmt_vec(r['lowest_cheb'])}"
            yield f"lowest approximate solution: {fmt_vec(r['lowest_approx'])}"
            if "maximal_chebs" in r:
                yield from _vector_block("maximal Chebyshev approximations", r["maximal_chebs"])
                yield from _vector_block("maximal approximate solutions", r["maximal_approx"])

    _emit(args, report, lines)
    return EXIT_OK


def cmd_learn(args) -> int:
    doc = load_document(args.training)
    if args.policy is not None:
        doc["policy"] = args.policy
    req = _validate(models.TrainingRequest, doc, args)
    report = _run(args, "/learn", req)

    def lines(r):
        n_pairs = len(r["matrix"])
        yield f"pairs: {n_pairs}, inputs: {len(r['matrix'][0])}, outputs: {len(r['rhs_per_output'])}"
        yield f"per-output distances: {fmt_vec(r['per_output_distance'])}"
        yield f"least achievable error: {fmt_num(r['min_error'])}"
        yield "weights:"
        for row in r["weights"]:
            yield f"  {fmt_vec(row)}"
        yield f"achieved error: {fmt_num(r['achieved_error'])}"
        yield f"per-pair residuals: {fmt_vec(r['residuals'])}"

    _emit(args, report, lines)
    return EXIT_OK


def cmd_rules(args) -> int:
    doc = load_document(args.instances)
    if not doc.get("instances"):
        return _input_error("field 'instances': must hold at least one {gamma, target} block")
    req = _validate(models.RulesRequest, doc, args)
    report = _run(args, "/rules", req)

    def lines(r):
        yield f"stacked system: {r['rows']} rows x {r['cols']} cols"
        yield f"Chebyshev distance: {fmt_num(r['distance'])}"
        yield f"consistent: {'yes' if r['consistent'] else 'no'}"
        label = "lowest solution" if r["consistent"] else "lowest approximate solution"
        yield f"{label}: {fmt_vec(r['lowest_solution'])}"
        suffix = "solutions" if r["consistent"] else "approximate solutions"
        yield from _vector_block(f"maximal {suffix}", r["maximal_solutions"])
        yield "parameter intervals:"
        for group in r["intervals"]:
            yield f"  right-hand side {fmt_vec(group['rhs'])}:"
            for upper in group["uppers"]:
                yield f"    {fmt_vec(group['lower'])} <= x <= {fmt_vec(upper)}"

    _emit(args, report, lines)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    req = _validate(models.OracleCheckRequest, load_document(args.problem), args)
    report = _run(args, "/oracle-check", req)

    def lines(r):
        yield f"kind: {r['kind']}"
        yield f"analytical distance: {fmt_num(r['analytical_distance'])}"
        yield f"oracle distance: {fmt_num(r['oracle_distance'])}"
        yield f"grid distance (step {fmt_num(r['grid_step'])}): {fmt_num(r['grid_distance'])}"
        if r["minimal_solutions_checked"]:
            verdict = "agree" if r["minimal_solutions_agree"] else "DISAGREE"
            yield f"minimal solutions cross-check: {verdict}"
        else:
            yield "minimal solutions cross-check: skipped (grid too large)"
        yield f"verdict: {'agree' if r['agree'] else 'DISAGREE'}"

    _emit(args, report, lines)
    return EXIT_OK if report["agree"] else EXIT_INCONSISTENT


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("fuzzrel.service:app", host=args.host, port=args.port)
    return EXIT_OK


def _vector_block(label: str, vectors) -> list[str]:
    out = [f"{label} ({len(vectors)}):"]
    out.extend(f"  {fmt_vec(v)}" for v in vectors)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzrel",
        description="Solve, diagnose and Chebyshev-approximate max-min / min-max "
        "relational equation systems; learn weights and rule parameters.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None, metavar="EPS",
                        help="order-comparison tolerance (default 1e-9)")
    common.add_argument("--max-enumeration", type=int, default=None, metavar="N",
                        help="covering-enumeration budget (default 10^6)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--server", metavar="URL", help="send the request to a running service")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="solve a relational system")
    p.add_argument("problem", help="JSON file with matrix, rhs and optional kind")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("chebyshev", parents=[common], help="Chebyshev-approximate a system")
    p.add_argument("problem")
    p.add_argument("--skip-minimal", action="store_true", help="skip extremal enumeration")
    p.set_defaults(func=cmd_chebyshev)

    p = sub.add_parser("learn", parents=[common], help="learn a weight matrix from pairs")
    p.add_argument("training", help="JSON file with inputs and outputs arrays")
    p.add_argument("--policy", choices=("greatest", "minimal"))
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("rules", parents=[common], help="learn rule parameters from instances")
    p.add_argument("instances", help="JSON file with a list of {gamma, target} blocks")
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("oracle-check", parents=[common], help="brute-force cross-check")
    p.add_argument("problem")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
