"""Command-line front end.

Each geometry subcommand reads one JSON request (a file argument, or
standard input when the argument is ``-`` or omitted) and writes a
single JSON document to standard output; diagnostics go to standard
error.  Exit codes: 0 success, 2 validation error (malformed JSON,
shape mismatch, unknown command), 3 degenerate-input or construction
error.

Request fields by command (see serialize for the wire formats):

    norm        space, x
    dual        space
    support     space, x
    diam        space, x
    smooth      space, x, eps
    orth        space, x, y
    sip         space, x, y
    complete    space, x, y
    symmetric   space, x, side
    falsify     space, x, side
    crosscheck  space, x, y

``run`` accepts the full request object with a ``command`` field.
``dgap-report`` is flag-driven (--n, --p, --outdir) and, when an output
directory is given, renders the table as CSV and the convergence
figure as PNG alongside the JSON document.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import oracles, orthogonality, report, serialize, sums
from .errors import LpsumsError, ValidationError

GEOMETRY_COMMANDS = (
    "norm", "dual", "support", "diam", "smooth", "orth", "sip",
    "complete", "symmetric", "falsify", "crosscheck",
)


def _load_request(path: str | None) -> dict:
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        data = json.loads(text)
    except OSError as exc:
        raise ValidationError(f"cannot read request: {exc}")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON request: {exc}")
    if not isinstance(data, dict):
        raise ValidationError("request must be a JSON object")
    return data


def _load_config(spec: str | None) -> oracles.OracleConfig:
    if spec is None:
        return oracles.DEFAULT_CONFIG
    try:
        with open(spec) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read config: {exc}")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed config JSON: {exc}")
    if not isinstance(data, dict):
        raise ValidationError("config must be a JSON object")
    known = {"golden_section_width", "grid_directions", "pair_scan_limit"}
    unknown = set(data) - known
    if unknown:
        raise ValidationError(f"unknown config fields: {sorted(unknown)}")
    try:
        return oracles.OracleConfig(**data)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad config values: {exc}")


def _get(request: dict, field: str):
    if field not in request:
        raise ValidationError(f"request is missing the {field!r} field")
    return request[field]


def _space(request: dict) -> sums.SumSpace:
    return serialize.sum_space_from_jsonable(_get(request, "space"))


def _vector(request: dict, field: str) -> sums.SumVector:
    return serialize.vector_from_jsonable(_get(request, field))


def _side(request: dict) -> str:
    side = _get(request, "side")
    if side not in ("left", "right"):
        raise ValidationError("side must be 'left' or 'right'")
    return side


def _interval_json(iv) -> list:
    return [iv.lo, iv.hi]


def handle_request(command: str, request: dict, tol: float,
                   config: oracles.OracleConfig) -> dict:
    """Dispatch one geometry request and return the JSON-able answer."""
    if command == "norm":
        space = _space(request)
        x = _vector(request, "x")
        return {"norm": sums.sum_norm(space, x)}
    if command == "dual":
        space = _space(request)
        return {"space": serialize.sum_space_to_jsonable(sums.dual_sum_space(space))}
    if command == "support":
        space = _space(request)
        x = _vector(request, "x")
        sset = sums.support_functionals(space, x)
        return {
            "support_set": serialize.support_set_to_jsonable(sset),
            "canonical": serialize.functional_to_jsonable(sset.canonical()),
        }
    if command == "diam":
        space = _space(request)
        x = _vector(request, "x")
        return {"diameter": sums.support_diameter(space, x)}
    if command == "smooth":
        space = _space(request)
        x = _vector(request, "x")
        eps = _get(request, "eps")
        if not isinstance(eps, (int, float)) or isinstance(eps, bool):
            raise ValidationError("eps must be a number")
        rep = sums.smoothness_report(space, x, float(eps))
        return {"smooth": rep.smooth, "eps_smooth": rep.eps_smooth,
                "diameter": rep.diameter}
    if command == "orth":
        space = _space(request)
        x = _vector(request, "x")
        y = _vector(request, "y")
        result = orthogonality.bj_orthogonal(space, x, y)
        witness = None
        interval = None
        if not x.is_zero:
            interval = _interval_json(orthogonality.achievable_values(space, x, y))
            w = orthogonality.orthogonality_witness(space, x, y)
            if w is not None:
                witness = serialize.functional_to_jsonable(w)
        return {"orthogonal": result, "witness_functional": witness,
                "interval": interval}
    if command == "sip":
        space = _space(request)
        x = _vector(request, "x")
        y = _vector(request, "y")
        value = orthogonality.sip(space, orthogonality.CANONICAL_SELECTOR, x, y)
        interval = None
        if not x.is_zero:
            interval = _interval_json(orthogonality.sip_value_interval(space, x, y))
        return {"value": value, "interval": interval}
    if command == "complete":
        space = _space(request)
        x = _vector(request, "x")
        y = _vector(request, "y")
        iv = orthogonality.achievable_values(space, x, y)
        nx = sums.sum_norm(space, x)
        t = orthogonality.orthogonal_completion(space, x, y)
        return {"t": t, "feasible_interval": [-iv.hi / nx, -iv.lo / nx]}
    if command == "symmetric":
        space = _space(request)
        x = _vector(request, "x")
        side = _side(request)
        return {"result": orthogonality.symmetric_point(space, x, side).value}
    if command == "falsify":
        space = _space(request)
        x = _vector(request, "x")
        side = _side(request)
        witness = orthogonality.falsify_symmetry(space, x, side, tol=tol)
        return {
            "witness": None if witness is None
            else serialize.vector_to_jsonable(witness),
            "confirmed": witness is not None,
        }
    if command == "crosscheck":
        space = _space(request)
        x = _vector(request, "x")
        y = _vector(request, "y")
        characterization = orthogonality.bj_orthogonal(space, x, y)
        min_norm = None
        argmin = None
        if y.is_zero or x.is_zero:
            oracle = True
        else:
            result = oracles.oracle_min_norm(space, x, y, config)
            min_norm, argmin = result.value, result.argmin
            oracle = result.value >= sums.sum_norm(space, x) - tol
        return {
            "characterization": characterization,
            "oracle": oracle,
            "agree": characterization == oracle,
            "min_norm": min_norm,
            "argmin": argmin,
        }
    raise ValidationError(f"unknown command {command!r}")


def _emit(doc: dict) -> None:
    sys.stdout.write(serialize.dumps(doc) + "\n")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lpsums",
        description="Geometry of lp- and c0-direct sums of normed spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("request", nargs="?", default="-",
                        help="JSON request file ('-' for stdin)")
        sp.add_argument("--tol", type=float, default=1e-7,
                        help="tolerance for the definition-based oracle")
        sp.add_argument("--config", default=None,
                        help="JSON file overriding the oracle configuration")

    for name in GEOMETRY_COMMANDS:
        add_common(sub.add_parser(name))
    add_common(sub.add_parser("run", help="request object with a 'command' field"))

    dgap = sub.add_parser("dgap-report", help="diameter-gap certification report")
    dgap.add_argument("--n", type=int, required=True,
                      help="number of polygon components")
    dgap.add_argument("--p", type=float, required=True,
                      help="sum exponent, 1 < p < inf")
    dgap.add_argument("--samples", type=int, default=200)
    dgap.add_argument("--outdir", default=None,
                      help="directory for the CSV table and PNG figure")

    args = parser.parse_args(argv)
    try:
        if args.command == "dgap-report":
            doc = report.build_dgap_report(args.n, args.p, samples=args.samples)
            if args.outdir is not None:
                doc["files"] = report.write_report_files(doc, args.outdir)
            _emit(doc)
            return 0
        if args.tol <= 0:
            raise ValidationError("--tol must be positive")
        config = _load_config(args.config)
        request = _load_request(args.request)
        command = args.command
        if command == "run":
            command = request.get("command")
            if command == "dgap-report":
                n = request.get("n")
                p = request.get("p")
                if not isinstance(n, int) or isinstance(n, bool):
                    raise ValidationError("dgap-report needs an integer 'n'")
                if not isinstance(p, (int, float)) or isinstance(p, bool):
                    raise ValidationError("dgap-report needs a numeric 'p'")
                doc = report.build_dgap_report(n, float(p),
                                               samples=request.get("samples", 200))
                if request.get("outdir") is not None:
                    doc["files"] = report.write_report_files(doc, request["outdir"])
                _emit(doc)
                return 0
            if command not in GEOMETRY_COMMANDS:
                raise ValidationError(f"unknown command {command!r}")
        _emit(handle_request(command, request, args.tol, config))
        return 0
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LpsumsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
