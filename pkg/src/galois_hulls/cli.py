"""``galois-hulls`` command line: construct, verify, bounds, enumerate, reproduce.

Exit codes: 0 success, 2 unreadable input, 3 violated construction
hypothesis, 4 the oracle disagrees with the requested hull dimension or
refutes the MDS property.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from . import codes, constructions, grs, tables
from .bounds import bound_comparison, dimension_bound
from .exceptions import FieldError, HypothesisError
from .gf import GF, field_create

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_DISAGREE = 0, 2, 3, 4


class InputError(Exception):
    """Raised for malformed requests; maps to exit code 2."""


def parse_field(text: str) -> GF:
    """``p,h`` or ``p,h,c_h,...,c_0`` (modulus coefficients, leading first)."""
    try:
        parts = [int(x) for x in text.split(",")]
        if len(parts) < 2:
            raise ValueError("need at least p,h")
        return field_create(parts[0], parts[1], parts[2:] or None)
    except (ValueError, FieldError) as exc:
        raise InputError(f"bad --field {text!r}: {exc}") from exc


def field_from_block(block) -> GF:
    if not isinstance(block, dict):
        raise InputError("field block must be an object with p and h")
    try:
        return field_create(int(block["p"]), int(block["h"]), block.get("modulus"))
    except (KeyError, TypeError, ValueError, FieldError) as exc:
        raise InputError(f"malformed field block: {exc}") from exc


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _spec_from_dict(d, F: GF | None = None) -> grs.GrsSpec:
    try:
        return grs.GrsSpec.from_dict(d, F)
    except (KeyError, TypeError, ValueError, FieldError) as exc:
        raise InputError(f"malformed GRS spec: {exc}") from exc


def _int(params: dict, key: str) -> int:
    try:
        return int(params[key])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"missing or non-integer {key!r}") from exc


def _mds_verdict(C: codes.LinearCode, threads: int) -> str:
    return codes.is_mds(C, workers=threads)


def build_from_request(req: dict, F_default: GF | None = None):
    """Run the construction a request names.

    Returns ``(spec, e_hull, provenance)``.
    """
    if not isinstance(req, dict):
        raise InputError("request must be a JSON object")
    method = req.get("method")
    F = field_from_block(req["field"]) if "field" in req else F_default
    if F is None:
        raise InputError("no field given (request 'field' or --field)")
    params = req.get("params", {}) or {}
    if not isinstance(params, dict):
        raise InputError("params must be an object")
    k, l = _int(req, "k"), _int(req, "l")
    extended = bool(req.get("extended", False))
    prov: dict = {"method": method}

    if method == "theorem_c":
        e = _int(req, "e_prime")
        ps = constructions.theorem_c_points(F, _int(params, "m"), _int(params, "z"), _int(params, "w"), _int(params, "t"))
        plan = constructions.theorem_c_plan(ps, e, k, l, extended)
        spec = constructions.theorem_c_code(ps, e, k, l, extended)
        prov.update(pointset=ps.to_dict(), witness={"h": [[1]], "lambda": F.element_digits(ps.epsilon), "deg_h": 0},
                    twist_plan=plan.to_dict(F))
        return spec, e, prov

    if method in ("theorem_a", "theorem_b"):
        e_prime = _int(req, "e_prime")
        seed = _seed(F, method, params, extended)
        fn_plan = constructions.theorem_a_plan if method == "theorem_a" else constructions.theorem_b_plan
        fn = constructions.theorem_a_construct if method == "theorem_a" else constructions.theorem_b_construct
        plan, witness = fn_plan(seed, e_prime, k, l)
        spec = fn(seed, e_prime, k, l, witness)
        prov.update(seed=seed.to_dict(), witness=witness.to_dict(F), twist_plan=plan.to_dict(F))
        return spec, e_prime, prov

    raise InputError(f"unknown method {method!r}; expected theorem_a, theorem_b or theorem_c")


def _seed(F: GF, method: str, params: dict, extended: bool) -> grs.GrsSpec:
    if "seed" in params:
        seed = _spec_from_dict(params["seed"], F)
        if seed.extended != extended:
            raise InputError("seed extended flag differs from the request")
        return seed
    if method == "theorem_a" and "seed_theorem_c" in params:
        sp = params["seed_theorem_c"]
        ps = constructions.theorem_c_points(F, _int(sp, "m"), _int(sp, "z"), _int(sp, "w"), _int(sp, "t"))
        e, m = _int(sp, "e"), _int(sp, "k")
        if extended:
            return grs.find_extended_seed(ps.field, ps.points, m, e)
        return constructions.theorem_c_code(ps, e, m, m)
    if method == "theorem_b" and "seed_search" in params:
        sp = params["seed_search"]
        n, m = _int(sp, "n"), _int(sp, "k")
        if n > F.q:
            raise HypothesisError(f"n={n} exceeds q={F.q}")
        found = grs.find_self_orthogonal_seed(F, range(n), m, F.h // 2, extended=extended)
        if found is None:
            raise HypothesisError(f"no Hermitian self-orthogonal seed on locators 0..{n - 1} with k={m}")
        return found[0]
    if method == "theorem_b" and "hermitian_family" in params:
        sp = params["hermitian_family"]
        found = grs.hermitian_family_seed(F, _int(sp, "s"), _int(sp, "k"))
        if found is None:
            raise HypothesisError("Hermitian family search found no multiplier scale")
        return found[0]
    raise InputError("params must give a seed (seed, seed_theorem_c or seed_search/hermitian_family)")


def run_report(req: dict, spec: grs.GrsSpec, e: int, prov: dict, started: float, threads: int) -> dict:
    C = grs.generator_matrix(spec)
    rep = codes.hull(C, e)
    mds = _mds_verdict(C, threads)
    agreement = rep.dim == int(req["l"])
    return {
        "request": req,
        "spec": spec.to_dict(),
        "hull": codes.hull_report_json(C, e, mds=mds, report=rep),
        "mds": mds,
        "agreement": agreement,
        "wall_time": round(time.perf_counter() - started, 6),
        "provenance": prov,
    }


def cmd_construct(args) -> int:
    started = time.perf_counter()
    req = _load_json(args.request)
    F = parse_field(args.field) if args.field else None
    spec, e, prov = build_from_request(req, F)
    prov["seed_flag"] = args.seed
    report = run_report(req, spec, e, prov, started, args.threads)
    _emit_json(report)
    ok = report["agreement"] and report["mds"] != "proved-not-mds"
    return EXIT_OK if ok else EXIT_DISAGREE


def verify_spec(spec: grs.GrsSpec, e: int, threads: int = 1) -> dict:
    F = spec.field
    C = grs.generator_matrix(spec)
    rep = codes.hull(C, e)
    mds = _mds_verdict(C, threads)
    so = rep.dim == spec.k
    out = {
        "spec": spec.to_dict(),
        "hull": codes.hull_report_json(C, e, mds=mds, report=rep),
        "self_orthogonal": so,
        "mds": mds,
        "witness": None,
    }
    if so and not (spec.extended and spec.k < 2):
        out["witness"] = grs.recover_h(spec, e).to_dict(F)
    return out


def random_spec(F: GF, n: int, k: int, seed: int) -> grs.GrsSpec:
    if not 1 <= k <= n <= F.q:
        raise InputError(f"need 1 <= k <= n <= q for a random spec (n={n}, k={k}, q={F.q})")
    rng = np.random.default_rng(seed)
    a = rng.choice(F.q, size=n, replace=False)
    v = rng.integers(1, F.q, size=n)
    return grs.GrsSpec(F, tuple(int(x) for x in a), tuple(int(x) for x in v), k)


def cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.random:
        if not args.field:
            raise InputError("--random needs --field")
        try:
            n, k = (int(x) for x in args.random.split(","))
        except ValueError as exc:
            raise InputError("--random expects n,k") from exc
        spec = random_spec(parse_field(args.field), n, k, args.seed)
    else:
        if not args.spec:
            raise InputError("give a spec file or --random n,k")
        F = parse_field(args.field) if args.field else None
        spec = _spec_from_dict(_load_json(args.spec), F)
    if not 0 <= args.e < spec.field.h:
        raise InputError(f"e={args.e} outside 0..h-1")
    out = verify_spec(spec, args.e, args.threads)
    out["wall_time"] = round(time.perf_counter() - started, 6)
    _emit_json(out)
    return EXIT_OK


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _emit_rows(rows, columns, as_json: bool) -> None:
    rows = list(rows)
    if as_json:
        _emit_json(rows)
        return
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())


def cmd_bounds(args) -> int:
    if args.reproduce:
        return _reproduce(args.reproduce, args.json)
    if not args.field or args.n is None or not args.e_prime:
        raise InputError("bounds needs --field p,h, --n and --e-prime (or --reproduce)")
    try:
        p, h = (int(x) for x in args.field.split(",")[:2])
        eps = [int(x) for x in args.e_prime.split(",")]
    except ValueError as exc:
        raise InputError(f"bad integers: {exc}") from exc
    rows = []
    for ep in eps:
        row = {"p": p, "h": h, "n": args.n, "deg_h": args.deg_h, "e_prime": ep,
               "k_max": dimension_bound(p, ep, args.n, args.deg_h), "exceeds_hermitian": ""}
        if h % 2 == 0 and 0 <= ep < h // 2:
            row["exceeds_hermitian"] = bound_comparison(p, h, ep, args.deg_h, args.n)
        rows.append(row)
    _emit_rows(rows, tables.BOUND_COLUMNS + ("exceeds_hermitian",), args.json)
    return EXIT_OK


REPRODUCIBLE = ("example1", "example5", "example5-part2", "remark6", "table3", "table4", "table5")


def _reproduce(name: str, as_json: bool) -> int:
    if name in tables.EXAMPLES:
        _emit_rows(tables.example_rows(name), tables.BOUND_COLUMNS, as_json)
    elif name == "remark6":
        _emit_rows(tables.remark_thresholds(), ("p", "h", "n", "deg_h", "threshold", "hermitian_k_max"), as_json)
    elif name == "table3":
        rows = [{"h": h, "e": e, "e_prime": " ".join(map(str, eps))} for h, e, eps in tables.table3(12)]
        _emit_rows(rows, ("h", "e", "e_prime"), as_json)
    elif name == "table4":
        rows = [{"h": h, "e_prime": " ".join(map(str, eps))} for h, eps in tables.table4(14)]
        _emit_rows(rows, ("h", "e_prime"), as_json)
    elif name == "table5":
        rows = [dict(zip(("p", "t", "m", "h", "q"), r)) for r in tables.table5(7**32)]
        _emit_rows(rows, ("p", "t", "m", "h", "q"), as_json)
    else:
        raise InputError(f"unknown table {name!r}; choose from {', '.join(REPRODUCIBLE)}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    return _reproduce(args.name, args.json)


def cmd_enumerate(args) -> int:
    if args.cls not in range(1, 7):
        raise InputError(f"unknown class {args.cls}; expected 1..6")
    rows = tables.enumerate_class(args.cls, args.q_max, h_filter=args.h, n=args.n, deg_h=args.deg_h)
    _emit_rows(rows, tables.ENUM_COLUMNS, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="p,h[,modulus coefficients leading first]")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output")
    fmt.add_argument("--csv", action="store_true", help="CSV output (default for tables)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized inputs (default 0)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for MDS minors")

    ap = argparse.ArgumentParser(prog="galois-hulls", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a code from a JSON request and verify it")
    p.add_argument("request", help="request JSON file, or - for stdin")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="hull, self-orthogonality and MDS report for a GRS spec")
    p.add_argument("spec", nargs="?", help="GRS spec JSON file, or - for stdin")
    p.add_argument("--e", type=int, required=True, help="Galois parameter")
    p.add_argument("--random", metavar="N,K", help="random spec over --field instead of a file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="dimension bounds per e'")
    p.add_argument("--n", type=int)
    p.add_argument("--deg-h", type=int, default=0)
    p.add_argument("--e-prime", help="comma separated e' values")
    p.add_argument("--reproduce", choices=REPRODUCIBLE)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("enumerate", parents=[common], help="admissible parameters of a construction class")
    p.add_argument("--class", dest="cls", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--h", type=int, help="only this extension degree")
    p.add_argument("--n", type=int, help="seed length for classes 1-4")
    p.add_argument("--deg-h", type=int, default=0, help="seed witness degree for classes 1-4")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("reproduce", parents=[common], help="print a worked table")
    p.add_argument("name", choices=REPRODUCIBLE)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
