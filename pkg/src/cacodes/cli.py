"""Command-line interface: construction, analysis, counting, search, simulation.

Subcommands
-----------
kernel      --q 2 --poly 1,1,1 --n 4          kernel basis of one linear CA
build-code  --q 2 --k 3 [--gcd 1,1]           uniform-GCD family and its code
analyze     --code code.json                  parameters and GCD profile
count       --q 2 --k 3 [--t 1] [--csv]       irreducible counts, N_k, family sizes
search-max  --q 2 --k 4 --t 0 [--budget 512]  exact maximum family (oracle)
simulate    --code code.json --erasures 1 --errors 0 --trials 1000 --seed 7
            [--out stats.json] [--csv]        operator-channel statistics

Every successful run prints one JSON document with an embedded ``manifest``
(subcommand, all flags, field spec, version, seed where applicable), making
the run replayable.  Output is byte-stable: keys are sorted and nothing
derives from the clock.  Exit codes: 0 success, 1 domain error (JSON error
object on stdout), 2 usage error (argparse).

Polynomials are given in ascending-coefficient text form ("1,1,1" is
1 + X + X^2); the human-readable rendering appears in *_display fields and
is never parsed back.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import GF, Polynomial
from .channel import ChannelConfig, simulate
from .errors import DomainError
from .families import (
    CAFamily,
    code_from_family,
    count_irreducibles,
    expected_uniform_gcd_size,
    max_coprime_family_size,
    predicted_min_distance,
    search_max_family,
    uniform_gcd_family,
)
from .ca import LinearCA
from .subspaces import GrassmannianCode


def _manifest(args: argparse.Namespace) -> dict:
    flags = {k: v for k, v in vars(args).items() if k != "command"}
    manifest = {
        "subcommand": args.command,
        "version": __version__,
        "args": flags,
    }
    if "q" in flags:
        manifest["field"] = flags["q"]
    if "seed" in flags:
        manifest["seed"] = flags["seed"]
    return manifest


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_code_file(path: str) -> tuple[GrassmannianCode, dict]:
    """Read a code file: bare {"q","n","codewords"} or a build-code document."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    bare = data.get("code", data)
    if "codewords" not in bare:
        raise DomainError(f"{path} does not contain a code object")
    return GrassmannianCode.from_json(bare), data


# -- subcommand handlers ------------------------------------------------------------


def _cmd_kernel(args) -> dict:
    field = GF.from_spec(args.q)
    poly = Polynomial.from_string(field, args.poly)
    ca = LinearCA(poly, args.n)
    kernel = ca.kernel()
    return {
        "manifest": _manifest(args),
        "q": field.spec,
        "n": args.n,
        "k": ca.k,
        "rule": poly.to_string(),
        "rule_display": poly.display(),
        "dim": kernel.dim,
        "basis": kernel.to_json(),
    }


def _cmd_build_code(args) -> dict:
    field = GF.from_spec(args.q)
    g = Polynomial.from_string(field, args.gcd)
    members = uniform_gcd_family(args.k, g)
    fam = CAFamily(members)
    code = code_from_family(fam)
    t = int(g.degree)
    payload = {
        "manifest": _manifest(args),
        "q": field.spec,
        "k": args.k,
        "t": t,
        "g": g.to_string(),
        "g_display": g.display(),
        "family": [f.to_string() for f in members],
        "family_display": [f.display() for f in members],
        "size": len(members),
        "expected_size": expected_uniform_gcd_size(args.k, t, field),
        "n": 2 * args.k,
        "code": code.to_json(),
    }
    if len(members) >= 2:
        d, _profile = predicted_min_distance(fam)
        payload["predicted_min_distance"] = d
    else:
        payload["predicted_min_distance"] = None
    return payload


def _cmd_analyze(args) -> dict:
    code, document = _load_code_file(args.code)
    params = code.params()
    inter = code.pairwise_intersection_dims()
    max_deg, witness = 0, None
    for i, row in enumerate(inter):
        for j, d in enumerate(row):
            if witness is None or d > max_deg:
                max_deg, witness = d, (j, i)
    payload = {
        "manifest": _manifest(args),
        "q": code.field.spec,
        "params": {
            "n": params.n,
            "max_dim": params.max_dim,
            "log_q_size": params.log_q_size,
            "min_distance": params.min_distance,
            "size": params.size,
            "constant_dim": code.constant_dim,
        },
        "gcd_profile": {
            "max_gcd_degree": max_deg if witness is not None else None,
            "witness_pair": list(witness) if witness is not None else None,
            "table": [list(r) for r in inter],
        },
    }
    if "family" in document and "q" in document and "k" in document:
        field = GF.from_spec(document["q"])
        members = [Polynomial.from_string(field, s) for s in document["family"]]
        fam = CAFamily(members)
        check = {"family": document["family"]}
        if len(members) >= 2:
            d, profile = predicted_min_distance(fam)
            check["predicted_min_distance"] = d
            check["consistent"] = (
                d == params.min_distance
                and profile.table == inter
            )
        payload["family_check"] = check
    return payload


def _cmd_count(args) -> dict:
    field = GF.from_spec(args.q)
    k = args.k
    terms = {}
    for j in range(1, k + 1):
        terms[str(j)] = {
            "gauss": count_irreducibles(j, field),
            "x_excluded": count_irreducibles(j, field, exclude_x=True),
        }
    n_k = max_coprime_family_size(k, field)
    literal = count_irreducibles(k, field) + sum(
        count_irreducibles(j, field) for j in range(1, k // 2 + 1)
    )
    payload = {
        "manifest": _manifest(args),
        "q": field.spec,
        "k": k,
        "terms": terms,
        "N_k": n_k,
        "N_k_with_x": literal,
    }
    if args.t is not None:
        payload["t"] = args.t
        payload["uniform_gcd_size"] = expected_uniform_gcd_size(k, args.t, field)
        r = k - args.t
        payload["uniform_gcd_size_with_x"] = (
            1
            if r == 0
            else count_irreducibles(r, field)
            + sum(count_irreducibles(i, field) for i in range(1, r // 2 + 1))
        )
    return payload


def _cmd_search_max(args) -> dict:
    field = GF.from_spec(args.q)
    members = search_max_family(args.k, args.t, field, budget=args.budget)
    payload = {
        "manifest": _manifest(args),
        "q": field.spec,
        "k": args.k,
        "t": args.t,
        "budget": args.budget,
        "size": len(members),
        "family": [f.to_string() for f in members],
        "family_display": [f.display() for f in members],
    }
    if len(members) >= 2:
        fam = CAFamily(members)
        d, profile = predicted_min_distance(fam)
        payload["max_gcd_degree"] = profile.max_gcd_degree
        payload["min_distance"] = d
    return payload


def _cmd_simulate(args) -> dict:
    code, _document = _load_code_file(args.code)
    cfg = ChannelConfig(erasures=args.erasures, error_dims=args.errors, seed=args.seed)
    stats = simulate(code, cfg, args.trials)
    payload = {"manifest": _manifest(args), **stats}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True))
            fh.write("\n")
    return payload


_HANDLERS = {
    "kernel": _cmd_kernel,
    "build-code": _cmd_build_code,
    "analyze": _cmd_analyze,
    "count": _cmd_count,
    "search-max": _cmd_search_max,
    "simulate": _cmd_simulate,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cacodes",
        description="Subspace codes from kernels of linear cellular automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", help="kernel basis of one linear CA")
    p.add_argument("--q", required=True, help="field spec, e.g. 2 or 2^2")
    p.add_argument("--poly", required=True, help="rule polynomial, ascending coefficients")
    p.add_argument("--n", required=True, type=int, help="lattice length")

    p = sub.add_parser("build-code", help="uniform-GCD family and its code")
    p.add_argument("--q", required=True, help="field spec")
    p.add_argument("--k", required=True, type=int, help="rule degree")
    p.add_argument("--gcd", default="1", help="common gcd polynomial (default 1)")

    p = sub.add_parser("analyze", help="parameters and GCD profile of a code file")
    p.add_argument("--code", required=True, help="path to a code JSON file")

    p = sub.add_parser("count", help="irreducible counts and family-size formulas")
    p.add_argument("--q", required=True, help="field spec")
    p.add_argument("--k", required=True, type=int, help="rule degree")
    p.add_argument("--t", type=int, default=None, help="gcd degree for |S|")
    p.add_argument("--csv", action="store_true", help="emit the counts table as CSV")

    p = sub.add_parser("search-max", help="exact maximum family (oracle search)")
    p.add_argument("--q", required=True, help="field spec")
    p.add_argument("--k", required=True, type=int, help="rule degree")
    p.add_argument("--t", required=True, type=int, help="max allowed gcd degree")
    p.add_argument("--budget", type=int, default=512, help="candidate-set size cap")

    p = sub.add_parser("simulate", help="operator-channel decoding statistics")
    p.add_argument("--code", required=True, help="path to a code JSON file")
    p.add_argument("--erasures", type=int, default=0, help="dimensions erased")
    p.add_argument("--errors", type=int, default=0, help="error dimensions injected")
    p.add_argument("--trials", type=int, default=1000, help="number of trials")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--out", default=None, help="also write stats JSON to this path")
    p.add_argument("--csv", action="store_true", help="emit the histogram as CSV")

    return parser


def _csv_lines(args, payload: dict) -> list[str]:
    if args.command == "count":
        lines = ["degree,irreducibles,irreducibles_excluding_x"]
        for degree in sorted(payload["terms"], key=int):
            t = payload["terms"][degree]
            lines.append(f"{degree},{t['gauss']},{t['x_excluded']}")
        return lines
    lines = ["distance,count"]
    for d in sorted(payload["distance_histogram"], key=int):
        lines.append(f"{d},{payload['distance_histogram'][d]}")
    return lines


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload = _HANDLERS[args.command](args)
    except DomainError as exc:
        _emit({"error": {"name": exc.name, "message": str(exc)}})
        return 1
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        _emit({"error": {"name": type(exc).__name__, "message": str(exc)}})
        return 1
    if getattr(args, "csv", False):
        print("\n".join(_csv_lines(args, payload)))
    else:
        _emit(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
