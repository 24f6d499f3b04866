"""Batch command-line front end.

Exit codes: 0 success, 1 domain error (the kernel's error name is echoed),
2 usage error.  The environment variable CLUSTERLAB_SEED fixes the master
random seed of sampling subcommands; every randomized output embeds the
seed it used.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Any

from . import jsonio
from .bruhat import DoubleWord, bruhat_lambda, build_bfz_seed, seed_from_bfz, verify_exchange_identity
from .cluster import laurent_certificate, mutate_seed
from .laurent import NotDivisible
from .poisson import is_compatible_pair, mutate_pair
from .quantum import mutate_quantum_seed, quantum_laurent_certificate
from .spectra import dixmier_map, enumerate_affine_strata, is_supertoric, validate_cos_chain
from .weyl import CartanData

USAGE_ERROR = 2
DOMAIN_ERROR = 1


class UsageError(Exception):
    pass


def _load(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {path}: {exc}")


def _dump(data: Any, path: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _master_seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("CLUSTERLAB_SEED")
    return int(env) if env else 0


def cmd_mutate(args: argparse.Namespace) -> int:
    data = _load(args.seed)
    if jsonio.is_quantum_seed_json(data):
        qs = jsonio.quantum_seed_from_json(data)
        if not 1 <= args.at <= qs.m:
            raise UsageError(f"--at {args.at} out of range [1,{qs.m}]")
        _dump(jsonio.quantum_seed_to_json(mutate_quantum_seed(qs, args.at - 1)), args.out)
        return 0
    s = jsonio.seed_from_json(data)
    if not 1 <= args.at <= s.m:
        raise UsageError(f"--at {args.at} out of range [1,{s.m}]")
    _dump(jsonio.seed_to_json(mutate_seed(s, args.at - 1)), args.out)
    return 0


def cmd_check_compatible(args: argparse.Namespace) -> int:
    data = _load(args.pair)
    lam = jsonio.int_matrix_from_json(data["lambda"])
    from .cluster import ExchangeMatrix

    b = ExchangeMatrix(jsonio.int_matrix_from_json(data["B"], cols=lam.rows))
    diag = is_compatible_pair(b, lam)
    if diag is None:
        print("not compatible")
        return DOMAIN_ERROR
    print(f"diag {list(diag)}")
    return 0


def cmd_mutate_pair(args: argparse.Namespace) -> int:
    p = jsonio.pair_from_json(_load(args.pair))
    if not 1 <= args.at <= p.b.m:
        raise UsageError(f"--at {args.at} out of range [1,{p.b.m}]")
    _dump(jsonio.pair_to_json(mutate_pair(p, args.at - 1, args.eps)), args.out)
    return 0


def cmd_laurent_check(args: argparse.Namespace) -> int:
    data = _load(args.seed)
    if jsonio.is_quantum_seed_json(data):
        qs = jsonio.quantum_seed_from_json(data)
        rep = quantum_laurent_certificate(qs)
        _dump(
            {
                "in_quantum_torus": rep.in_quantum_torus,
                "bar_symmetric": rep.bar_symmetric,
                "specialization_matches_classical": rep.specialization_matches_classical,
            },
            args.out,
        )
        return 0
    s = jsonio.seed_from_json(data)
    rep = laurent_certificate(s)
    _dump(
        {
            "is_laurent": rep.is_laurent,
            "all_coefficients_positive_integers": rep.all_coefficients_positive_integers,
            "offending": list(rep.offending),
        },
        args.out,
    )
    return 0


def cmd_strata(args: argparse.Namespace) -> int:
    lam = jsonio.int_matrix_from_json(_load(args.lam))
    strata = enumerate_affine_strata(lam)
    quantum = [dixmier_map(s, "classical_to_quantum") for s in strata]
    _dump(
        {
            "classical": jsonio.strata_to_json(strata),
            "quantum": jsonio.strata_to_json(quantum),
        },
        args.out,
    )
    return 0


def cmd_supertoric(args: argparse.Namespace) -> int:
    p = jsonio.pair_from_json(_load(args.pair))
    print("supertoric" if is_supertoric(p) else "not supertoric")
    return 0


def cmd_cos_validate(args: argparse.Namespace) -> int:
    chain = jsonio.cos_chain_from_json(_load(args.chain))
    if validate_cos_chain(chain):
        print("valid")
        return 0
    print("invalid")
    return DOMAIN_ERROR


def cmd_dixmier(args: argparse.Namespace) -> int:
    lam = jsonio.int_matrix_from_json(_load(args.lam))
    strata = enumerate_affine_strata(lam)
    images = [dixmier_map(s, "classical_to_quantum") for s in strata]
    back = [dixmier_map(s, "quantum_to_classical") for s in images]
    round_trip = all(a == b for a, b in zip(strata, back))
    _dump(
        {
            "strata": jsonio.strata_to_json(images),
            "round_trip_identity": round_trip,
        },
        args.out,
    )
    return 0


def _build_bruhat(word: str, rank: int):
    dw = DoubleWord.parse(word, rank)
    cd = CartanData("A", rank)
    data = build_bfz_seed(dw, cd)
    seed = seed_from_bfz(data)
    spec = bruhat_lambda(dw, cd)
    lam_int, scale = spec.integer_scaled()
    out = jsonio.seed_to_json(seed)
    out["lambda"] = jsonio.int_matrix_to_json(lam_int)
    out["lambda_scale"] = scale
    out["exchangeable_vertices"] = list(data.exchangeable)
    out["vertex_order"] = list(data.perm)
    return dw, data, out


def cmd_bruhat_build(args: argparse.Namespace) -> int:
    _, _, out = _build_bruhat(args.word, args.rank)
    _dump(out, args.out)
    return 0


def cmd_bruhat_verify(args: argparse.Namespace) -> int:
    dw = DoubleWord.parse(args.word, args.rank)
    cd = CartanData("A", args.rank)
    data = build_bfz_seed(dw, cd)
    seed_value = _master_seed(args)
    targets = [args.at] if args.at is not None else list(range(1, len(data.exchangeable) + 1))
    results = {}
    for pos in targets:
        if not 1 <= pos <= len(data.exchangeable):
            raise UsageError(f"--at {pos} out of range [1,{len(data.exchangeable)}]")
        vertex = data.exchangeable[pos - 1]
        rng = random.Random(seed_value * 1000003 + vertex + 7)
        results[str(pos)] = verify_exchange_identity(dw, vertex, args.samples, rng)
    _dump({"seed": seed_value, "samples": args.samples, "results": results}, args.out)
    return 0 if all(results.values()) else DOMAIN_ERROR


def cmd_serve(args: argparse.Namespace) -> int:
    from .server import serve

    serve(args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterlab",
        description="Exact cluster-algebra kernel: mutation, compatible pairs, "
        "quantum seeds, spectra and double Bruhat seeds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate a (quantum) seed at an index")
    p.add_argument("--seed", required=True, help="seed JSON file")
    p.add_argument("--at", type=int, required=True, help="1-based mutable index")
    p.add_argument("--out", help="output file (stdout if omitted)")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("check-compatible", help="test B·Λ = (D|0) and print D")
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_check_compatible)

    p = sub.add_parser("mutate-pair", help="mutate a compatible pair")
    p.add_argument("--pair", required=True)
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--eps", type=int, choices=(1, -1), default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mutate_pair)

    p = sub.add_parser("quantum-mutate", help="alias of mutate for quantum seed files")
    p.add_argument("--seed", required=True)
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("laurent-check", help="Laurent certificate of a seed file")
    p.add_argument("--seed", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_laurent_check)

    p = sub.add_parser("strata", help="enumerate affine strata of a skew Λ")
    p.add_argument("--lambda", dest="lam", required=True, help="Λ JSON file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("supertoric", help="supertoric test for a compatible pair")
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_supertoric)

    p = sub.add_parser("cos-validate", help="validate a COS chain file")
    p.add_argument("--chain", required=True)
    p.set_defaults(func=cmd_cos_validate)

    p = sub.add_parser("dixmier", help="descriptor-level Dixmier map of a plane")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dixmier)

    p = sub.add_parser("bruhat-build", help="BFZ seed of a double word")
    p.add_argument("--word", required=True, help='e.g. "1,2,1,-1,-2,-1"')
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bruhat_build)

    p = sub.add_parser("bruhat-verify", help="exchange identities on SL points")
    p.add_argument("--word", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--at", type=int, help="1-based exchangeable position (all if omitted)")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, help="override CLUSTERLAB_SEED")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bruhat_verify)

    p = sub.add_parser("serve", help="JSON-over-HTTP session server")
    p.add_argument("--port", type=int, default=8787)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (NotDivisible, ValueError, KeyError, IndexError, ArithmeticError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
