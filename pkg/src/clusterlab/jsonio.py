"""Canonical JSON encodings for every value that crosses the CLI/HTTP line.

All external indices (mutation directions, history entries, tip/surviving
sets) are 1-based; term lists are emitted in sorted exponent order so that
serialization is deterministic and replay comparisons can be byte-exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .cluster import ExchangeMatrix, Seed
from .laurent import LaurentPoly
from .linalg import IntMatrix, Lattice
from .poisson import BracketSpec, CompatiblePair
from .qtorus import QScalar, QTorusElement
from .quantum import QuantumSeed
from .spectra import CosChain, StratumDescriptor, TipDescriptor


def int_matrix_to_json(m: IntMatrix) -> list[list[int]]:
    return m.to_lists()


def int_matrix_from_json(data: Any, cols: int | None = None) -> IntMatrix:
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise ValueError("matrix must be a list of rows")
    if not data and cols is not None:
        return IntMatrix.empty(cols)
    return IntMatrix.from_rows(data)


def laurent_to_json(p: LaurentPoly) -> list[dict[str, Any]]:
    return [
        {"exp": list(e), "num": c.numerator, "den": c.denominator}
        for e, c in sorted(p.terms.items())
    ]


def laurent_from_json(data: Any, variables: Sequence[str]) -> LaurentPoly:
    terms = {}
    for item in data:
        terms[tuple(item["exp"])] = Fraction(int(item["num"]), int(item["den"]))
    return LaurentPoly(variables, terms)


def qscalar_to_json(s: QScalar) -> list[list[int]]:
    return [[k, v] for k, v in sorted(s.terms.items())]


def qscalar_from_json(data: Any) -> QScalar:
    return QScalar({int(k): int(v) for k, v in data})


def qtorus_to_json(x: QTorusElement) -> dict[str, Any]:
    return {
        "lambda": int_matrix_to_json(x.lam),
        "terms": [
            {"exp": list(e), "coef": qscalar_to_json(c)}
            for e, c in sorted(x.terms.items())
        ],
    }


def qtorus_from_json(data: Any) -> QTorusElement:
    lam = int_matrix_from_json(data["lambda"])
    terms = {
        tuple(item["exp"]): qscalar_from_json(item["coef"])
        for item in data["terms"]
    }
    return QTorusElement(lam, terms)


def seed_to_json(s: Seed) -> dict[str, Any]:
    return {
        "m": s.m,
        "n": s.n,
        "B": int_matrix_to_json(s.matrix.b),
        "labels": list(s.labels),
        "variables": [laurent_to_json(v) for v in s.variables],
        "history": [k + 1 for k in s.history],
    }


def seed_from_json(data: Any) -> Seed:
    n = int(data["n"])
    matrix = ExchangeMatrix(int_matrix_from_json(data["B"], cols=n))
    if matrix.m != int(data["m"]) or matrix.n != n:
        raise ValueError("B shape disagrees with m, n")
    labels = tuple(str(x) for x in data["labels"])
    variables = tuple(laurent_from_json(v, labels) for v in data["variables"])
    history = tuple(int(k) - 1 for k in data.get("history", []))
    return Seed(matrix, labels, variables, history)


def quantum_seed_to_json(qs: QuantumSeed) -> dict[str, Any]:
    labels = [f"x{i+1}" for i in range(qs.n)]
    return {
        "m": qs.m,
        "n": qs.n,
        "B": int_matrix_to_json(qs.matrix.b),
        "labels": labels,
        "variables": [
            laurent_to_json(v.specialize(labels)) for v in qs.variables
        ],
        "history": [k + 1 for k in qs.history],
        "lambda": int_matrix_to_json(qs.lam),
        "lambda0": int_matrix_to_json(qs.lam0),
        "diag": list(qs.diag),
        "qvariables": [qtorus_to_json(v) for v in qs.variables],
    }


def quantum_seed_from_json(data: Any) -> QuantumSeed:
    n = int(data["n"])
    matrix = ExchangeMatrix(int_matrix_from_json(data["B"], cols=n))
    lam = int_matrix_from_json(data["lambda"])
    lam0 = int_matrix_from_json(data.get("lambda0", data["lambda"]))
    variables = tuple(qtorus_from_json(v) for v in data["qvariables"])
    history = tuple(int(k) - 1 for k in data.get("history", []))
    diag = tuple(int(d) for d in data["diag"])
    return QuantumSeed(matrix, lam, lam0, variables, diag, history)


def is_quantum_seed_json(data: Any) -> bool:
    return isinstance(data, dict) and "qvariables" in data


def pair_to_json(p: CompatiblePair) -> dict[str, Any]:
    return {
        "B": int_matrix_to_json(p.b.b),
        "lambda": int_matrix_to_json(p.lam),
        "diag": list(p.diag),
    }


def pair_from_json(data: Any) -> CompatiblePair:
    lam = int_matrix_from_json(data["lambda"])
    b = ExchangeMatrix(int_matrix_from_json(data["B"], cols=lam.rows))
    if "diag" in data:
        return CompatiblePair(b, lam, tuple(int(d) for d in data["diag"]))
    return CompatiblePair.build(b, lam)


def bracket_spec_to_json(spec: BracketSpec) -> list[list[list[int]]]:
    return [[[x.numerator, x.denominator] for x in row] for row in spec.lam]


def bracket_spec_from_json(data: Any) -> BracketSpec:
    return BracketSpec.from_rows(
        [[Fraction(int(num), int(den)) for num, den in row] for row in data]
    )


def lattice_to_json(lat: Lattice) -> dict[str, Any]:
    return {"ambient_dim": lat.ambient_dim, "basis": [list(b) for b in lat.basis]}


def stratum_to_json(s: StratumDescriptor) -> dict[str, Any]:
    return {
        "tip": sorted(i + 1 for i in s.tip.contained_vars),
        "surviving": [i + 1 for i in s.surviving],
        "center_basis": [list(b) for b in s.center_lattice.basis],
        "rank": s.rank,
    }


def strata_to_json(strata: Sequence[StratumDescriptor]) -> list[dict[str, Any]]:
    return [stratum_to_json(s) for s in strata]


def cos_chain_to_json(c: CosChain) -> dict[str, Any]:
    return {
        "n": c.n,
        "perm": [v + 1 for v in c.perm],
        "depth": c.depth,
        "chain": [sorted(i + 1 for i in tip.contained_vars) for tip in c.chain],
    }


def cos_chain_from_json(data: Any) -> CosChain:
    n = int(data["n"])
    perm = tuple(int(v) - 1 for v in data["perm"])
    chain = tuple(
        TipDescriptor.of(n, [int(i) - 1 for i in tip]) for tip in data["chain"]
    )
    depth = int(data.get("depth", 0))
    return CosChain(n, perm, chain, depth)
