"""Write-then-read of every JSON artifact is the identity."""

import random
from fractions import Fraction

from clusterlab import jsonio
from clusterlab.cluster import mutate_along
from clusterlab.laurent import LaurentPoly
from clusterlab.linalg import IntMatrix
from clusterlab.qtorus import QScalar, QTorusElement
from clusterlab.quantum import QuantumSeed, mutate_quantum_along
from clusterlab.spectra import CosChain, TipDescriptor

from helpers import a2_lambda, a2_matrix, a2_seed, random_compatible_pair, random_laurent


def test_int_matrix_round_trip():
    m = IntMatrix.from_rows([[1, -2, 3], [0, 5, -7]])
    assert jsonio.int_matrix_from_json(jsonio.int_matrix_to_json(m)) == m
    empty = IntMatrix.empty(4)
    assert jsonio.int_matrix_from_json(jsonio.int_matrix_to_json(empty), cols=4) == empty


def test_laurent_round_trip():
    rng = random.Random(1)
    names = ("x1", "x2", "x3")
    for _ in range(20):
        p = random_laurent(rng, names, terms=4, span=3)
        blob = jsonio.laurent_to_json(p)
        assert jsonio.laurent_from_json(blob, names) == p
    q = LaurentPoly(names, {(0, -1, 2): Fraction(3, 7)})
    assert jsonio.laurent_from_json(jsonio.laurent_to_json(q), names) == q


def test_qscalar_and_qtorus_round_trip():
    s = QScalar({3: 2, -1: -5})
    assert jsonio.qscalar_from_json(jsonio.qscalar_to_json(s)) == s
    lam = a2_lambda()
    x = QTorusElement(lam, {(1, -2): QScalar({1: 1, -1: 1}), (0, 0): QScalar({0: 2})})
    assert jsonio.qtorus_from_json(jsonio.qtorus_to_json(x)) == x


def test_seed_round_trip_with_history():
    s = mutate_along(a2_seed(), [0, 1, 0])
    blob = jsonio.seed_to_json(s)
    back = jsonio.seed_from_json(blob)
    assert back == s and back.history == s.history
    assert jsonio.seed_to_json(back) == blob


def test_quantum_seed_round_trip():
    qs = mutate_quantum_along(QuantumSeed.initial(a2_matrix(), a2_lambda()), [0, 1])
    blob = jsonio.quantum_seed_to_json(qs)
    back = jsonio.quantum_seed_from_json(blob)
    assert back == qs and back.history == qs.history
    assert jsonio.quantum_seed_to_json(back) == blob


def test_pair_round_trip():
    rng = random.Random(9)
    for _ in range(10):
        p = random_compatible_pair(rng)
        blob = jsonio.pair_to_json(p)
        assert jsonio.pair_from_json(blob) == p


def test_cos_chain_round_trip():
    chain = CosChain(
        3,
        (2, 0, 1),
        (TipDescriptor.of(3, [1]), TipDescriptor.of(3, [0, 1])),
    )
    blob = jsonio.cos_chain_to_json(chain)
    assert jsonio.cos_chain_from_json(blob) == chain


def test_strata_round_trip_is_stable():
    from clusterlab.spectra import enumerate_affine_strata

    strata = enumerate_affine_strata(a2_lambda())
    blob = jsonio.strata_to_json(strata)
    assert blob == jsonio.strata_to_json(strata)
    assert blob[0].keys() == {"tip", "surviving", "center_basis", "rank"}
