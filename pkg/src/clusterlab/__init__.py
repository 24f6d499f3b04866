"""clusterlab: exact cluster-algebra machinery.

Classical and quantum seed mutation, compatible Poisson pairs,
torus-invariant spectra, and the BFZ seed construction on double Bruhat
cells for SL_n, all in exact arithmetic.
"""

from .cluster import (
    ExchangeMatrix,
    Seed,
    exchange_polynomial,
    laurent_certificate,
    lower_bound_generators,
    mutate_along,
    mutate_matrix,
    mutate_seed,
    upper_bound_membership,
)
from .laurent import LaurentPoly, NotDivisible, exact_divide
from .linalg import IntMatrix, Lattice, integer_kernel, lattice_span_rank
from .poisson import (
    BracketSpec,
    CompatiblePair,
    adjacent_log_canonical,
    bracket,
    check_weight_matrix,
    full_rank_check,
    global_toric_lattice,
    is_compatible_pair,
    mutate_pair,
    projected_torus,
)
from .qtorus import QScalar, QTorusElement, exact_divide_q, q_binomial, q_multiply
from .quantum import (
    QuantumSeed,
    ToricFrame,
    frame_monomial,
    frame_mutation_value,
    mutate_quantum_along,
    mutate_quantum_seed,
    quantum_exchange_variable,
    quantum_laurent_certificate,
)
from .spectra import (
    CosChain,
    StratumDescriptor,
    TipDescriptor,
    dixmier_map,
    enumerate_affine_strata,
    invariant_monomial_lattice,
    is_supertoric,
    poisson_radical,
    reduce_mod_tip,
    symplectic_core_rank,
    validate_cos_chain,
)
from .weyl import CartanData, WeylElement, bruhat_leq, word_to_element

__all__ = [name for name in dir() if not name.startswith("_")]
