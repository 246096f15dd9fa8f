"""sympdiff: exact decision procedures and witness constructions for
writing a symplectic pair's endomorphism as a difference of two
quadratically-constrained, form-compatible endomorphisms.

Public surface:

* fields / parsing  -- ``field_make``, ``parse_poly``, ``parse_scalar``
* polynomials       -- ``Poly`` plus the pair invariants (``fundamental_poly``,
                       ``lambda_poly``, ``sigma_poly``, ``decompose_base_sigma``)
* exact linear algebra -- ``Mat``, ``companion``, ``direct_sum``,
                       ``invariant_factors``
* symplectic pairs  -- ``SymplecticPair``, ``Witness``, ``symplectic_extension``,
                       ``validate_pair``, ``isometry_test``
* decision          -- ``pair_context``, ``classify_case``, ``decide_extension``,
                       ``decide_pair``, ``Family``
* witnesses         -- ``duplication_witness``, ``compose_witness``,
                       ``brute_force_witness``, ``verify_witness``
* catalogue         -- ``indecomposable_reps``, ``norm_quadratic``, ``TableRow``
* certification     -- ``oracle_sweep``, ``admissible_chains``
* JSON              -- the ``serialize`` module
* acceptance suite  -- ``acceptance.run_all``
"""

from .errors import SympdiffError
from .fields import FieldCtx, field_make, field_spec
from .exprparse import parse_poly, parse_scalar
from .poly import (
    Poly,
    decompose_base_sigma,
    delta_of,
    fundamental_poly,
    lambda_poly,
    sigma_poly,
    trace_of,
)
from .linalg import Mat, companion, direct_sum, invariant_factors
from .sympform import (
    SymplecticPair,
    Witness,
    isometry_test,
    standard_gram,
    symplectic_extension,
    validate_pair,
)
from .decide import (
    CaseTag,
    DecisionReport,
    Family,
    PairCtx,
    classify_case,
    decide_extension,
    decide_pair,
    pair_context,
)
from .witness import (
    VerificationReport,
    brute_force_witness,
    compose_witness,
    duplication_witness,
    verify_witness,
)
from .atlas import TableRow, indecomposable_reps, norm_quadratic
from .oracle import admissible_chains, oracle_sweep

__version__ = "0.1.0"

__all__ = [
    "SympdiffError",
    "FieldCtx", "field_make", "field_spec",
    "parse_poly", "parse_scalar",
    "Poly", "decompose_base_sigma", "delta_of", "fundamental_poly",
    "lambda_poly", "sigma_poly", "trace_of",
    "Mat", "companion", "direct_sum", "invariant_factors",
    "SymplecticPair", "Witness", "isometry_test", "standard_gram",
    "symplectic_extension", "validate_pair",
    "CaseTag", "DecisionReport", "Family", "PairCtx", "classify_case",
    "decide_extension", "decide_pair", "pair_context",
    "VerificationReport", "brute_force_witness", "compose_witness",
    "duplication_witness", "verify_witness",
    "TableRow", "indecomposable_reps", "norm_quadratic",
    "admissible_chains", "oracle_sweep",
    "__version__",
]
