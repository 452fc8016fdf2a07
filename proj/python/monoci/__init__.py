"""Invariants of monomial ideals.

>>> a = Ideal.parse("ring x, y, z; (x, y) & (y, z) & (x, z)")
>>> str(a)
'(x*y, x*z, y*z)'
>>> report(a)["invariants"]["cd"]
2
"""

import json

from ._monoci import (
    ContextMismatch,
    DomainError,
    Error,
    Ideal,
    InternalError,
    ParseError,
    ResourceError,
    Ring,
    analytic_spread,
    ara_bounds,
    betti_numbers,
    canonical,
    cohomological_dimension,
    depth,
    dg,
    dim_quotient,
    formal_grade,
    height,
    irreducible_decomposition,
    local_cohomology_nonvanishing,
    min_depth_powers,
    minimal_primes,
    proj_dim,
    run_cli,
)
from . import _monoci

__all__ = [
    "ContextMismatch",
    "DomainError",
    "Error",
    "Ideal",
    "InternalError",
    "ParseError",
    "ResourceError",
    "Ring",
    "analytic_spread",
    "ara_bounds",
    "betti_numbers",
    "canonical",
    "cohomological_dimension",
    "depth",
    "dg",
    "dim_quotient",
    "formal_grade",
    "fuzz",
    "height",
    "irreducible_decomposition",
    "local_cohomology_nonvanishing",
    "min_depth_powers",
    "minimal_primes",
    "proj_dim",
    "report",
    "run_cli",
    "verify_paper",
]


def report(ideal, horizon=3, partial=False, jobs=1):
    """All invariants of an ideal, as the JSON report object."""
    return json.loads(_monoci.report_json(ideal, horizon, partial, jobs))


def verify_paper(horizon=3, jobs=1):
    """Run the worked examples and formula checkers; returns results and summary."""
    return json.loads(_monoci.verify_paper_json(horizon, jobs))


def fuzz(seed=1, count=100, n=4, squarefree=True, max_exponent=3, max_generators=5, horizon=3, jobs=1):
    return json.loads(
        _monoci.fuzz_json(seed, count, n, squarefree, max_exponent, max_generators, horizon, jobs)
    )
