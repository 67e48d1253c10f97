"""Python access to the lgkit C++ core."""

import json as _json

from ._lgkit import (  # noqa: F401
    DimensionError,
    DomainError,
    InconclusiveError,
    ParseError,
    ResourceLimitError,
    __version__,
    critical_points,
    elementary_disk_dims,
    elementary_hom_dims,
    h2_rank,
    jacobi_quotient,
    koszul_cohomology,
    os_ranks,
    poincare_polynomial,
    quiver_factorization_ok,
    theta,
    verify_factorization,
)
from ._lgkit import run_problem as _run_problem


def run(problem):
    """Run a problem given as a dict (or JSON text) and return the result record as a dict."""
    text = problem if isinstance(problem, str) else _json.dumps(problem)
    return _json.loads(_run_problem(text))
