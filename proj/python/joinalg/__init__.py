"""Exact computations with finite-dimensional Hopf algebras, comodule
algebras, strong connections, fusion algebras and discrete joins.

Matrices come back as lists of rows of fractions.Fraction. The run_*
functions take and return plain dicts in the certificate format used by
the joinalg command-line tool.
"""

import json as _json

from ._joinalg import (  # noqa: F401
    ConstructionError,
    GSet,
    Group,
    MalformedInput,
    PreconditionFailed,
    __version__,
    canonical_map_bijective,
    check_function_hopf,
    check_group_hopf,
    coinvariant_dimension,
    diagonal_join_freeness,
    discrete_join_points,
    enumerate_actions,
    equivariant_fusion_dimensions,
    fun_of_join_vs_fusion,
    gauged_join_iso,
    pullback_identification,
    solve_strong_connection,
    verify_theorem_main,
)
from . import _joinalg as _core


def _call(fn, document, *args):
    return _json.loads(fn(_json.dumps(document), *args))


def load_document(path):
    """Parse a JSON input file, inlining {"file": ...} references."""
    return _json.loads(_core._load_document(str(path)))


def run_check(document):
    return _call(_core._run_check, document)


def run_solve_connection(document, unital=False):
    return _call(_core._run_solve_connection, document, unital)


def run_fusion(scenario):
    return _call(_core._run_fusion, scenario)


def run_classical(scenario):
    return _call(_core._run_classical, scenario)


def replay_certificate(certificate):
    return _call(_core._replay_certificate, certificate)
