"""Exact algebra of clopen tuples over mix involutive residuated lattices.

Finite chains, the Boolean and Sugihara algebras and rational step functions
on the unit interval are built in.  Over any of them the package computes
closures, interiors and the lattice of clopen tuples, and for step functions
the correspondence with staircase paths and irreducible decompositions.
"""
from .algebra import (
    Algebra, LawReport, algebra_from_table, bool2, chain_algebra, check_involutive_rl_axioms,
    check_lbs_axioms, get_algebra, residual_left, step_algebra, sugihara3,
)
from .chain import ChainFn
from .errors import InvariantError, MorphismError, NotClopenError, SizeError, StructureError
from .ld import (
    ClopenTuple, LdTuple, closure, enumerate_clopens, interior, is_clopen, is_closed, is_open,
    ld_join, ld_meet, make_tuple, skew_metric, tuple_star,
)
from .step import StepFn, canonicalize, one_step

__version__ = "0.1.0"

__all__ = [
    "Algebra", "LawReport", "algebra_from_table", "bool2", "chain_algebra",
    "check_involutive_rl_axioms", "check_lbs_axioms", "get_algebra", "residual_left",
    "step_algebra", "sugihara3", "ChainFn", "InvariantError", "MorphismError",
    "NotClopenError", "SizeError", "StructureError", "ClopenTuple", "LdTuple", "closure",
    "enumerate_clopens", "interior", "is_clopen", "is_closed", "is_open", "ld_join",
    "ld_meet", "make_tuple", "skew_metric", "tuple_star", "StepFn", "canonicalize",
    "one_step", "__version__",
]
