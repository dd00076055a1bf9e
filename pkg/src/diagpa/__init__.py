"""Exact planar-algebra computations for a group, a generating family and a 3-cocycle."""
from __future__ import annotations

__version__ = "0.1.0"

from .scalars import (ConductorOverflow, CycScalar, Phase, cyc_add, cyc_conj, cyc_is_zero,
                      cyc_mul, phase_conj, phase_mul)
from .groups import (FiniteGroup, FreeGroup, GenSet, alt, ball, check_group, cyclic_group,
                     dihedral_group, symmetric_group)
from .cocycles import (Cochain, Cocycle3, NotACocycle, check_cocycle, coboundary,
                       cocycle_conj, cocycle_product, cyclic_cocycle, is_normalized, normalize,
                       pullback, trivial_cocycle)
from .pacore import (PAVector, basis_enumerate, lambda_coeff, lambda_term, star, unit,
                     vec_add, vec_equal, vec_scale)
from .tangles import (TL, Cap, CapInc, Compose, DiscInc, JonesE, LCondExp, LeftInc, Mult,
                      RCondExp, Rot, adjoint, color_of, expand_derived, parse_tangle, to_sexp,
                      validate)
from .evaluator import (EvalContext, differential_check, evaluate, star_compat_check,
                        trace_left, trace_right)
from .structure import PrincipalGraph, dim_pn, export_dot, loop_count, principal_graph
from .contexts import bundled_context, load_context

eval_tangle = evaluate


__all__ = [
    "ConductorOverflow",
    "CycScalar",
    "Phase",
    "cyc_add",
    "cyc_conj",
    "cyc_is_zero",
    "cyc_mul",
    "phase_conj",
    "phase_mul",
    "FiniteGroup",
    "FreeGroup",
    "GenSet",
    "alt",
    "ball",
    "check_group",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "Cochain",
    "Cocycle3",
    "NotACocycle",
    "check_cocycle",
    "coboundary",
    "cocycle_conj",
    "cocycle_product",
    "cyclic_cocycle",
    "is_normalized",
    "normalize",
    "pullback",
    "trivial_cocycle",
    "PAVector",
    "basis_enumerate",
    "lambda_coeff",
    "lambda_term",
    "star",
    "unit",
    "vec_add",
    "vec_equal",
    "vec_scale",
    "TL",
    "Cap",
    "CapInc",
    "Compose",
    "DiscInc",
    "JonesE",
    "LCondExp",
    "LeftInc",
    "Mult",
    "RCondExp",
    "Rot",
    "adjoint",
    "color_of",
    "expand_derived",
    "parse_tangle",
    "to_sexp",
    "validate",
    "EvalContext",
    "differential_check",
    "evaluate",
    "star_compat_check",
    "trace_left",
    "trace_right",
    "PrincipalGraph",
    "dim_pn",
    "export_dot",
    "loop_count",
    "principal_graph",
    "bundled_context",
    "load_context",
    "eval_tangle",
    "__version__",
]
