"""Exact-arithmetic toolkit for counting minimal models of genus one curves over Q.

Genus one equations of degree 1-4 (Weierstrass, generalised binary quartic,
ternary cubic, quadric pair) with their c4/c6/Delta invariants, local
reduction data at a prime (Kodaira type, Tamagawa number, component group),
component-tuple counting per reduction type, and the global product count.
"""

from genusone.arith import INFINITY, factor, is_prime, padic_valuation
from genusone.equations import (
    GenusOneEquation,
    Invariants,
    Transformation,
    apply_transformation,
    det_transformation,
    invariants,
    is_integral,
    jacobian,
)
from genusone.localred import ReductionData, component_of_point, is_minimal_at, tate
from genusone.fiberdata import SpecialFiber, fiber
from genusone.counting import CountBreakdown, enumerate_models, local_count, table1
from genusone.globalcount import (
    GlobalCount,
    bad_primes,
    crt_sl_lift,
    global_count,
    snf_local,
    verify_model_list,
)

__all__ = [
    "INFINITY",
    "factor",
    "is_prime",
    "padic_valuation",
    "GenusOneEquation",
    "Invariants",
    "Transformation",
    "apply_transformation",
    "det_transformation",
    "invariants",
    "is_integral",
    "jacobian",
    "ReductionData",
    "component_of_point",
    "is_minimal_at",
    "tate",
    "SpecialFiber",
    "fiber",
    "CountBreakdown",
    "enumerate_models",
    "local_count",
    "table1",
    "GlobalCount",
    "bad_primes",
    "crt_sl_lift",
    "global_count",
    "snf_local",
    "verify_model_list",
]
