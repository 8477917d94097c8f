"""End-to-end pipeline: cover, encode, solve, decode, reconstruct.

Given an instance whose weight set has additive structure, the pipeline
finds (or accepts) a GAP cover, maps weights to coordinates, encodes them
as small integers over lambda-enlarged bounds, runs the kind-specific
algebraic solver, and decodes the optimal exponent back to the original
objective value.  Exactness is unconditional; the small-doubling
hypothesis only controls how small the encoded range stays.
"""

import time
from dataclasses import dataclass, field

from .additive import (
    DEFAULT_ENUM_BUDGET,
    doubling_constant,
    gap_cover_search,
    get_gap_coordinates,
)
from .encoding import kappa, kappa_inv, true_value, enlarge
from .errors import EmptyPolynomial, InfeasibleInstance
from .poly import select_optimum
from .solvers import (
    SOLVER_SPECS,
    ewclique_algebraic,
    maxcut_algebraic,
    minplus_selfconv_min,
    steiner_algebraic,
    tsp_algebraic,
)


@dataclass
class MetaResult:
    optimum: int
    encoded_optimum: int
    coords: tuple
    gap_used: object
    lam: int
    stats: dict = field(default_factory=dict)


def _check_exponents(exponents, egap):
    """Every observed exponent must decode inside the enlarged bounds."""
    bound = egap.range_bound
    for e in exponents:
        if not 0 <= e < bound:
            raise AssertionError(f"exponent {e} escapes encoded range [0, {bound})")


def run_meta(inst, *, modulus=None, max_dim=3,
             volume_budget=DEFAULT_ENUM_BUDGET, enum_budget=DEFAULT_ENUM_BUDGET):
    """Run the full pipeline on one instance and return a MetaResult.

    A user-supplied GAP on the instance takes precedence over the cover
    search.  Raises NoCoverFound / InfeasibleInstance / solver errors.
    """
    spec = SOLVER_SPECS[inst.kind]
    t0 = time.perf_counter()
    weights = inst.weights
    gap = inst.gap
    if gap is None:
        gap = gap_cover_search(weights, max_dim=max_dim, volume_budget=volume_budget)
    coords = get_gap_coordinates(weights, gap, budget=enum_budget)
    lam = spec.lambda_bound(inst)
    egap = enlarge(gap, lam)
    enc = {w: kappa(egap, c) for w, c in zip(weights, coords)}

    # Eq-style size chain: the encoded range never exceeds lambda^d * |G|
    gprime_bound = egap.range_bound
    assert gprime_bound <= lam ** gap.dim * gap.volume

    stats = {
        "weight_count": len(weights),
        "doubling_constant": doubling_constant(weights),
        "gap_volume": gap.volume,
        "encoded_range_bound": gprime_bound,
        "lambda": lam,
    }

    if inst.kind == "minplusconv":
        encoded_seq = [enc[v] for v in inst.sequence]
        mins = minplus_selfconv_min(encoded_seq, gprime_bound,
                                    key=lambda e: true_value(egap, e))
        _check_exponents(mins, egap)
        decoded = [true_value(egap, e) for e in mins]
        stats["sequence"] = decoded
        stats["wall_time"] = time.perf_counter() - t0
        best = min(mins, key=lambda e: (true_value(egap, e), e))
        return MetaResult(true_value(egap, best), best,
                          tuple(kappa_inv(egap, best)), gap, lam, stats)

    if inst.kind == "tsp":
        poly = tsp_algebraic(inst, enc, modulus)
    elif inst.kind == "maxcut":
        poly = maxcut_algebraic(inst, enc, modulus)
    elif inst.kind == "ewclique":
        poly = ewclique_algebraic(inst, enc, inst.k, modulus)
    else:
        poly = steiner_algebraic(inst, enc, lambda e: true_value(egap, e), modulus)

    _check_exponents(poly.terms, egap)
    try:
        best = select_optimum(poly, egap, spec.sense)
    except EmptyPolynomial as exc:
        raise InfeasibleInstance(str(exc)) from exc
    coords_opt = kappa_inv(egap, best)
    optimum = sum(x * l for x, l in zip(egap.generators, coords_opt))
    assert optimum == true_value(egap, best)
    stats["solution_terms"] = len(poly.terms)
    # distinct coordinate tuples can share a true value, so the count of
    # optimal solutions sums coefficients over every such exponent
    stats["optimal_count"] = sum(
        c for e, c in poly.terms.items() if true_value(egap, e) == optimum)
    if modulus is not None:
        stats["optimal_count"] %= modulus
    stats["wall_time"] = time.perf_counter() - t0
    return MetaResult(optimum, best, tuple(coords_opt), gap, lam, stats)
