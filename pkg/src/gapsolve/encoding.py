"""Order-aware mixed-radix pairing of GAP coordinates into integers.

kappa maps a coordinate tuple <l_1..l_d> to the mixed-radix number with
radices <B_i + 1> (dimension 1 most significant), where B_i are the
lambda-enlarged bounds.  It is additive on tuples that stay inside the
enlarged box and strictly monotone w.r.t. lexicographic tuple order, which
makes it injective.  Because encoded order differs from true-value order
in general, a rank table (or direct decode-and-evaluate comparison)
restores the order of the represented values.
"""

from dataclasses import dataclass, field

from .additive import CoordTuple, Gap
from .errors import BudgetExceeded, OutOfBounds, OutOfRange

DEFAULT_PERM_BUDGET = 10**7


@dataclass(frozen=True)
class EnlargedGap:
    """A GAP with bounds scaled by the solver-specific lambda."""

    base: Gap
    lam: int
    enlarged_bounds: tuple = field(init=False)

    def __post_init__(self):
        if self.lam < 1:
            raise ValueError("lambda must be >= 1")
        object.__setattr__(
            self, "enlarged_bounds", tuple(self.lam * b for b in self.base.bounds)
        )

    @property
    def dim(self):
        return self.base.dim

    @property
    def generators(self):
        return self.base.generators

    @property
    def range_bound(self):
        """Number of encodable values, prod(lambda*L_i + 1)."""
        v = 1
        for b in self.enlarged_bounds:
            v *= b + 1
        return v


def enlarge(g, lam):
    """Scale the dimension bounds of `g` by `lam`; generators unchanged."""
    return EnlargedGap(g, lam)


def kappa(g, t):
    """Encode a coordinate tuple as a mixed-radix integer."""
    coords = tuple(t)
    if len(coords) != g.dim:
        raise OutOfBounds(len(coords))
    e = 0
    for i, (l, b) in enumerate(zip(coords, g.enlarged_bounds)):
        if l > b:
            raise OutOfBounds(i)
        e = e * (b + 1) + l
    return e


def kappa_inv(g, e):
    """Decode an encoded value back to its coordinate tuple."""
    if e < 0 or e >= g.range_bound:
        raise OutOfRange(f"encoded value {e} outside [0, {g.range_bound})")
    coords = []
    for b in reversed(g.enlarged_bounds):
        e, l = divmod(e, b + 1)
        coords.append(l)
    return CoordTuple(tuple(reversed(coords)))


def true_value(g, e):
    """Original-scale value sum(x_i * l_i) of an encoded weight."""
    coords = kappa_inv(g, e)
    return sum(x * l for x, l in zip(g.generators, coords))


@dataclass(frozen=True)
class PermutationTable:
    """Rank table over all encodable values, sorted by (true value, encoding)."""

    sorted_entries: tuple  # (encoded, true_value) pairs, ascending
    rank_of: dict

    def rank(self, e):
        return self.rank_of[e]


def build_permutation(g, budget=DEFAULT_PERM_BUDGET):
    """Materialize the rank-restoring permutation over [0, range_bound).

    Ties on true value break by encoded value ascending.  Raises
    BudgetExceeded above `budget`; callers then fall back to comparing
    decoded true values directly, which induces the same total order.
    """
    n = g.range_bound
    if n > budget:
        raise BudgetExceeded(f"permutation size {n} exceeds budget {budget}")
    entries = sorted(((e, true_value(g, e)) for e in range(n)), key=lambda p: (p[1], p[0]))
    return PermutationTable(tuple(entries), {e: r for r, (e, _) in enumerate(entries)})
