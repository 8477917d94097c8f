"""Sumset arithmetic, doubling constants, and generalized arithmetic progressions.

A GAP with dimension d, generators x_1..x_d and bounds L_1..L_d is the set
{ x_1*l_1 + ... + x_d*l_d : 0 <= l_i <= L_i }.  Weight sets whose doubling
constant |A+A|/|A| is small are covered by low-dimensional GAPs; the cover
search here is a deterministic desk-scale stand-in for a constructive
Freiman decomposition, limited to d <= 3 (plus an optional translation
dimension).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import BudgetExceeded, NoCoverFound, NotCovered

DEFAULT_ENUM_BUDGET = 10**7


@dataclass(frozen=True)
class WeightSet:
    """Finite set of distinct non-negative integer weights, kept sorted."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        if not elems:
            raise ValueError("weight set must be non-empty")
        if any(e < 0 for e in elems):
            raise ValueError("weights must be non-negative")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError("weights must be strictly increasing")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, iterable):
        return cls(tuple(sorted(set(iterable))))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)


@dataclass(frozen=True)
class Gap:
    """Generalized arithmetic progression: generators and per-dimension bounds."""

    generators: tuple
    bounds: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        bnds = tuple(self.bounds)
        if len(gens) != len(bnds) or not gens:
            raise ValueError("generators and bounds must have equal positive length")
        if any(g <= 0 for g in gens):
            raise ValueError("generators must be positive")
        if any(b < 0 for b in bnds):
            raise ValueError("bounds must be non-negative")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "bounds", bnds)

    @property
    def dim(self):
        return len(self.generators)

    @property
    def volume(self):
        v = 1
        for b in self.bounds:
            v *= b + 1
        return v


@dataclass(frozen=True)
class CoordTuple:
    """GAP coordinates <l_1, ..., l_d> of one weight."""

    coords: tuple

    def __post_init__(self):
        cs = tuple(self.coords)
        if any(c < 0 for c in cs):
            raise ValueError("coordinates must be non-negative")
        object.__setattr__(self, "coords", cs)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)


def sumset(a, b):
    """Minkowski sum {x + y : x in a, y in b} as a WeightSet."""
    return WeightSet.of(x + y for x in a for y in b)


def hfold(a, h):
    """h-fold iterated sumset hA = (h-1)A + A, with 1A = A."""
    if h < 1:
        raise ValueError("h must be >= 1")
    acc = a
    for _ in range(h - 1):
        acc = sumset(acc, a)
    return acc


def doubling_constant(a):
    """Exact |A+A| / |A| as a Fraction."""
    return Fraction(len(sumset(a, a)), len(a))


def gap_enumerate(g, budget=DEFAULT_ENUM_BUDGET):
    """All values of the GAP as a WeightSet.

    Raises BudgetExceeded when the coordinate box has more than `budget`
    points, so callers avoid materializing huge GAPs.
    """
    if g.volume > budget:
        raise BudgetExceeded(f"GAP volume {g.volume} exceeds budget {budget}")
    vals = set()
    for tup in product(*(range(b + 1) for b in g.bounds)):
        vals.add(sum(x * l for x, l in zip(g.generators, tup)))
    return WeightSet.of(vals)


def get_gap_coordinates(a, g, budget=DEFAULT_ENUM_BUDGET):
    """Coordinates of each weight of `a` inside GAP `g`, in order of `a`.

    Recovered by naive iteration of the coordinate box; when a weight has
    several representations the lexicographically smallest tuple wins
    (itertools.product yields tuples in lex order).  Raises NotCovered for
    any weight outside the GAP.
    """
    if g.volume > budget:
        raise BudgetExceeded(f"GAP volume {g.volume} exceeds budget {budget}")
    wanted = set(a.elements)
    found = {}
    for tup in product(*(range(b + 1) for b in g.bounds)):
        v = sum(x * l for x, l in zip(g.generators, tup))
        if v in wanted and v not in found:
            found[v] = tup
            if len(found) == len(wanted):
                break
    for w in a:
        if w not in found:
            raise NotCovered(w)
    return [CoordTuple(found[w]) for w in a]


def _candidate_diffs(shifted, cap=64):
    """Sorted positive pairwise differences, capped for the generator search."""
    nz = [e for e in shifted if e > 0]
    diffs = set(nz)
    elems = shifted
    if len(elems) <= 80:
        pairs = ((a, b) for i, a in enumerate(elems) for b in elems[i + 1:])
    else:
        pairs = zip(elems, elems[1:])
    for a, b in pairs:
        if b != a:
            diffs.add(abs(b - a))
    g = 0
    for d in diffs:
        g = gcd(g, d)
    if g:
        diffs.add(g)
    return sorted(diffs)


def _solve_two_gen(w, x1, x2):
    """Largest-l1 solution of w = x1*l1 + x2*l2 with l1, l2 >= 0, or None.

    l1 is maximized so l2 stays small; the congruence x1*l1 = w (mod x2)
    is solved directly instead of scanning.
    """
    if w == 0:
        return (0, 0)
    g = gcd(x1, x2)
    if w % g:
        return None
    m = x2 // g
    # base solution of (x1/g)*l1 = (w/g) (mod m)
    base = ((w // g) * pow(x1 // g, -1, m)) % m if m > 1 else 0
    top = w // x1
    if top < base:
        return None
    l1 = base + ((top - base) // m) * m
    l2, rem = divmod(w - x1 * l1, x2)
    if rem:
        return None
    return (l1, l2)


def _solve_all_two_gen(values, x1, x2):
    """Coordinates of every value over (x1, x2), or None on first failure."""
    coords = []
    for w in values:
        c = _solve_two_gen(w, x1, x2)
        if c is None:
            return None
        coords.append(c)
    return coords


def gap_cover_search(a, max_dim=3, volume_budget=DEFAULT_ENUM_BUDGET):
    """Find a GAP of core dimension <= max_dim covering all of `a`.

    d=1 uses the GCD of pairwise differences anchored at min(a); d=2,3
    search generator candidates drawn from differences, accepting the
    first cover whose volume fits the budget.  When min(a) > 0 the
    translation is folded in as an extra dimension with generator min(a)
    and bound 1, so downstream encoding stays uniform.  Deterministic for
    a fixed budget and candidate order.
    """
    if not 1 <= max_dim <= 3:
        raise ValueError("max_dim must be in [1, 3]")
    lo = a.elements[0]
    shifted = [e - lo for e in a.elements]
    offset = [(lo, 1)] if lo > 0 else []

    def assemble_with(extra, core):
        dims = extra + [d for d in core if d[1] > 0]
        if not dims:
            dims = [(1, 0)]
        gap = Gap(tuple(g for g, _ in dims), tuple(b for _, b in dims))
        return gap if gap.volume <= volume_budget else None

    # d = 1: GCD of differences anchored at min(a)
    g = 0
    for e in shifted:
        g = gcd(g, e)
    core = [] if g == 0 else [(g, shifted[-1] // g)]
    gap = assemble_with(offset, core)
    if gap is not None:
        return gap

    # For d >= 2, anchoring at min(a) can leave the translated set outside
    # any small box over the true generators, so the raw set is tried too.
    variants = [(list(a.elements), [])] if lo == 0 else \
        [(list(a.elements), []), (shifted, offset)]
    cands = _candidate_diffs(shifted)
    # Small-generator pool: small differences plus their pairwise GCDs
    # (a generator often only shows up as the GCD of mixed differences).
    small = set(cands[:64])
    for i, da in enumerate(cands[:40]):
        for db in cands[i + 1:40]:
            small.add(gcd(da, db))
    small = sorted(small)
    if max_dim >= 2:
        for values, extra in variants:
            for x1 in reversed(cands):
                for x2 in small:
                    if x2 >= x1:
                        break
                    coords = _solve_all_two_gen(values, x1, x2)
                    if coords is None:
                        continue
                    b1 = max(c[0] for c in coords)
                    b2 = max(c[1] for c in coords)
                    gap = assemble_with(extra, [(x1, b1), (x2, b2)])
                    if gap is not None:
                        return gap
    if max_dim >= 3:
        for values, extra in variants:
            for x1 in reversed(cands[-200:]):
                resid = [(w % x1, w // x1) for w in values]
                for x2 in reversed(small[-24:]):
                    if x2 >= x1:
                        continue
                    for x3 in small[:24]:
                        if x3 >= x2:
                            break
                        coords = _solve_all_two_gen([r for r, _ in resid], x2, x3)
                        if coords is None:
                            continue
                        b1 = max(t for _, t in resid)
                        b2 = max(c[0] for c in coords)
                        b3 = max(c[1] for c in coords)
                        gap = assemble_with(extra, [(x1, b1), (x2, b2), (x3, b3)])
                        if gap is not None:
                            return gap
    raise NoCoverFound(
        f"no GAP of dimension <= {max_dim} with volume <= {volume_budget} found"
    )
