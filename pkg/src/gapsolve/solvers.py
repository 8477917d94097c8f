"""Bounded-input algebraic solvers operating on encoded integer weights.

Each solver receives a problem instance together with a map from original
weight values to their encoded integers, and returns a SolutionPolynomial
whose exponents are sums of encoded weights.  Every exponent stays within
the lambda-enlarged GAP bounds of its problem:

  TSP        lambda = n        (a tour sums n edge weights)
  Max-Cut    lambda = m        (a cut sums at most m edge weights)
  k-Clique   lambda = k(k-1)   (auxiliary-graph triangles double each weight)
  Steiner    lambda = n - 1    (a tree has fewer than n edges)
  MinPlus    lambda = 2        (sums of two sequence entries)

Solution multiplicities are normalized so exact coefficients are checkable
against brute force: each undirected tour, each bipartition, and each
k-clique counts once.
"""

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .additive import Gap, WeightSet
from .errors import BoundExceeded, Disconnected, KNotDivisibleBy3
from .poly import SolutionPolynomial

KINDS = ("tsp", "maxcut", "ewclique", "steiner", "minplusconv")


@dataclass(frozen=True)
class ProblemInstance:
    """Tagged union over the supported problem kinds."""

    kind: str
    n: int = 0
    edges: tuple = ()  # (u, v, weight) triples, undirected, 0-based
    k: int = 0  # ewclique only
    terminals: tuple = ()  # steiner only
    sequence: tuple = ()  # minplusconv only
    gap: Gap = None  # optional user-supplied cover

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        seen = set()
        for u, v, w in self.edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge endpoint out of range")
            if w < 0:
                raise ValueError("weights must be non-negative")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        if self.kind == "steiner":
            if len(self.terminals) < 2:
                raise ValueError("steiner needs >= 2 terminals")
            if any(not 0 <= t < self.n for t in self.terminals):
                raise ValueError("terminal out of range")
        if self.kind == "minplusconv" and not self.sequence:
            raise ValueError("minplusconv needs a non-empty sequence")

    @property
    def weights(self):
        """The instance's weight set (edge weights or sequence values)."""
        if self.kind == "minplusconv":
            return WeightSet.of(self.sequence)
        return WeightSet.of(w for _, _, w in self.edges)


@dataclass(frozen=True)
class SolverSpec:
    """Optimization sense and lambda bound for one problem kind."""

    kind: str
    sense: str
    lambda_bound: callable = field(repr=False)


def _lambda_tsp(inst):
    return inst.n


def _lambda_maxcut(inst):
    return max(1, len(inst.edges))


def _lambda_ewclique(inst):
    return max(1, 2 * comb(inst.k, 2))


def _lambda_steiner(inst):
    return max(1, inst.n - 1)


SOLVER_SPECS = {
    "tsp": SolverSpec("tsp", "min", _lambda_tsp),
    "maxcut": SolverSpec("maxcut", "max", _lambda_maxcut),
    "ewclique": SolverSpec("ewclique", "max", _lambda_ewclique),
    "steiner": SolverSpec("steiner", "min", _lambda_steiner),
    "minplusconv": SolverSpec("minplusconv", "min", lambda inst: 2),
}


def _encoded_edges(inst, enc):
    """Adjacency map u -> {v: encoded weight}."""
    adj = {u: {} for u in range(inst.n)}
    for u, v, w in inst.edges:
        adj[u][v] = enc[w]
        adj[v][u] = enc[w]
    return adj


def tsp_algebraic(inst, enc, modulus=None):
    """Held-Karp subset DP with polynomial-valued cells.

    dp[mask][v] is the generating function of simple paths from vertex 0
    to v visiting exactly the vertices in mask.  Closing every path with
    the edge back to 0 counts each undirected tour twice (once per
    orientation, same weight), so final coefficients are halved.
    Returns the zero polynomial when no Hamiltonian cycle exists.
    """
    n = inst.n
    if n < 3:
        return SolutionPolynomial.zero(modulus)
    adj = _encoded_edges(inst, enc)
    full = (1 << n) - 1
    dp = {1 | (1 << v): {v: {adj[0][v]: 1}} for v in adj[0] if v != 0}
    for mask in range(3, full + 1, 2):
        row = dp.get(mask)
        if row is None:
            continue
        for v, terms in row.items():
            for u, w in adj[v].items():
                if u == 0 or mask & (1 << u):
                    continue
                nxt = dp.setdefault(mask | (1 << u), {}).setdefault(u, {})
                for e, c in terms.items():
                    nxt[e + w] = nxt.get(e + w, 0) + c
    total = {}
    for v, terms in dp.get(full, {}).items():
        w = adj[v].get(0)
        if w is None:
            continue
        for e, c in terms.items():
            total[e + w] = total.get(e + w, 0) + c
    if modulus is None:
        total = {e: c // 2 for e, c in total.items()}
    else:
        inv2 = pow(2, -1, modulus)
        total = {e: c * inv2 for e, c in total.items()}
    return SolutionPolynomial(total, modulus)


def maxcut_algebraic(inst, enc, modulus=None):
    """Split-and-list over a 3-way vertex partition.

    Vertices split into V1, V2, V3 of size <= ceil(n/3); per-part internal
    cut weights and the three cross tables are listed, then all compatible
    triples of part-assignments are combined.  Vertex 0 is pinned outside
    the cut side so each bipartition {S, V\\S} counts exactly once.
    """
    n = inst.n
    if n == 0:
        return SolutionPolynomial.monomial(0, 1, modulus)
    size = -(-n // 3)
    parts = [list(range(0, min(size, n))),
             list(range(size, min(2 * size, n))),
             list(range(2 * size, n))]
    adj = _encoded_edges(inst, enc)

    def subsets(part, pin_zero):
        out = []
        free = [v for v in part if not (pin_zero and v == 0)]
        for mask in range(1 << len(free)):
            out.append(frozenset(v for i, v in enumerate(free) if mask >> i & 1))
        return out

    def internal(part, s):
        tot = 0
        for u, v in combinations(part, 2):
            w = adj[u].get(v)
            if w is not None and (u in s) != (v in s):
                tot += w
        return tot

    subs = [subsets(parts[0], True), subsets(parts[1], False), subsets(parts[2], False)]
    part_of = {}
    for i, part in enumerate(parts):
        for v in part:
            part_of[v] = i
    cross_edges = {(0, 1): [], (1, 2): [], (0, 2): []}
    for u, v, w in inst.edges:
        i, j = part_of[u], part_of[v]
        if i != j:
            cross_edges[(min(i, j), max(i, j))].append((u, v, enc[w]))

    def cross_table(i, j):
        table = {}
        for sa in subs[i]:
            for sb in subs[j]:
                tot = 0
                for u, v, w in cross_edges[(i, j)]:
                    if (u in sa or u in sb) != (v in sa or v in sb):
                        tot += w
                table[(sa, sb)] = tot
        return table

    t01, t12, t02 = cross_table(0, 1), cross_table(1, 2), cross_table(0, 2)
    int_w = [
        {s: internal(parts[i], s) for s in subs[i]} for i in range(3)
    ]
    terms = {}
    for s0 in subs[0]:
        base0 = int_w[0][s0]
        for s1 in subs[1]:
            base01 = base0 + int_w[1][s1] + t01[(s0, s1)]
            for s2 in subs[2]:
                e = base01 + int_w[2][s2] + t12[(s1, s2)] + t02[(s0, s2)]
                terms[e] = terms.get(e, 0) + 1
    return SolutionPolynomial(terms, modulus)


def build_auxiliary_graph(inst, enc, k):
    """Auxiliary graph H for edge-weighted k-clique, k divisible by 3.

    Nodes are the (k/3)-cliques of G; two nodes are adjacent iff their
    union induces a (2k/3)-clique.  Edge weights double the cross weight
    and add both internal weights, so every H-triangle weighs exactly
    twice the underlying k-clique.  Returns (nodes, internal, hedges)
    where nodes are vertex-index tuples, internal maps node -> internal
    encoded weight, and hedges maps (i, j) -> encoded H-edge weight.
    """
    if k % 3 or k < 3:
        raise KNotDivisibleBy3(f"k = {k}")
    kk = k // 3
    adj = _encoded_edges(inst, enc)
    adjmask = [0] * inst.n
    for u in range(inst.n):
        for v in adj[u]:
            adjmask[u] |= 1 << v
    nodes, internal, masks = [], [], []
    for combo in combinations(range(inst.n), kk):
        tot = 0
        ok = True
        for u, v in combinations(combo, 2):
            w = adj[u].get(v)
            if w is None:
                ok = False
                break
            tot += w
        if ok:
            nodes.append(combo)
            internal.append(tot)
            masks.append(sum(1 << u for u in combo))
    hedges = {}
    for i, j in combinations(range(len(nodes)), 2):
        if masks[i] & masks[j]:
            continue
        crossw = 0
        ok = True
        for u in nodes[i]:
            if adjmask[u] & masks[j] != masks[j]:
                ok = False
                break
            for v in nodes[j]:
                crossw += adj[u][v]
        if ok:
            hedges[(i, j)] = 2 * crossw + internal[i] + internal[j]
    return nodes, internal, hedges


def ewclique_algebraic(inst, enc, k, modulus=None):
    """Maximum-weight k-clique via minimum/maximum triangles in H.

    Enumerates all triangles of the auxiliary graph; each triangle's weight
    is twice its k-clique's encoded weight (additivity of the encoding), so
    the emitted exponent is the halved triangle weight.  Every k-clique
    yields C(k,k/3)*C(2k/3,k/3)/6 triangles; coefficients are divided by
    that constant so each clique counts once.
    """
    nodes, _, hedges = build_auxiliary_graph(inst, enc, k)
    nbr = {i: {} for i in range(len(nodes))}
    for (i, j), w in hedges.items():
        nbr[i][j] = w
        nbr[j][i] = w
    terms = {}
    for (i, j), wij in hedges.items():
        for l, wjl in nbr[j].items():
            if l <= j or l not in nbr[i]:
                continue
            total = wij + wjl + nbr[i][l]
            assert total % 2 == 0
            e = total // 2
            terms[e] = terms.get(e, 0) + 1
    kk = k // 3
    per_clique = comb(k, kk) * comb(k - kk, kk) // 6
    if modulus is None:
        for e in terms:
            assert terms[e] % per_clique == 0
            terms[e] //= per_clique
    else:
        inv = pow(per_clique, -1, modulus)
        terms = {e: c * inv for e, c in terms.items()}
    return SolutionPolynomial(terms, modulus)


def _encoded_dijkstra(n, adj, tv_of, src):
    """Shortest paths from src where edge lengths are (true value, encoding).

    True values add exactly (the encoding is additive within the enlarged
    bounds), so comparing accumulated (tv, enc) pairs orders paths by
    original weight with deterministic tie-breaking.
    """
    INF = None
    dist = [INF] * n
    heap = [(0, 0, src)]
    done = [False] * n
    while heap:
        tv, e, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        dist[u] = (tv, e)
        for v, w in adj[u].items():
            if not done[v]:
                heapq.heappush(heap, (tv + tv_of[w], e + w, v))
    return dist


def steiner_algebraic(inst, enc, tv, modulus=None):
    """Dreyfus-Wagner DP over (terminal subset, root) with encoded weights.

    States hold the minimum (true value, encoding) pair; the returned
    polynomial carries the single optimal term (indicator coefficient).
    Raises Disconnected when the terminals span components.
    """
    n = inst.n
    terms = list(dict.fromkeys(inst.terminals))
    adj = _encoded_edges(inst, enc)
    tv_of = {e: tv(e) for e in set(enc.values())}
    dist = [_encoded_dijkstra(n, adj, tv_of, s) for s in range(n)]
    for t in terms[1:]:
        if dist[terms[0]][t] is None:
            raise Disconnected(f"terminal {t} unreachable from {terms[0]}")

    k = len(terms)
    full = (1 << (k - 1)) - 1  # subsets of terms[1:]
    # dp[S][v]: best tree connecting {terms[i+1] : i in S} plus vertex v
    dp = [[None] * n for _ in range(full + 1)]
    for i in range(k - 1):
        t = terms[i + 1]
        for v in range(n):
            dp[1 << i][v] = dist[t][v]
    for S in range(1, full + 1):
        if S & (S - 1) == 0:
            continue
        row = dp[S]
        # merge two sub-trees at the same root
        T = (S - 1) & S
        while T:
            U = S ^ T
            if T > U:  # each split once
                a, b = dp[T], dp[U]
                for v in range(n):
                    if a[v] is None or b[v] is None:
                        continue
                    cand = (a[v][0] + b[v][0], a[v][1] + b[v][1])
                    if row[v] is None or cand < row[v]:
                        row[v] = cand
            T = (T - 1) & S
        # re-root along shortest paths
        best = [(row[u], u) for u in range(n) if row[u] is not None]
        for v in range(n):
            for cur, u in best:
                d = dist[u][v]
                if d is None:
                    continue
                cand = (cur[0] + d[0], cur[1] + d[1])
                if row[v] is None or cand < row[v]:
                    row[v] = cand
    ans = dp[full][terms[0]] if full else (0, 0)
    if ans is None:
        raise Disconnected("no connecting tree")
    return SolutionPolynomial.monomial(ans[1], 1, modulus)


def _selfconv_counts(seq, bound, budget):
    """Exact self-convolution counts as a (2n-1, 2*bound) uint16 array.

    Packs the presence vector of each position into one big integer with
    one 16-bit slot per value in [0, 2*bound) and squares it; counts
    (<= len(seq)) never overflow a slot, so the integer square is an
    exact convolution.  Row k holds, for positions i + j = k, how many
    pairs attain each encoded value sum.
    """
    import numpy as np

    n = len(seq)
    if any(not 0 <= v < bound for v in seq):
        raise BoundExceeded("encoded value outside [0, bound)")
    if n >= 2**16:
        raise BoundExceeded("sequence too long for 16-bit count slots")
    block = 2 * bound
    if n * block > budget:
        raise BoundExceeded(f"dense vector of {n * block} slots exceeds budget")
    packed = bytearray(2 * n * block)
    for i, v in enumerate(seq):
        packed[2 * (i * block + v)] = 1
    try:
        from gmpy2 import mpz
    except ImportError:  # pragma: no cover
        mpz = int
    squared = mpz(int.from_bytes(bytes(packed), "little")) ** 2
    nbytes = 2 * (2 * n - 1) * block
    raw = int(squared).to_bytes(nbytes + 2, "little")
    digits = np.frombuffer(raw, dtype="<u2")[: (2 * n - 1) * block]
    return digits.reshape(2 * n - 1, block)


def minplus_selfconv(seq, bound, budget=5 * 10**7):
    """Attainable encoded value sums per output index of i + j.

    Returns one sorted list per index k = 0 .. 2n-2; callers pick the
    optimum by true value.
    """
    import numpy as np

    counts = _selfconv_counts(seq, bound, budget)
    return [[int(s) for s in np.nonzero(row)[0]] for row in counts]


def minplus_selfconv_min(seq, bound, key=None, budget=5 * 10**7):
    """Per-index minimum of the self-convolution, compared by `key`.

    `key(e)` defaults to the identity; pass a true-value key to restore
    the original order of encoded sums.  Ties break toward the smaller
    encoded value.
    """
    import numpy as np

    counts = _selfconv_counts(seq, bound, budget)
    block = counts.shape[1]
    nonzero = counts > 0
    if key is None:
        # first attainable value per row is the minimum
        idx = nonzero.argmax(axis=1)
        assert nonzero[np.arange(len(idx)), idx].all()
        return [int(e) for e in idx]
    # only attainable sums are guaranteed to be decodable, so evaluate
    # the key just on columns that occur somewhere
    cols = np.nonzero(nonzero.any(axis=0))[0]
    vals = {int(e): key(int(e)) for e in cols}
    if max(vals.values(), default=0) < 2**62:
        tvs = np.zeros(block, dtype=np.int64)
        big = max(vals.values(), default=0) + 1
        tvs[:] = big
        for e, tv in vals.items():
            tvs[e] = tv
        masked = np.where(nonzero, tvs[None, :], big)
        idx = masked.argmin(axis=1)  # argmin takes the first index on ties
        assert (masked[np.arange(len(idx)), idx] != big).all()
        return [int(e) for e in idx]
    # key values too large for int64: per-row python scan
    out = []
    for row in counts:
        attain = np.nonzero(row)[0]
        out.append(min((int(e) for e in attain),
                       key=lambda e: (vals[int(e)], e)))
    return out
