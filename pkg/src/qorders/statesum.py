"""Kauffman bracket state sums.

Values live in ``Z[A]/(A^M - 1)``. With ``M`` larger than the spread of
exponents this is exact; with ``M = p`` it is the image in the cyclotomic
ring (``A`` is a power of ``t``), which keeps arithmetic small for big cables.

A polynomial is packed into one Python integer, ``B`` bits per coefficient
with signed digits, so addition of whole polynomials is one big-int add.

The sweep processes crossings one at a time and keeps, for every perfect
matching of the open edges ("frontier"), the accumulated bracket of the
processed part of the diagram. The brute-force enumeration over all ``2^N``
smoothings is kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass


class BudgetExceeded(RuntimeError):
    """The diagram is larger than the configured crossing or width budget."""


@dataclass(frozen=True)
class Budget:
    max_crossings: int | None = None
    max_width: int | None = None


class CyclicRing:
    """Packed arithmetic in ``Z[A]/(A^M - 1)`` with ``bits``-bit signed digits."""

    def __init__(self, M: int, bits: int):
        self.M = M
        self.B = bits
        self.MB = M * bits
        self.half = 1 << (self.MB - 1)

    def monomial(self, e: int, c: int = 1) -> int:
        return c << ((e % self.M) * self.B)

    def rot(self, v: int, r: int) -> int:
        r %= self.M
        if not r or not v:
            return v
        v <<= r * self.B
        high = (v + self.half) >> self.MB
        return v - (high << self.MB) + high

    def times_delta(self, v: int, k: int = 1) -> int:
        for _ in range(k):
            v = -(self.rot(v, 2) + self.rot(v, -2))
        return v

    def coefficients(self, v: int) -> list[int]:
        B = self.B
        mask = (1 << B) - 1
        half = 1 << (B - 1)
        out = []
        for _ in range(self.M):
            c = v & mask
            if c >= half:
                c -= 1 << B
            out.append(c)
            v = (v - c) >> B
        if v:
            raise OverflowError("coefficient exceeded digit width")
        return out


def _edge_slots(pd):
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(pd):
        for s, e in enumerate(x):
            where.setdefault(e, []).append((i, s))
    return where


def crossing_order(pd) -> tuple[list[int], int]:
    """A crossing order keeping the frontier small; returns (order, max frontier width).

    Small diagrams get an exact minimum by dynamic programming over subsets;
    larger ones take the best of the listed order and greedy orders grown
    from several starting crossings.
    """
    n = len(pd)
    if not n:
        return [], 0
    if n <= EXACT_ORDER_LIMIT:
        return _optimal_order(pd)
    where = _edge_slots(pd)
    nbrs = [set() for _ in range(n)]
    for e, occ in where.items():
        if len(occ) == 2 and occ[0][0] != occ[1][0]:
            nbrs[occ[0][0]].add(occ[1][0])
            nbrs[occ[1][0]].add(occ[0][0])
    identity = list(range(n))
    best = (identity, order_width(pd, identity))
    starts = range(n) if n <= 60 else range(0, n, max(1, n // 60))
    for st in starts:
        order, width = _greedy_from(pd, where, nbrs, st)
        if width < best[1]:
            best = (order, width)
    return best


EXACT_ORDER_LIMIT = 12


def order_width(pd, order) -> int:
    open_edges: set[int] = set()
    width = 0
    for i in order:
        x = pd[i]
        for e in set(x):
            if e in open_edges:
                open_edges.discard(e)
            elif x.count(e) == 1:
                open_edges.add(e)
        width = max(width, len(open_edges))
    return width


def _optimal_order(pd):
    n = len(pd)
    where = _edge_slots(pd)
    adj = [[0] * n for _ in range(n)]
    for occ in where.values():
        u, v = occ[0][0], occ[1][0]
        if u != v:
            adj[u][v] += 1
            adj[v][u] += 1
    full = (1 << n) - 1
    cut = [0] * (1 << n)
    for S in range(1, 1 << n):
        i = (S & -S).bit_length() - 1
        R = S & ~(1 << i)
        inside = sum(adj[i][j] for j in range(n) if R >> j & 1)
        cut[S] = cut[R] + sum(adj[i]) - 2 * inside
    best = [0] + [None] * full
    last = [0] * (1 << n)
    for S in range(1, 1 << n):
        b, arg = None, 0
        T = S
        while T:
            i = (T & -T).bit_length() - 1
            T &= T - 1
            v = best[S & ~(1 << i)]
            if b is None or v < b:
                b, arg = v, i
        best[S] = max(b, cut[S])
        last[S] = arg
    order = []
    S = full
    while S:
        i = last[S]
        order.append(i)
        S &= ~(1 << i)
    order.reverse()
    return order, best[full]


def _greedy_from(pd, where, nbrs, start):
    n = len(pd)
    done = [False] * n
    open_edges: set[int] = set()
    order = []
    width = 0
    cand = {start}
    for _ in range(n):
        if not cand:
            cand = {next(i for i in range(n) if not done[i])}

        def score(i):
            x = pd[i]
            closes = sum(1 for e in set(x) if e in open_edges)
            new = sum(1 for e in set(x) if e not in open_edges and x.count(e) == 1)
            return (new - closes, i)

        i = min(cand, key=score)
        cand.discard(i)
        done[i] = True
        order.append(i)
        x = pd[i]
        for e in set(x):
            if e in open_edges:
                open_edges.discard(e)
            elif x.count(e) == 1:
                open_edges.add(e)
        width = max(width, len(open_edges))
        for j in nbrs[i]:
            if not done[j]:
                cand.add(j)
    return order, width


_A_PAIRS = ((1, 0, 3, 2), 1)   # a-b, c-d
_B_PAIRS = ((3, 2, 1, 0), -1)  # a-d, b-c


def _step_transitions(F, x):
    """Precompute the static data for sweeping crossing ``x`` past frontier ``F``."""
    pos = {e: i for i, e in enumerate(F)}
    in_x = set(x)
    slot_of = {}
    for s, e in enumerate(x):
        slot_of.setdefault(e, []).append(s)
    kinds = []
    for s, e in enumerate(x):
        if e in pos:
            kinds.append(("old", pos[e]))
        elif len(slot_of[e]) == 2:
            other = slot_of[e][0] if slot_of[e][1] == s else slot_of[e][1]
            kinds.append(("int", other))
        else:
            kinds.append(("new", e))
    keep = [e for e in F if e not in in_x]
    newF = keep + [e for s, e in enumerate(x) if kinds[s][0] == "new"]
    newpos = {e: i for i, e in enumerate(newF)}
    old_slot = {pos[e]: slot_of[e][0] for e in in_x if e in pos}
    keep_idx = [pos[e] for e in keep]
    return newF, newpos, kinds, old_slot, keep_idx


def sweep_bracket(pd, free_loops: int, ring: CyclicRing, budget: Budget | None = None) -> int:
    """Bracket of the diagram as a packed element of ``ring``."""
    budget = budget or Budget()
    if budget.max_crossings is not None and len(pd) > budget.max_crossings:
        raise BudgetExceeded(f"{len(pd)} crossings exceed budget {budget.max_crossings}")
    order, width = crossing_order(pd)
    if budget.max_width is not None and width > budget.max_width:
        raise BudgetExceeded(f"sweep width {width} exceeds budget {budget.max_width}")
    F: list[int] = []
    states: dict[tuple, int] = {(): 1}
    for ci in order:
        x = pd[ci]
        newF, newpos, kinds, old_slot, keep_idx = _step_transitions(F, x)
        nF = len(newF)
        out: dict[tuple, int] = {}
        for mate, val in states.items():
            for sp, wexp in (_A_PAIRS, _B_PAIRS):
                new_mate = [-1] * nF
                visited = [False] * 4

                def walk(s):
                    # follow the path leaving the crossing through slot s
                    while True:
                        visited[s] = True
                        kind, data = kinds[s]
                        if kind == "new":
                            return newpos[data]
                        if kind == "int":
                            visited[data] = True
                            s = sp[data]
                            continue
                        g = mate[data]
                        if g in old_slot:
                            t = old_slot[g]
                            visited[t] = True
                            s = sp[t]
                            continue
                        return newpos[F[g]]

                for k in keep_idx:
                    g = mate[k]
                    i = newpos[F[k]]
                    if new_mate[i] != -1:
                        continue
                    if g in old_slot:
                        t = old_slot[g]
                        visited[t] = True
                        j = walk(sp[t])
                    else:
                        j = newpos[F[g]]
                    new_mate[i] = j
                    new_mate[j] = i
                for s in range(4):
                    if kinds[s][0] == "new" and not visited[s]:
                        visited[s] = True
                        i = newpos[kinds[s][1]]
                        j = walk(sp[s])
                        new_mate[i] = j
                        new_mate[j] = i
                loops = 0
                for s in range(4):
                    if not visited[s]:
                        loops += 1
                        start = s
                        cur = s
                        while True:
                            visited[cur] = True
                            nxt = sp[cur]
                            visited[nxt] = True
                            kind, data = kinds[nxt]
                            if kind == "int":
                                cur = data
                            else:  # old edge, mate also in x
                                cur = old_slot[mate[data]]
                            if cur == start:
                                break
                v = ring.rot(val, wexp)
                if loops:
                    v = ring.times_delta(v, loops)
                key = tuple(new_mate)
                out[key] = out.get(key, 0) + v
        states = {k: v for k, v in out.items() if v}
        F = newF
        if not states:
            return 0
    (val,) = states.values() if states else (0,)
    return ring.times_delta(val, free_loops)


def brute_force_bracket(pd, free_loops: int) -> dict[int, int]:
    """Exact bracket ``{exponent of A: coefficient}`` by summing all smoothings."""
    n = len(pd)
    edges = sorted({e for x in pd for e in x})
    idx = {e: i for i, e in enumerate(edges)}
    total: dict[int, int] = {}
    for mask in range(1 << n):
        parent = list(range(len(edges)))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u, v):
            ru, rv = find(idx[u]), find(idx[v])
            if ru != rv:
                parent[ru] = rv

        na = 0
        for i, (a, b, c, d) in enumerate(pd):
            if mask >> i & 1:
                union(a, b)
                union(c, d)
                na += 1
            else:
                union(a, d)
                union(b, c)
        loops = len({find(i) for i in range(len(edges))}) + free_loops
        # A^(na - nb) * delta^loops, delta = -(A^2 + A^-2)
        poly = {na - (n - na): 1}
        for _ in range(loops):
            nxt: dict[int, int] = {}
            for e, c in poly.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - c
                nxt[e - 2] = nxt.get(e - 2, 0) - c
            poly = nxt
        for e, c in poly.items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in total.items() if c}
