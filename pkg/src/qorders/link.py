"""Oriented framed link diagrams in planar-diagram (PD) form.

PD convention: a crossing ``(a, b, c, d)`` lists its four edge labels
counterclockwise, starting from the incoming under-strand, so the under
strand runs ``a -> c`` and the over strand joins ``b`` and ``d``. Edges are
numbered consecutively along each component in the direction of its
orientation, wrapping at the end of the component. The crossing is positive
when the over strand runs ``d -> b``.

Components without crossings are allowed; in the JSON form they come after
all components that have crossings.
"""

from __future__ import annotations

import json
import math
from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from itertools import combinations

INF = math.inf


class DiagramError(ValueError):
    """Malformed or inconsistent link description."""


@dataclass(frozen=True)
class LinkDiagram:
    pd: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    framings: tuple[int, ...]
    name: str = field(default="", compare=False)
    milnor_degree: int | float | None = field(default=None, compare=False)
    max_cabling_index: int | None = field(default=None, compare=False)
    h1_bordant_to_unlink: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.framings) != len(self.components):
            raise DiagramError(
                f"{len(self.framings)} framings for {len(self.components)} components"
            )

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_crossings(self) -> int:
        return len(self.pd)

    @property
    def free_loops(self) -> int:
        return sum(1 for c in self.components if not c)

    @property
    def key(self):
        """Framing-independent identity of the underlying diagram."""
        return (self.pd, self.signs, self.components)

    def edge_component(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    def crossing_components(self) -> list[tuple[int, int]]:
        """(under component, over component) for each crossing."""
        ec = self.edge_component()
        return [(ec[x[0]], ec[x[1]]) for x in self.pd]

    def self_writhes(self) -> list[int]:
        w = [0] * self.n_components
        for (u, o), s in zip(self.crossing_components(), self.signs):
            if u == o:
                w[u] += s
        return w

    def with_framings(self, framings: Sequence[int]) -> LinkDiagram:
        return replace(self, framings=tuple(int(a) for a in framings))

    def renamed(self, name: str, **meta) -> LinkDiagram:
        return replace(self, name=name, **meta)

    def crossings(self):
        """Crossings with explicit signs, as consumed by :func:`build_diagram`."""
        return [(*x, s) for x, s in zip(self.pd, self.signs)]

    # -- JSON -------------------------------------------------------------

    def to_json(self) -> dict:
        order = [i for i, c in enumerate(self.components) if c]
        order += [i for i, c in enumerate(self.components) if not c]
        d = self if order == list(range(self.n_components)) else permute_components(self, order)
        md = d.milnor_degree
        out = {
            "name": d.name,
            "components": d.n_components,
            "pd": [list(x) for x in d.pd],
            "framings": list(d.framings),
            "milnor_degree": "inf" if md == INF else md,
            "max_cabling_index": d.max_cabling_index,
        }
        if d.h1_bordant_to_unlink:
            out["h1_bordant_to_unlink"] = True
        if _ambiguous_crossings(d.pd, _component_ranges(d.pd)):
            out["signs"] = list(d.signs)
        return out


# -- construction ---------------------------------------------------------

def _succ_from_crossings(crossings) -> dict:
    succ = {}
    for a, b, c, d, s in crossings:
        pairs = [(a, c), (d, b) if s > 0 else (b, d)]
        for x, y in pairs:
            if x in succ:
                raise DiagramError(f"edge {x!r} leaves two crossings")
            succ[x] = y
    return succ


def build_diagram(
    crossings: Sequence[tuple[Hashable, Hashable, Hashable, Hashable, int]],
    starts: Sequence[Hashable | None],
    framings: Sequence[int] | None = None,
    **meta,
) -> LinkDiagram:
    """Normalize crossings with arbitrary edge labels into a :class:`LinkDiagram`.

    ``starts[i]`` is an edge on component ``i`` (``None`` for a crossingless
    component); components are traced from there following orientation.
    """
    succ = _succ_from_crossings(crossings)
    if set(succ.values()) != set(succ):
        raise DiagramError("edges do not close up into components")
    relabel: dict = {}
    comps = []
    nxt = 1
    for st in starts:
        if st is None:
            comps.append(())
            continue
        if st not in succ:
            raise DiagramError(f"start edge {st!r} not in diagram")
        if st in relabel:
            raise DiagramError(f"start edge {st!r} lies on an earlier component")
        cyc = []
        e = st
        while True:
            relabel[e] = nxt
            cyc.append(nxt)
            nxt += 1
            e = succ[e]
            if e == st:
                break
        comps.append(tuple(cyc))
    if len(relabel) != len(succ):
        raise DiagramError("some edges are not on any listed component")
    pd = tuple(tuple(relabel[x] for x in cr[:4]) for cr in crossings)
    signs = tuple(1 if cr[4] > 0 else -1 for cr in crossings)
    if framings is None:
        framings = [0] * len(comps)
    return LinkDiagram(pd, signs, tuple(comps), tuple(int(a) for a in framings), **meta)


def unlink(c: int, framings: Sequence[int] | None = None, name: str = "") -> LinkDiagram:
    return LinkDiagram((), (), ((),) * c, tuple(framings or [0] * c), name=name,
                       milnor_degree=INF, max_cabling_index=c if c else None)


def braid_closure(n_strands: int, word: Sequence[int], framings=None, **meta) -> LinkDiagram:
    """Closure of a braid; generator ``g > 0`` crosses positions ``g-1`` and ``g`` positively.

    Strands run upward and position 0 is the rightmost strand.
    """
    cur = [("s", i, 0) for i in range(n_strands)]
    crossings = []
    lvl = 0
    for g in word:
        k = abs(g) - 1
        if not 0 <= k < n_strands - 1:
            raise DiagramError(f"generator {g} out of range")
        lvl += 1
        se, sw = cur[k], cur[k + 1]
        ne, nw = ("s", k, lvl), ("s", k + 1, lvl)
        if g > 0:
            crossings.append((se, ne, nw, sw, 1))
        else:
            crossings.append((sw, se, ne, nw, -1))
        cur[k], cur[k + 1] = ne, nw
    close = {cur[i]: ("s", i, 0) for i in range(n_strands)}
    crossings = [tuple(close.get(x, x) for x in cr[:4]) + (cr[4],) for cr in crossings]
    # permutation of positions
    perm = list(range(n_strands))
    for g in word:
        k = abs(g) - 1
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    # perm[pos] = original strand at pos at the top; trace cycles
    where = {perm[pos]: pos for pos in range(n_strands)}
    used_positions = {abs(g) - 1 for g in word} | {abs(g) for g in word}
    seen = set()
    starts = []
    for i in range(n_strands):
        if i in seen:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = where[j]
        touched = any(x in used_positions for x in cyc)
        starts.append(("s", i, 0) if touched else None)
    return build_diagram(crossings, starts, framings, **meta)


def permute_components(L: LinkDiagram, order: Sequence[int]) -> LinkDiagram:
    starts = [L.components[i][0] if L.components[i] else None for i in order]
    return build_diagram(
        L.crossings(), starts, [L.framings[i] for i in order],
        name=L.name, milnor_degree=L.milnor_degree,
        max_cabling_index=L.max_cabling_index, h1_bordant_to_unlink=L.h1_bordant_to_unlink,
    )


# -- parsing --------------------------------------------------------------

def _component_ranges(pd) -> list[list[int]]:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in pd:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    groups: dict[int, list[int]] = {}
    for x in list(parent):
        groups.setdefault(find(x), []).append(x)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _ambiguous_crossings(pd, ranges) -> list[int]:
    succ = {}
    for g in ranges:
        for i, e in enumerate(g):
            succ[e] = g[(i + 1) % len(g)]
    return [i for i, (a, b, c, d) in enumerate(pd) if succ.get(d) == b and succ.get(b) == d]


def parse_link(data: dict | str) -> LinkDiagram:
    """Validate and load a link description (dict or JSON text)."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DiagramError("link description must be a JSON object")
    try:
        n_comp = int(data["components"])
        raw_pd = data["pd"]
        framings = [int(a) for a in data["framings"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"missing or malformed field: {exc}") from exc
    pd = []
    for x in raw_pd:
        if not (isinstance(x, (list, tuple)) and len(x) == 4):
            raise DiagramError(f"crossing {x!r} is not a 4-tuple")
        pd.append(tuple(int(e) for e in x))
    counts: dict[int, int] = {}
    for x in pd:
        for e in x:
            counts[e] = counts.get(e, 0) + 1
    bad = sorted(e for e, k in counts.items() if k != 2)
    if bad:
        raise DiagramError(f"edge labels {bad} do not appear exactly twice")
    ranges = _component_ranges(pd)
    succ = {}
    for g in ranges:
        if g != list(range(g[0], g[0] + len(g))):
            raise DiagramError(f"component edges {g} are not consecutive")
        for i, e in enumerate(g):
            succ[e] = g[(i + 1) % len(g)]
    if len(ranges) > n_comp:
        raise DiagramError(f"diagram has {len(ranges)} components, header says {n_comp}")
    if len(framings) != n_comp:
        raise DiagramError(f"{len(framings)} framings for {n_comp} components")

    signs: list[int | None] = []
    for a, b, c, d in pd:
        if succ[a] != c:
            raise DiagramError(f"under strand {a}->{c} disagrees with edge orientation")
        fwd, bwd = succ[d] == b, succ[b] == d
        if not (fwd or bwd):
            raise DiagramError(f"over strand {b},{d} is not a consecutive pair")
        signs.append(1 if fwd and not bwd else -1 if bwd and not fwd else None)
    if None in signs:
        given = data.get("signs")
        if given is not None:
            if len(given) != len(pd):
                raise DiagramError("signs list has wrong length")
            signs = [1 if int(s) > 0 else -1 for s in given]
        else:
            signs = _resolve_signs(pd, signs)
    comps = [tuple(g) for g in ranges] + [()] * (n_comp - len(ranges))
    md = data.get("milnor_degree")
    md = INF if md in ("inf", "infinity", math.inf) else (None if md is None else int(md))
    mci = data.get("max_cabling_index")
    diagram = build_diagram(
        [(*x, s) for x, s in zip(pd, signs)],
        [c[0] if c else None for c in comps],
        framings,
        name=str(data.get("name", "")),
        milnor_degree=md,
        max_cabling_index=None if mci is None else int(mci),
        h1_bordant_to_unlink=bool(data.get("h1_bordant_to_unlink", False)),
    )
    return diagram


def _resolve_signs(pd, signs):
    """Fix over-strand directions on two-edge components: every edge has one head."""
    signs = list(signs)
    while None in signs:
        heads: dict[int, int] = {}
        for (a, b, c, d), s in zip(pd, signs):
            heads[a] = heads.get(a, 0) + 1
            if s is not None:
                inc = d if s > 0 else b
                heads[inc] = heads.get(inc, 0) + 1
        progress = False
        for i, ((a, b, c, d), s) in enumerate(zip(pd, signs)):
            if s is None:
                if heads.get(b, 0) and not heads.get(d, 0):
                    signs[i] = 1
                    progress = True
                elif heads.get(d, 0) and not heads.get(b, 0):
                    signs[i] = -1
                    progress = True
        if not progress:
            raise DiagramError("over-strand direction is ambiguous; supply a 'signs' list")
    return signs


def dump_link(L: LinkDiagram) -> str:
    return json.dumps(L.to_json(), sort_keys=True)


# -- linking data ---------------------------------------------------------

def linking_matrix(L: LinkDiagram) -> list[list[int]]:
    """Symmetric linking matrix with the framings on the diagonal."""
    n = L.n_components
    twice = [[0] * n for _ in range(n)]
    for (u, o), s in zip(L.crossing_components(), L.signs):
        if u != o:
            twice[u][o] += s
            twice[o][u] += s
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                A[i][i] = L.framings[i]
            else:
                if twice[i][j] % 2:
                    raise DiagramError("odd number of crossings between two components")
                A[i][j] = twice[i][j] // 2
    return A


def total_linking(L: LinkDiagram) -> int:
    """Sum of the pairwise linking numbers."""
    A = linking_matrix(L)
    return sum(A[i][j] for i, j in combinations(range(L.n_components), 2))


def is_diagonal(L: LinkDiagram) -> bool:
    A = linking_matrix(L)
    return all(A[i][j] == 0 for i, j in combinations(range(L.n_components), 2))


def signature_triple(A: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Exact inertia ``(positive, negative, zero)`` by rational congruence diagonalization."""
    M = [[Fraction(x) for x in row] for row in A]
    n = len(M)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j turns the hyperbolic block into a nonzero diagonal
            for k in range(n):
                M[i][k] += M[j][k]
            for k in range(n):
                M[k][i] += M[k][j]
            if M[i][i] == 0:
                for k in range(n):
                    M[i][k] -= 2 * M[j][k]
                for k in range(n):
                    M[k][i] -= 2 * M[k][j]
            piv = i
        d = M[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = M[i][piv] / d
            if f:
                for k in range(n):
                    M[i][k] -= f * M[piv][k]
        for i in active:
            M[piv][i] = M[i][piv] = Fraction(0)
    return pos, neg, n - pos - neg


def _rank_mod(A, p: int | None) -> int:
    M = [[Fraction(x) if p is None else x % p for x in row] for row in A]
    rows, cols = len(M), len(M[0]) if M else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c] if p is None else pow(M[r][c], -1, p)
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
                if p is not None:
                    M[i] = [x % p for x in M[i]]
        r += 1
    return r


def smith_diagonal(A: Sequence[Sequence[int]]) -> list[int]:
    """Nonnegative Smith invariants ``d_1 | d_2 | ...`` (zeros last)."""
    M = [list(map(int, row)) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(M[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if M[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        M[t], M[i] = M[i], M[t]
        for row in M:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                q = M[i][t] // M[t][t]
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[t])]
                if M[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = M[t][j] // M[t][t]
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if M[i][j] % M[t][t]), None)
                if bad is None:
                    break
                M[t] = [x + y for x, y in zip(M[t], M[bad[0]])]
                continue
            nz = [(abs(M[i][t]), i, 0) for i in range(t, rows) if M[i][t]]
            nz += [(abs(M[t][j]), t, j) for j in range(t + 1, cols) if M[t][j]]
            _, i, j = min(nz)
            if j == 0:
                M[t], M[i] = M[i], M[t]
            else:
                for row in M:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(M[t][t]))
        t += 1
    return diag + [0] * (min(rows, cols) - len(diag))


@dataclass(frozen=True)
class Homology:
    betti: int
    betti_mod_p: int
    torsion_order: int | float  # |H_1| when finite, else inf
    invariants: tuple[int, ...]


def homology(A: Sequence[Sequence[int]], p: int) -> Homology:
    """First homology of the surgered manifold from its linking matrix."""
    n = len(A)
    if n == 0:
        return Homology(0, 0, 1, ())
    snf = smith_diagonal(A)
    b = sum(1 for d in snf if d == 0)
    bp = n - _rank_mod(A, p)
    assert b == n - _rank_mod(A, None)
    order = math.prod(snf) if b == 0 else INF
    return Homology(b, bp, order, tuple(snf))


# -- diagram operations ---------------------------------------------------

def mirror(L: LinkDiagram) -> LinkDiagram:
    pd, signs = [], []
    for (a, b, c, d), s in zip(L.pd, L.signs):
        pd.append((d, a, b, c) if s > 0 else (b, c, d, a))
        signs.append(-s)
    return replace(L, pd=tuple(pd), signs=tuple(signs),
                   framings=tuple(-a for a in L.framings),
                   name=f"mirror({L.name})" if L.name else "")


def reverse_component(L: LinkDiagram, i: int) -> LinkDiagram:
    if not 0 <= i < L.n_components:
        raise IndexError(f"component index {i} out of range")
    comp = set(L.components[i])
    crossings = []
    for (a, b, c, d), s in zip(L.pd, L.signs):
        under_rev, over_rev = a in comp, b in comp
        if under_rev:
            a, b, c, d = c, d, a, b
        if under_rev != over_rev:
            s = -s
        crossings.append((a, b, c, d, s))
    starts = [c[0] if c else None for c in L.components]
    return build_diagram(crossings, starts, L.framings, name=L.name,
                         milnor_degree=L.milnor_degree, max_cabling_index=L.max_cabling_index)


def distant_union(L1: LinkDiagram, L2: LinkDiagram) -> LinkDiagram:
    off = max((e for x in L1.pd for e in x), default=0)
    crossings = L1.crossings() + [tuple(e + off for e in x[:4]) + (x[4],) for x in L2.crossings()]
    starts = [c[0] if c else None for c in L1.components]
    starts += [c[0] + off if c else None for c in L2.components]
    md = None
    if L1.milnor_degree is not None and L2.milnor_degree is not None:
        md = min(L1.milnor_degree, L2.milnor_degree)
    name = f"{L1.name}+{L2.name}" if L1.name or L2.name else ""
    return build_diagram(crossings, starts, L1.framings + L2.framings, name=name,
                         milnor_degree=md)


def sublink(L: LinkDiagram, keep: Sequence[int]) -> LinkDiagram:
    """The sublink on the listed components (in the given order)."""
    keep = list(keep)
    kept = set(keep)
    ec = L.edge_component()
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    crossings = []
    for (a, b, c, d), s in zip(L.pd, L.signs):
        u_in, o_in = ec[a] in kept, ec[b] in kept
        if u_in and o_in:
            crossings.append((a, b, c, d, s))
        elif u_in:
            parent[find(a)] = find(c)
        elif o_in:
            parent[find(b)] = find(d)
    crossings = [tuple(find(e) for e in x[:4]) + (x[4],) for x in crossings]
    present = {e for x in crossings for e in x[:4]}
    starts = []
    for i in keep:
        comp = L.components[i]
        st = find(comp[0]) if comp else None
        starts.append(st if st in present else None)
    return build_diagram(crossings, starts, [L.framings[i] for i in keep])


def sublinks(L: LinkDiagram):
    """All ``2^l`` sublinks as ``(indices, diagram)`` pairs, smallest first."""
    out = []
    n = L.n_components
    for s in range(n + 1):
        for idx in combinations(range(n), s):
            out.append((idx, sublink(L, idx)))
    return out


def cable(L: LinkDiagram, c: Sequence[int], zero_framed: bool = True) -> LinkDiagram:
    """Replace component ``i`` by ``c[i]`` parallel copies.

    With ``zero_framed`` the copies of each component get pairwise linking
    number zero: ``-w`` full twists are inserted on the copies of a
    component of self-writhe ``w``. Otherwise the blackboard parallel is
    returned. Copies of component ``i`` come out in order, rightmost first.
    """
    c = list(c)
    if len(c) != L.n_components:
        raise ValueError("cabling length must match the number of components")
    if any(ci < 0 for ci in c):
        raise ValueError("negative cabling index")
    keep = [i for i, ci in enumerate(c) if ci > 0]
    if len(keep) < L.n_components:
        L = sublink(L, keep)
        c = [c[i] for i in keep]
    ec = L.edge_component()
    writhes = L.self_writhes()
    twist_edge = {}
    if zero_framed:
        for i, comp in enumerate(L.components):
            if comp and writhes[i] and c[i] > 1:
                twist_edge[comp[0]] = i

    def copy_label(e, k, incoming):
        if incoming and e in twist_edge:
            return ("in", e, k)
        return ("e", e, k)

    crossings = []
    for X, ((a, b, cc, d), s) in enumerate(zip(L.pd, L.signs)):
        cu, cv = c[ec[a]], c[ec[b]]
        b_in, d_in = (s < 0), (s > 0)

        def vseg(u, r):
            if r == 0:
                return copy_label(a, u, True)
            if r == cv:
                return copy_label(cc, u, False)
            return ("xv", X, u, r)

        def hseg(v, q):
            if q == 0:
                return copy_label(d, v, d_in)
            if q == cu:
                return copy_label(b, v, b_in)
            return ("xh", X, v, q)

        for x in range(cu):
            u = cu - 1 - x
            for y in range(cv):
                v = y if s > 0 else cv - 1 - y
                crossings.append((vseg(u, y), hseg(v, x + 1), vseg(u, y + 1), hseg(v, x), s))

    for e, i in twist_edge.items():
        n = c[i]
        w = writhes[i]
        gen = -1 if w > 0 else 1
        word = [gen * g for _ in range(abs(w)) for _ in range(n) for g in range(1, n)]
        cur = [("e", e, k) for k in range(n)]
        for lvl, g in enumerate(word, start=1):
            k = abs(g) - 1
            se, sw = cur[k], cur[k + 1]
            ne, nw = ("tw", e, lvl, k), ("tw", e, lvl, k + 1)
            if g > 0:
                crossings.append((se, ne, nw, sw, 1))
            else:
                crossings.append((sw, se, ne, nw, -1))
            cur[k], cur[k + 1] = ne, nw
        top = {cur[k]: ("in", e, k) for k in range(n)}
        crossings = [tuple(top.get(x, x) for x in cr[:4]) + (cr[4],) for cr in crossings]

    starts, framings = [], []
    for i, comp in enumerate(L.components):
        for k in range(c[i]):
            starts.append(("e", comp[0], k) if comp else None)
            framings.append(0 if zero_framed else writhes[i])
    name = f"{L.name}^{tuple(c)}" if L.name else ""
    return build_diagram(crossings, starts, framings, name=name)


# -- catalog --------------------------------------------------------------

def _catalog_files():
    return resources.files("qorders") / "data"


def catalog_names() -> list[str]:
    return sorted(p.name[:-5] for p in _catalog_files().iterdir() if p.name.endswith(".json"))


def catalog(name: str) -> LinkDiagram:
    """Built-in link by name; ``unknot_<a>`` gives the ``a``-framed unknot."""
    if name.startswith("unknot_"):
        try:
            a = int(name[len("unknot_"):])
        except ValueError:
            raise KeyError(f"unknown catalog link {name!r}") from None
        base = catalog("unknot").with_framings([a])
        return base.renamed(name, h1_bordant_to_unlink=base.h1_bordant_to_unlink and a == 0)
    path = _catalog_files() / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"unknown catalog link {name!r}")
    return parse_link(path.read_text())


def load_link(spec: str) -> LinkDiagram:
    """A catalog name or a path to a link JSON file."""
    try:
        return catalog(spec)
    except KeyError:
        pass
    try:
        with open(spec) as fh:
            text = fh.read()
    except OSError as exc:
        raise DiagramError(f"{spec!r} is neither a catalog name nor a readable file") from exc
    return parse_link(text)
