"""Isomorphism-invariant keys.

Components with at most one cycle get exact structural codes (AHU codes for
trees, dihedral-minimal sequences of rooted-tree codes for unicyclic parts),
which are linear-ish in size and carry no size limit. Everything else goes
through a colour-refinement / individualisation search that returns the
lexicographically smallest relabelled edge list.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import SizeLimit
from .graph import LabeledGraph, cycle_core, order_cycle

DEFAULT_LIMIT = 24


@total_ordering
@dataclass(frozen=True)
class CanonicalForm:
    key: bytes

    def __lt__(self, other: CanonicalForm) -> bool:
        return self.key < other.key

    def hex(self) -> str:
        return self.key.hex()

    def __str__(self) -> str:
        return self.key.decode()


def canonical_form(g: LabeledGraph, *, method: str = "auto", limit: int | None = DEFAULT_LIMIT) -> CanonicalForm:
    """Relabel-invariant key; equal keys iff the graphs are isomorphic.

    ``method="search"`` forces the refinement search on every component, which
    is what the independent enumeration oracle uses.
    """
    if limit is not None and g.n > limit:
        raise SizeLimit(f"canonical_form supports n <= {limit}, got {g.n}")
    if method not in ("auto", "search"):
        raise ValueError(f"unknown method {method!r}")
    codes = []
    for comp in g.components():
        h = g.induced(comp)
        codes.append(search_code(h) if method == "search" else component_code(h))
    codes.sort()
    return CanonicalForm(";".join(codes).encode())


def component_code(h: LabeledGraph) -> str:
    """Code for a connected graph, dispatching on its cycle count."""
    if h.m == h.n - 1:
        return "T" + tree_code(h)
    if h.m == h.n:
        return "U" + unicyclic_code(h)
    return search_code(h)


# ---------------------------------------------------------------------------
# trees


def _rooted_code(adj, root: int, blocked: set[int]) -> str:
    # iterative post-order so deep paths do not hit the recursion limit
    parent = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w != parent[u] and w not in blocked:
                parent[w] = u
                order.append(w)
                stack.append(w)
    kids: dict[int, list[str]] = {}
    code = ""
    for u in reversed(order):
        code = "(" + "".join(sorted(kids.pop(u, []))) + ")"
        p = parent[u]
        if p >= 0:
            kids.setdefault(p, []).append(code)
    return code


def tree_centers(t: LabeledGraph) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    deg = t.degrees()
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def tree_code(t: LabeledGraph) -> str:
    if t.n == 0:
        return ""
    return min(_rooted_code(t.adj, c, set()) for c in tree_centers(t))


# ---------------------------------------------------------------------------
# unicyclic


def unicyclic_code(h: LabeledGraph) -> str:
    cycle = order_cycle(h, cycle_core(h))
    on_cycle = set(cycle)
    seq = [_rooted_code(h.adj, c, on_cycle - {c}) for c in cycle]
    g = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for r in range(g):
            cand = tuple(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return "|".join(best)


# ---------------------------------------------------------------------------
# general graphs: refinement + individualisation


def _refine(adj, colors: list[int]) -> list[int]:
    n = len(colors)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def search_code(h: LabeledGraph) -> str:
    """Smallest edge list over all leaves of the individualisation tree."""
    n = h.n
    if n == 0:
        return "G0"
    adj = h.adj
    best: list[tuple] = []

    def leaf(colors: list[int]) -> tuple:
        return tuple(sorted(
            (min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in h.edges
        ))

    def walk(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            code = leaf(colors)
            if not best or code < best[0]:
                best[:] = [code]
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                walk([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)])

    walk([len(adj[v]) for v in range(n)])
    return f"G{n}:" + ",".join(f"{u}-{v}" for u, v in best[0])


def is_isomorphic(g1: LabeledGraph, g2: LabeledGraph, *, limit: int | None = None) -> bool:
    if (g1.n, g1.m) != (g2.n, g2.m) or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1, limit=limit) == canonical_form(g2, limit=limit)
