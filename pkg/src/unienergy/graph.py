"""Simple undirected graphs on vertices 0..n-1 and the structural queries
the rest of the package needs (cycles, matchings, distances, text I/O)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import Disconnected, GraphFormatError, MultipleCycles

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge {u}-{v} out of range for n={self.n}")
            norm.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> LabeledGraph:
        edges = list(edges)
        seen = {_norm(int(u), int(v)) for u, v in edges if u != v}
        if len(seen) != len(edges):
            raise GraphFormatError("duplicate edge or self-loop")
        return cls(n, frozenset(seen))

    # -- basic structure -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    # -- derived graphs --------------------------------------------------

    def add_edges(self, *edges: Edge) -> LabeledGraph:
        return LabeledGraph(self.n, self.edges | {_norm(u, v) for u, v in edges})

    def remove_edges(self, *edges: Edge) -> LabeledGraph:
        drop = {_norm(u, v) for u, v in edges}
        missing = drop - self.edges
        if missing:
            raise KeyError(f"edges not present: {sorted(missing)}")
        return LabeledGraph(self.n, self.edges - drop)

    def isolate(self, v: int) -> LabeledGraph:
        """Drop every edge at ``v`` but keep the vertex: (G - v) u K_1."""
        return LabeledGraph(self.n, frozenset(e for e in self.edges if v not in e))

    def induced(self, keep: Iterable[int]) -> LabeledGraph:
        """Induced subgraph on ``keep``, relabeled 0..k-1 in increasing order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        return LabeledGraph(
            len(keep),
            frozenset(
                _norm(index[u], index[v])
                for u, v in self.edges
                if u in index and v in index
            ),
        )

    def remove_vertices(self, *vs: int) -> LabeledGraph:
        gone = set(vs)
        return self.induced(v for v in range(self.n) if v not in gone)

    def relabel(self, perm: Sequence[int]) -> LabeledGraph:
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return LabeledGraph(self.n, frozenset(_norm(perm[u], perm[v]) for u, v in self.edges))

    def disjoint_union(self, other: LabeledGraph) -> LabeledGraph:
        k = self.n
        return LabeledGraph(
            k + other.n,
            self.edges | {(u + k, v + k) for u, v in other.edges},
        )

    # -- global properties -----------------------------------------------

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def cyclomatic_number(self) -> int:
        return self.m - self.n + len(self.components())

    def is_forest(self) -> bool:
        return self.cyclomatic_number() == 0

    def is_tree(self) -> bool:
        return self.is_forest() and self.is_connected() and self.n > 0

    def is_unicyclic(self) -> bool:
        return self.is_connected() and self.m == self.n and self.n >= 3

    def component_cycle_counts(self) -> list[int]:
        """Cyclomatic number of each connected component."""
        out = []
        for comp in self.components():
            s = set(comp)
            m = sum(1 for u, v in self.edges if u in s)
            out.append(m - len(comp) + 1)
        return out

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def __str__(self) -> str:
        return format_graph(self)


# ---------------------------------------------------------------------------
# cycles and distances


@dataclass(frozen=True)
class UnicyclicWitness:
    cycle_vertices: tuple[int, ...]

    @property
    def girth(self) -> int:
        return len(self.cycle_vertices)

    def cycle_edges(self) -> list[Edge]:
        c = self.cycle_vertices
        return [_norm(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def cycle_core(g: LabeledGraph) -> set[int]:
    """Vertices left after repeatedly stripping degree <= 1 vertices."""
    deg = g.degrees()
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return {v for v in range(g.n) if alive[v]}


def order_cycle(g: LabeledGraph, core: set[int]) -> tuple[int, ...]:
    """Walk the 2-regular core starting from its smallest vertex."""
    start = min(core)
    nxt = min(w for w in g.adj[start] if w in core)
    cycle = [start]
    prev, cur = start, nxt
    while cur != start:
        cycle.append(cur)
        step = [w for w in g.adj[cur] if w in core and w != prev]
        prev, cur = cur, step[0]
    return tuple(cycle)


def girth_and_cycle(g: LabeledGraph) -> UnicyclicWitness | None:
    """Unique cycle of a connected graph, or ``None`` for a tree."""
    if not g.is_connected():
        raise Disconnected("girth_and_cycle needs a connected graph")
    if g.m > g.n:
        raise MultipleCycles(f"{g.m} edges on {g.n} vertices")
    if g.m < g.n:
        return None
    return UnicyclicWitness(order_cycle(g, cycle_core(g)))


def bfs_distances(g: LabeledGraph, sources: Iterable[int]) -> list[int]:
    """Distance to the nearest source; -1 for unreachable vertices."""
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def cycle_distance_profile(g: LabeledGraph, w: UnicyclicWitness) -> tuple[int, int]:
    """Return ``(d, t)``: the largest distance from a vertex to the cycle and
    how many vertices attain it."""
    dist = bfs_distances(g, w.cycle_vertices)
    d = max(dist)
    return d, dist.count(d)


def max_degree(g: LabeledGraph) -> int:
    return max(g.degrees(), default=0)


# ---------------------------------------------------------------------------
# matchings


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def covers(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def is_perfect_for(self, g: LabeledGraph) -> bool:
        return len(self.edges) * 2 == g.n and len(self.covers()) == g.n

    def partner(self, v: int) -> int | None:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None


def has_perfect_matching(g: LabeledGraph) -> Matching | None:
    """Some perfect matching of ``g`` or ``None``.

    Branches on the unmatched vertex with the fewest free neighbours, so a
    forced choice (one free neighbour) never branches; failed vertex subsets
    are memoised.
    """
    if g.n % 2:
        return None
    full = (1 << g.n) - 1
    adj = g.adj
    dead: set[int] = set()

    def solve(used: int) -> list[Edge] | None:
        if used == full:
            return []
        if used in dead:
            return None
        best, best_opts = -1, None
        for v in range(g.n):
            if used >> v & 1:
                continue
            opts = sorted(w for w in adj[v] if not used >> w & 1)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if len(opts) <= 1:
                    break
        for w in best_opts:
            rest = solve(used | 1 << best | 1 << w)
            if rest is not None:
                rest.append(_norm(best, w))
                return rest
        dead.add(used)
        return None

    found = solve(0)
    return None if found is None else Matching(frozenset(found))


def perfect_matchings(g: LabeledGraph) -> Iterator[Matching]:
    """Every perfect matching, each exactly once (lowest free vertex first)."""
    if g.n % 2:
        return

    def rec(used: int, acc: list[Edge]) -> Iterator[Matching]:
        v = next((i for i in range(g.n) if not used >> i & 1), None)
        if v is None:
            yield Matching(frozenset(acc))
            return
        for w in sorted(g.adj[v]):
            if not used >> w & 1:
                acc.append(_norm(v, w))
                yield from rec(used | 1 << v | 1 << w, acc)
                acc.pop()

    yield from rec(0, [])


# ---------------------------------------------------------------------------
# text formats


def format_graph(g: LabeledGraph) -> str:
    return "; ".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()])


def parse_edge_list(text: str) -> LabeledGraph:
    parts = [p.strip() for p in text.strip().split(";")]
    parts = [p for p in parts if p]
    if not parts:
        raise GraphFormatError("empty graph description")
    try:
        n = int(parts[0])
        edges = [tuple(int(t) for t in p.split()) for p in parts[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"cannot parse {text!r}") from exc
    if any(len(e) != 2 for e in edges):
        raise GraphFormatError(f"edges must be 'u v' pairs in {text!r}")
    return LabeledGraph.from_edges(n, edges)


def _g6_bits_to_chars(bits: list[int]) -> str:
    bits = bits + [0] * (-len(bits) % 6)
    return "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )


def to_graph6(g: LabeledGraph) -> str:
    n = g.n
    if n < 63:
        head = chr(63 + n)
    elif n < 258048:
        head = "~" + _g6_bits_to_chars([int(b) for b in format(n, "018b")])
    else:
        raise GraphFormatError("graph6 supports n < 258048 here")
    bits = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    return head + _g6_bits_to_chars(bits)


def from_graph6(text: str) -> LabeledGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    vals = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in vals):
        raise GraphFormatError(f"invalid graph6 string {text!r}")
    if vals and vals[0] == 63:
        if len(vals) > 1 and vals[1] == 63:
            raise GraphFormatError("graph6 with n >= 258048 is not supported")
        n = int("".join(format(v, "06b") for v in vals[1:4]), 2)
        body = vals[4:]
    else:
        n, body = vals[0], vals[1:]
    bits = "".join(format(v, "06b") for v in body)
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise GraphFormatError("graph6 body too short")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return LabeledGraph.from_edges(n, edges)


def parse_graph(line: str) -> LabeledGraph:
    """Accepts ``n; u v; ...`` or a graph6 string (optionally ``>>graph6<<``-prefixed)."""
    s = line.strip()
    if s.startswith(">>graph6<<") or ";" not in s:
        if s.isdigit():
            return LabeledGraph(int(s))
        return from_graph6(s)
    return parse_edge_list(s)


def read_graphs(path) -> list[LabeledGraph]:
    with open(path) as fh:
        lines = [ln for ln in (raw.strip() for raw in fh) if ln and not ln.startswith("#")]
    return [parse_graph(ln) for ln in lines]


# ---------------------------------------------------------------------------
# small constructors used throughout


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise GraphFormatError("a cycle needs at least 3 vertices")
    return LabeledGraph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset((0, i) for i in range(1, n)))


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n)
