"""Graph surgeries that lower the b-sequence.

Each surgery comes with a finder returning every valid anchor tuple of a
graph, so the dominance lemmas can be checked exhaustively per graph.

Anchor layouts (all vertices are labels of the input graph):

* EGT   (u, v): tree edge with both ends non-pendant. v is contracted into u
  and reappears as a new leaf on u.
* OpI   (x, y, z, w): in a tree, x-y-z is a pendant path (deg x = 1,
  deg y = 2) and w is another neighbour of z with deg w = 2. Edge xy is
  replaced by xw.
* OpII  (x1, x2, x3, y1, y2): in a member of U_n with girth 0 mod 4 and
  d >= 3, x1 and y1 are at the maximal distance d from the cycle and their
  paths towards it meet at x3 (x2 != y2). Edges x3y2, y2y1 are replaced by
  y1x1, y2x2.
* OpIII (x1, x2, x3, z1, y1, y2, y3, zi): d = 3, x1x2x3z1 and y1y2y3zi are
  paths to distinct cycle vertices z1 != zi, deg x3 = deg y3 = 2. Edges
  y1y2, y2y3 are replaced by y1x1, y2x2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import NotATree, PendantEdge, PreconditionViolated
from .graph import (
    Edge,
    LabeledGraph,
    bfs_distances,
    girth_and_cycle,
    has_perfect_matching,
    max_degree,
)

KINDS = ("EGT", "OpI", "OpII", "OpIII")


@dataclass(frozen=True)
class SurgeryDescriptor:
    kind: str
    anchors: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.anchors}"


# ---------------------------------------------------------------------------
# edge-growing transformation


def egt(t: LabeledGraph, e: Edge) -> LabeledGraph:
    if not t.is_tree():
        raise NotATree("e.g.t is defined on trees")
    u, v = e
    if not t.has_edge(u, v):
        raise KeyError(f"{e} is not an edge")
    if t.degree(u) == 1 or t.degree(v) == 1:
        raise PendantEdge(f"edge {u}-{v} is pendant")
    moved = [(w, v) for w in t.adj[v] if w != u]
    return t.remove_edges(*moved).add_edges(*[(u, w) for w, _ in moved])


def egt_anchors(t: LabeledGraph) -> list[SurgeryDescriptor]:
    if not t.is_tree():
        return []
    out = []
    for u, v in t.sorted_edges():
        if t.degree(u) > 1 and t.degree(v) > 1:
            # contracting into either end gives isomorphic trees; both are listed
            out.append(SurgeryDescriptor("EGT", (u, v)))
            out.append(SurgeryDescriptor("EGT", (v, u)))
    return out


# ---------------------------------------------------------------------------
# Operation I


def _op1_problem(t: LabeledGraph, x: int, y: int, z: int, w: int) -> str | None:
    if not t.is_tree():
        return "input must be a tree"
    if len({x, y, z, w}) != 4:
        return "anchors must be four distinct vertices"
    if t.degree(x) != 1 or not t.has_edge(x, y):
        return "x must be a leaf hanging on y"
    if t.degree(y) != 2 or not t.has_edge(y, z):
        return "y must have degree 2 with neighbours x and z"
    if not t.has_edge(z, w):
        return "w must be a neighbour of z"
    if t.degree(w) != 2:
        return "w must have degree 2"
    return None


def op1(t: LabeledGraph, anchors: tuple[int, int, int, int]) -> LabeledGraph:
    x, y, z, w = anchors
    problem = _op1_problem(t, x, y, z, w)
    if problem:
        raise PreconditionViolated(f"Operation I: {problem}")
    return t.remove_edges((x, y)).add_edges((x, w))


def op1_anchors(t: LabeledGraph) -> list[SurgeryDescriptor]:
    if not t.is_tree():
        return []
    out = []
    for x in range(t.n):
        if t.degree(x) != 1:
            continue
        (y,) = t.adj[x]
        if t.degree(y) != 2:
            continue
        (z,) = t.adj[y] - {x}
        for w in sorted(t.adj[z] - {y}):
            if t.degree(w) == 2:
                out.append(SurgeryDescriptor("OpI", (x, y, z, w)))
    return out


# ---------------------------------------------------------------------------
# Operations II and III


@dataclass(frozen=True)
class _UnicyclicInfo:
    girth: int
    cycle: tuple[int, ...]
    dist: tuple[int, ...]
    d: int


def _un_info(g: LabeledGraph) -> tuple[_UnicyclicInfo | None, str | None]:
    """Structure used by Operations II/III, or the failed membership clause."""
    if not g.is_connected():
        return None, "G must be connected"
    if g.m != g.n:
        return None, "G must be unicyclic"
    if max_degree(g) > 3:
        return None, "G must have maximum degree at most 3"
    if has_perfect_matching(g) is None:
        return None, "G must have a perfect matching"
    w = girth_and_cycle(g)
    dist = bfs_distances(g, w.cycle_vertices)
    return _UnicyclicInfo(w.girth, tuple(w.cycle_vertices), tuple(dist), max(dist)), None


def _op2_problem(g: LabeledGraph, info, anchors) -> str | None:
    if info.girth % 4:
        return "girth must be divisible by 4"
    if info.d < 3:
        return "d(G) must be at least 3"
    x1, x2, x3, y1, y2 = anchors
    if len(set(anchors)) != 5:
        return "anchors must be five distinct vertices"
    dist, d = info.dist, info.d
    if dist[x1] != d or dist[y1] != d:
        return "x1 and y1 must lie at distance d from the cycle"
    for a, b in ((x1, x2), (x2, x3), (y1, y2), (y2, x3)):
        if not g.has_edge(a, b):
            return f"missing path edge {a}-{b}"
    if dist[x3] != d - 2:
        return "x3 must be the common vertex at distance d - 2"
    return None


def op2(g: LabeledGraph, anchors: tuple[int, int, int, int, int]) -> LabeledGraph:
    info, problem = _un_info(g)
    if problem is None:
        problem = _op2_problem(g, info, anchors)
    if problem:
        raise PreconditionViolated(f"Operation II: {problem}")
    x1, x2, x3, y1, y2 = anchors
    return g.remove_edges((x3, y2), (y2, y1)).add_edges((y1, x1), (y2, x2))


def op2_anchors(g: LabeledGraph) -> list[SurgeryDescriptor]:
    info, problem = _un_info(g)
    if problem or info.girth % 4 or info.d < 3:
        return []
    dist, d = info.dist, info.d
    out = []
    for x3 in range(g.n):
        if dist[x3] != d - 2:
            continue
        # children of x3 that lead to a vertex at distance d
        branches = []
        for c in sorted(g.adj[x3]):
            if dist[c] == d - 1:
                for leaf in sorted(g.adj[c]):
                    if dist[leaf] == d:
                        branches.append((c, leaf))
        for (x2, x1), (y2, y1) in permutations(branches, 2):
            if x2 != y2:
                out.append(SurgeryDescriptor("OpII", (x1, x2, x3, y1, y2)))
    return out


def _op3_problem(g: LabeledGraph, info, anchors) -> str | None:
    if info.girth % 4:
        return "girth must be divisible by 4"
    if info.d != 3:
        return "d(G) must equal 3"
    x1, x2, x3, z1, y1, y2, y3, zi = anchors
    if len(set(anchors)) != 8:
        return "anchors must be eight distinct vertices"
    on_cycle = set(info.cycle)
    if z1 not in on_cycle or zi not in on_cycle:
        return "z1 and zi must be cycle vertices"
    for a, b in ((x1, x2), (x2, x3), (x3, z1), (y1, y2), (y2, y3), (y3, zi)):
        if not g.has_edge(a, b):
            return f"missing path edge {a}-{b}"
    if info.dist[x1] != 3 or info.dist[y1] != 3:
        return "x1 and y1 must lie at distance 3 from the cycle"
    if g.degree(x3) != 2 or g.degree(y3) != 2:
        return "x3 and y3 must have degree 2"
    return None


def op3(g: LabeledGraph, anchors: tuple[int, ...]) -> LabeledGraph:
    info, problem = _un_info(g)
    if problem is None:
        problem = _op3_problem(g, info, anchors)
    if problem:
        raise PreconditionViolated(f"Operation III: {problem}")
    x1, x2, x3, z1, y1, y2, y3, zi = anchors
    return g.remove_edges((y1, y2), (y2, y3)).add_edges((y1, x1), (y2, x2))


def _hanging_paths3(g: LabeledGraph, info) -> list[tuple[int, int, int, int]]:
    """(v1, v2, v3, z): paths from a distance-3 vertex down to the cycle with deg v3 = 2."""
    out = []
    for v1 in range(g.n):
        if info.dist[v1] != 3:
            continue
        for v2 in sorted(g.adj[v1]):
            if info.dist[v2] != 2:
                continue
            for v3 in sorted(g.adj[v2]):
                if info.dist[v3] != 1 or g.degree(v3) != 2:
                    continue
                (z,) = [w for w in g.adj[v3] if info.dist[w] == 0]
                out.append((v1, v2, v3, z))
    return out


def op3_anchors(g: LabeledGraph) -> list[SurgeryDescriptor]:
    info, problem = _un_info(g)
    if problem or info.girth % 4 or info.d != 3:
        return []
    paths = _hanging_paths3(g, info)
    out = []
    for xp, yp in permutations(paths, 2):
        if xp[3] != yp[3]:
            out.append(SurgeryDescriptor("OpIII", xp + yp))
    return out


# ---------------------------------------------------------------------------
# cut-edge and vertex deletions


def cut_edges(g: LabeledGraph) -> list[Edge]:
    base = len(g.components())
    return [e for e in g.sorted_edges() if len(g.remove_edges(e).components()) > base]


def delete_cut_edge(g: LabeledGraph, e: Edge) -> LabeledGraph:
    if e not in cut_edges(g):
        raise PreconditionViolated(f"{e} is not a cut edge")
    return g.remove_edges(e)


def delete_vertex(g: LabeledGraph, v: int) -> LabeledGraph:
    """(G - v) together with an isolated vertex, keeping the order."""
    if g.degree(v) == 0:
        raise PreconditionViolated(f"vertex {v} is already isolated")
    return g.isolate(v)


# ---------------------------------------------------------------------------
# uniform entry points


FINDERS = {"EGT": egt_anchors, "OpI": op1_anchors, "OpII": op2_anchors, "OpIII": op3_anchors}


def find_anchors(g: LabeledGraph, kind: str) -> list[SurgeryDescriptor]:
    if kind not in FINDERS:
        raise ValueError(f"unknown surgery {kind!r}; expected one of {KINDS}")
    return FINDERS[kind](g)


def apply(g: LabeledGraph, s: SurgeryDescriptor) -> LabeledGraph:
    if s.kind == "EGT":
        return egt(g, s.anchors)
    if s.kind == "OpI":
        return op1(g, s.anchors)
    if s.kind == "OpII":
        return op2(g, s.anchors)
    if s.kind == "OpIII":
        return op3(g, s.anchors)
    raise ValueError(f"unknown surgery {s.kind!r}")
