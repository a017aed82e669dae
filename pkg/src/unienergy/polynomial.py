"""Exact characteristic polynomials and b-sequences.

Coefficients are stored in "a-order": ``a[i]`` multiplies ``x**(n - i)``, so a
graph of order n has ``n + 1`` entries and ``a[0] == 1``. Everything here is
plain Python integers.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Sequence

from .canon import component_code
from .errors import NotAForest, OutOfClass, SizeLimit, UnsupportedStructure
from .graph import Edge, LabeledGraph, cycle_core, order_cycle

DET_LIMIT = 16


@dataclass(frozen=True)
class CharPoly:
    a: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.a) - 1

    @property
    def b(self) -> CoefficientSequence:
        return CoefficientSequence(tuple(abs(c) for c in self.a))

    def __call__(self, x):
        acc = 0
        for c in self.a:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return poly_str(self.a)


@dataclass(frozen=True)
class CoefficientSequence:
    b: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.b)

    def __getitem__(self, i: int) -> int:
        # b_j = 0 for j < 0 (and past the end)
        if 0 <= i < len(self.b):
            return self.b[i]
        return 0

    def __iter__(self):
        return iter(self.b)


def poly_str(a: Sequence[int], var: str = "x") -> str:
    n = len(a) - 1
    terms = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        p = n - i
        mag = abs(c)
        if p == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + ("" if p == 1 else f"^{p}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# oracle: division-free determinant expansion


def charpoly_det(g: LabeledGraph, *, limit: int = DET_LIMIT) -> CharPoly:
    """det(xI - A) by the Samuelson-Berkowitz recurrence (integers only)."""
    if g.n > limit:
        raise SizeLimit(f"charpoly_det supports n <= {limit}, got {g.n}")
    n = g.n
    A = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        A[u][v] = A[v][u] = 1
    poly = [1]
    for r in range(n):
        col = [A[i][r] for i in range(r)]
        row = A[r][:r]
        toeplitz = [1, -A[r][r]]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(A[i][j] * vec[j] for j in range(r)) for i in range(r)]
        poly = [
            sum(toeplitz[i - j] * poly[j] for j in range(len(poly)) if 0 <= i - j < len(toeplitz))
            for i in range(r + 2)
        ]
    return CharPoly(tuple(poly))


# ---------------------------------------------------------------------------
# deletion recurrence


class PolyCache:
    """Bounded LRU map from component code to coefficient tuple.

    Reads and insert-if-absent are serialised by one lock, so concurrent
    callers never observe a partially written entry.
    """

    def __init__(self, maxsize: int = 200_000):
        self.maxsize = maxsize
        self._data: OrderedDict[str, tuple[int, ...]] = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key: str) -> tuple[int, ...] | None:
        with self._lock:
            val = self._data.get(key)
            if val is not None:
                self._data.move_to_end(key)
            return val

    def setdefault(self, key: str, value: tuple[int, ...]) -> tuple[int, ...]:
        with self._lock:
            cur = self._data.get(key)
            if cur is not None:
                return cur
            self._data[key] = value
            if len(self._data) > self.maxsize:
                self._data.popitem(last=False)
            return value

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


_default_cache = PolyCache()


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _sub_shifted(target: list[int], q: Sequence[int], shift: int, scale: int = 1) -> None:
    for i, c in enumerate(q):
        target[i + shift] -= scale * c


def charpoly_recursive(g: LabeledGraph, *, cache: PolyCache | None = None) -> CharPoly:
    """Characteristic polynomial through edge deletion.

    Every component must have at most one cycle. Trees are reduced along a
    pendant edge, unicyclic components along a cycle edge; components are
    memoised on their structural code.
    """
    cache = _default_cache if cache is None else cache
    return CharPoly(tuple(_forest_poly(g, cache)))


def _forest_poly(g: LabeledGraph, cache: PolyCache) -> list[int]:
    out = [1]
    for comp in g.components():
        out = poly_mul(out, _component_poly(g.induced(comp), cache))
    return out


def _component_poly(h: LabeledGraph, cache: PolyCache) -> tuple[int, ...]:
    # h is connected, so K_1 and K_2 are the only graphs below three vertices
    if h.n <= 2:
        return ((1,), (1, 0), (1, 0, -1))[h.n]
    if h.m > h.n:
        raise UnsupportedStructure("a component has two or more independent cycles")
    key = component_code(h)
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = h.n
    if h.m == n - 1:
        leaf = min(v for v in range(n) if h.degree(v) == 1)
        (stem,) = h.adj[leaf]
        res = list(_component_poly(h.remove_vertices(leaf), cache)) + [0]
        _sub_shifted(res, _forest_poly(h.remove_vertices(leaf, stem), cache), 2)
    else:
        cycle = order_cycle(h, cycle_core(h))
        u, v = cycle[0], cycle[1]
        res = list(_component_poly(h.remove_edges((u, v)), cache))
        _sub_shifted(res, _forest_poly(h.remove_vertices(u, v), cache), 2)
        _sub_shifted(res, _forest_poly(h.remove_vertices(*cycle), cache), len(cycle), 2)
    return cache.setdefault(key, tuple(res))


# ---------------------------------------------------------------------------
# b-sequences


def in_coulson_class(g: LabeledGraph) -> bool:
    """Bipartite, or every component a tree except at most one unicyclic one.

    On this class the signs of a_i make |phi(G, ix)| a function of the b_i alone.
    """
    if g.is_bipartite():
        return True
    counts = g.component_cycle_counts()
    return all(c <= 1 for c in counts) and sum(counts) <= 1


def b_sequence(g: LabeledGraph, *, method: str = "recursive") -> CoefficientSequence:
    if not in_coulson_class(g):
        raise OutOfClass("b-sequence needs a bipartite graph or a forest plus one unicyclic component")
    return _charpoly(g, method).b


def _charpoly(g: LabeledGraph, method: str) -> CharPoly:
    if method == "recursive":
        # bipartite graphs with several cycles in one component are only
        # reachable through the determinant
        if any(c > 1 for c in g.component_cycle_counts()):
            return charpoly_det(g)
        return charpoly_recursive(g)
    if method == "det":
        return charpoly_det(g)
    raise ValueError(f"unknown method {method!r}")


def _unique_cycle(g: LabeledGraph) -> tuple[int, ...] | None:
    core = cycle_core(g)
    return order_cycle(g, core) if core else None


def b_deletion_identity_check(g: LabeledGraph, e: Edge, *, method: str = "det") -> bool:
    """Check the b_i edge-deletion identity for ``e`` index by index.

    A cycle edge uses the cycle-correction term (sign set by girth mod 4);
    any other edge of a forest-plus-one-unicyclic graph is a cut edge.
    """
    counts = g.component_cycle_counts()
    if any(c > 1 for c in counts) or sum(counts) > 1:
        raise UnsupportedStructure("identity applies to forests with at most one unicyclic component")
    u, v = e
    if not g.has_edge(u, v):
        raise KeyError(f"{e} is not an edge")
    if method == "det" and g.n > DET_LIMIT:
        method = "recursive"
    bg = _charpoly(g, method).b
    b_minus_e = _charpoly(g.remove_edges(e), method).b
    b_minus_uv = _charpoly(g.remove_vertices(u, v), method).b
    cycle = _unique_cycle(g)
    on_cycle = cycle is not None and u in cycle and v in cycle and _adjacent_on(cycle, u, v)
    if on_cycle:
        girth = len(cycle)
        b_rest = _charpoly(g.remove_vertices(*cycle), method).b
        sign = -2 if girth % 4 == 0 else 2
    for i in range(g.n + 1):
        rhs = b_minus_e[i] + b_minus_uv[i - 2]
        if on_cycle:
            rhs += sign * b_rest[i - girth]
        if bg[i] != rhs:
            return False
    return True


def _adjacent_on(cycle: Sequence[int], u: int, v: int) -> bool:
    i, j = cycle.index(u), cycle.index(v)
    return (i - j) % len(cycle) in (1, len(cycle) - 1)


# ---------------------------------------------------------------------------
# matchings on forests


def matching_generating_sequence(t: LabeledGraph) -> CoefficientSequence:
    """b-sequence of a forest from k-matching counts (tree DP, no polynomials)."""
    if not t.is_forest():
        raise NotAForest("matching counts equal b-values only on forests")
    total = [1]
    seen = [False] * t.n
    for root in range(t.n):
        if seen[root]:
            continue
        free, used = _match_dp(t, root, seen)
        total = poly_mul(total, _padd(free, used))
    b = [0] * (t.n + 1)
    for k, c in enumerate(total):
        if 2 * k <= t.n:
            b[2 * k] = c
    return CoefficientSequence(tuple(b))


def _padd(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _match_dp(t: LabeledGraph, root: int, seen: list[bool]) -> tuple[list[int], list[int]]:
    """Counts by size of matchings in root's tree: (root free, root covered)."""
    order, parent = [root], {root: -1}
    seen[root] = True
    stack = [root]
    while stack:
        u = stack.pop()
        for w in t.adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
                stack.append(w)
    free: dict[int, list[int]] = {}
    used: dict[int, list[int]] = {}
    for u in reversed(order):
        kids = [w for w in t.adj[u] if parent.get(w) == u]
        f, c = [1], [0]
        for w in kids:
            either = _padd(free[w], used[w])
            # u stays free w.r.t. w, or u takes edge uw (w must be free)
            c = _padd(poly_mul(c, either), poly_mul(f, [0] + free[w]))
            f = poly_mul(f, either)
        free[u], used[u] = f, c
    return free[root], used[root]


def horner(a: Sequence[int], x: complex) -> complex:
    acc = 0j
    for c in a:
        acc = acc * x + c
    return acc

