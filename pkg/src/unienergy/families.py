"""Deterministic constructors for the named graphs.

Vertex numbering is part of the contract (``build`` is deterministic), and
is chosen so cycles come first where there is one.

Shapes used here, with m teeth meaning m pendant edges along a path:

* ``F_n``  comb: path r_1..r_{n/2}, one pendant at every r_i.
* ``H_{n+1}``  comb F_n with one extra pendant on the end vertex r_{n/2}.
* ``A_n``  4-cycle c0..c3; c0 is the end of a path carrying n/2 - 2 teeth.
* ``B_n``  A_{n-2} with a pendant K_2 hung on the cycle vertex opposite c0.
* ``D_n``  4-cycle with pendants at c1 and c2; c0 is the end of a path
  carrying n/2 - 3 teeth (so D_6 is C_4 with two adjacent pendants).
* ``E_n``  4-cycle with pendants at c1, c2, c3; c0 starts a path
  r_1..r_{n/2-3} whose vertices r_2.. carry n/2 - 4 teeth.
* ``S_radialene``  C_{n/2} with a pendant at every cycle vertex.
* ``U1``  4-cycle whose vertex c0 is joined to a hub; the hub carries one
  pendant vertex and n/2 - 3 pendant paths of length two.
* ``U2``  4-cycle whose vertex c0 carries n/2 - 2 pendant paths of length two.
* ``I1``..``I7``  fixed girth-4 graphs; each is the only member of U_n with
  its characteristic polynomial. With K_2 meaning a pendant path of length
  two and P_3 one of length three hung on a cycle vertex:
  I1 = K_2 on c0, c1;  I2 = K_2 on c0, c1, c2;  I3 = K_2 on all four;
  I4 = K_2 on c0, c1 and pendants on c2, c3;
  I5 = P_3 on c0, K_2 on c1, pendant on c3;
  I6 = P_3 on c0, pendant on c1, K_2 on c2;
  I7 = P_3 on c0, K_2 on c1, c2, pendant on c3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidOrder
from .graph import LabeledGraph, cycle_graph, path_graph, star_graph
from .polynomial import CharPoly

# smallest order accepted by ``build``; ``structural_min`` is what the
# constructions themselves allow (recurrences reach below the public minimum)
PUBLIC_MIN = {
    "A": 6, "B": 8, "D": 6, "E": 8, "F": 4, "S_radialene": 6, "U1": 6, "U2": 8,
    "C": 3, "P": 1, "Star": 1,
}
STRUCTURAL_MIN = {"A": 4, "B": 6, "D": 6, "E": 8, "F": 0, "S_radialene": 6, "U1": 6, "U2": 4}
EVEN_ONLY = {"A", "B", "D", "E", "F", "S_radialene", "U1", "U2"}

# girth-4 graphs drawn as I_1..I_7, pinned down by their reference polynomials
# (edge lists on a canonical vertex numbering, cycle = 0-1-2-3)
_C4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
FIXED = {
    "I1": (8, _C4 + [(0, 4), (4, 5), (1, 6), (6, 7)]),
    "I2": (10, _C4 + [(0, 4), (4, 5), (1, 6), (6, 7), (2, 8), (8, 9)]),
    "I3": (12, _C4 + [(0, 4), (4, 5), (1, 6), (6, 7), (2, 8), (8, 9), (3, 10), (10, 11)]),
    "I4": (10, _C4 + [(0, 4), (4, 5), (1, 6), (6, 7), (2, 8), (3, 9)]),
    "I5": (10, _C4 + [(0, 4), (4, 5), (5, 6), (1, 7), (7, 8), (3, 9)]),
    "I6": (10, _C4 + [(0, 4), (4, 5), (5, 6), (1, 7), (2, 8), (8, 9)]),
    "I7": (12, _C4 + [(0, 4), (4, 5), (5, 6), (1, 7), (7, 8), (2, 9), (9, 10), (3, 11)]),
}

NAMES = sorted(set(PUBLIC_MIN) | {"H"} | set(FIXED))


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def cycle(self, k: int) -> list[int]:
        vs = [self.vertex() for _ in range(k)]
        for i in range(k):
            self.edge(vs[i], vs[(i + 1) % k])
        return vs

    def pendant(self, at: int) -> int:
        w = self.vertex()
        self.edge(at, w)
        return w

    def toothed_path(self, start: int, length: int, first_tooth: int = 0) -> list[int]:
        """Path hanging from ``start``; vertices with index >= first_tooth get a pendant."""
        prev, out = start, []
        for i in range(length):
            r = self.vertex()
            self.edge(prev, r)
            out.append(r)
            prev = r
        for i, r in enumerate(out):
            if i >= first_tooth:
                self.pendant(r)
        return out

    def graph(self) -> LabeledGraph:
        return LabeledGraph.from_edges(self.n, self.edges)


def comb(n: int) -> LabeledGraph:
    """F_n for any even n >= 0 (F_0 is the empty graph, F_2 = K_2)."""
    _check_even("F", n, 0)
    b = _Builder()
    path = [b.vertex() for _ in range(n // 2)]
    for u, v in zip(path, path[1:]):
        b.edge(u, v)
    for r in path:
        b.pendant(r)
    return b.graph()


def h_graph(order: int) -> LabeledGraph:
    """H_{order}: comb F_{order-1} plus one pendant on an end of its spine."""
    if order % 2 == 0 or order < 3:
        raise InvalidOrder(f"H needs odd order >= 3, got {order}")
    b = _Builder()
    k = (order - 1) // 2
    path = [b.vertex() for _ in range(k)]
    for u, v in zip(path, path[1:]):
        b.edge(u, v)
    for r in path:
        b.pendant(r)
    b.pendant(path[-1])
    return b.graph()


def a_graph(n: int) -> LabeledGraph:
    _check_even("A", n, STRUCTURAL_MIN["A"])
    b = _Builder()
    c = b.cycle(4)
    # path c0 - p_1 - ... ; every new path vertex gets a tooth
    b.toothed_path(c[0], n // 2 - 2)
    return b.graph()


def b_graph(n: int) -> LabeledGraph:
    _check_even("B", n, STRUCTURAL_MIN["B"])
    b = _Builder()
    c = b.cycle(4)
    b.toothed_path(c[0], n // 2 - 3)
    y = b.pendant(c[2])
    b.pendant(y)
    return b.graph()


def d_graph(n: int) -> LabeledGraph:
    _check_even("D", n, STRUCTURAL_MIN["D"])
    b = _Builder()
    c = b.cycle(4)
    b.pendant(c[1])
    b.pendant(c[2])
    b.toothed_path(c[0], n // 2 - 3)
    return b.graph()


def e_graph(n: int) -> LabeledGraph:
    _check_even("E", n, STRUCTURAL_MIN["E"])
    b = _Builder()
    c = b.cycle(4)
    for v in c[1:]:
        b.pendant(v)
    b.toothed_path(c[0], n // 2 - 3, first_tooth=1)
    return b.graph()


def radialene(n: int) -> LabeledGraph:
    _check_even("S_radialene", n, STRUCTURAL_MIN["S_radialene"])
    b = _Builder()
    for v in b.cycle(n // 2):
        b.pendant(v)
    return b.graph()


def u1_graph(n: int) -> LabeledGraph:
    _check_even("U1", n, STRUCTURAL_MIN["U1"])
    b = _Builder()
    c = b.cycle(4)
    hub = b.pendant(c[0])
    b.pendant(hub)
    for _ in range(n // 2 - 3):
        b.pendant(b.pendant(hub))
    return b.graph()


def u2_graph(n: int) -> LabeledGraph:
    _check_even("U2", n, STRUCTURAL_MIN["U2"])
    b = _Builder()
    c = b.cycle(4)
    for _ in range(n // 2 - 2):
        b.pendant(b.pendant(c[0]))
    return b.graph()


_BUILDERS = {
    "A": a_graph, "B": b_graph, "D": d_graph, "E": e_graph, "F": comb,
    "S_radialene": radialene, "U1": u1_graph, "U2": u2_graph,
    "C": cycle_graph, "P": path_graph, "Star": star_graph,
}


def _check_even(name: str, n: int, low: int) -> None:
    if n % 2 or n < low:
        raise InvalidOrder(f"{name}_n needs even n >= {low}, got {n}")


def build(spec: FamilySpec | str, n: int | None = None, *, strict: bool = True) -> LabeledGraph:
    """Construct a named graph.

    ``n`` is always the order. ``H`` therefore takes an odd order (written
    H_{n+1} with n even and at least 4, so the smallest is 5). The fixed
    graphs ``I1``..``I7`` take their own order; pass it or ``None``.
    ``strict=False`` relaxes the public minimum orders to what the
    construction itself supports (``A_4 = C_4``, ``B_6``, ``U2_4 = C_4``).
    """
    if isinstance(spec, str):
        spec = FamilySpec(spec, -1 if n is None else n)
    name, n = spec.name, spec.n
    if name in FIXED:
        order, edges = FIXED[name]
        if n not in (-1, order):
            raise InvalidOrder(f"{name} has order {order}, got {n}")
        return LabeledGraph.from_edges(order, edges)
    if name == "H":
        if n % 2 == 0 or n < 5:
            raise InvalidOrder(f"H_(n+1) needs n even >= 4, got order {n}")
        return h_graph(n)
    if name not in _BUILDERS:
        raise InvalidOrder(f"unknown family {name!r}")
    low = PUBLIC_MIN[name] if strict else STRUCTURAL_MIN.get(name, PUBLIC_MIN[name])
    if n < low or (name in EVEN_ONLY and n % 2):
        parity = "even " if name in EVEN_ONLY else ""
        raise InvalidOrder(f"{name}_n needs {parity}n >= {low}, got {n}")
    return _BUILDERS[name](n)


def fixed_order(name: str) -> int:
    return FIXED[name][0]


# reference seeds for the two-term recurrence, in a-order
SEEDS = {
    "A": {6: (1, 0, -6, 0, 6, 0, 0), 8: (1, 0, -8, 0, 16, 0, -6, 0, 0)},
    "D": {6: (1, 0, -6, 0, 5, 0, -1), 8: (1, 0, -8, 0, 15, 0, -8, 0, 1)},
}


def family_charpoly_table(name: str, n_max: int) -> dict[int, CharPoly]:
    """phi(name_n) for even 6 <= n <= n_max from
    phi(n) = (x^2 - 1) phi(n - 2) - x^2 phi(n - 4), seeded at n = 6 and 8."""
    if name not in SEEDS:
        raise InvalidOrder(f"the recurrence table covers A and D only, got {name!r}")
    if n_max < 6:
        raise InvalidOrder(f"smallest order in the table is 6, got n_max={n_max}")
    table = {n: list(a) for n, a in SEEDS[name].items() if n <= n_max}
    for n in range(10, n_max + 1, 2):
        p2, p4 = table[n - 2], table[n - 4]
        # in a-order a polynomial of degree n - k starts at index k
        new = p2 + [0, 0]
        for i, c in enumerate(p2):
            new[i + 2] -= c
        for i, c in enumerate(p4):
            new[i + 2] -= c
        table[n] = new
    return {n: CharPoly(tuple(a)) for n, a in sorted(table.items())}
