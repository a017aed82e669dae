"""Exhaustive generation of conjugated unicyclic graphs with maximum degree 3.

A member of U_n is a cycle C_g in which every cycle vertex carries at most one
hanging rooted tree (its degree is at most 3), and inside the hanging trees
every vertex has at most two children. Sequences of hanging trees around the
cycle are generated in an orderly way: a sequence is kept only when it is the
smallest of its rotations and reflections, so no isomorphism test is needed.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .canon import canonical_form
from .energy import energy_eigen
from .errors import SizeLimit
from .families import build
from .graph import (
    LabeledGraph,
    cycle_distance_profile,
    format_graph,
    girth_and_cycle,
    has_perfect_matching,
    max_degree,
    parse_edge_list,
    perfect_matchings,
)
from .order import Relation, compare
from .polynomial import b_sequence

log = logging.getLogger(__name__)

MAX_N = 16


# ---------------------------------------------------------------------------
# rooted trees where every vertex has at most two children


@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[str, ...]:
    """Canonical parenthesis codes of all such rooted trees with ``size`` vertices."""
    if size <= 0:
        return ()
    if size == 1:
        return ("()",)
    out = set()
    for c in rooted_trees(size - 1):
        out.add("(" + c + ")")
    for a in range(1, (size - 1) // 2 + 1):
        b = size - 1 - a
        left, right = rooted_trees(a), rooted_trees(b)
        for i, x in enumerate(left):
            for y in right[i:] if a == b else right:
                out.add("(" + "".join(sorted((x, y))) + ")")
    return tuple(sorted(out))


def matching_state(code: str) -> str:
    """'full' if the tree has a perfect matching, 'root' if it has one after
    deleting the root, otherwise 'bad'. Exactly one applies on trees."""
    return _state(code)


@lru_cache(maxsize=None)
def _state(code: str) -> str:
    kids = split_children(code)
    need_root = 0
    for k in kids:
        s = _state(k)
        if s == "bad":
            return "bad"
        need_root += s == "root"
    if need_root == 0:
        return "root"
    if need_root == 1:
        return "full"
    return "bad"


def split_children(code: str) -> list[str]:
    inner = code[1:-1]
    out, depth, start = [], 0, 0
    for i, ch in enumerate(inner):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            out.append(inner[start : i + 1])
            start = i + 1
    return out


def _code_size(code: str) -> int:
    return code.count("(")


def _attach(edges: list[tuple[int, int]], parent: int, code: str, next_id: int) -> int:
    """Hang the tree ``code`` below ``parent``; return the next free label."""
    stack = [(parent, code)]
    while stack:
        p, c = stack.pop()
        me = next_id
        next_id += 1
        edges.append((p, me))
        for kid in split_children(c):
            stack.append((me, kid))
    return next_id


def assemble(slots: tuple[str, ...]) -> LabeledGraph:
    """Cycle 0..g-1; slot i is '' or the code of the tree hung on vertex i."""
    g = len(slots)
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    # breadth-first labels would also do; this order keeps trees contiguous
    for i, code in enumerate(slots):
        if code:
            nxt = _attach(edges, i, code, nxt)
    return LabeledGraph.from_edges(nxt, edges)


def _cycle_matchable(states: list[str]) -> bool:
    # cycle vertices whose hanging root is free get matched into their tree;
    # the rest must pair up along the cycle
    g = len(states)
    taken = [s == "root" for s in states]
    if not any(taken):
        return g % 2 == 0
    start = taken.index(True)
    run = 0
    for k in range(1, g + 1):
        if taken[(start + k) % g]:
            if run % 2:
                return False
            run = 0
        else:
            run += 1
    return True


def _is_dihedral_min(seq: tuple[str, ...]) -> bool:
    g = len(seq)
    for s in (seq, seq[::-1]):
        for r in range(g):
            if s[r:] + s[:r] < seq:
                return False
    return True


def unicyclic_slot_sequences(n: int, girth: int, *, conjugated: bool = True):
    """Yield canonical slot sequences for one girth (one independent work unit)."""
    budget = n - girth
    if budget < 0:
        return
    # slot keys sort like the structural code of the cycle vertex: "()" < "((..))"
    options = [""] + [c for k in range(1, budget + 1) for c in rooted_trees(k)]
    if conjugated:
        options = [c for c in options if not c or matching_state(c) != "bad"]
    sizes = {c: _code_size(c) for c in options}
    key = {c: "(" + c + ")" for c in options}
    seq: list[str] = []

    def rec(left: int, pos: int):
        if pos == girth:
            if left == 0:
                cand = tuple(key[c] for c in seq)
                if _is_dihedral_min(cand):
                    yield tuple(seq)
            return
        for c in options:
            s = sizes[c]
            if s > left:
                continue
            # the first slot must be the smallest code in a dihedral-minimal sequence
            if pos > 0 and key[c] < key[seq[0]]:
                continue
            seq.append(c)
            yield from rec(left - s, pos + 1)
            seq.pop()

    for slots in rec(budget, 0):
        if conjugated:
            states = [matching_state(c) if c else "free" for c in slots]
            if not _cycle_matchable(states):
                continue
        yield slots


def generate_unicyclic(n: int, *, max_n: int = MAX_N, conjugated: bool = True):
    """All members of U_n (or every Delta <= 3 unicyclic graph when
    ``conjugated=False``), one per isomorphism class."""
    if conjugated and n % 2:
        return
    if n > max_n:
        raise SizeLimit(f"enumeration is limited to n <= {max_n}, got {n}")
    for girth in range(3, n + 1):
        for slots in unicyclic_slot_sequences(n, girth, conjugated=conjugated):
            yield assemble(slots)


# ---------------------------------------------------------------------------
# trees


def generate_trees(n: int, *, max_degree: int | None = None, method: str = "auto") -> list[LabeledGraph]:
    """All trees on n vertices up to isomorphism, by adding one leaf at a time.

    ``method="search"`` deduplicates with the general refinement search
    instead of the tree codes, which keeps the oracle below independent of
    the structural codes.
    """
    if n <= 0:
        return []
    level = {b"T()": LabeledGraph.from_edges(1, [])}
    for size in range(2, n + 1):
        nxt: dict[bytes, LabeledGraph] = {}
        for t in level.values():
            for v in range(t.n):
                if max_degree is not None and t.degree(v) >= max_degree:
                    continue
                grown = LabeledGraph(t.n + 1, t.edges | {(v, t.n)})
                nxt.setdefault(canonical_form(grown, method=method, limit=None).key, grown)
        level = nxt
    return [level[k] for k in sorted(level)]


def enumerate_trees_conjugated(n: int, *, max_n: int = 18) -> list[LabeledGraph]:
    """Trees of even order n with maximum degree at most 3 and a perfect matching."""
    if n > max_n:
        raise SizeLimit(f"conjugated tree enumeration is limited to n <= {max_n}, got {n}")
    if n % 2 or n <= 0:
        return []
    return [t for t in generate_trees(n, max_degree=3) if has_perfect_matching(t) is not None]


# ---------------------------------------------------------------------------
# independent oracle for U_n


def oracle_unicyclic(n: int, *, max_n: int = 10) -> list[LabeledGraph]:
    """U_n the slow way: every tree plus every missing edge, filtered and
    deduplicated with the general canonical search."""
    if n > max_n:
        raise SizeLimit(f"the oracle is limited to n <= {max_n}, got {n}")
    found: dict[bytes, LabeledGraph] = {}
    for t in generate_trees(n, method="search"):
        for u in range(n):
            for v in range(u + 1, n):
                if t.has_edge(u, v):
                    continue
                g = t.add_edges((u, v))
                if max_degree(g) > 3 or has_perfect_matching(g) is None:
                    continue
                found.setdefault(canonical_form(g, method="search", limit=None).key, g)
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# enumeration runs


@dataclass(frozen=True)
class GraphRecord:
    key: str
    girth: int
    d: int
    t: int
    b: tuple[int, ...]
    energy: float
    graph: str

    def to_graph(self) -> LabeledGraph:
        return parse_edge_list(self.graph)

    def to_json(self) -> dict:
        return {
            "key": self.key, "girth": self.girth, "d": self.d, "t": self.t,
            "b": list(self.b), "energy": self.energy, "graph": self.graph,
        }


@dataclass(frozen=True)
class EnumerationRun:
    n: int
    records: tuple[GraphRecord, ...]

    @property
    def count(self) -> int:
        return len(self.records)

    def by_key(self) -> dict[str, GraphRecord]:
        return {r.key: r for r in self.records}

    def to_json(self) -> dict:
        return {"n": self.n, "count": self.count, "records": [r.to_json() for r in self.records]}


def make_record(g: LabeledGraph) -> GraphRecord:
    w = girth_and_cycle(g)
    d, t = cycle_distance_profile(g, w)
    return GraphRecord(
        key=canonical_form(g, limit=None).key.decode(),
        girth=w.girth, d=d, t=t,
        b=tuple(b_sequence(g).b),
        energy=energy_eigen(g).value,
        graph=format_graph(g),
    )


def _records_for_girth(args: tuple[int, int]) -> list[GraphRecord]:
    n, girth = args
    return [make_record(assemble(s)) for s in unicyclic_slot_sequences(n, girth)]


def enumerate_Un(n: int, *, max_n: int = MAX_N, jobs: int = 1) -> EnumerationRun:
    """Every member of U_n once, sorted by canonical key.

    Girths are independent work units; with ``jobs > 1`` they run in a
    process pool and the merge step sorts and deduplicates by key.
    """
    if n > max_n:
        raise SizeLimit(f"enumeration is limited to n <= {max_n}, got {n}")
    if n % 2 or n < 4:
        return EnumerationRun(n, ())
    units = [(n, g) for g in range(3, n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_records_for_girth, units))
    else:
        chunks = [_records_for_girth(u) for u in units]
    merged = {r.key: r for chunk in chunks for r in chunk}
    log.info("U_%d: %d classes", n, len(merged))
    return EnumerationRun(n, tuple(merged[k] for k in sorted(merged)))


# ---------------------------------------------------------------------------
# verification


ENERGY_SEPARATION = 1e-7


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    scope: tuple[int, ...]
    checked: int
    counterexamples: tuple[dict, ...] = ()
    flagged: tuple[dict, ...] = ()
    notes: str = ""

    @property
    def verdict(self) -> str:
        return "fails" if self.counterexamples else "holds"

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem, "scope": list(self.scope), "verdict": self.verdict,
            "checked": self.checked, "counterexamples": list(self.counterexamples),
            "flagged": list(self.flagged), "notes": self.notes,
        }


def merge_reports(reports: list[VerificationReport]) -> VerificationReport:
    """Combine reports for the same theorem over several orders."""
    first = reports[0]
    return VerificationReport(
        first.theorem,
        tuple(sorted({n for r in reports for n in r.scope})),
        sum(r.checked for r in reports),
        tuple(c for r in reports for c in r.counterexamples),
        tuple(f for r in reports for f in r.flagged),
        first.notes,
    )


def _check_order(n: int, lo: int = 8, hi: int = MAX_N) -> None:
    if n % 2 or not lo <= n <= hi:
        raise SizeLimit(f"verification needs even n in [{lo}, {hi}], got {n}")


def _key(g: LabeledGraph) -> str:
    return canonical_form(g, limit=None).key.decode()


def verify_main_theorem(n: int, *, run: EnumerationRun | None = None, max_n: int = MAX_N) -> VerificationReport:
    """A_n is the unique energy minimiser of U_n."""
    _check_order(n, hi=max_n)
    run = run or enumerate_Un(n, max_n=max_n)
    ranked = sorted(run.records, key=lambda r: (r.energy, r.key))
    best, runner = ranked[0], ranked[1]
    target = _key(build("A", n))
    bad, flagged = [], []
    gap = runner.energy - best.energy
    if gap <= ENERGY_SEPARATION:
        verdict = compare(runner.b, best.b)
        entry = {
            "kind": "near-tie", "keys": [best.key, runner.key], "gap": gap,
            "b_relation": verdict.relation.value,
        }
        flagged.append(entry)
        # a tie is only resolved when the runner-up is strictly dominated away
        if verdict.relation is not Relation.DOMINATES_STRICTLY:
            bad.append(entry)
    if best.key != target:
        bad.append({"kind": "minimiser", "key": best.key, "energy": best.energy, "graph": best.graph})
    return VerificationReport(
        "Theorem 1.2", (n,), run.count, tuple(bad), tuple(flagged),
        notes=f"min energy {best.energy:.10g}, separation {gap:.3g}",
    )


def cycle_matching_counts(g: LabeledGraph) -> list[int]:
    """For each perfect matching, how many of its edges lie on the cycle."""
    cyc = set(girth_and_cycle(g).cycle_edges())
    return [len(cyc & m.edges) for m in perfect_matchings(g)]


def verify_girth_theorems(n: int, *, run: EnumerationRun | None = None, max_n: int = MAX_N) -> list[VerificationReport]:
    """The girth-case claims: non-multiple-of-4 girth, girth >= 8, and the three girth-4 matching classes."""
    _check_order(n, hi=max_n)
    run = run or enumerate_Un(n, max_n=max_n)
    radialene = build("S_radialene", n)
    e_rad = energy_eigen(radialene).value
    k_rad = _key(radialene)
    b_fam = {name: tuple(b_sequence(build(name, n)).b) for name in ("A", "B", "D", "E")}
    k_fam = {name: _key(build(name, n)) for name in ("A", "D", "E")}

    lem_bad, lem_checked = [], 0
    t37_bad, t37_checked = [], 0
    girth4 = {2: ("Theorem 3.8", "A"), 1: ("Theorem 3.9", "D"), 0: ("Theorem 3.10", "E")}
    g4_bad: dict[int, list[dict]] = {c: [] for c in girth4}
    g4_checked = {c: 0 for c in girth4}
    for r in run.records:
        if r.girth % 4:
            if r.key == k_rad:
                continue
            lem_checked += 1
            if not r.energy - e_rad > 1e-9:
                lem_bad.append({"key": r.key, "girth": r.girth, "energy": r.energy, "reference": e_rad})
        elif r.girth >= 8:
            t37_checked += 1
            v = compare(r.b, b_fam["B"])
            if v.relation is not Relation.DOMINATES_STRICTLY:
                t37_bad.append({"key": r.key, "girth": r.girth, "relation": v.relation.value})
        else:
            g = r.to_graph()
            for c in sorted(set(cycle_matching_counts(g))):
                name = girth4[c][1]
                if r.key == k_fam[name]:
                    continue
                g4_checked[c] += 1
                v = compare(r.b, b_fam[name])
                if v.relation is not Relation.DOMINATES_STRICTLY:
                    g4_bad[c].append({"key": r.key, "matching_edges_on_cycle": c, "relation": v.relation.value})
    reports = [
        VerificationReport("Lemma 1.1", (n,), lem_checked, tuple(lem_bad),
                           notes="E(G) > E(S_n^{n/2}) for girth not divisible by 4"),
        VerificationReport("Theorem 3.7", (n,), t37_checked, tuple(t37_bad),
                           notes="G dominates B_n for girth >= 8, divisible by 4"),
    ]
    for c, (thm, name) in girth4.items():
        reports.append(VerificationReport(
            thm, (n,), g4_checked[c], tuple(g4_bad[c]),
            notes=f"girth 4 with {c} matching edge(s) on the cycle dominates {name}_n",
        ))
    return reports


# ---------------------------------------------------------------------------
# persistence


SCHEMA_VERSION = "1"


def results_tag() -> str:
    """Short hash naming the results directory for this output format."""
    return hashlib.sha256(f"unienergy-schema-{SCHEMA_VERSION}".encode()).hexdigest()[:12]


def save_run(run: EnumerationRun, out_dir: str | Path, reports: list[VerificationReport] = ()) -> Path:
    folder = Path(out_dir) / results_tag()
    folder.mkdir(parents=True, exist_ok=True)
    path = folder / f"U_{run.n}.json"
    doc = run.to_json()
    doc["reports"] = [r.to_json() for r in reports]
    path.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    return path


def run_to_csv(run: EnumerationRun) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "girth", "d", "t", "b", "energy"])
    for r in run.records:
        w.writerow([r.key, r.girth, r.d, r.t, " ".join(map(str, r.b)), f"{r.energy:.10g}"])
    return buf.getvalue()
