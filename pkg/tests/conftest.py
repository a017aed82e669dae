import random

import pytest

from unienergy.graph import LabeledGraph


def random_tree(n: int, rng: random.Random) -> LabeledGraph:
    if n <= 1:
        return LabeledGraph(n)
    if n == 2:
        return LabeledGraph.from_edges(2, [(0, 1)])
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    for v in prufer:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return LabeledGraph.from_edges(n, edges)


def random_unicyclic(n: int, rng: random.Random) -> LabeledGraph:
    t = random_tree(n, rng)
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not t.has_edge(u, v)]
    return t.add_edges(rng.choice(missing))


def random_forest(n: int, rng: random.Random) -> LabeledGraph:
    t = random_tree(n, rng)
    drop = rng.sample(t.sorted_edges(), rng.randrange(0, max(1, n // 3)))
    return t.remove_edges(*drop)


def random_relabel(g: LabeledGraph, rng: random.Random) -> LabeledGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.fixture
def rng():
    return random.Random(20240611)


# one PASS/FAIL line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


class _Criterion:
    def __init__(self, number: int, title: str) -> None:
        self.number, self.title = number, title
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "FAIL" if exc_type else "PASS"
        extra = f" ({self.detail})" if self.detail else ""
        if exc_type:
            extra += f" [{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}]"
        line = f"criterion {self.number:2d} {status}: {self.title}{extra}"
        ACCEPTANCE_LINES[self.number] = line
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
