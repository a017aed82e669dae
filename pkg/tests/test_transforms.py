import pytest

from conftest import random_forest, random_tree, random_unicyclic
from unienergy.canon import canonical_form
from unienergy.enumeration import enumerate_Un, generate_trees
from unienergy.errors import NotATree, PendantEdge, PreconditionViolated
from unienergy.families import build
from unienergy.graph import girth_and_cycle, has_perfect_matching, max_degree, path_graph, star_graph
from unienergy.order import Relation, compare
from unienergy.polynomial import b_sequence
from unienergy.transforms import (
    SurgeryDescriptor,
    apply,
    cut_edges,
    delete_cut_edge,
    delete_vertex,
    egt,
    egt_anchors,
    find_anchors,
    op1,
    op1_anchors,
    op2,
    op3,
)


def lowers(g, h):
    return compare(b_sequence(g), b_sequence(h)).relation is Relation.DOMINATES_STRICTLY


def test_egt_path4_gives_star():
    h = egt(path_graph(4), (1, 2))
    assert canonical_form(h) == canonical_form(star_graph(4))


def test_egt_path6_shape():
    p = path_graph(6)
    h = egt(p, (1, 2))
    assert h.n == 6 and h.is_tree()
    leaves = sum(1 for v in range(6) if h.degree(v) == 1)
    assert leaves == 3


def test_egt_errors():
    with pytest.raises(PendantEdge):
        egt(path_graph(4), (0, 1))
    with pytest.raises(NotATree):
        egt(build("A", 8), (0, 1))


def test_egt_dominance_random_trees(rng):
    done = 0
    while done < 200:
        t = random_tree(rng.randrange(4, 15), rng)
        anchors = egt_anchors(t)
        if not anchors:
            continue
        s = rng.choice(anchors)
        h = apply(t, s)
        assert h.n == t.n and h.is_tree()
        assert lowers(t, h), (str(t), s)
        done += 1


def test_op1_all_instances_small_trees():
    count = 0
    for n in range(5, 13):
        for t in generate_trees(n, max_degree=3):
            for s in op1_anchors(t):
                h = apply(t, s)
                assert h.is_tree() and h.n == n
                assert max_degree(h) <= 3
                assert lowers(t, h)
                count += 1
    assert count > 0


def test_op1_precondition_names_clause():
    t = path_graph(6)
    # spider with legs 0-1, 3-4 and 5 around centre 2
    spider = t.add_edges((2, 5)).remove_edges((4, 5))
    with pytest.raises(PreconditionViolated, match="w must have degree 2"):
        op1(spider, (0, 1, 2, 5))
    with pytest.raises(PreconditionViolated, match="leaf"):
        op1(t, (1, 2, 3, 4))


def _un_instances(kind, orders):
    for n in orders:
        for r in enumerate_Un(n).records:
            g = r.to_graph()
            for s in find_anchors(g, kind):
                yield g, s


@pytest.mark.parametrize("kind", ["OpII", "OpIII"])
def test_un_operations_all_instances(kind):
    count = 0
    for g, s in _un_instances(kind, (8, 10, 12, 14)):
        h = apply(g, s)
        assert h.n == g.n and h.is_unicyclic()
        assert max_degree(h) <= 3
        assert has_perfect_matching(h) is not None
        assert girth_and_cycle(h).girth == girth_and_cycle(g).girth
        assert lowers(g, h)
        count += 1
    assert count > 0


def test_op2_op3_preconditions():
    g = build("A", 10)
    with pytest.raises(PreconditionViolated, match="Operation II"):
        op2(g, (0, 1, 2, 3, 4))
    with pytest.raises(PreconditionViolated, match="Operation III"):
        op3(g, (0, 1, 2, 3, 4, 5, 6, 7))
    with pytest.raises(PreconditionViolated, match="unicyclic"):
        op2(path_graph(10), (0, 1, 2, 3, 4))


def test_cut_edge_deletion(rng):
    for _ in range(500):
        g = random_unicyclic(rng.randrange(4, 14), rng) if rng.random() < 0.5 else random_forest(rng.randrange(3, 14), rng)
        edges = cut_edges(g)
        if not edges:
            continue
        assert lowers(g, delete_cut_edge(g, rng.choice(edges)))


def test_cut_edge_rejects_cycle_edge():
    with pytest.raises(PreconditionViolated):
        delete_cut_edge(build("A", 8), (0, 1))


def test_vertex_deletion(rng):
    for _ in range(500):
        g = random_unicyclic(rng.randrange(4, 14), rng)
        v = rng.randrange(g.n)
        h = delete_vertex(g, v)
        assert h.n == g.n and h.degree(v) == 0
        assert lowers(g, h)
    with pytest.raises(PreconditionViolated):
        delete_vertex(h, v)


def test_find_anchors_dispatch():
    assert find_anchors(path_graph(5), "EGT")
    with pytest.raises(ValueError):
        find_anchors(path_graph(5), "OpIV")
    with pytest.raises(ValueError):
        apply(path_graph(5), SurgeryDescriptor("OpIV", ()))
