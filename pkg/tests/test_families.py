import pytest

from unienergy.canon import canonical_form
from unienergy.energy import energy_eigen
from unienergy.enumeration import enumerate_trees_conjugated, generate_trees
from unienergy.errors import InvalidOrder
from unienergy.families import FIXED, NAMES, FamilySpec, build, fixed_order
from unienergy.graph import girth_and_cycle, has_perfect_matching, max_degree, path_graph, star_graph
from unienergy.order import Relation, compare
from unienergy.polynomial import b_sequence, charpoly_recursive
from unienergy.verify import GOLDEN_POLYNOMIALS


@pytest.mark.parametrize("key", sorted(GOLDEN_POLYNOMIALS))
def test_reference_polynomials(key):
    name, n = key
    assert str(charpoly_recursive(build(name, n))) == GOLDEN_POLYNOMIALS[key]


@pytest.mark.parametrize("name", ["A", "B", "D", "E", "S_radialene"])
def test_family_members_are_in_Un(name):
    lo = 8 if name in ("B", "E") else 6
    for n in range(lo, 41, 2):
        g = build(name, n)
        assert g.n == n and g.is_unicyclic()
        assert max_degree(g) <= 3
        assert has_perfect_matching(g) is not None


def test_girths():
    assert girth_and_cycle(build("A", 10)).girth == 4
    assert girth_and_cycle(build("S_radialene", 14)).girth == 7
    assert girth_and_cycle(build("U1", 10)).girth == 4
    assert girth_and_cycle(build("U2", 10)).girth == 4


def test_fixed_graphs():
    for name, (order, _) in FIXED.items():
        g = build(name)
        assert g.n == order == fixed_order(name)
        assert build(FamilySpec(name, order)) == g
        assert girth_and_cycle(g).girth == 4
    with pytest.raises(InvalidOrder):
        build("I1", 10)


def test_comb_and_h():
    f = build("F", 8)
    assert f.is_tree() and f.n == 8 and has_perfect_matching(f) is not None
    h = build("H", 9)
    assert h.is_tree() and h.n == 9


def test_u_graphs_energy_order():
    for n in range(8, 21, 2):
        assert energy_eigen(build("U1", n)).value < energy_eigen(build("U2", n)).value


def _all_conjugated_unicyclic(n):
    seen = {}
    for t in generate_trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if not t.has_edge(u, v):
                    g = t.add_edges((u, v))
                    if has_perfect_matching(g) is not None:
                        seen.setdefault(canonical_form(g), g)
    return seen


@pytest.mark.parametrize("n", [6, 8, 10])
def test_u1_is_energy_minimal_without_degree_bound(n):
    energies = {k: energy_eigen(g).value for k, g in _all_conjugated_unicyclic(n).items()}
    best = min(energies, key=energies.get)
    assert best == canonical_form(build("U1", n))
    others = [e for k, e in energies.items() if k != best]
    assert min(others) - energies[best] > 1e-7


@pytest.mark.parametrize("name,n", [("A", 7), ("A", 4), ("B", 6), ("E", 6), ("nope", 8), ("H", 8)])
def test_invalid_orders(name, n):
    with pytest.raises(InvalidOrder):
        build(name, n)


def test_relaxed_minimum():
    assert canonical_form(build("A", 4, strict=False)) == canonical_form(build("C", 4))


def test_deterministic():
    for name in NAMES:
        n = fixed_order(name) if name in FIXED else (9 if name == "H" else 12)
        assert build(name, n) == build(name, n)


def test_trees_between_path_and_star():
    # every tree sits strictly between the star and the path, except those two
    for n in range(4, 13):
        bp, bs = b_sequence(path_graph(n)), b_sequence(star_graph(n))
        kp, ks = canonical_form(path_graph(n)), canonical_form(star_graph(n))
        for t in generate_trees(n):
            k, b = canonical_form(t), b_sequence(t)
            if k != kp:
                assert compare(bp, b).relation is Relation.DOMINATES_STRICTLY
            if k != ks:
                assert compare(b, bs).relation is Relation.DOMINATES_STRICTLY


def test_comb_is_minimal_conjugated_tree():
    for n in range(4, 17, 2):
        comb = build("F", n)
        key, bf = canonical_form(comb), b_sequence(comb)
        for t in enumerate_trees_conjugated(n):
            if canonical_form(t) != key:
                assert compare(b_sequence(t), bf).relation is Relation.DOMINATES_STRICTLY
