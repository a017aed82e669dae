"""The ten acceptance criteria, each at its stated tolerance and time budget."""

import random
import time

import numpy as np

from conftest import random_forest, random_unicyclic
from unienergy.energy import (
    ClosedFormContext,
    closedform_eval,
    energy_coulson,
    energy_eigen,
    spectrum,
    theorem216_integrand_probe,
)
from unienergy.enumeration import generate_trees, verify_girth_theorems, verify_main_theorem
from unienergy.families import FIXED, build
from unienergy.graph import cycle_graph
from unienergy.order import Relation, compare
from unienergy.polynomial import (
    b_sequence,
    charpoly_det,
    charpoly_recursive,
    horner,
    matching_generating_sequence,
)
from unienergy.verify import GOLDEN_POLYNOMIALS, check_lemma27, surgery_scan


def _family_members(n_max: int):
    """Every named graph of order <= n_max (fixed graphs at their own order)."""
    for name, (order, _) in FIXED.items():
        if order <= n_max:
            yield name, order, build(name)
    even = {"A": 6, "B": 8, "D": 6, "E": 8, "F": 4, "S_radialene": 6, "U1": 6, "U2": 8}
    for name, lo in even.items():
        for n in range(lo, n_max + 1, 2):
            yield name, n, build(name, n)
    for n in range(5, n_max + 1, 2):
        yield "H", n, build("H", n)
    for name, lo in (("C", 3), ("P", 1), ("Star", 1)):
        for n in range(lo, n_max + 1):
            yield name, n, build(name, n)


def test_criterion_01_golden_polynomials(criterion):
    with criterion(1, "reference polynomials reproduced exactly") as c:
        t0 = time.perf_counter()
        wrong = [k for k, want in GOLDEN_POLYNOMIALS.items() if str(charpoly_recursive(build(*k))) != want]
        elapsed = time.perf_counter() - t0
        c.detail = f"{len(GOLDEN_POLYNOMIALS)} polynomials, {elapsed:.3f}s"
        assert len(GOLDEN_POLYNOMIALS) == 19
        assert not wrong, wrong
        assert elapsed < 1.0


def test_criterion_02_golden_energies(criterion):
    golden = {("S_radialene", 8): 9.65685, ("B", 8): 9.15298, ("A", 6): 6.60272, ("D", 6): 7.20775}
    with criterion(2, "reference energies by eigen-sum and Coulson integral") as c:
        t0 = time.perf_counter()
        worst_eig = worst_coul = 0.0
        for key, want in golden.items():
            g = build(*key)
            worst_eig = max(worst_eig, abs(energy_eigen(g).value - want))
            worst_coul = max(worst_coul, abs(energy_coulson(g).value - want))
        elapsed = time.perf_counter() - t0
        c.detail = f"max error eig {worst_eig:.2e}, Coulson {worst_coul:.2e}, {elapsed:.3f}s"
        assert worst_eig <= 5e-5
        assert worst_coul <= 1e-4
        assert elapsed < 1.0


def test_criterion_03_coulson_constant(criterion):
    with criterion(3, "probe integral equals -0.8538292323") as c:
        t0 = time.perf_counter()
        report = theorem216_integrand_probe()
        elapsed = time.perf_counter() - t0
        c.detail = f"integral {report.integral:.12f}, {elapsed:.3f}s"
        assert abs(report.integral - (-0.8538292323)) <= 1e-6
        assert elapsed < 5.0


def test_criterion_04_oracle_equivalence(criterion):
    with criterion(4, "recursive charpoly == determinant, matchings == b on trees") as c:
        t0 = time.perf_counter()
        rng = random.Random(4)
        graphs = []
        for i in range(500):
            n = rng.randrange(3, 11)
            graphs.append(random_unicyclic(n, rng) if i % 2 else random_forest(n, rng))
        graphs += [g for _, n, g in _family_members(10)]
        bad = [str(g) for g in graphs if charpoly_recursive(g) != charpoly_det(g)]
        trees = [t for n in range(1, 13) for t in generate_trees(n)]
        bad_trees = [str(t) for t in trees if matching_generating_sequence(t) != b_sequence(t)]
        elapsed = time.perf_counter() - t0
        c.detail = f"{len(graphs)} graphs, {len(trees)} trees, {elapsed:.1f}s"
        assert not bad, bad[:3]
        assert not bad_trees, bad_trees[:3]
        assert elapsed < 60.0


def test_criterion_05_quasi_order_at_scale(criterion):
    with criterion(5, "quasi-order theorems and coefficient identities, n <= 40") as c:
        t0 = time.perf_counter()
        pairs = [(build("D", 8), build("E", 8))]
        for n in range(8, 41, 2):
            pairs.append((build("B", n), build("A", n)))
            if n >= 10:
                pairs.append((build("E", n), build("D", n)))
                pairs.append((build("S_radialene", n), build("B", n)))
            if n % 4 == 0:
                pairs.append((cycle_graph(n), build("B", n)))
        failures = [
            (hi.n, str(hi)) for hi, lo in pairs
            if compare(b_sequence(hi), b_sequence(lo)).relation is not Relation.DOMINATES_STRICTLY
        ]
        identities = check_lemma27(40)
        elapsed = time.perf_counter() - t0
        c.detail = f"{len(pairs)} pairs, {identities.checked} identity indices, {elapsed:.1f}s"
        assert not failures, failures[:3]
        assert identities.holds, identities.counterexamples[:3]
        assert elapsed < 30.0


def test_criterion_06_energy_theorem(criterion):
    with criterion(6, "E(A_n) < E(D_n) for even n in [6, 40]") as c:
        t0 = time.perf_counter()
        gaps = {n: energy_eigen(build("D", n)).value - energy_eigen(build("A", n)).value for n in range(6, 41, 2)}
        elapsed = time.perf_counter() - t0
        n_min = min(gaps, key=gaps.get)
        c.detail = f"smallest margin {gaps[n_min]:.6f} at n={n_min}, {elapsed:.2f}s"
        assert all(g > 1e-6 for g in gaps.values())
        assert elapsed < 10.0


def test_criterion_07_main_theorem(criterion):
    with criterion(7, "A_n is the unique energy minimiser of U_n, n = 8..14") as c:
        reports = [verify_main_theorem(n) for n in (8, 10, 12, 14)]
        c.detail = "; ".join(f"n={r.scope[0]} {r.notes}" for r in reports)
        for r in reports:
            assert r.holds, r.counterexamples


def test_criterion_08_girth_theorems(criterion):
    with criterion(8, "girth-case theorems on U_n, n = 8, 10, 12") as c:
        t0 = time.perf_counter()
        reports = [r for n in (8, 10, 12) for r in verify_girth_theorems(n)]
        elapsed = time.perf_counter() - t0
        checked = sum(r.checked for r in reports)
        c.detail = f"{checked} instances, {elapsed:.1f}s"
        bad = [(r.theorem, r.scope, r.counterexamples[:2]) for r in reports if not r.holds]
        assert not bad, bad
        assert elapsed < 300.0


def test_criterion_09_surgery_dominance(criterion):
    with criterion(9, "every surgery strictly lowers b, n <= 14") as c:
        t0 = time.perf_counter()
        reports = surgery_scan(14, 14)
        elapsed = time.perf_counter() - t0
        c.detail = ", ".join(f"{r.notes} {r.checked}" for r in reports) + f"; {elapsed:.0f}s"
        assert all(r.checked > 0 for r in reports)
        bad = [(r.theorem, r.counterexamples[:2]) for r in reports if not r.holds]
        assert not bad, bad
        assert elapsed < 300.0


def test_criterion_10_property_suites(criterion):
    with criterion(10, "eigen/Coulson agreement, spectral moments, closed forms") as c:
        worst = 0.0
        members = 0
        for _, _, g in _family_members(40):
            members += 1
            e = energy_eigen(g).value
            worst = max(worst, abs(e - energy_coulson(g).value))
            w, _ = spectrum(g)
            assert abs(np.sum(w)) < 1e-8
            assert abs(np.sum(w * w) - 2 * g.m) < 1e-8
        assert worst <= 1e-6

        ctx = ClosedFormContext()
        rng = random.Random(10)
        for _ in range(1000):
            x = 10 ** rng.uniform(-3, 3)
            z1, z2 = ctx.Z1(x), ctx.Z2(x)
            s = 1 + x * x
            assert abs(z1 + z2 + x * x + 1) <= 1e-12 * s
            assert abs(z1 * z2 + x * x) <= 1e-12 * s * s
            assert 0 < z1 / x < 1

        worst_rel = 0.0
        for fam in ("A", "D"):
            for n in range(6, 41, 2):
                a = charpoly_recursive(build(fam, n)).a
                for x in (0.01, 0.1, 0.5, 1.0, 3.0, 10.0):
                    want = horner(a, 1j * x).real
                    worst_rel = max(worst_rel, abs(closedform_eval(fam, n, x) - want) / abs(want))
        c.detail = f"{members} members, max |eig-Coulson| {worst:.1e}, closed-form rel err {worst_rel:.1e}"
        assert worst_rel <= 1e-9
