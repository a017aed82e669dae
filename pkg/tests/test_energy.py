import math

import numpy as np
import pytest

from conftest import random_unicyclic
from unienergy.energy import (
    COULSON,
    EIGEN_SUM,
    ClosedFormContext,
    closedform_eval,
    default_tol,
    energy_coulson,
    energy_difference_coulson,
    energy_difference_detail,
    energy_eigen,
    spectrum,
    theorem216_integrand_probe,
)
from unienergy.errors import DomainError, InvalidOrder, MismatchedOrder
from unienergy.families import build
from unienergy.graph import LabeledGraph, cycle_graph, path_graph
from unienergy.polynomial import charpoly_recursive, horner

FAMILIES = ("A", "B", "D", "E", "F", "S_radialene")


def test_known_small_energies():
    # E(P_2) = 2, E(C_4) = 4, E(C_6) = 8
    assert energy_eigen(path_graph(2)).value == pytest.approx(2.0, abs=1e-12)
    assert energy_eigen(cycle_graph(4)).value == pytest.approx(4.0, abs=1e-12)
    assert energy_eigen(cycle_graph(6)).value == pytest.approx(8.0, abs=1e-12)
    assert energy_coulson(cycle_graph(6)).value == pytest.approx(8.0, abs=1e-9)
    assert energy_eigen(LabeledGraph(3)).value == 0.0


def test_methods_label_themselves():
    g = build("A", 8)
    assert energy_eigen(g).method == EIGEN_SUM
    assert energy_coulson(g).method == COULSON


def test_spectrum_moments(rng):
    for _ in range(100):
        g = random_unicyclic(rng.randrange(3, 30), rng)
        w, _ = spectrum(g)
        assert abs(np.sum(w)) < 1e-9
        assert np.sum(w * w) == pytest.approx(2 * g.m, abs=1e-9)


@pytest.mark.parametrize("name", FAMILIES)
def test_eigen_and_coulson_agree(name):
    lo = 8 if name == "E" else 6
    for n in range(lo, 41, 2):
        g = build(name, n, strict=False)
        e, c = energy_eigen(g), energy_coulson(g)
        assert abs(e.value - c.value) <= 1e-6, (name, n)
        assert e.agrees_with(c, 1e-9)


def test_tolerance_from_environment(monkeypatch):
    monkeypatch.setenv("UNIENERGY_TOL", "1e-6")
    assert default_tol() == 1e-6
    monkeypatch.setenv("UNIENERGY_TOL", "-1")
    with pytest.raises(ValueError):
        default_tol()


def test_energy_difference_against_eigen(rng):
    for _ in range(50):
        n = rng.randrange(8, 31, 2)
        a, b = rng.sample(FAMILIES, 2)
        g1, g2 = build(a, n, strict=False), build(b, n, strict=False)
        want = energy_eigen(g1).value - energy_eigen(g2).value
        got, err = energy_difference_detail(g1, g2)
        assert got == pytest.approx(want, abs=1e-7), (a, b, n)
        assert err < 1e-7


def test_energy_difference_basic():
    g = build("B", 8)
    assert energy_difference_coulson(g, g) == 0.0
    d = energy_difference_coulson(build("A", 6), build("D", 6))
    assert d == pytest.approx(-0.6050304477, abs=1e-8)
    with pytest.raises(MismatchedOrder):
        energy_difference_coulson(build("A", 6), build("A", 8))


def test_closed_form_context_identities(rng):
    ctx = ClosedFormContext()
    for _ in range(1000):
        x = 10 ** rng.uniform(-3, 3) * rng.choice((1, -1))
        z1, z2 = ctx.Z1(x), ctx.Z2(x)
        scale = 1 + x * x
        assert abs(z1 + z2 - (-x * x - 1)) <= 1e-12 * scale
        assert abs(z1 * z2 + x * x) <= 1e-12 * scale * scale
        if x > 0:
            assert 0 < z1 / x < 1


def test_closed_form_against_horner():
    for family in ("A", "D"):
        for n in range(6, 41, 2):
            a = charpoly_recursive(build(family, n)).a
            for x in (0.05, 0.3, 1.0, 2.0, 7.5):
                want = horner(a, 1j * x).real
                got = closedform_eval(family, n, x)
                assert got == pytest.approx(want, rel=1e-9), (family, n, x)


def test_closed_form_spot_values():
    assert closedform_eval("A", 6, 1.0) == pytest.approx(-13.0, rel=1e-12)
    assert closedform_eval("D", 8, 2.0) == pytest.approx(1041.0, rel=1e-12)


def test_closed_form_domain():
    with pytest.raises(DomainError):
        closedform_eval("A", 8, 0.0)
    with pytest.raises(InvalidOrder):
        closedform_eval("B", 8, 1.0)
    with pytest.raises(InvalidOrder):
        closedform_eval("A", 7, 1.0)


def test_probe():
    report = theorem216_integrand_probe()
    assert report.integral == pytest.approx(-0.8538292323, abs=1e-6)
    assert report.err_estimate < 1e-8
    assert report.holds
    for s in report.samples:
        if abs(s.x) <= 30:
            assert s.cross_diff == pytest.approx(s.closed_diff, rel=1e-6)
            assert s.cross_sum == pytest.approx(s.closed_sum, rel=1e-6)


def test_probe_rejects_zero_sample():
    with pytest.raises(DomainError):
        theorem216_integrand_probe([0.0])


def test_large_family_energy_is_finite():
    g = build("A", 400)
    e, c = energy_eigen(g), energy_coulson(g)
    assert math.isfinite(c.value)
    assert abs(e.value - c.value) < 1e-6
