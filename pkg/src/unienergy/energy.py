"""Graph energy: eigenvalue sums, the Coulson integral and energy differences.

Both integrals are split at x = 1 and the piece over [1, inf) is rewritten
with x = 1/y, so every numerical integrand below is smooth on [0, 1]:

* energy:      E = (1/pi) [ int_0^1 ln W(x)/x^2 dx + 2J + int_0^1 ln W~(y) dy ]
  where W = P^2 + Q^2 is built from the b-sequence, J is the index of the
  last nonzero b and W~ is W with x^J factored out.
* differences: the log|x| singularity at 0 (different nullities) and the
  constant offset are integrated in closed form, only the bounded remainder
  is handed to the quadrature.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import DomainError, InvalidOrder, MismatchedOrder, NonConvergent, SizeLimit
from .graph import LabeledGraph
from .polynomial import CharPoly, b_sequence, charpoly_det, charpoly_recursive

EIGEN_LIMIT = 2048
DEFAULT_TOL = 1e-8
QUAD_LIMIT = 400

EIGEN_SUM = "EigenSum"
COULSON = "CoulsonIntegral"


def default_tol() -> float:
    """Quadrature tolerance, overridable through UNIENERGY_TOL."""
    raw = os.environ.get("UNIENERGY_TOL")
    if not raw:
        return DEFAULT_TOL
    tol = float(raw)
    if not tol > 0:
        raise ValueError(f"UNIENERGY_TOL must be positive, got {raw!r}")
    return tol


@dataclass(frozen=True)
class EnergyValue:
    value: float
    method: str
    err_estimate: float

    def agrees_with(self, other: EnergyValue, slack: float = 0.0) -> bool:
        return abs(self.value - other.value) <= self.err_estimate + other.err_estimate + slack


# ---------------------------------------------------------------------------
# eigenvalues


def spectrum(g: LabeledGraph) -> tuple[np.ndarray, float]:
    """Adjacency eigenvalues and a bound on their total absolute error."""
    if g.n > EIGEN_LIMIT:
        raise SizeLimit(f"eigensolve supports n <= {EIGEN_LIMIT}, got {g.n}")
    if g.n == 0:
        return np.zeros(0), 0.0
    a = g.adjacency_matrix().astype(float)
    w, v = np.linalg.eigh(a)
    # for a symmetric matrix each computed eigenvalue lies within the residual
    # norm of a true one; add a backward-error floor for the solver itself
    resid = np.linalg.norm(a @ v - v * w, axis=0)
    floor = g.n * np.finfo(float).eps * max(1.0, float(np.max(np.abs(w))))
    return w, float(np.sum(resid) + g.n * floor)


def energy_eigen(g: LabeledGraph) -> EnergyValue:
    w, err = spectrum(g)
    return EnergyValue(float(np.sum(np.abs(w))), EIGEN_SUM, err)


# ---------------------------------------------------------------------------
# quadrature helper


def integrate01(f: Callable[[float], float], tol: float) -> tuple[float, float]:
    """Adaptive Gauss-Kronrod (QUADPACK) on [0, 1]; raises NonConvergent."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        out = quad(f, 0.0, 1.0, epsabs=tol, epsrel=1e-13, limit=QUAD_LIMIT, full_output=1)
    value, err = out[0], out[1]
    if len(out) > 3 and err > tol:
        raise NonConvergent(f"quadrature stopped at error {err:.3g} > {tol:.3g}: {out[3]}")
    return value, err


def integrate_halfline(f: Callable[[float], float], tol: float) -> tuple[float, float]:
    """int_0^inf f(x) dx through x = t/(1-t)."""

    def mapped(t: float) -> float:
        s = 1.0 - t
        return f(t / s) / (s * s)

    return integrate01(mapped, tol)


# ---------------------------------------------------------------------------
# Coulson integral


def _split_parity(b: Sequence[int]) -> tuple[list[float], list[float]]:
    even = [float(c) for c in b[0::2]]
    odd = [float(c) for c in b[1::2]]
    return even, odd


def _poly_in_sq(coeffs: Sequence[float], xx: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * xx + c
    return acc


def coulson_integrands(b: Sequence[int]):
    """(low, high, J): the two smooth [0, 1] integrands and the top index J."""
    b = list(b)
    top = max(i for i, c in enumerate(b) if c)
    even, odd = _split_parity(b)

    def low(x: float) -> float:
        if x == 0.0:
            return 2.0 * b[2] if len(b) > 2 else 0.0
        xx = x * x
        p1 = _poly_in_sq(even[1:], xx) * xx  # P - 1
        q = _poly_in_sq(odd, xx) * x
        return math.log1p(2.0 * p1 + p1 * p1 + q * q) / xx

    rev = [float(b[top - k]) if top - k >= 0 else 0.0 for k in range(top + 1)]
    rev_even = rev[0::2]
    rev_odd = rev[1::2]

    def high(y: float) -> float:
        # x^top P~(y) with y = 1/x; the parities of rev follow top - j
        yy = y * y
        pe = _poly_in_sq(rev_even, yy)
        po = _poly_in_sq(rev_odd, yy) * y
        return math.log(pe * pe + po * po)

    return low, high, top


def energy_coulson(g: LabeledGraph, *, tol: float | None = None) -> EnergyValue:
    tol = default_tol() if tol is None else tol
    b = b_sequence(g)
    if g.m == 0:
        return EnergyValue(0.0, COULSON, 0.0)
    low, high, top = coulson_integrands(b.b)
    i_low, e_low = integrate01(low, tol * math.pi / 2)
    i_high, e_high = integrate01(high, tol * math.pi / 2)
    value = (i_low + 2 * top + i_high) / math.pi
    return EnergyValue(max(value, 0.0), COULSON, (e_low + e_high) / math.pi)


# ---------------------------------------------------------------------------
# energy differences


def _charpoly_any(g: LabeledGraph) -> CharPoly:
    counts = g.component_cycle_counts()
    if all(c <= 1 for c in counts):
        return charpoly_recursive(g)
    return charpoly_det(g)


_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True)
class _ImagAxisLog:
    """Pieces of log|phi(ix)| for one polynomial.

    On (0, 1]: log|phi(ix)| = k ln x + const + smooth0(x), k the nullity.
    At x = 1/y: log|phi(ix)| = n ln x + smooth_inf(y), smooth_inf(0) = 0.
    """

    a: tuple[int, ...]
    k: int = field(init=False)
    const: float = field(init=False)
    near0: tuple[complex, ...] = field(init=False)
    near_inf: tuple[complex, ...] = field(init=False)

    def __post_init__(self) -> None:
        a, n = self.a, len(self.a) - 1
        jm = max(j for j, c in enumerate(a) if c)
        object.__setattr__(self, "k", n - jm)
        object.__setattr__(self, "const", math.log(abs(a[jm])))
        # phi(ix) = a_jm (ix)^k [1 + sum_{m>=1} (a_{jm-m}/a_jm) i^m x^m]
        near0 = tuple(a[jm - m] / a[jm] * _I_POW[m % 4] for m in range(1, jm + 1))
        # x^-n phi(ix) at x = 1/y equals i^n [1 + sum_{j>=1} a_j i^-j y^j]
        near_inf = tuple(a[j] * _I_POW[-j % 4] for j in range(1, n + 1))
        object.__setattr__(self, "near0", near0)
        object.__setattr__(self, "near_inf", near_inf)

    @staticmethod
    def _log_abs_one_plus(coeffs: Sequence[complex], t: float) -> float:
        r = 0j
        for c in reversed(coeffs):
            r = (r + c) * t
        return 0.5 * math.log1p(2.0 * r.real + abs(r) ** 2)

    def smooth0(self, x: float) -> float:
        return self._log_abs_one_plus(self.near0, x)

    def smooth_inf(self, y: float) -> float:
        return self._log_abs_one_plus(self.near_inf, y)


def energy_difference_coulson(g1: LabeledGraph, g2: LabeledGraph, *, tol: float | None = None) -> float:
    return energy_difference_detail(g1, g2, tol=tol)[0]


def energy_difference_detail(
    g1: LabeledGraph, g2: LabeledGraph, *, tol: float | None = None
) -> tuple[float, float]:
    """E(g1) - E(g2) = (1/pi) int_R log|phi(g1, ix) / phi(g2, ix)| dx, with its error bound."""
    if g1.n != g2.n:
        raise MismatchedOrder(f"orders differ: {g1.n} vs {g2.n}")
    if g1 == g2:
        return 0.0, 0.0
    tol = default_tol() if tol is None else tol
    f1, f2 = _ImagAxisLog(_charpoly_any(g1).a), _ImagAxisLog(_charpoly_any(g2).a)
    # on (0, 1]: (k1 - k2) ln x + (c1 - c2) integrates to -(k1 - k2) + (c1 - c2)
    analytic = -(f1.k - f2.k) + (f1.const - f2.const)
    part0, e0 = integrate01(lambda x: f1.smooth0(x) - f2.smooth0(x), tol * math.pi / 4)

    def tail(y: float) -> float:
        if y == 0.0:
            return 0.0
        return (f1.smooth_inf(y) - f2.smooth_inf(y)) / (y * y)

    part_inf, e_inf = integrate01(tail, tol * math.pi / 4)
    total = 2.0 / math.pi * (analytic + part0 + part_inf)
    return total, 2.0 / math.pi * (e0 + e_inf)


# ---------------------------------------------------------------------------
# closed forms for A_n and D_n on the imaginary axis


def _f6(x: float) -> float:
    xx = x * x
    return ((xx + 6) * xx + 6) * xx


def _f8(x: float) -> float:
    xx = x * x
    return (((xx + 8) * xx + 16) * xx + 6) * xx


def _g6(x: float) -> float:
    xx = x * x
    return ((xx + 6) * xx + 5) * xx + 1


def _g8(x: float) -> float:
    xx = x * x
    return (((xx + 8) * xx + 15) * xx + 8) * xx + 1


class ClosedFormContext:
    """Evaluators for the two-root solution of f(n) = (x^2-1) f(n-2) - x^2 f(n-4).

    ``Y1``/``Y2`` are the roots in the real variable (complex where the
    discriminant x^4 - 6x^2 + 1 is negative); ``Z1``/``Z2`` are Y1(ix),
    Y2(ix); ``A1``..``B2`` are the coefficient functions evaluated at ix.
    """

    f6 = staticmethod(_f6)
    f8 = staticmethod(_f8)
    g6 = staticmethod(_g6)
    g8 = staticmethod(_g8)

    @staticmethod
    def _check(x: float) -> None:
        if x == 0:
            raise DomainError("the closed forms are undefined at x = 0")

    @staticmethod
    def Y1(x: float) -> complex:
        return (x * x - 1 + np.sqrt(complex(x**4 - 6 * x * x + 1))) / 2

    @staticmethod
    def Y2(x: float) -> complex:
        return (x * x - 1 - np.sqrt(complex(x**4 - 6 * x * x + 1))) / 2

    @staticmethod
    def _s(x: float) -> float:
        xx = x * x
        return math.sqrt(xx * xx + 6 * xx + 1)

    def Z1(self, x: float) -> float:
        # (-x^2 - 1 + s)/2 rewritten without the cancellation at small |x|
        xx = x * x
        return 2 * xx / (self._s(x) + xx + 1)

    def Z2(self, x: float) -> float:
        return (-x * x - 1 - self._s(x)) / 2

    def _den1(self, x: float) -> float:
        z = self.Z1(x)
        return z**4 + z * z * x * x

    def _den2(self, x: float) -> float:
        z = self.Z2(x)
        return z**4 + z * z * x * x

    def A1(self, x: float) -> float:
        self._check(x)
        # f8 + Z2 f6 loses the common 6x^2 to cancellation near 0; the
        # expanded difference keeps full precision
        return self._num1(x, _f6, _f8) / self._den1(x)

    def A2(self, x: float) -> float:
        self._check(x)
        return (_f8(x) + self.Z1(x) * _f6(x)) / self._den2(x)

    def B1(self, x: float) -> float:
        self._check(x)
        return self._num1(x, _g6, _g8) / self._den1(x)

    def B2(self, x: float) -> float:
        self._check(x)
        return (_g8(x) + self.Z1(x) * _g6(x)) / self._den2(x)

    def _num1(self, x: float, lo, hi) -> float:
        # Z2 = -1 - x^2 - Z1, so hi + Z2 lo = (hi - (1 + x^2) lo) - Z1 lo
        xx = x * x
        return (hi(x) - (1 + xx) * lo(x)) - self.Z1(x) * lo(x)

    def phi(self, family: str, n: int, x: float) -> float:
        """phi(family_n, ix) as a real number."""
        self._check(x)
        if family == "A":
            c1, c2 = self.A1(x), self.A2(x)
        elif family == "D":
            c1, c2 = self.B1(x), self.B2(x)
        else:
            raise InvalidOrder(f"closed form exists for A and D only, got {family!r}")
        if n % 2 or n < 6:
            raise InvalidOrder(f"{family}_n closed form needs even n >= 6, got {n}")
        k = n // 2
        return c1 * self.Z1(x) ** k + c2 * self.Z2(x) ** k


_CTX = ClosedFormContext()


def closedform_eval(family: str, n: int, x: float) -> float:
    return _CTX.phi(family, n, x)


# ---------------------------------------------------------------------------
# numerical probe of the bound used for E(A_n) < E(D_n), n = 0 mod 4


def paper_a1b2_minus_a2b1(x: float) -> float:
    xx = x * x
    s2 = xx * xx + 6 * xx + 1
    return (-3 * xx**4 - 15 * xx**3 - 8 * xx**2) * math.sqrt(s2) / (xx**3 * s2)


def paper_a1b2_plus_a2b1(x: float) -> float:
    xx = x * x
    s2 = xx * xx + 6 * xx + 1
    return (4 * xx**2 + 17 * xx**3 + 20 * xx**4 + 3 * xx**5) / (xx**3 * s2)


@dataclass(frozen=True)
class ProbeSample:
    x: float
    cross_diff: float
    cross_sum: float
    closed_diff: float
    closed_sum: float

    @property
    def signs_ok(self) -> bool:
        return self.cross_diff < 0 < self.cross_sum


@dataclass(frozen=True)
class ProbeReport:
    integral: float
    err_estimate: float
    samples: tuple[ProbeSample, ...]

    @property
    def holds(self) -> bool:
        return self.integral < 0 and all(s.signs_ok for s in self.samples)


DEFAULT_PROBE_SAMPLES = tuple(s * 10.0**e for e in (-2, -1, 0, 1, 2) for s in (1.0, -1.0, 3.0, -3.0))


def theorem216_integrand_probe(
    x_samples: Sequence[float] | None = None, *, tol: float | None = None
) -> ProbeReport:
    """Integrate A2(ix)/B2(ix) - 1 over the real line and check the two
    sign conditions at the given sample points."""
    tol = default_tol() if tol is None else tol
    ctx = _CTX

    def integrand(x: float) -> float:
        if x == 0.0:
            return -1.0
        z = ctx.Z1(x)
        # the Z2 denominators of A2 and B2 cancel
        return (_f8(x) + z * _f6(x)) / (_g8(x) + z * _g6(x)) - 1.0

    half, err = integrate_halfline(integrand, tol / 2)
    samples = []
    for x in DEFAULT_PROBE_SAMPLES if x_samples is None else x_samples:
        if x == 0:
            raise DomainError("probe samples must be nonzero")
        a1, a2, b1, b2 = ctx.A1(x), ctx.A2(x), ctx.B1(x), ctx.B2(x)
        samples.append(ProbeSample(
            x, a1 * b2 - a2 * b1, a1 * b2 + a2 * b1,
            paper_a1b2_minus_a2b1(x), paper_a1b2_plus_a2b1(x),
        ))
    return ProbeReport(2 * half, 2 * err, tuple(samples))
