"""Floating-point verification of the list-coincidence property.

From a sample point z0, the w-fiber (roots of P(z0, .)) is computed, and
from each of its points the z-fiber back; a correspondence that links a
fixed z-list to a fixed w-list must produce the same back-solved list on
every branch.  The check is mirrored starting from w-samples.  All root
finding is simultaneous Aberth-Ehrlich iteration in double precision.

Multiple roots need care: a cluster of m nearly coincident approximations
carries an error of roughly the m-th root of machine precision.  Detected
clusters are therefore refined with Newton's method on the (m-1)-th
derivative, whose root at an m-fold root is simple and well conditioned,
and every root carries an error estimate.  A branch mismatch only counts
as refuting evidence when it exceeds both the tolerance and a safe
multiple of those estimates; mismatches inside the noise band make the
sample inconclusive instead.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Sequence

from scipy.optimize import linear_sum_assignment

from .corr import Correspondence

ComplexF = complex

DEFAULT_TOL = 1e-6
DEFAULT_EPS = 1e-12
DEFAULT_MAX_ITER = 200

_RESIDUAL_FACTOR = 4e-16   # freeze a root when |p| is at evaluation noise
_CLUSTER_SPAN = 1e-3       # relative grouping width for multiple roots
_GATE_FACTOR = 10.0        # refutation must exceed this multiple of error


class ZeroPolynomialError(ValueError):
    pass


class NoConvergenceError(RuntimeError):
    pass


def _horner(mon: Sequence[complex], x: complex) -> tuple[complex, complex]:
    p = 0j
    dp = 0j
    for c in reversed(mon):
        dp = dp * x + p
        p = p * x + c
    return p, dp


def _derivative(mon: Sequence[complex]) -> list[complex]:
    return [i * c for i, c in enumerate(mon)][1:]


def roots(
    coeffs: Sequence[complex],
    eps: float = DEFAULT_EPS,
    max_iter: int = DEFAULT_MAX_ITER,
) -> list[complex]:
    """All roots of the polynomial with the given ascending coefficients.

    Leading coefficients of magnitude below eps * max|coeff| are trimmed
    first; the returned list has exactly the trimmed degree many entries
    (repeats included).  Raises ZeroPolynomialError when nothing remains
    and NoConvergenceError when the iteration exhausts max_iter.
    """
    return roots_with_errors(coeffs, eps, max_iter)[0]


def roots_with_errors(
    coeffs: Sequence[complex],
    eps: float = DEFAULT_EPS,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[list[complex], list[float]]:
    """Roots plus per-root forward error estimates."""
    cs = [complex(c) for c in coeffs]
    if not cs:
        raise ZeroPolynomialError("empty coefficient list")
    top = max(abs(c) for c in cs)
    if top == 0.0:
        raise ZeroPolynomialError("zero polynomial")
    n = len(cs) - 1
    while n > 0 and abs(cs[n]) < eps * top:
        n -= 1
    if abs(cs[n]) < eps * top:
        raise ZeroPolynomialError("all coefficients below the trim threshold")
    cs = cs[: n + 1]
    if n == 0:
        return [], []
    lead = cs[-1]
    mon = [c / lead for c in cs]
    zs = _initial_guesses(mon)
    for _ in range(max_iter):
        frozen = True
        for k in range(n):
            p, dp = _horner(mon, zs[k])
            noise = _RESIDUAL_FACTOR * _scale_at(mon, abs(zs[k]))
            if abs(p) <= noise:
                continue
            frozen = False
            if dp == 0:
                zs[k] += 1e-6 * (1 + abs(zs[k]))
                continue
            newton = p / dp
            s = sum(1 / (zs[k] - zs[j]) for j in range(n) if j != k)
            d = 1 - newton * s
            zs[k] -= newton if d == 0 else newton / d
        if frozen:
            break
    else:
        raise NoConvergenceError(
            f"no convergence after {max_iter} Aberth iterations (degree {n})"
        )
    return _refine_clusters(mon, zs)


def _scale_at(mon: Sequence[complex], r: float) -> float:
    s = 0.0
    rk = 1.0
    for c in mon:
        s += abs(c) * rk
        rk *= r
    return s


def _initial_guesses(mon: Sequence[complex]) -> list[complex]:
    n = len(mon) - 1
    radius = 1 + max(abs(c) for c in mon[:-1])
    center = -mon[-2] / n
    return [
        center + 0.6 * radius * cmath.exp(2j * cmath.pi * k / n + 0.41j)
        for k in range(n)
    ]


def _refine_clusters(
    mon: Sequence[complex], zs: list[complex]
) -> tuple[list[complex], list[float]]:
    n = len(zs)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(zs[i] - zs[j]) <= _CLUSTER_SPAN * (1 + abs(zs[i])):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = list(zs)
    err = [0.0] * n
    for members in groups.values():
        m = len(members)
        if m == 1:
            k = members[0]
            p, dp = _horner(mon, zs[k])
            err[k] = abs(p) / abs(dp) if dp != 0 else _CLUSTER_SPAN
            continue
        center = sum(zs[i] for i in members) / m
        radius = max(abs(zs[i] - center) for i in members)
        refined, estimate = _newton_on_derivative(mon, center, m - 1)
        if refined is not None and abs(refined - center) <= 4 * radius + 1e-9 * (
            1 + abs(center)
        ):
            center = refined
            e = estimate + 1e-12 * (1 + abs(center))
        else:
            e = radius
        for i in members:
            out[i] = center
            err[i] = max(e, 1e-14)
    return out, err


def _newton_on_derivative(
    mon: Sequence[complex], start: complex, order: int
) -> tuple[complex | None, float]:
    dm = list(mon)
    for _ in range(order):
        dm = _derivative(dm)
    x = start
    step = 0.0
    for _ in range(40):
        p, dp = _horner(dm, x)
        if dp == 0:
            return None, 0.0
        delta = p / dp
        x -= delta
        step = abs(delta)
        if step <= 1e-15 * (1 + abs(x)):
            return x, step
    return None, step


# ---------------------------------------------------------------------------
# solution lists and the verifier
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolutionLists:
    """The fibers associated to a base point z0.

    l_w are the roots of P(z0, .); per_branch_lz[k] are the roots of
    P(., l_w[k]).  Error estimates accompany each list for downstream
    noise gating.
    """

    z0: complex
    l_w: tuple[complex, ...]
    per_branch_lz: tuple[tuple[complex, ...], ...]
    w_error: float
    branch_errors: tuple[float, ...]


class VerifyVerdict(Enum):
    RESTRICTIVE_EVIDENCE = "restrictive_evidence"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BranchMismatch:
    start: complex
    axis: str            # "z" or "w": which plane the sample point lives in
    branch_pair: tuple[int, int]
    distance: float


@dataclass(frozen=True)
class VerificationReport:
    samples: int
    clean_probes: int
    inconclusive_events: int
    max_list_discrepancy: float
    failures: tuple[BranchMismatch, ...]
    verdict: VerifyVerdict


class _FloatPoly:
    """Double-precision view of a correspondence grid."""

    def __init__(self, corr: Correspondence):
        self.deg_z, self.deg_w = corr.poly.bidegree
        self.grid = [
            [complex(c) for c in row] for row in corr.poly.grid
        ]

    def w_coeffs_at(self, z0: complex) -> list[complex]:
        out = [0j] * (self.deg_w + 1)
        zp = 1 + 0j
        for j in range(self.deg_z + 1):
            row = self.grid[j]
            for k in range(self.deg_w + 1):
                out[k] += row[k] * zp
            zp *= z0
        return out

    def z_coeffs_at(self, w0: complex) -> list[complex]:
        out = [0j] * (self.deg_z + 1)
        wp = 1 + 0j
        for k in range(self.deg_w + 1):
            for j in range(self.deg_z + 1):
                out[j] += self.grid[j][k] * wp
            wp *= w0
        return out


def solution_lists(
    corr: Correspondence,
    z0: complex,
    eps: float = DEFAULT_EPS,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SolutionLists:
    """Solve the w-fiber of z0 and the z-fiber of each of its points."""
    fp = _FloatPoly(corr)
    l_w, w_err = roots_with_errors(fp.w_coeffs_at(complex(z0)), eps, max_iter)
    branches = []
    branch_errors = []
    for w in l_w:
        lz, ze = roots_with_errors(fp.z_coeffs_at(w), eps, max_iter)
        branches.append(tuple(lz))
        branch_errors.append(max(ze, default=0.0))
    return SolutionLists(
        z0=complex(z0),
        l_w=tuple(l_w),
        per_branch_lz=tuple(branches),
        w_error=max(w_err, default=0.0),
        branch_errors=tuple(branch_errors),
    )


def multiset_match_cost(xs: Sequence[complex], ys: Sequence[complex]) -> float:
    """Largest matched distance under a minimum-cost pairing of two lists.

    Lists of unequal length have infinite cost.  Optimal assignment (not
    greedy nearest-neighbor) keeps clustered repeated roots from being
    mispaired.
    """
    if len(xs) != len(ys):
        return float("inf")
    if not xs:
        return 0.0
    cost = [[abs(a - b) for b in ys] for a in xs]
    rows, cols = linear_sum_assignment(cost)
    return max(cost[r][c] for r, c in zip(rows, cols))


def _sample_point(rng: Random) -> complex:
    # annulus 0.5 <= |z| <= 2, bounded away from both coordinate axes
    while True:
        r = rng.uniform(0.5, 2.0)
        theta = rng.uniform(0.0, 2.0 * cmath.pi)
        p = r * cmath.exp(1j * theta)
        if min(abs(p.real), abs(p.imag)) > 0.05 * r:
            return p


def verify_restrictive(
    corr: Correspondence,
    samples: int = 20,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    eps: float = DEFAULT_EPS,
    max_iter: int = DEFAULT_MAX_ITER,
) -> VerificationReport:
    """Sample base points in both planes and compare branch lists.

    Each sample draws one z-point and one w-point.  A probe is clean when
    every fiber solve converged with full degree; pairwise branch-list
    mismatches above the tolerance at a clean probe refute, unless they
    sit within the root error noise band, in which case the probe is
    counted inconclusive.  The verdict is refuted on any refuting probe,
    restrictive evidence when clean probes dominate, and inconclusive
    otherwise.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = Random(seed)
    fp = _FloatPoly(corr)
    swapped = _SwappedView(fp)
    clean = 0
    inconclusive = 0
    failures: list[BranchMismatch] = []
    worst = 0.0
    for _ in range(samples):
        for axis, view in (("z", fp), ("w", swapped)):
            start = _sample_point(rng)
            outcome = _probe(view, start, axis, tol, eps, max_iter)
            if outcome is None:
                inconclusive += 1
                continue
            cost, probe_failures = outcome
            worst = max(worst, cost)
            if probe_failures:
                failures.extend(probe_failures)
            elif cost > tol:
                inconclusive += 1   # mismatch within the root-noise band
            else:
                clean += 1
    failures.sort(key=lambda f: (f.axis, f.start.real, f.start.imag, f.branch_pair))
    total = 2 * samples
    if failures:
        verdict = VerifyVerdict.REFUTED
    elif clean >= (total + 1) // 2:
        verdict = VerifyVerdict.RESTRICTIVE_EVIDENCE
    else:
        verdict = VerifyVerdict.INCONCLUSIVE
    return VerificationReport(
        samples=samples,
        clean_probes=clean,
        inconclusive_events=inconclusive,
        max_list_discrepancy=worst,
        failures=tuple(failures),
        verdict=verdict,
    )


class _SwappedView:
    """The same grid with the two planes exchanged."""

    def __init__(self, fp: _FloatPoly):
        self._fp = fp
        self.deg_z, self.deg_w = fp.deg_w, fp.deg_z

    def w_coeffs_at(self, z0: complex) -> list[complex]:
        return self._fp.z_coeffs_at(z0)

    def z_coeffs_at(self, w0: complex) -> list[complex]:
        return self._fp.w_coeffs_at(w0)


def _probe(view, start: complex, axis: str, tol: float, eps: float, max_iter: int):
    """One base point: solve fibers, compare branch lists pairwise.

    Returns None when the probe is unusable (non-convergence or degree
    drop), else (max pairwise cost, refuting mismatches).
    """
    try:
        fiber, fiber_err = roots_with_errors(view.w_coeffs_at(start), eps, max_iter)
    except (ZeroPolynomialError, NoConvergenceError):
        return None
    if len(fiber) != view.deg_w:
        return None
    lists: list[list[complex]] = []
    errors: list[float] = []
    for w in fiber:
        try:
            lz, ze = roots_with_errors(view.z_coeffs_at(w), eps, max_iter)
        except (ZeroPolynomialError, NoConvergenceError):
            return None
        if len(lz) != view.deg_z:
            return None
        lists.append(lz)
        errors.append(max(ze, default=0.0))
    fiber_noise = max(fiber_err, default=0.0)
    worst = 0.0
    refuting: list[BranchMismatch] = []
    for a in range(len(lists)):
        for b in range(a + 1, len(lists)):
            cost = multiset_match_cost(lists[a], lists[b])
            worst = max(worst, cost)
            gate = max(
                tol,
                _GATE_FACTOR * errors[a],
                _GATE_FACTOR * errors[b],
                _GATE_FACTOR * fiber_noise,
            )
            if cost > gate:
                refuting.append(
                    BranchMismatch(
                        start=start, axis=axis, branch_pair=(a, b), distance=cost
                    )
                )
    return worst, refuting
