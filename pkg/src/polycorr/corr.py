"""Correspondence-level semantics.

A bivariate polynomial of bidegree (dz, dw) is treated as a multivalued
relation between the z- and w-planes.  Admissible correspondences have
both degrees positive, at least one of them >= 2, and no linear factor in
either variable alone.  The rank of the coefficient matrix then settles
everything:

* rank 2  — the relation separates as R(z) = S(w) with rational maps R, S
  of degrees dz and dw: the correspondence links a fixed dz-list of
  z-points to a fixed dw-list of w-points ("irreducible restrictive");
* rank d+1 with an exact d-th root — a perfect power of a rank-2
  correspondence ("reducible restrictive");
* anything else — not restrictive.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .exactnum import I, ONE, ZERO, GaussianRational, nth_root
from .linalg import ExactMatrix, full_rank_factorize, rank, rref
from .poly import (
    BiPoly,
    UniPoly,
    check_p1_p2,
    coeff_matrix,
    divmod_uni,
    exact_div_uni,
    gcd_uni,
    proportionality_constant,
)


class ValidationError(ValueError):
    """Input rejected; `condition` names the violated admissibility rule."""

    condition = "invalid"


class DegreeTooLowError(ValidationError):
    condition = "degree"


class P1ViolationError(ValidationError):
    condition = "P1"


class P2ViolationError(ValidationError):
    condition = "P2"


class RankNotTwoError(ValueError):
    def __init__(self, actual: int):
        super().__init__(f"separation requires coefficient rank 2, got {actual}")
        self.actual = actual


@dataclass(frozen=True)
class Correspondence:
    """A validated polynomial correspondence."""

    poly: BiPoly

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.poly.bidegree

    @property
    def deg_z(self) -> int:
        return self.poly.deg_z

    @property
    def deg_w(self) -> int:
        return self.poly.deg_w


def validate(p: BiPoly) -> Correspondence:
    """Check admissibility, returning a Correspondence or raising.

    Raises DegreeTooLowError when a degree is 0 or both degrees are 1;
    P1ViolationError / P2ViolationError when a linear polynomial in z alone
    (resp. w alone) divides p.
    """
    dz, dw = p.bidegree
    if p.is_zero or dz < 1 or dw < 1:
        raise DegreeTooLowError(
            f"bidegree {p.bidegree} inadmissible: both degrees must be >= 1"
        )
    p1_ok, p2_ok = check_p1_p2(p)
    if not p1_ok:
        raise P1ViolationError("a linear polynomial in z divides the input")
    if not p2_ok:
        raise P2ViolationError("a linear polynomial in w divides the input")
    if max(dz, dw) < 2:
        raise DegreeTooLowError(
            f"bidegree {p.bidegree} inadmissible: at least one degree must be >= 2"
        )
    return Correspondence(p)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


class Verdict(Enum):
    IRREDUCIBLE_RESTRICTIVE = "irreducible_restrictive"
    REDUCIBLE_RESTRICTIVE = "reducible_restrictive"
    NOT_RESTRICTIVE = "not_restrictive"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    rank: int
    power: int | None = None   # d with poly = root**d, when reducible
    root: BiPoly | None = None
    evidence: str = ""


def classify(corr: Correspondence) -> Classification:
    """Decide irreducible / reducible restrictive / not restrictive.

    Rank 2 is the irreducible case.  For rank r > 2 only d = r - 1 can
    work (a d-th power of a rank-2 correspondence has rank exactly d + 1),
    so that single candidate is tried; the evidence string records why it
    failed when the verdict is not restrictive.
    """
    p = corr.poly
    rho = rank(coeff_matrix(p))
    # rank 0 needs the zero polynomial and rank 1 forces a one-variable
    # factor; both are excluded by validation
    assert rho >= 2, "validated correspondence with coefficient rank < 2"
    if rho == 2:
        return Classification(Verdict.IRREDUCIBLE_RESTRICTIVE, rank=2)
    d = rho - 1
    dz, dw = p.bidegree
    if dz % d or dw % d:
        return Classification(
            Verdict.NOT_RESTRICTIVE,
            rank=rho,
            evidence=f"rank-1 = {d} does not divide bidegree {p.bidegree}",
        )
    root = dth_root(p, d)
    if root is None:
        return Classification(
            Verdict.NOT_RESTRICTIVE,
            rank=rho,
            evidence=f"no exact {d}-th root exists",
        )
    if rank(coeff_matrix(root)) != 2:
        return Classification(
            Verdict.NOT_RESTRICTIVE,
            rank=rho,
            evidence=f"{d}-th root exists but is not rank 2",
        )
    return Classification(
        Verdict.REDUCIBLE_RESTRICTIVE, rank=rho, power=d, root=root
    )


# ---------------------------------------------------------------------------
# exact d-th roots
# ---------------------------------------------------------------------------


def dth_root(p: BiPoly, d: int) -> BiPoly | None:
    """Q with Q**d == p exactly, or None when no such Q exists over Q(i).

    Primary route: the z-squarefree part S = p / gcd(p, dp/dz) recovers Q
    up to a scalar whenever Q is squarefree in z; the scalar is fixed by an
    exact d-th root.  A coefficient-matching extraction covers everything
    else (w-only polynomials, roots that are themselves non-squarefree).
    """
    if d < 2:
        raise ValueError("root order must be >= 2")
    if p.is_zero:
        return BiPoly.zero()
    dz, dw = p.bidegree
    if dz % d or dw % d:
        return None
    q = None
    if dz > 0:
        q = _root_via_squarefree_part(p, d)
    if q is None:
        q = _root_by_coefficient_matching(p, d)
    return None if q is None else _canonical_unit_rep(q, d)


def _z_content(slices: list[UniPoly]) -> UniPoly:
    g = None
    for s in slices:
        if s.is_zero:
            continue
        g = s.monic() if g is None else gcd_uni(g, s)
        if g.degree == 0:
            break
    return g if g is not None else UniPoly()


def _z_primitive(slices: list[UniPoly]) -> list[UniPoly] | None:
    g = _z_content(slices)
    if g.is_zero:
        return None
    if g.degree == 0:
        return slices
    out = []
    for s in slices:
        q = exact_div_uni(s, g) if not s.is_zero else UniPoly()
        if q is None and not s.is_zero:
            return None
        out.append(q if q is not None else UniPoly())
    return out


def _pseudo_rem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder of z-major polynomials with w-polynomial coefficients."""
    def deg(u):
        return max((i for i, c in enumerate(u) if not c.is_zero), default=-1)

    db = deg(b)
    lb = b[db]
    r = list(a)
    while True:
        dr = deg(r)
        if dr < db or dr < 0:
            return r[: dr + 1]
        lead = r[dr]
        shift = dr - db
        r = [lb * c for c in r[: dr + 1]]
        for i in range(db + 1):
            r[shift + i] = r[shift + i] - lead * b[i]
        while r and r[-1].is_zero:
            r.pop()
        if not r:
            return []


def _gcd_in_z(p: BiPoly, q: BiPoly) -> list[UniPoly] | None:
    """Primitive gcd of p and q taken as polynomials in z over Q(i)[w]."""
    a = _z_primitive(p.w_slices())
    b = _z_primitive(q.w_slices())
    if a is None or b is None:
        return None

    def deg(u):
        return len(u) - 1

    if deg(a) < deg(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        if not r:
            break
        r = _z_primitive(r)
        if r is None:
            return None
        a, b = b, r
    # scalar-normalize: leading w-polynomial made monic
    lead_scalar = a[-1].leading
    inv = ONE / lead_scalar
    return [c.scale(inv) for c in a]


def _div_in_z(p: BiPoly, g: list[UniPoly]) -> BiPoly | None:
    """Exact division of p by a z-major divisor; None when not exact."""
    rem = list(p.w_slices())
    dg = len(g) - 1
    lead = g[-1]
    quot: dict[int, UniPoly] = {}
    while True:
        dr = len(rem) - 1
        while rem and rem[-1].is_zero:
            rem.pop()
            dr -= 1
        if not rem:
            break
        if dr < dg:
            return None
        c = exact_div_uni(rem[-1], lead)
        if c is None:
            return None
        shift = dr - dg
        quot[shift] = c
        for i in range(dg + 1):
            rem[shift + i] = rem[shift + i] - c * g[i]
    slices = [quot.get(j, UniPoly()) for j in range(max(quot, default=0) + 1)]
    return BiPoly.from_terms(
        {(j, k): s.coeff(k) for j, s in enumerate(slices) for k in range(s.degree + 1)}
    )


def _root_via_squarefree_part(p: BiPoly, d: int) -> BiPoly | None:
    g = _gcd_in_z(p, p.derivative_z())
    if g is None:
        return None
    s = _div_in_z(p, g)
    if s is None or s.is_zero:
        return None
    t = s ** d
    c = proportionality_constant(p, t)
    if c is None:
        return None
    mu = nth_root(c, d)
    if mu is None:
        return None
    q = s.scale(mu)
    return q if q ** d == p else None


def _uni_dth_root(p: UniPoly, d: int) -> UniPoly | None:
    """Exact d-th root of a univariate polynomial, or None."""
    if p.is_zero:
        return UniPoly()
    if p.degree % d:
        return None
    n = p.degree // d
    r = nth_root(p.leading, d)
    if r is None:
        return None
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = r
    denom = d * r ** (d - 1)
    for t in range(1, n + 1):
        partial = UniPoly(tuple(coeffs)) ** d
        need = p.coeff(d * n - t) - partial.coeff(d * n - t)
        coeffs[n - t] = need / denom
    q = UniPoly(tuple(coeffs))
    return q if q ** d == p else None


def _root_by_coefficient_matching(p: BiPoly, d: int) -> BiPoly | None:
    slices = p.w_slices()  # index = z power, values are polynomials in w
    n = p.deg_z // d
    r = _uni_dth_root(slices[-1], d)
    if r is None:
        return None
    q: list[UniPoly] = [UniPoly() for _ in range(n + 1)]
    q[n] = r
    denom = (r ** (d - 1)).scale(d)
    for t in range(1, n + 1):
        partial = _assemble(q) ** d
        known = partial.w_slices()
        j = d * n - t
        need = slices[j] - (known[j] if j <= partial.deg_z else UniPoly())
        if need.is_zero:
            continue
        c = exact_div_uni(need, denom)
        if c is None:
            return None
        q[n - t] = c
    root = _assemble(q)
    return root if root ** d == p else None


def _assemble(slices: list[UniPoly]) -> BiPoly:
    return BiPoly.from_terms(
        {
            (j, k): s.coeff(k)
            for j, s in enumerate(slices)
            for k in range(s.degree + 1)
        }
    )


def _canonical_unit_rep(q: BiPoly, d: int) -> BiPoly:
    """Among the unit multiples u*q with u**d = 1, pick a deterministic one.

    The representative maximizes (re, im) of the leading coefficient
    (first nonzero entry in descending (z, w) power order).
    """
    units = [u for u in (ONE, I, -ONE, -I) if u ** d == ONE]

    def leading(b: BiPoly) -> GaussianRational:
        for j in range(b.deg_z, -1, -1):
            for k in range(b.deg_w, -1, -1):
                if not b.coeff(j, k).is_zero:
                    return b.coeff(j, k)
        return ZERO

    return max(
        (q.scale(u) for u in units),
        key=lambda b: (leading(b).re, leading(b).im),
    )


# ---------------------------------------------------------------------------
# separation into R(z) = S(w)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalSeparation:
    """Rational maps R = r_num/r_den (in z) and S = s_num/s_den (in w)
    with p(z, w) = r_num(z) s_den(w) - r_den(z) s_num(w) exactly, so that
    p = 0 is equivalent to R(z) = S(w)."""

    r_num: UniPoly
    r_den: UniPoly
    s_num: UniPoly
    s_den: UniPoly

    def reconstruct(self) -> BiPoly:
        dz = max(self.r_num.degree, self.r_den.degree)
        dw = max(self.s_num.degree, self.s_den.degree)
        rows = tuple(
            tuple(
                self.r_num.coeff(j) * self.s_den.coeff(k)
                - self.r_den.coeff(j) * self.s_num.coeff(k)
                for k in range(dw + 1)
            )
            for j in range(dz + 1)
        )
        return BiPoly(rows)


def separate(
    corr: Correspondence, columns: tuple[int, int] | None = None
) -> RationalSeparation:
    """Separate a rank-2 correspondence as R(z) = S(w).

    The coefficient matrix factors as B @ A with B two independent columns
    of the matrix and A the solved 2-row coefficient matrix; B's columns
    give the numerator/denominator of R (descending powers of z), A's rows
    give the denominator and negated numerator of S.  By default B takes
    the two pivot columns; any other independent pair can be requested via
    `columns`, which yields a different but equally valid separation.
    """
    m = coeff_matrix(corr.poly)
    reduced, pivots = rref(m)
    if len(pivots) != 2:
        raise RankNotTwoError(len(pivots))
    if columns is None:
        b_rows = tuple(tuple(row[j] for j in pivots) for row in m.rows)
        a_rows = reduced.rows[:2]
    else:
        j, k = columns
        if j == k:
            raise ValueError("column indices must differ")
        cj, ck = m.col(j), m.col(k)
        pair = _solve_two_column_basis(m, cj, ck)
        if pair is None:
            raise ValueError(f"columns {j} and {k} are linearly dependent")
        b_rows = tuple(zip(cj, ck))
        a_rows = pair
    r_num = UniPoly(tuple(r[0] for r in reversed(b_rows)))
    r_den = UniPoly(tuple(r[1] for r in reversed(b_rows)))
    s_den = UniPoly(tuple(reversed(a_rows[0])))
    s_num = UniPoly(tuple(-c for c in reversed(a_rows[1])))
    sep = RationalSeparation(r_num, r_den, s_num, s_den)
    assert sep.reconstruct() == corr.poly
    return sep


def _solve_two_column_basis(m, cj, ck):
    """Rows of the 2 x ncols matrix A with [cj ck] @ A = m, or None."""
    n = len(cj)
    for r1 in range(n):
        for r2 in range(r1 + 1, n):
            det = cj[r1] * ck[r2] - cj[r2] * ck[r1]
            if det.is_zero:
                continue
            row0 = []
            row1 = []
            for col in range(m.ncols):
                x, y = m.rows[r1][col], m.rows[r2][col]
                row0.append((x * ck[r2] - y * ck[r1]) / det)
                row1.append((y * cj[r1] - x * cj[r2]) / det)
            # the pair must reproduce every row, not just r1 and r2
            for i in range(n):
                for col in range(m.ncols):
                    if cj[i] * row0[col] + ck[i] * row1[col] != m.rows[i][col]:
                        return None
            return (tuple(row0), tuple(row1))
    return None


# ---------------------------------------------------------------------------
# rank-r additive decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankDecomposition:
    """p written as sum of rank(M_p) separated products g_r(w) h_r(z)."""

    terms: tuple[tuple[UniPoly, UniPoly], ...]  # (g_r in w, h_r in z)

    def recombine(self) -> BiPoly:
        total = BiPoly.zero()
        for g, h in self.terms:
            total = total + BiPoly(
                tuple(
                    tuple(h.coeff(j) * g.coeff(k) for k in range(g.degree + 1))
                    for j in range(h.degree + 1)
                )
            )
        return total


def decompose(corr: Correspondence) -> RankDecomposition:
    """Additive decomposition sum_r g_r(w) h_r(z) with exactly rank terms.

    h_r comes from the r-th pivot column of the coefficient matrix and g_r
    from the r-th row of its reduced echelon form, read in ascending
    powers; the two coefficient families are independent by construction.
    """
    b, a = full_rank_factorize(coeff_matrix(corr.poly))
    terms = []
    for r in range(a.nrows):
        h = UniPoly(tuple(reversed(b.col(r))))
        g = UniPoly(tuple(reversed(a.rows[r])))
        terms.append((g, h))
    dec = RankDecomposition(tuple(terms))
    assert dec.recombine() == corr.poly
    return dec


# ---------------------------------------------------------------------------
# transposes and symmetry predicates
# ---------------------------------------------------------------------------


def dagger(corr: Correspondence) -> Correspondence:
    """The correspondence whose coefficient matrix is the transpose."""
    return validate(corr.poly.swap_variables())


def dagger_conj(corr: Correspondence) -> Correspondence:
    """The correspondence whose coefficient matrix is the conjugate transpose."""
    return validate(corr.poly.swap_variables().conjugate())


def sign_symmetry(corr: Correspondence) -> bool:
    """Whether p(-z, -w) is a nonzero scalar multiple of p(z, w)."""
    p = corr.poly
    flipped = BiPoly(
        tuple(
            tuple(c if (j + k) % 2 == 0 else -c for k, c in enumerate(row))
            for j, row in enumerate(p.grid)
        )
    )
    return proportionality_constant(flipped, p) is not None


def conj_symmetry(corr: Correspondence) -> bool:
    """Whether the coefficient-conjugated polynomial is a scalar multiple of p.

    Equivalent to p being a constant multiple of a polynomial with all-real
    coefficients, i.e. the zero set is stable under conjugating both
    variables.
    """
    p = corr.poly
    return proportionality_constant(p.conjugate(), p) is not None


def consecutive_columns_independent(corr: Correspondence) -> bool:
    """Whether every adjacent pair of nonzero matrix columns is independent."""
    m = coeff_matrix(corr.poly)
    for j in range(m.ncols - 1):
        a, b = m.col(j), m.col(j + 1)
        if all(c.is_zero for c in a) or all(c.is_zero for c in b):
            continue
        if all(
            (a[r] * b[s] - a[s] * b[r]).is_zero
            for r in range(len(a))
            for s in range(r + 1, len(a))
        ):
            return False
    return True
