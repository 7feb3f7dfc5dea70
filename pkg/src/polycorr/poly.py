"""Univariate and bivariate polynomials over the Gaussian rationals.

A :class:`BiPoly` stores a dense coefficient grid: ``grid[j][k]`` is the
coefficient of ``z^j w^k``.  Its bidegree is the pair
``(deg_z, deg_w)`` and both extents are always attained (constructors trim
all-zero top rows and columns), so the associated coefficient matrix has
exactly the shape the rank arguments need.

The coefficient matrix of a bidegree-(dz, dw) polynomial is the
``(dz+1) x (dw+1)`` matrix whose row ``i``, column ``j`` entry is the
coefficient of ``z^(dz-i) w^(dw-j)`` — descending powers, highest-degree
corner at the top left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactnum import ONE, ZERO, GaussianRational
from .linalg import ExactMatrix


def _coerce_scalar(x) -> GaussianRational:
    return GaussianRational._coerce(x)


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in one variable; coeffs[r] is the coefficient of x^r."""

    coeffs: tuple[GaussianRational, ...] = ()

    def __post_init__(self):
        cs = [_coerce_scalar(c) for c in self.coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def of(*coeffs) -> "UniPoly":
        """Build from ascending coefficients (ints, Fractions or scalars)."""
        return UniPoly(tuple(_coerce_scalar(c) for c in coeffs))

    @staticmethod
    def monomial(degree: int, coeff=1) -> "UniPoly":
        return UniPoly((ZERO,) * degree + (_coerce_scalar(coeff),))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> GaussianRational:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, r: int) -> GaussianRational:
        return self.coeffs[r] if 0 <= r < len(self.coeffs) else ZERO

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(tuple(out))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero or other.is_zero:
                return UniPoly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(tuple(out))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, s) -> "UniPoly":
        s = _coerce_scalar(s)
        return UniPoly(tuple(c * s for c in self.coeffs))

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.of(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x) -> GaussianRational:
        x = _coerce_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def conjugate(self) -> "UniPoly":
        return UniPoly(tuple(c.conjugate() for c in self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(ONE / self.leading)

    def padded(self, length: int) -> tuple[GaussianRational, ...]:
        """Ascending coefficients padded with zeros to the given length."""
        if length < len(self.coeffs):
            raise ValueError("padding shorter than polynomial")
        return self.coeffs + (ZERO,) * (length - len(self.coeffs))


def divmod_uni(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Quotient and remainder of univariate division; b must be nonzero."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    q: list[GaussianRational] = []
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = ONE / b.leading
    while rem and len(rem) - 1 >= db:
        c = rem[-1] * inv_lead
        q.append(c)
        shift = len(rem) - 1 - db
        if not c.is_zero:
            for i, bc in enumerate(b.coeffs):
                rem[shift + i] = rem[shift + i] - c * bc
        rem.pop()
    q.reverse()
    return UniPoly(tuple(q)), UniPoly(tuple(rem))


def exact_div_uni(a: UniPoly, b: UniPoly) -> UniPoly | None:
    """a / b when the division is exact, else None."""
    q, r = divmod_uni(a, b)
    return q if r.is_zero else None


def gcd_uni(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        _, r = divmod_uni(a, b)
        a, b = b, r
    return a.monic()


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiPoly:
    """Bivariate polynomial; grid[j][k] is the coefficient of z^j w^k."""

    grid: tuple[tuple[GaussianRational, ...], ...] = ((ZERO,),)

    def __post_init__(self):
        rows = [list(map(_coerce_scalar, row)) for row in self.grid]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("grid must be rectangular and nonempty")
        # trim all-zero top rows (z side) and right columns (w side)
        while len(rows) > 1 and all(c.is_zero for c in rows[-1]):
            rows.pop()
        while len(rows[0]) > 1 and all(r[-1].is_zero for r in rows):
            for r in rows:
                r.pop()
        object.__setattr__(self, "grid", tuple(tuple(r) for r in rows))

    # -- construction --------------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly(((ZERO,),))

    @staticmethod
    def constant(c) -> "BiPoly":
        return BiPoly(((_coerce_scalar(c),),))

    @staticmethod
    def from_terms(terms: dict[tuple[int, int], object]) -> "BiPoly":
        """Build from a map (z power, w power) -> coefficient."""
        if not terms:
            return BiPoly.zero()
        dz = max(j for j, _ in terms)
        dw = max(k for _, k in terms)
        rows = [[ZERO] * (dw + 1) for _ in range(dz + 1)]
        for (j, k), c in terms.items():
            rows[j][k] = rows[j][k] + _coerce_scalar(c)
        return BiPoly(tuple(tuple(r) for r in rows))

    # -- shape ----------------------------------------------------------------

    @property
    def deg_z(self) -> int:
        return len(self.grid) - 1

    @property
    def deg_w(self) -> int:
        return len(self.grid[0]) - 1

    @property
    def bidegree(self) -> tuple[int, int]:
        """(degree in z, degree in w)."""
        return (self.deg_z, self.deg_w)

    @property
    def is_zero(self) -> bool:
        return self.deg_z == 0 and self.deg_w == 0 and self.grid[0][0].is_zero

    def coeff(self, j: int, k: int) -> GaussianRational:
        if 0 <= j < len(self.grid) and 0 <= k < len(self.grid[0]):
            return self.grid[j][k]
        return ZERO

    def terms(self) -> Iterable[tuple[int, int, GaussianRational]]:
        for j, row in enumerate(self.grid):
            for k, c in enumerate(row):
                if not c.is_zero:
                    yield j, k, c

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        dz = max(self.deg_z, other.deg_z)
        dw = max(self.deg_w, other.deg_w)
        rows = [
            tuple(self.coeff(j, k) + other.coeff(j, k) for k in range(dw + 1))
            for j in range(dz + 1)
        ]
        return BiPoly(tuple(rows))

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __neg__(self) -> "BiPoly":
        return BiPoly(tuple(tuple(-c for c in row) for row in self.grid))

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            if self.is_zero or other.is_zero:
                return BiPoly.zero()
            dz = self.deg_z + other.deg_z
            dw = self.deg_w + other.deg_w
            rows = [[ZERO] * (dw + 1) for _ in range(dz + 1)]
            for j1, k1, c1 in self.terms():
                for j2, k2, c2 in other.terms():
                    rows[j1 + j2][k1 + k2] = rows[j1 + j2][k1 + k2] + c1 * c2
            return BiPoly(tuple(tuple(r) for r in rows))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, s) -> "BiPoly":
        s = _coerce_scalar(s)
        return BiPoly(tuple(tuple(c * s for c in row) for row in self.grid))

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- views and substitutions ----------------------------------------------

    def z_slices(self) -> list[UniPoly]:
        """[q_0 .. q_dw]: polynomials in z with P = sum_k q_k(z) w^k."""
        return [
            UniPoly(tuple(self.grid[j][k] for j in range(self.deg_z + 1)))
            for k in range(self.deg_w + 1)
        ]

    def w_slices(self) -> list[UniPoly]:
        """[p_0 .. p_dz]: polynomials in w with P = sum_j p_j(w) z^j."""
        return [UniPoly(row) for row in self.grid]

    def evaluate_z(self, z0) -> UniPoly:
        """Substitute z = z0, leaving a polynomial in w."""
        z0 = _coerce_scalar(z0)
        return UniPoly(tuple(p.evaluate(z0) for p in self.z_slices()))

    def evaluate_w(self, w0) -> UniPoly:
        """Substitute w = w0, leaving a polynomial in z."""
        w0 = _coerce_scalar(w0)
        return UniPoly(tuple(p.evaluate(w0) for p in self.w_slices()))

    def evaluate(self, z0, w0) -> GaussianRational:
        return self.evaluate_z(z0).evaluate(w0)

    def derivative_z(self) -> "BiPoly":
        if self.deg_z == 0:
            return BiPoly.zero()
        rows = tuple(
            tuple(c * j for c in self.grid[j]) for j in range(1, self.deg_z + 1)
        )
        return BiPoly(rows)

    def swap_variables(self) -> "BiPoly":
        """The polynomial with the roles of z and w exchanged (grid transpose)."""
        return BiPoly(tuple(zip(*self.grid)))

    def conjugate(self) -> "BiPoly":
        return BiPoly(tuple(tuple(c.conjugate() for c in row) for row in self.grid))

    @staticmethod
    def from_z_slices(slices: Sequence[UniPoly]) -> "BiPoly":
        """Inverse of z_slices: slices[k] is the coefficient of w^k."""
        dz = max((s.degree for s in slices if not s.is_zero), default=0)
        rows = [
            tuple(slices[k].coeff(j) for k in range(len(slices)))
            for j in range(dz + 1)
        ]
        return BiPoly(tuple(rows))


# ---------------------------------------------------------------------------
# coefficient matrix
# ---------------------------------------------------------------------------


def coeff_matrix(p: BiPoly) -> ExactMatrix:
    """Descending-power coefficient matrix of p.

    Row i, column j holds the coefficient of z^(dz-i) w^(dw-j); the matrix
    is (dz+1) x (dw+1) and its rank drives the whole classification story.
    """
    dz, dw = p.bidegree
    rows = tuple(
        tuple(p.grid[dz - i][dw - j] for j in range(dw + 1)) for i in range(dz + 1)
    )
    return ExactMatrix(rows)


def bipoly_from_matrix(m: ExactMatrix) -> BiPoly:
    """Inverse of coeff_matrix (up to trimming of unattained degrees)."""
    r, c = m.nrows, m.ncols
    rows = tuple(
        tuple(m.rows[r - 1 - j][c - 1 - k] for k in range(c)) for j in range(r)
    )
    return BiPoly(rows)


# ---------------------------------------------------------------------------
# divisibility by polynomials in one variable alone
# ---------------------------------------------------------------------------


def check_p1_p2(p: BiPoly) -> tuple[bool, bool]:
    """Whether no linear factor in z alone (resp. w alone) divides p.

    A linear polynomial c*z + d divides p exactly when its root is a common
    root of every w-power slice q_k(z); over the complex numbers that
    happens iff the gcd of the slices is nonconstant.  Symmetrically for w.
    """
    if p.is_zero:
        return (False, False)
    p1_ok = _slices_coprime(p.z_slices())
    p2_ok = _slices_coprime(p.w_slices())
    return (p1_ok, p2_ok)


def _slices_coprime(slices: list[UniPoly]) -> bool:
    g: UniPoly | None = None
    for s in slices:
        if s.is_zero:
            continue
        g = s.monic() if g is None else gcd_uni(g, s)
        if g.degree == 0:
            return True
    return g is not None and g.degree == 0


def proportionality_constant(a: BiPoly, b: BiPoly) -> GaussianRational | None:
    """c with a = c*b for a nonzero scalar c, or None.

    Cross-products decide proportionality without dividing: a = c*b forces
    a_s * b_t = a_t * b_s for every index pair (s, t).
    """
    if a.is_zero or b.is_zero:
        return None
    ref = None
    for j, k, c in b.terms():
        ref = (j, k, c)
        break
    j0, k0, b0 = ref
    for j in range(max(a.deg_z, b.deg_z) + 1):
        for k in range(max(a.deg_w, b.deg_w) + 1):
            if a.coeff(j, k) * b0 != a.coeff(j0, k0) * b.coeff(j, k):
                return None
    c = a.coeff(j0, k0) / b0
    return None if c.is_zero else c
