"""The slice-pairing product of correspondences and its diagnostics.

For P of bidegree (m, d) and Q of bidegree (d, n) — P's w-degree matching
Q's z-degree — the product pairs the w-slices of P with the z-slices of Q:
the output coefficient of ``z^j w^k`` is ``sum_r [w^r] p_j * [z^r] q_k``.
Equivalently, and this is how it is computed, the coefficient matrix of
the product is the matrix product of the two coefficient matrices.

When both factors are rank 2 the product is governed by four trace
scalars built from the separations; their degeneracies explain exactly
when the product collapses (zero polynomial, one-variable factor, or a
constant separation) and when it is again a rank-2 correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corr import Correspondence, RationalSeparation, separate
from .exactnum import ZERO, GaussianRational
from .poly import BiPoly, UniPoly, bipoly_from_matrix, coeff_matrix, proportionality_constant


class DegreeMismatchError(ValueError):
    pass


class DegenerateProductError(ValueError):
    """The trace-based reconstruction has no usable separated form."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class JZeroError(ValueError):
    """The corner minor J(0, n) of the separation vanishes."""


def pairing(u: UniPoly, v: UniPoly) -> GaussianRational:
    """Sum of products of equal-power coefficients of u and v."""
    return sum(
        (a * b for a, b in zip(u.coeffs, v.coeffs)),
        ZERO,
    )


def star(p: BiPoly, q: BiPoly) -> BiPoly:
    """The slice-pairing product; requires p's w-degree = q's z-degree.

    Implemented as the coefficient-matrix product.  The result is trimmed
    to its attained bidegree (corner pairings may vanish); it may even be
    the zero polynomial.
    """
    if p.deg_w != q.deg_z:
        raise DegreeMismatchError(
            f"inner degrees differ: w-degree {p.deg_w} vs z-degree {q.deg_z}"
        )
    return bipoly_from_matrix(coeff_matrix(p) @ coeff_matrix(q))


def star_traces(
    sep_p: RationalSeparation, sep_q: RationalSeparation
) -> tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]:
    """The four trace scalars (T1, T2, T3, T4) of a separated pair.

    With S1 = C/D the w-side of the left factor and R2 = E/F the z-side of
    the right factor, each cross product C*F, D*E, C*E, D*F is a bivariate
    polynomial whose coefficient-matrix trace is the equal-power pairing
    of its two vectors:

        T1 = <C, F>   T2 = <D, E>   T3 = <C, E>   T4 = <D, F>
    """
    d1 = max(sep_p.s_num.degree, sep_p.s_den.degree)
    d2 = max(sep_q.r_num.degree, sep_q.r_den.degree)
    if d1 != d2:
        raise DegreeMismatchError(
            f"separations have different inner degrees: {d1} vs {d2}"
        )
    c, d = sep_p.s_num, sep_p.s_den
    e, f = sep_q.r_num, sep_q.r_den
    return (pairing(c, f), pairing(d, e), pairing(c, e), pairing(d, f))


def _beta_value(traces) -> tuple[bool, GaussianRational | None]:
    """Whether a scalar b with T2 = b*T3 and T4 = b*T1 exists, and which.

    Such a b makes the reconstructed S(w) collapse to a constant.  When
    T1 = T3 = 0 any b works iff T2 = T4 = 0 (b is then reported as None).
    """
    t1, t2, t3, t4 = traces
    if t3.is_zero and t1.is_zero:
        return (t2.is_zero and t4.is_zero), None
    if t2 * t1 != t4 * t3:
        return False, None
    beta = t2 / t3 if not t3.is_zero else t4 / t1
    return True, beta


def build_product_via_traces(
    p: Correspondence,
    q: Correspondence,
    sep_p: RationalSeparation | None = None,
    sep_q: RationalSeparation | None = None,
) -> BiPoly:
    """Reconstruct the product from separations instead of slice pairings.

    Keeps R from the left factor's separation and replaces S by the trace
    combination S = (T3*H - T1*G) / (T2*H - T4*G), where G/H is the w-side
    of the right factor; expanding R(z) = S(w) reproduces the product
    exactly for any separations that reconstruct their correspondences
    exactly.  Raises DegenerateProductError when that S is unusable
    (constant by beta-degeneracy, or with a vanishing side).
    """
    sep_p = sep_p if sep_p is not None else separate(p)
    sep_q = sep_q if sep_q is not None else separate(q)
    t = star_traces(sep_p, sep_q)
    degenerate, _ = _beta_value(t)
    if degenerate:
        raise DegenerateProductError(
            "trace relation T2 = b*T3, T4 = b*T1 holds: S collapses to a constant"
        )
    t1, t2, t3, t4 = t
    g, h = sep_q.s_num, sep_q.s_den
    s_num = h.scale(t3) - g.scale(t1)
    s_den = h.scale(t2) - g.scale(t4)
    if s_num.is_zero:
        raise DegenerateProductError("numerator of the reconstructed S vanishes")
    if s_den.is_zero:
        raise DegenerateProductError("denominator of the reconstructed S vanishes")
    return RationalSeparation(sep_p.r_num, sep_p.r_den, s_num, s_den).reconstruct()


@dataclass(frozen=True)
class StarDiagnostics:
    """Validity data for a product of two rank-2 correspondences.

    The verdict is "valid" exactly when all four pairings are nonzero and
    no beta-degeneracy holds; a valid product is itself an irreducible
    restrictive correspondence of the full expected bidegree.
    """

    pairing_corner_top: GaussianRational     # <p_top, q_top>
    pairing_corner_bottom: GaussianRational  # <p_0, q_0>
    pairing_nr_s1_q0: GaussianRational       # <numerator of S1, q_0>
    pairing_dr_s1_qnz: GaussianRational      # <denominator of S1, q_top>
    traces: tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]
    beta_degenerate: bool
    beta: GaussianRational | None
    verdict: str                              # "valid" | "degenerate"
    reasons: tuple[str, ...]


def diagnostics(p: Correspondence, q: Correspondence) -> StarDiagnostics:
    """Evaluate the product-validity conditions for a conformable pair.

    Both factors must be rank 2 (their canonical separations are used for
    the trace and slice pairings).
    """
    pp, qq = p.poly, q.poly
    if pp.deg_w != qq.deg_z:
        raise DegreeMismatchError(
            f"inner degrees differ: w-degree {pp.deg_w} vs z-degree {qq.deg_z}"
        )
    sep_p = separate(p)
    sep_q = separate(q)
    p_slices = pp.w_slices()
    q_slices = qq.z_slices()
    corner_top = pairing(p_slices[pp.deg_z], q_slices[qq.deg_w])
    corner_bottom = pairing(p_slices[0], q_slices[0])
    nr_q0 = pairing(sep_p.s_num, q_slices[0])
    dr_qn = pairing(sep_p.s_den, q_slices[qq.deg_w])
    t = star_traces(sep_p, sep_q)
    degenerate, beta = _beta_value(t)
    reasons = []
    if corner_top.is_zero:
        reasons.append("leading corner pairing is zero: product bidegree drops")
    if corner_bottom.is_zero:
        reasons.append("constant corner pairing is zero")
    if nr_q0.is_zero:
        reasons.append("pairing of S1 numerator with q_0 is zero")
    if dr_qn.is_zero:
        reasons.append("pairing of S1 denominator with the top q slice is zero")
    if degenerate:
        reasons.append("beta-degenerate traces: reconstructed S is constant")
    return StarDiagnostics(
        pairing_corner_top=corner_top,
        pairing_corner_bottom=corner_bottom,
        pairing_nr_s1_q0=nr_q0,
        pairing_dr_s1_qnz=dr_qn,
        traces=t,
        beta_degenerate=degenerate,
        beta=beta,
        verdict="degenerate" if reasons else "valid",
        reasons=tuple(reasons),
    )


@dataclass(frozen=True)
class CanonicalFactors:
    """A (deg_z, 1) x (1, deg_w) product presentation of a rank-2 input.

    `constant` is the scalar c with star(left, right) = c * p; the
    construction targets c = 1 and achieves it for any separation, since
    the two factor matrices multiply back to the separation product by
    a 2x2 inverse sandwich.
    """

    left: BiPoly
    right: BiPoly
    constant: GaussianRational


def canonical_factor(p: Correspondence) -> CanonicalFactors:
    """Present a rank-2 correspondence as a product of degree-1 shells.

    The left factor keeps R(z) and truncates S to its degree-1 shell
    (C_n w + C_0) / (D_n w + D_0); the right factor is the unique
    bidegree-(1, n) correspondence completing the product, with
    coefficients built from the minors J(m, n) = D_m C_n - D_n C_m.
    Requires J(0, n) != 0, the invertibility of the shell.
    """
    sep = separate(p)
    c, d = sep.s_num, sep.s_den
    n = p.deg_w

    def j(m1: int, m2: int) -> GaussianRational:
        return d.coeff(m1) * c.coeff(m2) - d.coeff(m2) * c.coeff(m1)

    j0 = j(0, n)
    if j0.is_zero:
        raise JZeroError(
            "corner minor J(0, n) = D_0 C_n - D_n C_0 vanishes; "
            "the degree-1 shell is not invertible"
        )
    left = RationalSeparation(
        sep.r_num,
        sep.r_den,
        UniPoly.of(c.coeff(0), c.coeff(n)),
        UniPoly.of(d.coeff(0), d.coeff(n)),
    ).reconstruct()
    terms = {}
    for m in range(n + 1):
        terms[(1, m)] = j(0, m) / j0
        terms[(0, m)] = j(m, n) / j0
    right = BiPoly.from_terms(terms)
    product = star(left, right)
    constant = proportionality_constant(product, p.poly)
    assert constant is not None, "canonical factors lost proportionality"
    return CanonicalFactors(left=left, right=right, constant=constant)
