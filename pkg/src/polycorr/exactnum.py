"""Exact scalar arithmetic: rationals and Gaussian rationals.

Every algebraic module in this package computes over Q(i), the field of
complex numbers a+bi with rational a, b.  Plain rationals are represented
by the stdlib ``fractions.Fraction`` (always reduced, positive
denominator); :class:`GaussianRational` pairs two of them.

Text form: rationals print as ``a/b``, complex values as ``p+qi`` /
``p-qi`` with a bare ``i`` for the imaginary unit.  The polynomial parser
shares this grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    @staticmethod
    def _coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    # -- predicates ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- field operations ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return ONE / (self ** (-n))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            o = self._coerce(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_str(abs(self.im)).lstrip('+')}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}i"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))

_UNITS = (ONE, I, -ONE, -I)  # i^0, i^1, i^2, i^3


# ---------------------------------------------------------------------------
# Gaussian-integer factorization, the engine behind exact n-th roots.
# A Gaussian integer is a pair (x, y) of Python ints standing for x + yi.
# ---------------------------------------------------------------------------


def _factor_int(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _sqrt_minus_one(p: int) -> int:
    """A square root of -1 modulo a prime p = 1 (mod 4)."""
    for a in range(2, p):
        c = pow(a, (p - 1) // 4, p)
        if c * c % p == p - 1:
            return c
    raise ArithmeticError(f"no sqrt(-1) mod {p}")  # unreachable for p = 1 mod 4


def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_divmod(a, b):
    """Nearest-integer quotient and remainder in Z[i]; |r| < |b|."""
    bn = b[0] * b[0] + b[1] * b[1]
    pre = a[0] * b[0] + a[1] * b[1]
    pim = a[1] * b[0] - a[0] * b[1]
    q = (_round_div(pre, bn), _round_div(pim, bn))
    r = (a[0] - (q[0] * b[0] - q[1] * b[1]), a[1] - (q[0] * b[1] + q[1] * b[0]))
    return q, r


def _round_div(a: int, b: int) -> int:
    # round-half-away nearest integer of a/b, b > 0
    return (2 * a + b) // (2 * b) if a >= 0 else -((-2 * a + b) // (2 * b))


def _gi_gcd(a, b):
    while b != (0, 0):
        _, r = _gi_divmod(a, b)
        a, b = b, r
    return a


def _gi_exact_div(a, b):
    q, r = _gi_divmod(a, b)
    return q if r == (0, 0) else None


def _canonical_associate(p):
    """The associate of a Gaussian prime with re > 0 and im >= 0."""
    x, y = p
    for _ in range(4):
        if x > 0 and y >= 0:
            return (x, y)
        x, y = -y, x  # multiply by i
    raise ArithmeticError("zero has no associate")


def _unit_power(u) -> int:
    """k with u = i^k, for a unit u of Z[i]."""
    try:
        return [(1, 0), (0, 1), (-1, 0), (0, -1)].index(u)
    except ValueError:
        raise ArithmeticError(f"{u} is not a unit") from None


def factor_gaussian_integer(u) -> tuple[int, dict[tuple[int, int], int]]:
    """Factor a nonzero Gaussian integer into unit and canonical primes.

    Returns ``(k, factors)`` with ``u = i^k * prod(p^e)`` where every key p
    is the canonical associate (re > 0, im >= 0) of a Gaussian prime.
    """
    if u == (0, 0):
        raise ZeroDivisionError("cannot factor zero")
    norm = u[0] * u[0] + u[1] * u[1]
    factors: dict[tuple[int, int], int] = {}
    for p, e in sorted(_factor_int(norm).items()):
        if p == 2:
            pi = (1, 1)
            for _ in range(e):
                u = _gi_exact_div(u, pi)
            factors[pi] = e
        elif p % 4 == 3:
            # inert: p itself is prime, norm p^2
            v = e // 2
            for _ in range(v):
                u = _gi_exact_div(u, (p, 0))
            factors[(p, 0)] = v
        else:
            # split: p = pi * conj(pi), find pi via gcd(p, c + i)
            c = _sqrt_minus_one(p)
            pi = _canonical_associate(_gi_gcd((p, 0), (c, 1)))
            pib = _canonical_associate((pi[0], -pi[1]))
            for prime in (pi, pib):
                count = 0
                while True:
                    q = _gi_exact_div(u, prime)
                    if q is None:
                        break
                    u = q
                    count += 1
                if count:
                    factors[prime] = factors.get(prime, 0) + count
    return _unit_power(u), factors


def nth_root(a: GaussianRational, n: int) -> GaussianRational | None:
    """An exact n-th root of a in Q(i), or None if no such root exists.

    When several roots exist they differ by a fourth root of unity; the
    branch returned is the candidate whose (re, im) pair is
    lexicographically greatest, which keeps outputs reproducible.
    """
    if n < 1:
        raise ValueError("root order must be >= 1")
    a = GaussianRational._coerce(a)
    if a.is_zero:
        return ZERO
    if n == 1:
        return a
    # a = (x + yi)/m with integer x, y and positive integer m
    m = (a.re.denominator * a.im.denominator) // gcd(
        a.re.denominator, a.im.denominator
    )
    num = (int(a.re * m), int(a.im * m))
    ku, fu = factor_gaussian_integer(num)
    km, fm = factor_gaussian_integer((m, 0))
    exps = dict(fu)
    for p, e in fm.items():
        exps[p] = exps.get(p, 0) - e
    if any(e % n for e in exps.values()):
        return None
    k = (ku - km) % 4
    for t in range(4):
        if (n * t) % 4 == k:
            break
    else:
        return None
    root = _UNITS[t]
    for p, e in sorted(exps.items()):
        pg = GaussianRational.of(p[0], p[1])
        root = root * pg ** (e // n)
    candidates = [root * z for z in _UNITS if (z ** n) == ONE]
    best = max(candidates, key=lambda g: (g.re, g.im))
    assert best ** n == a
    return best
