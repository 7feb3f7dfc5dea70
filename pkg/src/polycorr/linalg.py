"""Exact linear algebra over the Gaussian rationals.

Reduced row echelon form, rank and full-rank factorization, all with
exact field arithmetic.  Pivots are chosen deterministically (first
nonzero entry, scanning top to bottom) — with exact arithmetic there is
nothing numerical to stabilize, and determinism keeps golden outputs
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import ONE, ZERO, GaussianRational


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable rectangular matrix of Gaussian rationals."""

    rows: tuple[tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        rows = tuple(
            tuple(GaussianRational._coerce(c) for c in row) for row in self.rows
        )
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix must be rectangular and nonempty")
        object.__setattr__(self, "rows", rows)

    @staticmethod
    def from_lists(rows) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(row) for row in rows))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            )
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for row in self.rows for c in row)

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.rows[i][j]

    def col(self, j: int) -> tuple[GaussianRational, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)))

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix(
            tuple(tuple(c.conjugate() for c in row) for row in self.rows)
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} @ "
                f"{other.nrows}x{other.ncols}"
            )
        cols = other.transpose().rows
        return ExactMatrix(
            tuple(
                tuple(
                    sum((a * b for a, b in zip(row, col)), ZERO) for col in cols
                )
                for row in self.rows
            )
        )

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.transpose()

    def is_hermitian(self) -> bool:
        return self.nrows == self.ncols and self == self.transpose().conjugate()


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and the ascending list of pivot columns."""
    rows = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if not rows[i][c].is_zero), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return ExactMatrix(tuple(tuple(row) for row in rows)), pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def full_rank_factorize(m: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """Write m = B @ A with B of full column rank and A of full row rank.

    B collects the pivot columns of m in order; A is the nonzero rows of
    rref(m).  The product reconstructs m exactly, with no scalar slack —
    downstream identities (separation, star-product traces) rely on that.
    """
    if m.is_zero:
        raise ValueError("zero matrix has no full-rank factorization")
    reduced, pivots = rref(m)
    b = ExactMatrix(
        tuple(tuple(row[j] for j in pivots) for row in m.rows)
    )
    a = ExactMatrix(tuple(reduced.rows[: len(pivots)]))
    return b, a
