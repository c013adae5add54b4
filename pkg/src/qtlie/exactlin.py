"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` everywhere; all zero tests in this package
are literal equalities, never tolerances.  Rank and kernel computations use
fraction-free (Bareiss) elimination on denominator-cleared integer rows so
intermediate entries stay bounded on the coboundary matrices produced by the
cohomology module.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a Fraction, or a string like ``"5"`` / ``"-3/4"``.

    Floats are rejected: admitting them silently would break exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Canonical text form: ``"5"``, ``"-3/4"``."""
    return str(value)


def vec(values: Iterable[int | str | Fraction]) -> Vec:
    return tuple(rat(v) for v in values)


def vzero(n: int) -> Vec:
    return (ZERO,) * n


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vscale(a: Vec, c: Fraction) -> Vec:
    return tuple(x * c for x in a)


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vunit(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Dense rational matrix, row-major, immutable after construction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[int | str | Fraction]], cols: int | None = None):
        rows = tuple(tuple(rat(e) for e in row) for row in entries)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            ncols = 0 if cols is None else cols
        self.entries: tuple[Vec, ...] = rows
        self.rows: int = len(rows)
        self.cols: int = ncols

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vec], rows: int) -> "Matrix":
        return cls([[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def column(self, j: int) -> Vec:
        return tuple(row[j] for row in self.entries)

    def apply(self, v: Vec) -> Vec:
        """Matrix-vector product; v has length ``cols``."""
        if len(v) != self.cols:
            raise ValueError(f"length {len(v)} vector against {self.rows}x{self.cols} matrix")
        return tuple(sum((r_e * v_e for r_e, v_e in zip(row, v)), start=ZERO) for row in self.entries)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix([[sum((a * b for a, b in zip(row, col)), start=ZERO) for col in cols] for row in self.entries],
                      cols=other.cols)

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return Matrix([vadd(a, b) for a, b in zip(self.entries, other.entries)], cols=self.cols)

    def scale(self, c: Fraction) -> "Matrix":
        return Matrix([vscale(row, rat(c)) for row in self.entries], cols=self.cols)

    def neg(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def is_zero(self) -> bool:
        return all(is_zero_vec(row) for row in self.entries)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(rat_str(e) for e in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _cleared_rows(m: Matrix) -> list[list[int]]:
    # Scaling a row by a positive integer changes neither rank nor null space.
    out = []
    for row in m.entries:
        mult = lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * mult) for e in row])
    return out


def _bareiss_echelon(rows: list[list[int]], cols: int) -> tuple[list[int], list[list[int]]]:
    """In-place fraction-free elimination; returns (pivot columns, echelon rows).

    Pivot choice is the first nonzero entry in column order, scanning rows top
    down, so the output is deterministic.
    """
    prev = 1
    r = 0
    pivots: list[int] = []
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        hit = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if hit is None:
            continue
        if hit != r:
            rows[r], rows[hit] = rows[hit], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            # The update runs even when head == 0: entries must stay the
            # leading minors for Bareiss division to remain exact.
            head = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c, cols):
                row_i[j] = (pivot * row_i[j] - head * row_r[j]) // prev
        prev = pivot
        pivots.append(c)
        r += 1
    return pivots, rows


def mat_rank(m: Matrix) -> int:
    """Rank over the rationals."""
    pivots, _ = _bareiss_echelon(_cleared_rows(m), m.cols)
    return len(pivots)


def mat_kernel_basis(m: Matrix) -> list[Vec]:
    """Basis of the right null space ``{v : m v = 0}``.

    One basis vector per free column, in ascending column order, normalized to
    have entry 1 at its free column; exact, deterministic.
    """
    pivots, ech = _bareiss_echelon(_cleared_rows(m), m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis: list[Vec] = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for r in range(len(pivots) - 1, -1, -1):
            p = pivots[r]
            s = sum((Fraction(ech[r][j]) * x[j] for j in range(p + 1, m.cols)), start=ZERO)
            x[p] = -s / ech[r][p]
        basis.append(tuple(x))
    return basis


def mat_inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix via Gauss-Jordan; raises on singular input."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for c in range(n):
        hit = next((i for i in range(c, n) if a[i][c] != 0), None)
        if hit is None:
            raise ValueError("matrix is singular")
        if hit != c:
            a[c], a[hit] = a[hit], a[c]
            inv[c], inv[hit] = inv[hit], inv[c]
        scale = a[c][c]
        a[c] = [e / scale for e in a[c]]
        inv[c] = [e / scale for e in inv[c]]
        for i in range(n):
            if i == c or a[i][c] == 0:
                continue
            factor = a[i][c]
            a[i] = [e - factor * p for e, p in zip(a[i], a[c])]
            inv[i] = [e - factor * p for e, p in zip(inv[i], inv[c])]
    return Matrix(inv)
