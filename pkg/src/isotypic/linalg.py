"""Exact linear algebra over the rationals.

Scalars are `fractions.Fraction`, matrices are immutable, and rank is
computed by fraction-free (Bareiss) elimination on integer-scaled rows.
Every zero test in the package ultimately reduces to this module, so
nothing here is allowed to be approximate.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str | int) -> Fraction:
    """Parse the interchange form: optional sign, integer, optional '/denominator'."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}") from None


def format_rational(x: Fraction | int) -> str:
    """Inverse of parse_rational: 'p/q' in lowest terms, or 'p' for integers."""
    return str(Fraction(x))


def as_vector(entries: Iterable) -> Vector:
    """Coerce entries to Fractions; only exact inputs (no floats) are accepted."""
    out = []
    for e in entries:
        if isinstance(e, str):
            out.append(parse_rational(e))
        elif isinstance(e, (Fraction, int)) and not isinstance(e, bool):
            out.append(Fraction(e))
        else:
            raise ValueError(f"not an exact scalar: {e!r}")
    return tuple(out)


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(as_vector(row) for row in rows)
        widths = {len(r) for r in grid}
        if len(widths) > 1:
            raise ValueError("ragged rows in matrix")
        self.rows = grid

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[[str(e) for e in row] for row in self.rows]})"

    def rank(self) -> int:
        return rank(self)

    def to_json_obj(self) -> dict:
        return {"entries": [[format_rational(e) for e in row] for row in self.rows]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Matrix":
        return cls(obj["entries"])


def integerize(row: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational row by the lcm of its denominators (rank-preserving)."""
    scale = lcm(*(e.denominator for e in row)) if row else 1
    return tuple(int(e * scale) for e in row)


def _int_rank(rows: list[list[int]]) -> int:
    """Rank via one-step Bareiss elimination; all intermediate values stay integral."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        assert piv != 0
        for i in range(r + 1, len(rows)):
            ric = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c + 1, ncols):
                num = row_i[j] * piv - ric * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free elimination left the integers"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        r += 1
        if r == len(rows):
            break
    return r


def rank(m: Matrix) -> int:
    """Exact rank over the rationals."""
    return _int_rank([list(integerize(row)) for row in m.rows])


def rank_of_rows(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a list of equal-length rational rows (no Matrix wrapper needed)."""
    return _int_rank([list(integerize(tuple(r))) for r in rows])


def is_independent(vectors: Sequence[Sequence[Fraction]]) -> bool:
    """True iff the vectors are linearly independent over the rationals.

    The empty family is independent; any family longer than the ambient
    dimension, or containing the zero vector, is dependent.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return True
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise ValueError(f"vectors of mixed dimension: {sorted(dims)}")
    d = dims.pop()
    if len(vectors) > d:
        return False
    return rank_of_rows(vectors) == len(vectors)
