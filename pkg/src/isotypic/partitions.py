"""Integer partitions and their combinatorics.

Conjugation, dominance order, hook lengths, standard and semistandard
tableau counts, vertical strips, and first-column removal.  Enumeration
order is reverse-lexicographic everywhere, so output is reproducible.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator


class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        self.parts = parts

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the CLI form '3,2,2'; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(p) for p in text.split(","))

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: column lengths become parts."""
        if not self.parts:
            return Partition(())
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def dominates(self, other: "Partition") -> bool:
        """True iff sizes agree and every prefix sum of self is >= other's.

        Partitions of different sizes are never comparable (returns False);
        rank partitions of configurations with zero vectors rely on this.
        """
        if self.size != other.size:
            return False
        a = b = 0
        for i in range(max(len(self.parts), len(other.parts))):
            a += self.parts[i] if i < len(self.parts) else 0
            b += other.parts[i] if i < len(other.parts) else 0
            if a < b:
                return False
        return True

    def remove_first_column(self) -> "Partition":
        """Drop one box from every row (rows of length 1 disappear)."""
        return Partition(p - 1 for p in self.parts if p >= 2)

    def hook_lengths(self) -> list[list[int]]:
        conj = self.conjugate().parts
        return [
            [self.parts[i] - j + conj[j] - i - 1 for j in range(self.parts[i])]
            for i in range(len(self.parts))
        ]


@cache
def _partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(largest, remaining), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, reverse-lexicographic: (n) first, (1,...,1) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions_of(n)]


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of this shape (hook length formula)."""
    n = lam.size
    product = 1
    for row in lam.hook_lengths():
        for h in row:
            product *= h
    count, rem = divmod(factorial(n), product)
    assert rem == 0
    return count


def weyl_dimension(lam: Partition, d: int) -> int:
    """Dimension of the Schur functor applied to a d-dimensional space.

    Counted directly as the number of semistandard tableaux with entries
    in 1..d (rows weakly increase, columns strictly increase); zero when
    the shape has more than d rows.
    """
    if len(lam) > d:
        return 0
    if lam.size == 0:
        return 1

    parts = lam.parts

    def count_fillings(row_idx: int, above: tuple[int, ...]) -> int:
        if row_idx == len(parts):
            return 1
        width = parts[row_idx]
        total = 0

        def fill(col: int, prev: int, current: tuple[int, ...]) -> None:
            nonlocal total
            if col == width:
                total += count_fillings(row_idx + 1, current)
                return
            lo = prev
            if col < len(above):
                lo = max(lo, above[col] + 1)
            for v in range(lo, d + 1):
                fill(col + 1, v, current + (v,))

        fill(0, 1, ())
        return total

    return count_fillings(0, ())


def weyl_dimension_product(lam: Partition, d: int) -> int:
    """Product-formula fast path for weyl_dimension; must agree with it."""
    if len(lam) > d:
        return 0
    num = den = 1
    hooks = lam.hook_lengths()
    for i, row in enumerate(hooks):
        for j, h in enumerate(row):
            num *= d + j - i
            den *= h
    count, rem = divmod(num, den)
    assert rem == 0
    return count


def vertical_strips(mu: Partition, k: int, max_rows: int) -> list[Partition]:
    """Shapes obtained from mu by adding k boxes, at most one per row.

    Results have at most max_rows rows and are returned in
    reverse-lexicographic order.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if len(mu) > max_rows:
        return []
    nrows = min(max_rows, len(mu) + k)
    padded = list(mu.parts) + [0] * (nrows - len(mu))
    found = []
    for rows in combinations(range(nrows), k):
        parts = padded[:]
        for i in rows:
            parts[i] += 1
        if all(a >= b for a, b in zip(parts, parts[1:])):
            found.append(tuple(p for p in parts if p > 0))
    found.sort(reverse=True)
    return [Partition(p) for p in found]
