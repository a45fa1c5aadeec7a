"""Permutations, the rational group algebra of S_n, and Young symmetrizers.

Composition convention, fixed once for the whole package:

    (sigma * tau)(i) = sigma(tau(i))

With the place-permutation action in `tensors`, this makes the group act
on tensors on the right: acting by sigma and then by tau equals acting by
sigma * tau.  Every order-sensitive identity is tested under this single
convention.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .partitions import Partition

# n! enumerations (all_permutations, central idempotents, full symmetrizations)
# refuse to run past this degree rather than silently truncating.
DEGREE_CAP = 10


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images (1-based)."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= n:
                    raise ValueError(f"cycle entry {a} out of range 1..{n}")
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by it."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycles)

    def cycle_type(self) -> Partition:
        seen = set()
        lengths = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length = 0
            j = start
            while j not in seen:
                seen.add(j)
                length += 1
                j = self(j)
            lengths.append(length)
        return Partition(sorted(lengths, reverse=True))

    @property
    def sign(self) -> int:
        return -1 if (self.n - len(self.cycle_type())) % 2 else 1


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma o tau)(i) = sigma(tau(i))."""
    if sigma.n != tau.n:
        raise ValueError(f"degree mismatch: {sigma.n} vs {tau.n}")
    return Permutation(sigma.images[t - 1] for t in tau.images)


def sign_and_cycle_type(sigma: Permutation) -> tuple[int, Partition]:
    ct = sigma.cycle_type()
    return (-1 if (sigma.n - len(ct)) % 2 else 1, ct)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations, lexicographic by image tuple."""
    if n > DEGREE_CAP:
        raise ValueError(f"degree {n} exceeds cap {DEGREE_CAP}")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


class Tableau:
    """A bijective filling of a Young diagram with 1..n (not necessarily standard)."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        shape = Partition(len(row) for row in rows)
        n = shape.size
        if sorted(e for row in rows for e in row) != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}")
        self.shape = shape
        self.rows = rows

    @property
    def n(self) -> int:
        return self.shape.size

    def columns(self) -> list[tuple[int, ...]]:
        width = self.shape[0] if len(self.shape) else 0
        return [
            tuple(row[j] for row in self.rows if len(row) > j) for j in range(width)
        ]

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"


class GroupAlgebraElement:
    """A finite formal rational combination of permutations of {1..n}.

    Terms with coefficient zero are pruned; integral coefficients are
    stored as int (exact, and much faster in hot loops).
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Fraction] | None = None):
        self.n = n
        pruned: dict[Permutation, Fraction | int] = {}
        for perm, coeff in (terms or {}).items():
            if perm.n != n:
                raise ValueError(f"term degree {perm.n} does not match {n}")
            coeff = _normalize(coeff)
            if coeff:
                pruned[perm] = coeff
        self.terms = pruned

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {Permutation.identity(n): 1})

    @classmethod
    def of(cls, perm: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls(perm.n, {perm: Fraction(coeff)})

    def coefficient(self, perm: Permutation) -> Fraction:
        return Fraction(self.terms.get(perm, 0))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        total = dict(self.terms)
        for perm, coeff in other.terms.items():
            total[perm] = total.get(perm, 0) + coeff
        return GroupAlgebraElement(self.n, total)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GroupAlgebraElement":
        scalar = Fraction(scalar)
        return GroupAlgebraElement(
            self.n, {perm: scalar * coeff for perm, coeff in self.terms.items()}
        )

    def __mul__(self, other) -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return GroupAlgebraElement(
                self.n, {p: c * Fraction(other) for p, c in self.terms.items()}
            )
        return algebra_multiply(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(
            f"{coeff}*{perm}" for perm, coeff in sorted(
                self.terms.items(), key=lambda kv: kv[0].images
            )
        )
        return f"GroupAlgebraElement({self.n}, {body or '0'})"

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")

    def to_json_obj(self) -> list[dict]:
        items = sorted(self.terms.items(), key=lambda kv: kv[0].images)
        return [
            {"perm": list(perm.images), "coeff": str(Fraction(coeff))}
            for perm, coeff in items
        ]


def _normalize(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def algebra_multiply(
    x: GroupAlgebraElement, y: GroupAlgebraElement
) -> GroupAlgebraElement:
    """Convolution product: the coefficient of pi collects x(s)*y(t) over s*t = pi."""
    x._check(y)
    total: dict[Permutation, Fraction] = {}
    for sigma, a in x.terms.items():
        for tau, b in y.terms.items():
            pi = compose(sigma, tau)
            total[pi] = total.get(pi, 0) + a * b
    return GroupAlgebraElement(x.n, total)


def _block_permutations(n: int, blocks: Iterable[Iterable[int]]) -> Iterator[Permutation]:
    """All permutations of {1..n} preserving each given block setwise."""
    blocks = [tuple(b) for b in blocks if len(tuple(b)) >= 2]
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = list(range(1, n + 1))
        for block, perm in zip(blocks, choice):
            for src, dst in zip(block, perm):
                images[src - 1] = dst
        yield Permutation(images)


def row_symmetrizer(tableau: Tableau) -> GroupAlgebraElement:
    """Sum, coefficient 1, over permutations preserving each row setwise."""
    n = tableau.n
    return GroupAlgebraElement(
        n, {perm: 1 for perm in _block_permutations(n, tableau.rows)}
    )


def column_antisymmetrizer(tableau: Tableau) -> GroupAlgebraElement:
    """Signed sum over permutations preserving each column setwise."""
    n = tableau.n
    return GroupAlgebraElement(
        n, {perm: perm.sign for perm in _block_permutations(n, tableau.columns())}
    )


def subset_antisymmetrizer(n: int, block: Iterable[int]) -> GroupAlgebraElement:
    """Signed sum over permutations of the given block, fixing everything else."""
    return GroupAlgebraElement(
        n, {perm: perm.sign for perm in _block_permutations(n, [tuple(block)])}
    )


def young_symmetrizer(tableau: Tableau) -> GroupAlgebraElement:
    """The product (column antisymmetrizer) * (row symmetrizer)."""
    return column_antisymmetrizer(tableau) * row_symmetrizer(tableau)
