"""Tensor powers of Q^d, the place-permutation action, and symmetrization.

A SparseTensor maps index tuples over {1..d} to rationals.  The group of
degree n acts on the right by permuting tensor positions: on a pure
tensor, acting by sigma reorders the factors to v_{sigma(1)} x ... x
v_{sigma(n)}, and the general action is the linear extension (entry at
index tuple t moves to the tuple k -> t[sigma(k)]).

The hot path, `symmetrize`, encodes index tuples as base-d integers and
reuses per-degree tables of the position action, because the full
character sum walks all n! permutations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .characters import character_table, permutations_with_class
from .linalg import Matrix, as_vector, rank_of_rows
from .partitions import Partition
from .symgroup import DEGREE_CAP, GroupAlgebraElement, Permutation

# operator_rank builds the full d^n-dimensional space; past this it refuses.
OPERATOR_DIMENSION_CAP = 4096

# symmetrize precomputes code-permutation tables only while the total
# table size n! * d^n stays moderate; beyond that the tuple path is used.
_CODE_TABLE_ENTRIES_CAP = 2_000_000


class VectorConfiguration:
    """An ordered list of vectors in Q^dim; zero vectors are permitted."""

    __slots__ = ("dim", "vectors")

    def __init__(self, dim: int, vectors: Iterable[Iterable]):
        self.dim = int(dim)
        self.vectors = tuple(as_vector(v) for v in vectors)
        for v in self.vectors:
            if len(v) != self.dim:
                raise ValueError(f"vector of length {len(v)} in dimension {self.dim}")

    @property
    def n(self) -> int:
        return len(self.vectors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorConfiguration)
            and self.dim == other.dim
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.dim, self.vectors))

    def __repr__(self):
        return f"VectorConfiguration(dim={self.dim}, n={self.n})"

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "vectors": [[str(Fraction(e)) for e in v] for v in self.vectors],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "VectorConfiguration":
        return cls(obj["dim"], obj["vectors"])


def _normalize(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class SparseTensor:
    """Element of the n-th tensor power of Q^d, as a pruned index->value map."""

    __slots__ = ("n", "d", "entries")

    def __init__(self, n: int, d: int, entries: Mapping[tuple[int, ...], Fraction] | None = None):
        self.n = n
        self.d = d
        pruned: dict[tuple[int, ...], Fraction | int] = {}
        for idx, val in (entries or {}).items():
            idx = tuple(idx)
            if len(idx) != n or any(not 1 <= i <= d for i in idx):
                raise ValueError(f"bad index {idx} for degree {n}, dimension {d}")
            val = _normalize(val)
            if val:
                pruned[idx] = val
        self.entries = pruned

    @classmethod
    def zero(cls, n: int, d: int) -> "SparseTensor":
        return cls(n, d, {})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseTensor)
            and (self.n, self.d) == (other.n, other.d)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseTensor(n={self.n}, d={self.d}, {len(self.entries)} entries)"

    def _check(self, other: "SparseTensor") -> None:
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(
                f"tensor mismatch: ({self.n},{self.d}) vs ({other.n},{other.d})"
            )

    def __add__(self, other: "SparseTensor") -> "SparseTensor":
        self._check(other)
        total = dict(self.entries)
        for idx, val in other.entries.items():
            total[idx] = total.get(idx, 0) + val
        return SparseTensor(self.n, self.d, total)

    def __sub__(self, other: "SparseTensor") -> "SparseTensor":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "SparseTensor":
        scalar = Fraction(scalar)
        return SparseTensor(
            self.n, self.d, {idx: scalar * val for idx, val in self.entries.items()}
        )

    def inner(self, other: "SparseTensor") -> Fraction:
        """Standard dot product extended multiplicatively to tensors."""
        self._check(other)
        small, large = self.entries, other.entries
        if len(small) > len(large):
            small, large = large, small
        return Fraction(
            sum(val * large[idx] for idx, val in small.items() if idx in large)
        )

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "dim": self.d,
            "entries": [
                {"index": list(idx), "value": str(Fraction(val))}
                for idx, val in sorted(self.entries.items())
            ],
        }


def decomposable(cfg: VectorConfiguration) -> SparseTensor:
    """The pure tensor of the configuration; zero iff some vector is zero."""
    if cfg.n < 1:
        raise ValueError("need at least one vector")
    entries: dict[tuple[int, ...], Fraction | int] = {(): 1}
    for v in cfg.vectors:
        support = [(i + 1, _normalize(c)) for i, c in enumerate(v) if c]
        if not support:
            return SparseTensor.zero(cfg.n, cfg.dim)
        entries = {
            idx + (i,): val * c for idx, val in entries.items() for i, c in support
        }
    return SparseTensor(cfg.n, cfg.dim, entries)


def permuted(cfg: VectorConfiguration, sigma: Permutation) -> VectorConfiguration:
    """The configuration (v o sigma) with i-th vector v_{sigma(i)}."""
    if sigma.n != cfg.n:
        raise ValueError(f"degree mismatch: {sigma.n} vs {cfg.n}")
    return VectorConfiguration(cfg.dim, (cfg.vectors[j - 1] for j in sigma.images))


def act(w: SparseTensor, sigma: Permutation) -> SparseTensor:
    """Right place-permutation action; act(decomposable(v), s) = decomposable(v o s)."""
    if sigma.n != w.n:
        raise ValueError(f"degree mismatch: {sigma.n} vs {w.n}")
    images = sigma.images
    n = w.n
    return SparseTensor(
        w.n,
        w.d,
        {
            tuple(idx[images[k] - 1] for k in range(n)): val
            for idx, val in w.entries.items()
        },
    )


def apply_algebra_element(w: SparseTensor, x: GroupAlgebraElement) -> SparseTensor:
    """Linear extension: the sum of x(sigma) * (w acted on by sigma)."""
    if x.n != w.n:
        raise ValueError(f"degree mismatch: {x.n} vs {w.n}")
    n = w.n
    total: dict[tuple[int, ...], Fraction | int] = {}
    for sigma, coeff in x.terms.items():
        images = sigma.images
        for idx, val in w.entries.items():
            moved = tuple(idx[images[k] - 1] for k in range(n))
            total[moved] = total.get(moved, 0) + coeff * val
    return SparseTensor(w.n, w.d, total)


@lru_cache(maxsize=16)
def _code_tables(n: int, d: int) -> tuple[tuple[list[int], int], ...]:
    """Per permutation (in permutations_with_class order), the base-d code map
    of the position action, paired with the permutation's class index."""
    weights = [d ** (n - 1 - k) for k in range(n)]
    digits = list(itertools.product(range(1, d + 1), repeat=n))
    out = []
    for perm, cls in permutations_with_class(n):
        src = [perm.images[k] - 1 for k in range(n)]
        table = [
            sum((t[src[k]] - 1) * weights[k] for k in range(n)) for t in digits
        ]
        out.append((table, cls))
    return tuple(out)


def _decomposable_codes(cfg: VectorConfiguration) -> dict[int, Fraction | int]:
    d = cfg.dim
    codes: dict[int, Fraction | int] = {0: 1}
    for v in cfg.vectors:
        support = [(i, _normalize(c)) for i, c in enumerate(v) if c]
        if not support:
            return {}
        codes = {
            code * d + i: val * c for code, val in codes.items() for i, c in support
        }
    return codes


def _decode(code: int, n: int, d: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        code, r = divmod(code, d)
        digits.append(r + 1)
    return tuple(reversed(digits))


def symmetrize(cfg: VectorConfiguration, lam: Partition) -> SparseTensor:
    """Apply the character projector for lam to the pure tensor of cfg.

    Equals apply_algebra_element(decomposable(cfg), central_idempotent(lam));
    computed directly from the character sum, skipping classes where the
    character vanishes.
    """
    n = cfg.n
    if lam.size != n:
        raise ValueError(f"shape size {lam.size} does not match {n} vectors")
    if n > DEGREE_CAP:
        raise ValueError(f"degree {n} exceeds cap {DEGREE_CAP}")
    d = cfg.dim
    row = character_table(n).rows[lam]
    dimension = row[-1]  # class (1,...,1) is last in reverse-lex order
    scale = Fraction(dimension, factorial(n))

    acc: dict[int, Fraction | int] = {}
    if factorial(n) * d**n <= _CODE_TABLE_ENTRIES_CAP:
        codes = _decomposable_codes(cfg)
        for table, cls in _code_tables(n, d):
            chi = row[cls]
            if not chi:
                continue
            for code, val in codes.items():
                moved = table[code]
                acc[moved] = acc.get(moved, 0) + chi * val
        entries = {
            _decode(code, n, d): scale * val for code, val in acc.items() if val
        }
        return SparseTensor(n, d, entries)

    w = decomposable(cfg)
    tuple_acc: dict[tuple[int, ...], Fraction | int] = {}
    for perm, cls in permutations_with_class(n):
        chi = row[cls]
        if not chi:
            continue
        images = perm.images
        for idx, val in w.entries.items():
            moved = tuple(idx[images[k] - 1] for k in range(n))
            tuple_acc[moved] = tuple_acc.get(moved, 0) + chi * val
    return SparseTensor(
        n, d, {idx: scale * val for idx, val in tuple_acc.items() if val}
    )


def nonzero_after_symmetrize(cfg: VectorConfiguration, lam: Partition) -> bool:
    """Exact zero test of the symmetrized pure tensor (the brute-force decider)."""
    return not symmetrize(cfg, lam).is_zero()


def gram_matrix(cfg: VectorConfiguration) -> Matrix:
    """Pairwise dot products; symmetric positive semidefinite."""
    vs = cfg.vectors
    return Matrix(
        [[sum(a * b for a, b in zip(vs[i], vs[j])) for j in range(cfg.n)] for i in range(cfg.n)]
    )


def generalized_matrix_function(a: Matrix, lam: Partition) -> Fraction:
    """The character-weighted permanent-like sum over all permutations.

    Specializes to the determinant for the single-column shape and the
    permanent for the single-row shape.
    """
    n = a.nrows
    if a.ncols != n:
        raise ValueError(f"matrix must be square, got {a.nrows}x{a.ncols}")
    if lam.size != n:
        raise ValueError(f"shape size {lam.size} does not match matrix size {n}")
    if n > DEGREE_CAP:
        raise ValueError(f"degree {n} exceeds cap {DEGREE_CAP}")
    row = character_table(n).rows[lam]
    rows = a.rows
    total = Fraction(0)
    for perm, cls in permutations_with_class(n):
        chi = row[cls]
        if not chi:
            continue
        prod = Fraction(1)
        for i, img in enumerate(perm.images):
            entry = rows[i][img - 1]
            if not entry:
                prod = None
                break
            prod = prod * entry
        if prod is not None:
            total += chi * prod
    return total


def operator_rank(x: GroupAlgebraElement, d: int) -> int:
    """Rank of w -> apply_algebra_element(w, x) on the full tensor power.

    The position action preserves the multiset of indices, so the operator
    is block-diagonal over index contents; the rank is computed block by
    block with exact elimination.
    """
    n = x.n
    dimension = d**n
    if dimension > OPERATOR_DIMENSION_CAP:
        raise ValueError(
            f"d^n = {dimension} exceeds operator cap {OPERATOR_DIMENSION_CAP}"
        )
    if x.is_zero():
        return 0
    blocks: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for idx in itertools.product(range(1, d + 1), repeat=n):
        blocks.setdefault(tuple(sorted(idx)), []).append(idx)
    terms = [(perm.images, coeff) for perm, coeff in x.terms.items()]
    total = 0
    for basis in blocks.values():
        index = {idx: i for i, idx in enumerate(basis)}
        rows = []
        for idx in basis:
            acc: dict[int, Fraction | int] = {}
            for images, coeff in terms:
                moved = tuple(idx[images[k] - 1] for k in range(n))
                j = index[moved]
                acc[j] = acc.get(j, 0) + coeff
            dense = [Fraction(0)] * len(basis)
            for j, val in acc.items():
                dense[j] = Fraction(val)
            rows.append(dense)
        total += rank_of_rows(rows)
    return total
