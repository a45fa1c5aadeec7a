"""Irreducible characters of the symmetric group and central idempotents.

Character values are computed by the Murnaghan-Nakayama border-strip
recursion on beta-numbers: removing a strip of length k from a shape is
subtracting k from one beta-number so that the result is again a set of
distinct nonnegative integers; the sign is (-1)^(number of beta-numbers
jumped over), which equals (-1)^(strip height).  Everything is integer
arithmetic, memoized by (shape, cycle type).
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from math import factorial

from .partitions import Partition, partitions_of
from .symgroup import DEGREE_CAP, GroupAlgebraElement, Permutation, all_permutations

# Test seam for harness sensitivity checks: when set to ((lam, rho), ) the
# reported value of character_value(lam, rho) has its sign flipped.
_fault: tuple[Partition, Partition] | None = None


@cache
def _mn(lam_parts: tuple[int, ...], rho_parts: tuple[int, ...]) -> int:
    if not rho_parts:
        return 1 if not lam_parts else 0
    k = rho_parts[0]
    rest = rho_parts[1:]
    nrows = len(lam_parts)
    beta = [lam_parts[i] + (nrows - 1 - i) for i in range(nrows)]
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        jumped = sum(1 for other in beta if nb < other < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        m = len(new_beta)
        mu = tuple(
            part
            for j, x in enumerate(new_beta)
            if (part := x - (m - 1 - j)) > 0
        )
        total += (-1) ** jumped * _mn(mu, rest)
    return total


def character_value(lam: Partition, rho: Partition) -> int:
    """The irreducible character indexed by lam, on the class of cycle type rho."""
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam.parts}| != |{rho.parts}|")
    value = _mn(lam.parts, rho.parts)
    if _fault is not None and _fault == (lam, rho):
        value = -value
    return value


@contextmanager
def character_fault(lam: Partition, rho: Partition):
    """Flip the sign of one character value for the duration of the block.

    Exists so tests can prove the verification harness actually notices a
    broken character table; derived caches are cleared on entry and exit.
    In-process only: worker processes spawned by run_verification(jobs>1)
    import a clean module and do not see the fault.
    """
    global _fault
    previous = _fault
    _fault = (lam, rho)
    _clear_derived_caches()
    try:
        yield
    finally:
        _fault = previous
        _clear_derived_caches()


def _clear_derived_caches() -> None:
    character_table.cache_clear()
    central_idempotent.cache_clear()


def class_size(rho: Partition) -> int:
    """Number of permutations with the given cycle type: n!/z_rho."""
    z = 1
    multiplicity: dict[int, int] = {}
    for part in rho:
        multiplicity[part] = multiplicity.get(part, 0) + 1
    for part, m in multiplicity.items():
        z *= part**m * factorial(m)
    count, rem = divmod(factorial(rho.size), z)
    assert rem == 0
    return count


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_n; classes and rows in reverse-lex order."""

    n: int
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    rows: dict[Partition, tuple[int, ...]]

    def value(self, lam: Partition, rho: Partition) -> int:
        return self.rows[lam][self.classes.index(rho)]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "classes": [rho.to_text() for rho in self.classes],
            "class_sizes": list(self.class_sizes),
            "rows": {lam.to_text(): list(vals) for lam, vals in self.rows.items()},
        }


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > DEGREE_CAP:
        raise ValueError(f"degree {n} exceeds cap {DEGREE_CAP}")
    classes = tuple(partitions_of(n))
    sizes = tuple(class_size(rho) for rho in classes)
    rows = {
        lam: tuple(character_value(lam, rho) for rho in classes)
        for lam in partitions_of(n)
    }
    return CharacterTable(n, classes, sizes, rows)


@lru_cache(maxsize=None)
def _class_index(n: int) -> dict[Partition, int]:
    return {rho: i for i, rho in enumerate(partitions_of(n))}


def permutations_with_class(n: int) -> tuple[tuple[Permutation, int], ...]:
    """All permutations of {1..n} paired with the index of their cycle type.

    Class indices point into partitions_of(n); the listing is in the
    deterministic all_permutations order.  Cached per degree (up to 7!)
    because the n!-term sums in the tensor module walk it repeatedly;
    larger listings are rebuilt per call rather than held forever.
    """
    if n <= 7:
        return _permutations_with_class_cached(n)
    index = _class_index(n)
    return tuple((perm, index[perm.cycle_type()]) for perm in all_permutations(n))


@lru_cache(maxsize=None)
def _permutations_with_class_cached(n: int) -> tuple[tuple[Permutation, int], ...]:
    index = _class_index(n)
    return tuple((perm, index[perm.cycle_type()]) for perm in all_permutations(n))


@lru_cache(maxsize=None)
def central_idempotent(lam: Partition) -> GroupAlgebraElement:
    """(chi(1)/n!) * sum of chi(sigma) sigma: the projector onto the
    lam-isotypic two-sided ideal of the rational group algebra."""
    n = lam.size
    if n > DEGREE_CAP:
        raise ValueError(f"degree {n} exceeds cap {DEGREE_CAP}")
    row = character_table(n).rows[lam]
    scale = Fraction(row[_class_index(n)[Partition([1] * n)]], factorial(n))
    terms = {}
    for perm, cls in permutations_with_class(n):
        chi = row[cls]
        if chi:
            terms[perm] = scale * chi
    return GroupAlgebraElement(n, terms)
