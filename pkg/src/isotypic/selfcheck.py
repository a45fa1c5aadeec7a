"""Seeded random instances and the cross-decider verification harness.

Instance generation uses SplitMix64, a fixed 64-bit generator, so the
map from (seed, n, d, trial_index) to a configuration is part of the
external contract: the same spec always produces the same instances, the
same report, and the same violation records, on any platform.

The harness runs, per generated configuration: the four-decider
agreement over every shape of the matching size, the Gram-matrix
identity, the column criterion for a random tableau, the det-twist
reduction when the leading vectors form a basis, and the matroid-union
oracle cross-check; plus standalone character-table, idempotent, and
operator-rank suites per report.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .characters import central_idempotent, character_table
from .linalg import is_independent
from .matroid import (
    gamas_condition,
    rank_partition,
    rank_partition_oracle,
    validate_certificate,
)
from .partitions import Partition, partitions_of, syt_count, weyl_dimension
from .symgroup import (
    DEGREE_CAP,
    GroupAlgebraElement,
    Tableau,
    column_antisymmetrizer,
    subset_antisymmetrizer,
)
from .tensors import (
    OPERATOR_DIMENSION_CAP,
    VectorConfiguration,
    apply_algebra_element,
    decomposable,
    generalized_matrix_function,
    gram_matrix,
    nonzero_after_symmetrize,
    operator_rank,
    symmetrize,
)

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """The SplitMix64 generator (Steele-Lea-Flood finalizer), fixed forever."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], rejection-sampled to avoid modulo bias."""
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


def _scramble(x: int) -> int:
    z = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _mix(*parts: int) -> int:
    h = 0x243F6A8885A308D3  # first 64 bits of pi
    for p in parts:
        h = _scramble((h ^ (p & _MASK)) * _GAMMA & _MASK)
    return h


@dataclass(frozen=True)
class TrialSpec:
    """Deterministic description of a verification run."""

    seed: int = 0
    n_max: int = 5
    dims: tuple[int, ...] = (1, 2, 3)
    trials_per_cell: int = 50
    entry_range: int = 3
    p_duplicate: float = 0.3
    p_scale: float = 0.3
    p_zero: float = 0.05

    def __post_init__(self):
        if not 1 <= self.n_max <= DEGREE_CAP:
            raise ValueError(f"n_max must be in 1..{DEGREE_CAP}")
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError("dims must be positive")
        if self.trials_per_cell < 0:
            raise ValueError("trials_per_cell must be nonnegative")
        if self.entry_range < 1:
            raise ValueError("entry_range must be at least 1")
        for name in ("p_duplicate", "p_scale", "p_zero"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")

    def to_json_obj(self) -> dict:
        return {
            "seed": self.seed,
            "n_max": self.n_max,
            "dims": list(self.dims),
            "trials_per_cell": self.trials_per_cell,
            "entry_range": self.entry_range,
            "p_duplicate": self.p_duplicate,
            "p_scale": self.p_scale,
            "p_zero": self.p_zero,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TrialSpec":
        return cls(
            seed=obj["seed"],
            n_max=obj["n_max"],
            dims=tuple(obj["dims"]),
            trials_per_cell=obj["trials_per_cell"],
            entry_range=obj["entry_range"],
            p_duplicate=obj["p_duplicate"],
            p_scale=obj["p_scale"],
            p_zero=obj["p_zero"],
        )


def generate_configuration(
    spec: TrialSpec, n: int, d: int, trial_index: int
) -> VectorConfiguration:
    """Deterministic instance for the given cell and trial.

    Each vector starts as fresh uniform integer entries in
    [-entry_range, entry_range]; with probability p_zero it is replaced
    by the zero vector, otherwise (for non-first vectors) with
    probability p_duplicate by a copy of an earlier vector, otherwise
    with probability p_scale by a nonzero rational multiple of an
    earlier one.  The degenerate strata those injections force are where
    the deciders actually disagree when one of them is wrong.
    """
    rng = SplitMix64(_mix(spec.seed, n, d, trial_index))
    r = spec.entry_range
    vectors: list[tuple[Fraction, ...]] = []
    for i in range(n):
        u_zero, u_dup, u_scale = rng.uniform(), rng.uniform(), rng.uniform()
        if u_zero < spec.p_zero:
            vectors.append(tuple(Fraction(0) for _ in range(d)))
            continue
        if i > 0 and u_dup < spec.p_duplicate:
            vectors.append(vectors[rng.randint(0, i - 1)])
            continue
        if i > 0 and u_scale < spec.p_scale:
            num = rng.randint(1, r) * (1 if rng.uniform() < 0.5 else -1)
            den = rng.randint(1, r)
            c = Fraction(num, den)
            base = vectors[rng.randint(0, i - 1)]
            vectors.append(tuple(c * e for e in base))
            continue
        vectors.append(tuple(Fraction(rng.randint(-r, r)) for _ in range(d)))
    return VectorConfiguration(d, vectors)


@dataclass
class VerificationReport:
    spec: TrialSpec
    cells_run: int
    trials_run: int
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_obj(self) -> dict:
        # elapsed is deliberately left out: report bytes must be identical
        # across runs of the same spec.
        return {
            "spec": self.spec.to_json_obj(),
            "cells_run": self.cells_run,
            "trials_run": self.trials_run,
            "violations": self.violations,
        }


def _violation(suite, n, d, trial_index, shape, cfg, expected, actual, detail=None):
    record = {
        "suite": suite,
        "n": n,
        "d": d,
        "trial_index": trial_index,
        "shape": shape.to_text() if shape is not None else None,
        "config": cfg.to_json_obj() if cfg is not None else None,
        "expected": expected,
        "actual": actual,
    }
    if detail is not None:
        record["detail"] = detail
    return record


def _sort_key(record: dict):
    return (
        record["suite"],
        record["n"] if record["n"] is not None else -1,
        record["d"] if record["d"] is not None else -1,
        record["trial_index"] if record["trial_index"] is not None else -1,
        record["shape"] or "",
    )


def check_trial(
    spec: TrialSpec, n: int, d: int, trial_index: int, suites: set[str] | None = None
) -> list[dict]:
    """Run the per-configuration suites for one generated trial."""
    cfg = generate_configuration(spec, n, d, trial_index)
    run = lambda name: suites is None or name in suites
    out: list[dict] = []

    rho = rank_partition(cfg)
    if run("matroid_oracle"):
        oracle = rank_partition_oracle(cfg)
        if rho.rho != oracle.rho:
            out.append(
                _violation(
                    "matroid_oracle", n, d, trial_index, None, cfg,
                    f"rho={list(oracle.rho)}", f"rho={list(rho.rho)}",
                )
            )
        has_zero_vector = any(not any(v) for v in cfg.vectors)
        if not has_zero_vector:
            achieved = gamas_condition(cfg, rho.as_partition().conjugate())
            if achieved is None or not validate_certificate(
                cfg, achieved, rho.as_partition().conjugate()
            ):
                out.append(
                    _violation(
                        "matroid_oracle", n, d, trial_index,
                        rho.as_partition().conjugate(), cfg,
                        "rank partition achieved by a valid certificate",
                        "no valid certificate",
                    )
                )

    rho_conjugate = rho.as_partition().conjugate()
    gram = gram_matrix(cfg)
    shapes = partitions_of(n) if run("four_decider_agreement") or run("gram_identity") else []
    for lam in shapes:
        symmetrized = symmetrize(cfg, lam)
        gmf_value = generalized_matrix_function(gram, lam)
        if run("four_decider_agreement"):
            certificate = gamas_condition(cfg, lam)
            answers = {
                "brute": not symmetrized.is_zero(),
                "gram": gmf_value != 0,
                "gamas": certificate is not None,
                "dominance": lam.dominates(rho_conjugate),
            }
            if len(set(answers.values())) != 1:
                detail = dict(answers)
                detail["certificate"] = (
                    certificate.to_json_obj() if certificate else None
                )
                out.append(
                    _violation(
                        "four_decider_agreement", n, d, trial_index, lam, cfg,
                        "all four deciders agree", str(answers), detail,
                    )
                )
        if run("gram_identity"):
            lhs = symmetrized.inner(symmetrized)
            rhs = Fraction(syt_count(lam), factorial(n)) * gmf_value
            if lhs != rhs:
                out.append(
                    _violation(
                        "gram_identity", n, d, trial_index, lam, cfg,
                        f"<wT,wT> = {rhs}", str(lhs),
                    )
                )
            if gmf_value < 0:
                out.append(
                    _violation(
                        "gram_identity", n, d, trial_index, lam, cfg,
                        "gmf of a Gram matrix is nonnegative", str(gmf_value),
                    )
                )

    if run("column_criterion"):
        rng = SplitMix64(_mix(spec.seed, 0xC0111, n, d, trial_index))
        shapes = partitions_of(n)
        shape = shapes[rng.randint(0, len(shapes) - 1)]
        entries = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):  # Fisher-Yates on the fixed generator
            j = rng.randint(0, i)
            entries[i], entries[j] = entries[j], entries[i]
        rows, at = [], 0
        for part in shape:
            rows.append(entries[at : at + part])
            at += part
        tableau = Tableau(rows)
        w = decomposable(cfg)
        symmetrized_nonzero = not apply_algebra_element(
            w, column_antisymmetrizer(tableau)
        ).is_zero()
        columns_independent = all(
            is_independent([cfg.vectors[i - 1] for i in column])
            for column in tableau.columns()
        )
        if symmetrized_nonzero != columns_independent:
            out.append(
                _violation(
                    "column_criterion", n, d, trial_index, shape, cfg,
                    f"columns independent = {columns_independent}",
                    f"nonzero after column antisymmetrization = {symmetrized_nonzero}",
                    {"tableau": [list(r) for r in tableau.rows]},
                )
            )

    if run("det_twist") and n >= d and is_independent(cfg.vectors[:d]):
        w = decomposable(cfg)
        b_first = subset_antisymmetrizer(n, range(1, d + 1))
        wedge = apply_algebra_element(w, b_first)
        rest = VectorConfiguration(d, cfg.vectors[d:])
        for lam in partitions_of(n):
            if len(lam) != d:
                continue
            lhs = not apply_algebra_element(
                wedge, central_idempotent(lam)
            ).is_zero()
            reduced = lam.remove_first_column()
            rhs = (
                True
                if rest.n == 0
                else nonzero_after_symmetrize(rest, reduced)
            )
            if lhs != rhs:
                out.append(
                    _violation(
                        "det_twist", n, d, trial_index, lam, cfg,
                        f"reduced-shape decision = {rhs}",
                        f"wedge decision = {lhs}",
                    )
                )

    return out


def _run_cell(args: tuple[TrialSpec, int, int]) -> list[dict]:
    spec, n, d = args
    out: list[dict] = []
    for t in range(spec.trials_per_cell):
        out.extend(check_trial(spec, n, d, t))
    return out


def _character_suite(n_top: int) -> list[dict]:
    """Exact row and column orthogonality of the character tables."""
    out = []
    for n in range(1, n_top + 1):
        table = character_table(n)
        shapes = list(table.rows)
        for a in shapes:
            for b in shapes:
                total = sum(
                    size * x * y
                    for size, x, y in zip(
                        table.class_sizes, table.rows[a], table.rows[b]
                    )
                )
                want = factorial(n) if a == b else 0
                if total != want:
                    out.append(
                        _violation(
                            "character_orthogonality", n, None, None, a, None,
                            f"row <{a.to_text()},{b.to_text()}> = {want}", str(total),
                        )
                    )
        for i, rho in enumerate(table.classes):
            for j, rho2 in enumerate(table.classes):
                total = sum(
                    table.rows[lam][i] * table.rows[lam][j] for lam in shapes
                )
                want = factorial(n) // table.class_sizes[i] if i == j else 0
                if total != want:
                    out.append(
                        _violation(
                            "character_orthogonality", n, None, None, rho, None,
                            f"column <{rho.to_text()},{rho2.to_text()}> = {want}",
                            str(total),
                        )
                    )
    return out


def _idempotent_suite(n_top: int) -> list[dict]:
    """e_lam * e_mu = delta * e_lam, and the e_lam sum to the identity."""
    out = []
    for n in range(1, n_top + 1):
        shapes = partitions_of(n)
        idempotents = {lam: central_idempotent(lam) for lam in shapes}
        total = GroupAlgebraElement(n)
        for lam in shapes:
            total = total + idempotents[lam]
            for mu in shapes:
                product = idempotents[lam] * idempotents[mu]
                want = idempotents[lam] if lam == mu else GroupAlgebraElement(n)
                if product != want:
                    out.append(
                        _violation(
                            "idempotent_system", n, None, None, lam, None,
                            f"e_{lam.to_text()} * e_{mu.to_text()} is "
                            + ("idempotent" if lam == mu else "zero"),
                            "wrong product",
                        )
                    )
        if total != GroupAlgebraElement.one(n):
            out.append(
                _violation(
                    "idempotent_system", n, None, None, None, None,
                    "sum of central idempotents is the identity",
                    "wrong sum",
                )
            )
    return out


def _rank_law_suite(n_top: int, dims: tuple[int, ...]) -> list[dict]:
    """operator rank of e_lam = (standard tableaux) x (Weyl dimension)."""
    out = []
    for n in range(1, n_top + 1):
        for d in dims:
            if d**n > OPERATOR_DIMENSION_CAP:
                continue
            for lam in partitions_of(n):
                got = operator_rank(central_idempotent(lam), d)
                want = syt_count(lam) * weyl_dimension(lam, d)
                if got != want:
                    out.append(
                        _violation(
                            "schur_weyl_rank", n, d, None, lam, None,
                            f"rank = {want}", str(got),
                        )
                    )
    return out


def run_verification(spec: TrialSpec, jobs: int = 1) -> VerificationReport:
    """Run every suite; deterministic given the spec, regardless of jobs."""
    start = time.perf_counter()
    cells = [(n, d) for n in range(1, spec.n_max + 1) for d in spec.dims]
    violations: list[dict] = []
    if jobs > 1 and spec.trials_per_cell > 0:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_run_cell, [(spec, n, d) for n, d in cells]):
                violations.extend(result)
    else:
        for n, d in cells:
            violations.extend(_run_cell((spec, n, d)))

    violations.extend(_character_suite(min(spec.n_max, 8)))
    violations.extend(_idempotent_suite(min(spec.n_max, 5)))
    violations.extend(_rank_law_suite(min(spec.n_max, 5), spec.dims))

    violations.sort(key=_sort_key)
    return VerificationReport(
        spec=spec,
        cells_run=len(cells),
        trials_run=len(cells) * spec.trials_per_cell,
        violations=violations,
        elapsed=time.perf_counter() - start,
    )
