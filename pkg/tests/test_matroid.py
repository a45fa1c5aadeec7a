import random
from fractions import Fraction

import pytest

from isotypic.linalg import is_independent
from isotypic.matroid import (
    ORACLE_SIZE_CAP,
    LinearMatroid,
    RankPartition,
    decide_appears,
    gamas_condition,
    rank_partition,
    rank_partition_oracle,
    validate_certificate,
)
from isotypic.partitions import Partition, partitions_of
from isotypic.tensors import VectorConfiguration

E1 = (1, 0)
E2 = (0, 1)


def P(*parts):
    return Partition(parts)


def cfg(d, *vectors):
    return VectorConfiguration(d, vectors)


def random_config(rng, n, d, p_dup=0.3, p_zero=0.1):
    vectors = []
    for i in range(n):
        roll = rng.random()
        if roll < p_zero:
            vectors.append(tuple(Fraction(0) for _ in range(d)))
        elif i > 0 and roll < p_zero + p_dup:
            vectors.append(vectors[rng.randrange(i)])
        else:
            vectors.append(tuple(Fraction(rng.randint(-2, 2)) for _ in range(d)))
    return VectorConfiguration(d, vectors)


def test_rank_partition_independent_vectors():
    configuration = cfg(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert rank_partition(configuration).rho == (3,)


def test_rank_partition_repeated_vector():
    assert rank_partition(cfg(2, E1, E1, E1)).rho == (1, 1, 1)


def test_rank_partition_mixed():
    assert rank_partition(cfg(2, E1, E1, E2)).rho == (2, 1)
    assert rank_partition_oracle(cfg(2, E1, E1, E2)).rho == (2, 1)


def test_rank_partition_with_zero_vector():
    got = rank_partition_oracle(cfg(2, (0, 0), E1))
    assert got.rho == (1,)
    assert got.covered == 1
    assert rank_partition(cfg(2, (0, 0), E1)).rho == (1,)


def test_rank_partition_triangle():
    configuration = cfg(2, E1, E2, (1, 1))
    assert rank_partition(configuration).rho == (2, 1)
    assert rank_partition_oracle(configuration).rho == (2, 1)


def test_rank_partition_all_zero():
    configuration = cfg(2, (0, 0), (0, 0))
    assert rank_partition(configuration).rho == ()
    assert rank_partition(configuration).covered == 0


def test_rank_partition_matches_oracle_randomized():
    rng = random.Random(20240809)
    for trial in range(120):
        n = rng.randint(1, 12)
        d = rng.randint(1, 4)
        configuration = random_config(rng, n, d)
        fast = rank_partition(configuration)
        slow = rank_partition_oracle(configuration)
        assert fast.rho == slow.rho, configuration.to_json_obj()
        nonzero = sum(1 for v in configuration.vectors if any(v))
        assert fast.covered == nonzero


def test_rank_partition_achievable_by_certificate():
    rng = random.Random(77)
    for _ in range(60):
        n = rng.randint(1, 10)
        d = rng.randint(1, 4)
        configuration = random_config(rng, n, d, p_zero=0.0)
        if any(not any(v) for v in configuration.vectors):
            continue  # a fresh draw can still be the zero vector
        rho = rank_partition(configuration)
        lam = rho.as_partition().conjugate()
        certificate = gamas_condition(configuration, lam)
        assert certificate is not None
        assert validate_certificate(configuration, certificate, lam)


def test_rank_partition_constructor_rejects_increasing():
    with pytest.raises(ValueError):
        RankPartition((1, 2))


def test_oracle_cap():
    configuration = VectorConfiguration(1, [(1,)] * (ORACLE_SIZE_CAP + 1))
    with pytest.raises(ValueError):
        rank_partition_oracle(configuration)


def test_matroid_rank_properties():
    rng = random.Random(3)
    configuration = random_config(rng, 8, 3)
    matroid = LinearMatroid(configuration)
    ground = frozenset(range(1, 9))
    assert matroid.rank(frozenset()) == 0
    for _ in range(30):
        a = frozenset(e for e in ground if rng.random() < 0.5)
        b = frozenset(e for e in ground if rng.random() < 0.5)
        # monotone and submodular
        assert matroid.rank(a) <= matroid.rank(a | b)
        assert matroid.rank(a | b) + matroid.rank(a & b) <= matroid.rank(a) + matroid.rank(b)
        assert matroid.rank(a) <= len(a)


def test_gamas_condition_examples():
    configuration = cfg(2, E1, E1, E2)
    certificate = gamas_condition(configuration, P(2, 1))
    assert certificate is not None
    assert validate_certificate(configuration, certificate, P(2, 1))
    assert gamas_condition(configuration, P(1, 1, 1)) is None
    for lam in partitions_of(3):
        assert gamas_condition(cfg(2, E1, (0, 0), E2), lam) is None


def test_gamas_condition_size_mismatch():
    with pytest.raises(ValueError):
        gamas_condition(cfg(2, E1, E2), P(3))


def test_gamas_condition_tall_shapes_fail_in_low_dimension():
    # a block larger than the ambient dimension can never be independent
    configuration = cfg(2, E1, E2, (1, 1))
    assert gamas_condition(configuration, P(1, 1, 1)) is None


def test_certificates_validate_randomized():
    rng = random.Random(41)
    for _ in range(80):
        n = rng.randint(1, 7)
        d = rng.randint(1, 3)
        configuration = random_config(rng, n, d)
        for lam in partitions_of(n):
            certificate = gamas_condition(configuration, lam)
            if certificate is not None:
                assert validate_certificate(configuration, certificate, lam)


def test_decide_appears_examples():
    configuration = cfg(2, E1, E1, E2)
    assert decide_appears(configuration, P(3))
    assert decide_appears(configuration, P(2, 1))
    assert not decide_appears(configuration, P(1, 1, 1))


def test_decide_appears_independent_accepts_everything():
    configuration = cfg(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    for lam in partitions_of(3):
        assert decide_appears(configuration, lam)


def test_decide_appears_repeated_vector_only_single_row():
    configuration = cfg(2, (2, 1), (2, 1), (2, 1), (2, 1))
    for lam in partitions_of(4):
        assert decide_appears(configuration, lam) == (lam == P(4))


def test_decide_appears_zero_vector_rejects_everything():
    configuration = cfg(2, E1, (0, 0), E2)
    for lam in partitions_of(3):
        assert not decide_appears(configuration, lam)


def test_dominance_upward_closure():
    rng = random.Random(55)
    for _ in range(40):
        n = rng.randint(1, 6)
        d = rng.randint(1, 3)
        configuration = random_config(rng, n, d)
        shapes = partitions_of(n)
        appearing = {lam: decide_appears(configuration, lam) for lam in shapes}
        for lam in shapes:
            if not appearing[lam]:
                continue
            for mu in shapes:
                if mu.dominates(lam):
                    assert appearing[mu]


def test_scaling_invariance_of_all_deciders():
    from isotypic.tensors import (
        generalized_matrix_function,
        gram_matrix,
        nonzero_after_symmetrize,
    )

    rng = random.Random(66)
    for _ in range(25):
        n = rng.randint(1, 5)
        d = rng.randint(1, 3)
        configuration = random_config(rng, n, d)
        i = rng.randrange(n)
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
        scaled_vectors = list(configuration.vectors)
        scaled_vectors[i] = tuple(c * e for e in scaled_vectors[i])
        scaled = VectorConfiguration(d, scaled_vectors)
        shapes = partitions_of(n)
        lam = shapes[rng.randrange(len(shapes))]
        assert nonzero_after_symmetrize(configuration, lam) == nonzero_after_symmetrize(
            scaled, lam
        )
        assert (generalized_matrix_function(gram_matrix(configuration), lam) != 0) == (
            generalized_matrix_function(gram_matrix(scaled), lam) != 0
        )
        assert (gamas_condition(configuration, lam) is not None) == (
            gamas_condition(scaled, lam) is not None
        )
        assert decide_appears(configuration, lam) == decide_appears(scaled, lam)
