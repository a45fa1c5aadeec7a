import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isotypic.partitions import Partition, partitions_of
from isotypic.symgroup import (
    DEGREE_CAP,
    GroupAlgebraElement,
    Permutation,
    Tableau,
    algebra_multiply,
    all_permutations,
    column_antisymmetrizer,
    compose,
    row_symmetrizer,
    sign_and_cycle_type,
    subset_antisymmetrizer,
)


def perm_strategy(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def test_compose_identity():
    tau = cyc(4, (1, 3, 2))
    assert compose(Permutation.identity(4), tau) == tau
    assert compose(tau, Permutation.identity(4)) == tau


def test_compose_inverse():
    sigma = cyc(5, (1, 4), (2, 5, 3))
    assert compose(sigma, sigma.inverse()) == Permutation.identity(5)


def test_compose_convention():
    # (1 2) after (2 3) maps 1->2, 2->3, 3->1
    assert compose(cyc(3, (1, 2)), cyc(3, (2, 3))) == Permutation([2, 3, 1])


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_sign_and_cycle_type_examples():
    assert sign_and_cycle_type(Permutation.identity(4)) == (1, Partition([1, 1, 1, 1]))
    assert sign_and_cycle_type(cyc(3, (1, 2))) == (-1, Partition([2, 1]))
    assert sign_and_cycle_type(cyc(5, (1, 2, 3), (4, 5))) == (-1, Partition([3, 2]))


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(perm_strategy(n), perm_strategy(n), perm_strategy(n))))
@settings(max_examples=150, deadline=None)
def test_compose_associative_and_sign_homomorphism(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, b).sign == a.sign * b.sign


def test_all_permutations_small():
    assert list(all_permutations(1)) == [Permutation([1])]
    perms3 = list(all_permutations(3))
    assert len(perms3) == 6
    assert len(set(perms3)) == 6
    # deterministic lexicographic order by image tuple
    assert perms3[0] == Permutation([1, 2, 3])
    assert perms3[-1] == Permutation([3, 2, 1])


def test_all_permutations_five_cycle_count():
    # n!/z with z = 5 for the class of 5-cycles
    count = sum(
        1 for p in all_permutations(5) if p.cycle_type() == Partition([5])
    )
    assert count == 24


def test_all_permutations_cap():
    with pytest.raises(ValueError):
        list(all_permutations(DEGREE_CAP + 1))


def test_conjugacy_class_census():
    for n in range(1, 8):
        census = {}
        for p in all_permutations(n):
            key = p.cycle_type()
            census[key] = census.get(key, 0) + 1
        assert sum(census.values()) == factorial(n)
        for rho, size in census.items():
            z = 1
            mult = {}
            for part in rho:
                mult[part] = mult.get(part, 0) + 1
            for part, m in mult.items():
                z *= part**m * factorial(m)
            assert size == factorial(n) // z


def test_cycle_notation():
    assert str(Permutation.identity(3)) == "()"
    assert str(cyc(5, (1, 2), (3, 5))) == "(1 2)(3 5)"


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])
    with pytest.raises(ValueError):
        Permutation([0, 1])


def test_algebra_identity_element():
    x = GroupAlgebraElement(3, {cyc(3, (1, 2)): Fraction(2), cyc(3, (1, 2, 3)): Fraction(-1, 3)})
    one = GroupAlgebraElement.one(3)
    assert x * one == x
    assert one * x == x


def test_algebra_antisymmetrizer_square():
    x = GroupAlgebraElement(2, {Permutation.identity(2): 1, cyc(2, (1, 2)): -1})
    assert x * x == 2 * x


def test_paper_column_antisymmetrizer():
    # tableau with rows {2,3,4} and {1,5}: columns {2,1}, {3,5}, {4}
    tableau = Tableau([[2, 3, 4], [1, 5]])
    left = GroupAlgebraElement(5, {Permutation.identity(5): 1, cyc(5, (1, 2)): -1})
    right = GroupAlgebraElement(5, {Permutation.identity(5): 1, cyc(5, (3, 5)): -1})
    b = column_antisymmetrizer(tableau)
    assert b == left * right
    assert len(b) == 4
    assert b.coefficient(Permutation.identity(5)) == 1
    assert b.coefficient(cyc(5, (1, 2))) == -1
    assert b.coefficient(cyc(5, (3, 5))) == -1
    assert b.coefficient(cyc(5, (1, 2), (3, 5))) == 1


def test_paper_row_symmetrizer():
    tableau = Tableau([[2, 3, 4], [1, 5]])
    a = row_symmetrizer(tableau)
    assert len(a) == 12
    assert all(coeff == 1 for coeff in a.terms.values())
    top = GroupAlgebraElement(
        5,
        {
            Permutation.identity(5): 1,
            cyc(5, (2, 3)): 1,
            cyc(5, (2, 4)): 1,
            cyc(5, (3, 4)): 1,
            cyc(5, (2, 3, 4)): 1,
            cyc(5, (2, 4, 3)): 1,
        },
    )
    bottom = GroupAlgebraElement(5, {Permutation.identity(5): 1, cyc(5, (1, 5)): 1})
    assert a == top * bottom


def test_symmetrizer_extremes():
    single_column = Tableau([[1], [2], [3]])
    assert row_symmetrizer(single_column) == GroupAlgebraElement.one(3)
    assert len(column_antisymmetrizer(single_column)) == 6
    single_row = Tableau([[1, 2, 3]])
    assert column_antisymmetrizer(single_row) == GroupAlgebraElement.one(3)
    assert len(row_symmetrizer(single_row)) == 6
    pair_column = Tableau([[1], [2]])
    assert column_antisymmetrizer(pair_column) == GroupAlgebraElement(
        2, {Permutation.identity(2): 1, cyc(2, (1, 2)): -1}
    )


def _random_tableau(rng, n):
    shapes = partitions_of(n)
    shape = shapes[rng.randrange(len(shapes))]
    entries = list(range(1, n + 1))
    rng.shuffle(entries)
    rows, at = [], 0
    for part in shape:
        rows.append(entries[at : at + part])
        at += part
    return Tableau(rows)


def test_symmetrizer_term_counts_and_quasi_idempotence():
    rng = random.Random(20240811)
    for _ in range(25):
        n = rng.randrange(2, 7)
        tableau = _random_tableau(rng, n)
        a = row_symmetrizer(tableau)
        b = column_antisymmetrizer(tableau)
        rows_order = 1
        for part in tableau.shape:
            rows_order *= factorial(part)
        cols_order = 1
        for part in tableau.shape.conjugate():
            cols_order *= factorial(part)
        assert len(a) == rows_order
        assert len(b) == cols_order
        assert a * a == rows_order * a
        assert b * b == cols_order * b


def test_subset_antisymmetrizer():
    b = subset_antisymmetrizer(4, [1, 2])
    assert b == GroupAlgebraElement(
        4, {Permutation.identity(4): 1, cyc(4, (1, 2)): -1}
    )
    assert subset_antisymmetrizer(4, [3]) == GroupAlgebraElement.one(4)


def test_tableau_validation():
    with pytest.raises(ValueError):
        Tableau([[1, 2], [3, 4, 5]])  # shape not weakly decreasing
    with pytest.raises(ValueError):
        Tableau([[1, 2], [2]])  # repeated entry


def test_algebra_multiply_size_mismatch():
    with pytest.raises(ValueError):
        algebra_multiply(GroupAlgebraElement.one(2), GroupAlgebraElement.one(3))


def test_algebra_json_form_sorted():
    x = GroupAlgebraElement(
        3, {cyc(3, (1, 2, 3)): Fraction(1, 2), Permutation.identity(3): -2}
    )
    obj = x.to_json_obj()
    assert obj == [
        {"perm": [1, 2, 3], "coeff": "-2"},
        {"perm": [2, 3, 1], "coeff": "1/2"},
    ]
