from fractions import Fraction as F

import pytest

import ypa.sym_oracle as so
from ypa.surd import Surd, sqrt_fraction
from ypa.young import diagrams_up_to, dim, weight


def _partitions_up_to(n):
    out = set()

    def build(remaining, maxpart, prefix):
        if prefix:
            out.add(tuple(prefix))
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            build(remaining - p, p, prefix)
            prefix.pop()

    build(n, n, [])
    return sorted(out)


def test_standard_tableaux_counts():
    assert len(so.standard_tableaux((2, 1))) == 2
    assert len(so.standard_tableaux((4,))) == 1
    assert so.standard_tableaux(()) == (((),),)
    for lam in diagrams_up_to(7):
        assert len(so.standard_tableaux(lam)) == dim(lam)


def test_tableaux_lexicographic_order():
    paths = so.standard_tableaux((2, 1))
    assert paths == tuple(sorted(paths))


def test_matrix_examples_for_2_1():
    m1 = so.matrix_dict((2, 1), 1)
    # index 0 is the column-first path, eigenvalue -1; index 1 the row path.
    assert m1[(0, 0)] == Surd.from_rational(-1)
    assert m1[(1, 1)] == Surd.from_rational(1)
    assert (0, 1) not in m1
    m2 = so.matrix_dict((2, 1), 2)
    assert m2[(0, 0)] == Surd.from_rational(F(1, 2))
    assert m2[(1, 1)] == Surd.from_rational(F(-1, 2))
    assert m2[(0, 1)] == sqrt_fraction(F(3, 4))


def test_single_row_matrices_trivial():
    for i in (1, 2):
        assert so.matrix_dict((3,), i) == {(0, 0): Surd.from_rational(1)}


def test_matrix_index_range():
    with pytest.raises(IndexError):
        so.adjacent_transposition_matrix((2, 1), 3)
    with pytest.raises(IndexError):
        so.adjacent_transposition_matrix((2, 1), 0)


def _is_identity(m, n):
    ident = so.sparse_identity(n)
    return m == ident


def test_gz_matrices_symmetric_orthogonal_involutive():
    for lam in diagrams_up_to(6):
        n = weight(lam)
        d = dim(lam)
        for i in range(1, n):
            m = so.matrix_dict(lam, i)
            assert m == so.sparse_transpose(m)
            assert _is_identity(so.sparse_mul(m, m), d)


def test_commutation_and_braid_relations():
    for lam in diagrams_up_to(6):
        n = weight(lam)
        mats = {i: so.matrix_dict(lam, i) for i in range(1, n)}
        for i in range(1, n):
            for j in range(i + 2, n):
                assert so.sparse_mul(mats[i], mats[j]) == so.sparse_mul(
                    mats[j], mats[i]
                )
        for i in range(1, n - 1):
            lhs = so.sparse_mul(so.sparse_mul(mats[i], mats[i + 1]), mats[i])
            rhs = so.sparse_mul(so.sparse_mul(mats[i + 1], mats[i]), mats[i + 1])
            assert lhs == rhs


def test_character_spot_values():
    assert so.character((2, 1), (1, 1, 1)) == 2
    assert so.character((2, 1), (3,)) == -1
    assert so.character((2,), (2,)) == 1
    with pytest.raises(ValueError):
        so.character((1,), (2,))


def test_character_independent_of_reduced_word():
    for lam in diagrams_up_to(6):
        for pi in _partitions_up_to(4):
            if sum(pi) > weight(lam):
                continue
            assert so.character(lam, pi) == so.character(lam, pi, reverse_word=True)


def test_trace_equals_path_sum():
    for lam in diagrams_up_to(7):
        for pi in _partitions_up_to(5):
            if sum(pi) > weight(lam):
                continue
            assert so.character(lam, pi) == so.path_sum_character(lam, pi)


def test_normalized_character_values():
    assert so.normalized_character((2, 1), (1,)) == 3
    assert so.normalized_character((2, 1), (2,)) == 0
    assert so.normalized_character((1,), (3,)) == 0
    for lam in diagrams_up_to(6):
        assert so.normalized_character(lam, (1,)) == weight(lam)


def test_normalized_character_zero_branch():
    for lam in diagrams_up_to(3):
        for pi in _partitions_up_to(5):
            if sum(pi) > weight(lam):
                assert so.normalized_character(lam, pi) == 0
