"""
Tests for the standard module and its truncated matrices
"""
from fractions import Fraction

import numpy as np
import pytest

from errors import AlgebraError
from lie_core import GenIndex, LieElement, Z, bracket, bracket_basis, generators
from modules_rep import (
    SVector, TruncatedMatrix, act, generator_matrix_closed_form, hw_generate, highest_weight,
    highest_weight_violations, is_singular, matrices_independent, matrix, shift_image, star, t
)
from scalars import Scalar, ONE


def test_action_examples():
    assert act(Z(2, 1), t(3)) == t(4)
    assert act(Z(0, 2), t(1)).is_zero()
    assert act(Z(0, 0), t(5)) == t(5)
    assert act(Z(1, 1), t(0)).is_zero()


def test_representation_property_small():
    for a in generators(4):
        x = LieElement({a: 1})
        for b in generators(4):
            y = LieElement({b: 1})
            for k in range(9):
                left = act(bracket_basis(a, b), t(k))
                assert left == act(x, act(y, t(k))) - act(y, act(x, t(k)))


def test_star_product():
    assert star(t(2) + t(1), t(3)) == t(5) + t(4)


def test_highest_weight():
    assert highest_weight(Z(0, 0)) == ONE
    assert highest_weight(Z(3, 3)) == 0
    with pytest.raises(AlgebraError):
        highest_weight(Z(1, 0))


def test_t0_generates_the_module():
    for k in range(10):
        assert hw_generate(k) == t(k)


def test_singular_vectors():
    assert is_singular(t(0))
    assert not is_singular(t(2))
    with pytest.raises(AlgebraError):
        is_singular(SVector())


def test_t0_is_the_only_singular_vector():
    for j in range(1, 17):
        assert act(Z(0, j), t(0)).is_zero()
    for d in range(1, 17):
        assert not is_singular(t(d))
        assert not is_singular(t(d).scale(3))
    assert highest_weight_violations(16) == []


def test_shift_and_quasi_shift():
    assert shift_image(GenIndex(3, 0), 2) == t(5)
    assert shift_image(GenIndex(0, 3), 5) == t(2)
    assert shift_image(GenIndex(0, 3), 2).is_zero()
    with pytest.raises(AlgebraError):
        shift_image(GenIndex(1, 1), 2)


def test_matrix_of_shift():
    mat = matrix(Z(1, 0), 3)
    assert mat.size == 4
    assert mat.nonzero_positions() == [(1, 0), (2, 1), (3, 2)]
    assert mat.as_numpy().dtype == np.int64


def test_matrix_closed_form():
    for g in generators(4):
        mat = matrix(LieElement({g: 1}), 12)
        expected = sorted(generator_matrix_closed_form(g, 12))
        assert mat.nonzero_positions() == expected
        assert all(mat.entry(r, c) == ONE for r, c in expected)


def test_truncated_commutator_matches_bracket_on_interior():
    size, bound = 14, 3
    for a in generators(bound):
        for b in generators(bound):
            left = matrix(LieElement({a: 1}), size).commutator(matrix(LieElement({b: 1}), size))
            right = matrix(bracket_basis(a, b), size)
            assert left.block(size + 1 - bound) == right.block(size + 1 - bound)


def test_matrix_rejects_small_size():
    with pytest.raises(AlgebraError):
        matrix(Z(1, 0), 0)


def test_matrix_exports():
    mat = matrix(Z(1, 0).scale(Scalar(0, Fraction(1, 2))), 2)
    assert mat.as_numpy().dtype == object
    assert mat.to_json()['rows'][1][0] == "0+1/2*i"
    assert mat.to_csv().splitlines()[1] == "0+1/2*i,0,0"
    assert "t[2]" in mat.to_text()
    square = TruncatedMatrix.from_numpy(np.eye(2, dtype=np.int64))
    assert square.entry(1, 1) == ONE


def test_faithfulness_on_generators():
    elements = [LieElement({g: 1}) for g in generators(3)]
    assert matrices_independent(elements, 8)
    assert not matrices_independent(elements + [Z(1, 0) + Z(0, 1)], 8)


def test_vector_text_and_json():
    v = t(0) - t(3).scale(2)
    assert str(v) == "t[0] - 2*t[3]"
    assert v.max_degree() == 3
    assert SVector.from_json(v.to_json()) == v
    with pytest.raises(AlgebraError):
        t(-1)
