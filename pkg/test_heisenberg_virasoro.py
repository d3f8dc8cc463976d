"""
Tests for the Heisenberg relabellings, the Fock module and the Virasoro operators
"""
from fractions import Fraction

import pytest

from errors import AlgebraError
from heisenberg_virasoro import (
    CENTRAL, FockConfig, FockVector, HeisLabel, HeisenbergElement, Side, a_minus, a_minus_element,
    a_minus_inv, a_plus, a_plus_element, a_plus_inv, abelian_bracket, central, central_charge, cocycle,
    cocycle_element, d_element, d_map, fock_apply,
    fock_basis, fock_monomial, heis, heis_bracket, residual_report, vacuum, virasoro_L,
    virasoro_residual
)
from lie_core import GenIndex, Z, bracket, involution_C
from scalars import Scalar, ONE

CFG = FockConfig(Fraction(1, 2), Fraction(1, 3))
POINTS = [(0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 3)), (2, Fraction(3, 2))]


def test_relabelling_examples():
    assert a_plus(GenIndex(3, 0)) == HeisLabel(Side.PLUS, -2)
    assert a_plus(GenIndex(4, 0)) == HeisLabel(Side.PLUS, 2)
    assert a_minus(GenIndex(0, 1)) == HeisLabel(Side.MINUS, -1)
    assert a_plus(GenIndex(0, 0)).n == 0
    with pytest.raises(AlgebraError):
        a_plus(GenIndex(1, 1))
    with pytest.raises(AlgebraError):
        a_minus(GenIndex(2, 0))


def test_relabelling_is_bijective():
    labels = {a_plus(GenIndex(k, 0)).n for k in range(21)}
    assert labels == set(range(-10, 11))
    for k in range(21):
        assert a_plus_inv(a_plus(GenIndex(k, 0))) == GenIndex(k, 0)
        assert a_minus_inv(a_minus(GenIndex(0, k))) == GenIndex(0, k)
        assert d_map(a_plus(GenIndex(k, 0))) == a_minus(GenIndex(0, k))


def test_relabel_elements():
    assert a_plus_element(Z(1, 0) + Z(2, 0).scale(3)) == heis(Side.PLUS, -1) + heis(Side.PLUS, 1, 3)


@pytest.mark.parametrize("k", range(21))
def test_d_intertwines_involution(k):
    x = Z(k, 0)
    assert d_element(a_plus_element(x)) == -a_minus_element(involution_C(x))


def test_relabellings_preserve_vanishing_brackets():
    for k in range(11):
        for j in range(11):
            assert bracket(Z(k, 0), Z(j, 0)).is_zero()
            assert bracket(Z(0, k), Z(0, j)).is_zero()
            x, y = Z(k, 0) + Z(j, 0).scale(2), Z(j, 0)
            assert a_plus_element(x + y) == a_plus_element(x) + a_plus_element(y)
            assert abelian_bracket(a_plus_element(x), a_plus_element(y)).is_zero()
            assert abelian_bracket(a_minus_element(Z(0, k)), a_minus_element(Z(0, j))).is_zero()


def test_cocycle_identity():
    elements = [heis('+', n) + heis('+', -n).scale(2) for n in range(-4, 5)]
    for x in elements:
        for y in elements:
            assert cocycle_element(x, y) == -cocycle_element(y, x)
            for z in elements:
                total = cocycle_element(abelian_bracket(x, y), z) + cocycle_element(abelian_bracket(y, z), x) \
                    + cocycle_element(abelian_bracket(z, x), y)
                assert total.is_zero()


def test_cocycle():
    plus = lambda n: HeisLabel(Side.PLUS, n)
    assert cocycle(plus(2), plus(-2)) == 2
    assert cocycle(plus(-2), plus(2)) == -2
    assert cocycle(plus(2), plus(3)) == 0
    with pytest.raises(AlgebraError):
        cocycle(plus(1), HeisLabel(Side.MINUS, -1))


def test_heisenberg_bracket():
    assert heis_bracket(heis('+', 3), heis('+', -3)) == central(3)
    assert heis_bracket(heis('-', 1), heis('-', 2)).is_zero()
    assert heis_bracket(heis('+', 2), central()).is_zero()
    with pytest.raises(AlgebraError):
        heis_bracket(heis('+', 1), heis('-', -1))


def test_fock_basis():
    assert fock_basis(0) == [()]
    assert fock_basis(4) == [(1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]
    assert len(fock_basis(8)) == 22


def test_fock_action():
    b1 = fock_monomial(1)
    assert fock_apply(CFG, HeisLabel(Side.PLUS, -1), vacuum()) == b1
    assert fock_apply(CFG, HeisLabel(Side.PLUS, 1), b1) == vacuum()
    assert fock_apply(CFG, HeisLabel(Side.PLUS, 2), fock_monomial(2, 2)) == fock_monomial(2).scale(4)
    assert fock_apply(CFG, HeisLabel(Side.MINUS, 0), b1) == b1.scale(Fraction(1, 2))
    assert fock_apply(CFG, CENTRAL, b1) == b1


def test_fock_commutators():
    for n in range(-3, 4):
        for m in range(-3, 4):
            zn, zm = HeisLabel(Side.PLUS, n), HeisLabel(Side.PLUS, m)
            for degree in range(6):
                for mono in fock_basis(degree):
                    v = FockVector({mono: ONE})
                    left = fock_apply(CFG, zn, fock_apply(CFG, zm, v)) - fock_apply(CFG, zm, fock_apply(CFG, zn, v))
                    assert left == v.scale(n if n == -m else 0)


def test_central_charge():
    assert central_charge(CFG) == Fraction(7, 3)
    assert central_charge(FockConfig()) == 1


def test_virasoro_on_vacuum():
    mu, lam = CFG.mu, CFG.lam
    assert virasoro_L(CFG, -1, vacuum()) == fock_monomial(1).scale(mu - Scalar(0, 1) * lam)
    assert virasoro_L(CFG, 1, fock_monomial(1)) == vacuum().scale(mu + Scalar(0, 1) * lam)
    assert virasoro_L(CFG, 0, vacuum()) == vacuum().scale((mu * mu + lam * lam) * Fraction(1, 2))
    assert virasoro_L(CFG, 3, vacuum()).is_zero()


@pytest.mark.parametrize("mu,lam", POINTS)
def test_l2_l_minus2_on_vacuum(mu, lam):
    cfg = FockConfig(mu, lam)
    v = vacuum()
    left = virasoro_L(cfg, 2, virasoro_L(cfg, -2, v)) - virasoro_L(cfg, -2, virasoro_L(cfg, 2, v))
    assert left == v.scale(cfg.mu * cfg.mu * 2 + cfg.lam * cfg.lam * 8 + Fraction(1, 2))


@pytest.mark.parametrize("mu,lam", POINTS)
def test_virasoro_relations_small(mu, lam):
    cfg = FockConfig(mu, lam)
    memo = {}
    for n in range(-2, 3):
        for m in range(-2, 3):
            for degree in range(4):
                for mono in fock_basis(degree):
                    assert virasoro_residual(cfg, n, m, FockVector({mono: ONE}), memo).is_zero()


def test_virasoro_grading():
    for n in range(-3, 4):
        for degree in range(5):
            for mono in fock_basis(degree):
                image = virasoro_L(CFG, n, FockVector({mono: ONE}))
                if image:
                    assert image.is_homogeneous()
                    assert image.max_degree() == degree - n


def test_window_idempotence():
    v = fock_monomial(1, 2) + fock_monomial(3).scale(2)
    for n in range(-2, 3):
        default = virasoro_L(CFG, n, v)
        assert virasoro_L(CFG, n, v, window=12) == default
        assert virasoro_L(CFG, n, v, window=24) == default


def test_residual_report():
    records = residual_report(CFG, 1, -1, 3)
    assert [r['degree'] for r in records] == [0, 1, 2, 3]
    assert all(r['pass'] for r in records)
    assert records[0]['lambda'] == '1/3'


def test_fock_vector_json_and_keys():
    v = fock_monomial(2, 1).scale(3) - vacuum()
    assert str(v) == "-1 + 3*b[1]*b[2]"
    assert FockVector.from_json(v.to_json()) == v
    with pytest.raises(AlgebraError):
        FockVector({(2, 1): 1})


def test_heisenberg_element_json():
    x = heis('+', 2) + central(5)
    data = x.to_json()
    assert data['central'] == '5'
    assert data['terms'] == [{'side': '+', 'n': 2, 'coeff': '1'}]
    assert isinstance(x, HeisenbergElement)
