# -*- encoding: utf-8 -*-

import doctest
import itertools

import pytest

import matrices.mat2
from matrices.mat2 import IdemParams
from matrices.mat2 import Mat2
from matrices.mat2 import continuant
from matrices.mat2 import continuant_matrix
from matrices.mat2 import diag
from matrices.mat2 import elem_add
from matrices.mat2 import is_idempotent
from matrices.mat2 import slope_idempotent
from matrices.mat2 import t_mat
from matrices.mat2 import t_product
from rings.core import INTEGERS
from rings.core import RATIONALS
from rings.errors import BadBezoutPair
from rings.errors import InputParseError
from rings.errors import NotAUnit
from rings.errors import NotIdempotentPair
from rings.errors import NotInvertible
from rings.errors import RingMismatch

Z = INTEGERS


def ints(*values):
    return [Z(v) for v in values]


def test_doctests():
    failures, tried = doctest.testmod(matrices.mat2)
    assert failures == 0


class TestMat2:

    def test_det(self, zz):
        assert zz([[1, 2], [3, 4]]).det() == -2

    def test_singular_and_invertible(self, zz):
        assert zz([[2, 3], [0, 0]]).is_singular()
        assert zz([[0, 1], [1, 0]]).is_invertible()
        assert not zz([[2, 0], [0, 1]]).is_invertible()

    def test_inverse(self, zz):
        M = zz([[2, 1], [1, 1]])
        assert M * M.inverse() == Mat2.identity(Z)
        with pytest.raises(NotInvertible):
            zz([[2, 0], [0, 1]]).inverse()

    def test_entries_share_a_ring(self):
        with pytest.raises(RingMismatch):
            Mat2(Z(1), Z(0), RATIONALS(0), Z(1))

    def test_text(self, zz):
        M = zz([[4, 6], [-2, -3]])
        assert str(M) == '(4, 6; -2, -3)'
        assert repr(M) == 'Mat2(Z, [[4, 6], [-2, -3]])'

    def test_json(self, zz):
        M = zz([[4, 6], [-2, -3]])
        assert M.json() == {'ring': 'Z', 'rows': [[4, 6], [-2, -3]]}
        assert Mat2.deserialize(M.json(), Z) == M

    @pytest.mark.parametrize('rows', [[[1, 2]], [[1, 2], [3]], 'nope'])
    def test_malformed_rows(self, rows):
        with pytest.raises(InputParseError):
            Mat2.deserialize({'rows': rows}, Z)


class TestIdempotents:

    @pytest.mark.parametrize('rows, expected', [
        ([[1, 5], [0, 0]], True),
        ([[4, 6], [-2, -3]], True),
        ([[0, 1], [0, 0]], False),
        ([[0, 0], [0, 0]], True),
        ([[1, 0], [0, 1]], True),
        ([[2, 0], [0, 0]], False),
    ])
    def test_is_idempotent(self, zz, rows, expected):
        assert is_idempotent(zz(rows)) == expected

    @pytest.mark.parametrize('args, rows', [
        ((2, 3, 2, -1), [[4, 6], [-2, -3]]),
        ((0, 1, 0, 1), [[0, 0], [0, 1]]),
        ((1, 0, 1, 0), [[1, 0], [0, 0]]),
    ])
    def test_slope_idempotent(self, zz, args, rows):
        assert slope_idempotent(*ints(*args)) == zz(rows)

    def test_slope_idempotent_needs_bezout_pair(self):
        with pytest.raises(BadBezoutPair):
            slope_idempotent(*ints(2, 3, 1, 1))

    def test_idempotent_params(self, zz):
        params = IdemParams(*ints(4, 6, -2))
        assert params.matrix() == zz([[4, 6], [-2, -3]])
        assert IdemParams.from_matrix(zz([[4, 6], [-2, -3]])).z == Z(-2)
        with pytest.raises(NotIdempotentPair):
            IdemParams(*ints(2, 1, 1))


class TestElementaryMatrices:

    def test_t_mat(self, zz):
        assert t_mat(Z(0)) == zz([[0, 1], [1, 0]])

    def test_elem_add(self, zz):
        assert elem_add(1, 2, Z(5)) == zz([[1, 5], [0, 1]])
        assert elem_add(2, 1, Z(5)) == zz([[1, 0], [5, 1]])
        with pytest.raises(ValueError):
            elem_add(1, 1, Z(5))

    def test_diag_needs_units(self):
        assert diag(Z(-1), Z(1)).det() == -1
        with pytest.raises(NotAUnit):
            diag(Z(2), Z(1))


class TestContinuants:

    @pytest.mark.parametrize('rs, expected', [
        ([], 1),
        ([7], 7),
        ([1, 1], 2),
        ([1, 2, 3], 10),
    ])
    def test_continuant(self, rs, expected):
        assert continuant(ints(*rs)) == expected

    def test_order_minus_one(self):
        assert continuant([], order=-1) == 0

    @pytest.mark.parametrize('rs, rows', [
        ([1, 1], [[2, 1], [1, 1]]),
        ([0, 0], [[1, 0], [0, 1]]),
        ([3], [[3, 1], [1, 0]]),
    ])
    def test_t_product(self, zz, rs, rows):
        assert t_product(ints(*rs)).product == zz(rows)

    def test_exhaustive_continuant_identity(self):
        for k in range(1, 6):
            for rs in itertools.product(range(5), repeat=k):
                result = t_product(ints(*rs))
                assert result.product == result.continuant_form == continuant_matrix(ints(*rs))

    def test_continuants_increase(self):
        # p_k > p_{k-1} for r_1 >= 0 and r_i > 0, except the tie p_3(0, r, 1) = p_2(0, r) = 1
        for k in range(2, 6):
            for rs in itertools.product(range(1, 5), repeat=k - 1):
                for r1 in range(0, 5):
                    values = ints(r1, *rs)
                    if k == 3 and r1 == 0 and rs[-1] == 1:
                        assert continuant(values) == continuant(values[:-1]) == Z(1)
                    else:
                        assert continuant(values) > continuant(values[:-1])
