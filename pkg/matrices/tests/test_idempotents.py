# -*- encoding: utf-8 -*-

# Idemfact: exact factorization of 2x2 matrices over rings
# Copyright (C) 2019 The Idemfact developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU Affero General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301, USA.
#

import doctest
import json
import math

import pytest

import matrices.idempotents
from console.corpus import random_elementary_product
from matrices.elementary import factor_ge2_euclid
from matrices.elementary import tform_of_elementary_product
from matrices.elementary import tform_recover_int
from matrices.idempotents import DescentStep
from matrices.idempotents import IdemCert
from matrices.idempotents import InvertibilityCert
from matrices.idempotents import _bounded_search
from matrices.idempotents import check_rel
from matrices.idempotents import descend
from matrices.idempotents import factor_id2
from matrices.idempotents import factor_top_row
from matrices.idempotents import ideal_identity_cert
from matrices.idempotents import invertibility_cert
from matrices.idempotents import rank_one_decompose
from matrices.idempotents import solve_transport
from matrices.idempotents import verify_cert
from matrices.mat2 import IdemParams
from matrices.mat2 import Mat2
from matrices.mat2 import is_idempotent
from matrices.mat2 import mul
from matrices.mat2 import slope_idempotent
from rings.core import INTEGERS
from rings.core import INTZ
from rings.core import RATIONAL_POLYS
from rings.core import gcd_bezout
from rings.errors import NotEuclidean
from rings.errors import NotIdempotent
from rings.errors import NotSingular
from rings.errors import PreconditionViolated
from rings.errors import ZeroMatrix
from rings.parsing import parse_element

Z = INTEGERS


def ints(*values):
    return [Z(v) for v in values]


def poly(text):
    return parse_element(text, RATIONAL_POLYS)


def product(factors):
    result = Mat2.identity(factors[0].ring)
    for factor in factors:
        result = mul(result, factor)
    return result


def random_singular(rng, bound=1000):
    while True:
        v = [rng.randint(-bound, bound) for _ in range(2)]
        w = [rng.randint(-bound, bound) for _ in range(2)]
        if any(v) and any(w):
            return Mat2.from_rows([[v[0] * w[0], v[0] * w[1]], [v[1] * w[0], v[1] * w[1]]], Z)


def test_doctests():
    failures, tried = doctest.testmod(matrices.idempotents)
    assert failures == 0


class TestRankOne:

    def test_column_times_row(self, zz):
        rank = rank_one_decompose(zz([[2, 2], [3, 3]]))
        assert rank.v == ints(2, 3)
        assert rank.w == ints(1, 1)
        assert mul(rank.U, Mat2(Z(2), Z(0), Z(3), Z(0))) == zz([[1, 0], [0, 0]])
        assert rank.U_factors.verify()

    def test_top_row_needs_no_conjugation(self, zz):
        rank = rank_one_decompose(zz([[2, 3], [0, 0]]))
        assert rank.v == ints(1, 0)
        assert rank.w == ints(2, 3)
        assert rank.U.is_identity()

    def test_zero_first_column(self, zz):
        rank = rank_one_decompose(zz([[0, 4], [0, -6]]))
        assert rank.v == ints(2, -3)
        assert rank.w == ints(0, 2)

    def test_errors(self, zz):
        with pytest.raises(ZeroMatrix):
            rank_one_decompose(zz([[0, 0], [0, 0]]))
        with pytest.raises(NotSingular):
            rank_one_decompose(zz([[1, 0], [0, 1]]))


class TestDescent:

    def test_two_three(self, zz):
        factors, steps = descend(Z(2), Z(3))
        assert factors == [zz([[1, 1], [0, 0]]), zz([[4, 6], [-2, -3]])]
        assert steps == [DescentStep(ints(2, 3), Z(1), ints(2, -1), ints(1, 1))]

    def test_common_factor(self, zz):
        factors = factor_top_row(Z(4), Z(6))
        assert factors == [zz([[1, 0], [0, 0]]), zz([[4, 6], [-2, -3]])]

    @pytest.mark.parametrize('a, b, count', [
        (0, 0, 1),
        (1, 7, 1),
        (5, 0, 2),
        (0, 5, 2),
    ])
    def test_base_table(self, zz, a, b, count):
        factors, steps = descend(Z(a), Z(b))
        assert len(factors) == count
        assert not steps
        assert product(factors) == zz([[a, b], [0, 0]])
        assert all(is_idempotent(f) for f in factors)

    @pytest.mark.parametrize('a, b', [(7, 5), (-3, 8), (12, -18), (1000, 999), (-35, -14)])
    def test_factors_multiply_back(self, zz, a, b):
        factors = factor_top_row(Z(a), Z(b))
        assert product(factors) == zz([[a, b], [0, 0]])
        assert all(is_idempotent(f) for f in factors)

    def test_polynomial_top_row(self):
        a, b = poly('X'), poly('X + 1')
        factors, steps = descend(a, b)
        zero = a.ring.zero()
        assert product(factors) == Mat2(a, b, zero, zero)
        assert all(is_idempotent(f) for f in factors)
        assert steps[0].g == 1

    def test_needs_euclidean_ring(self):
        with pytest.raises(NotEuclidean):
            descend(INTZ(2), INTZ(3))


class TestBoundedSearch:

    def test_finds_a_factorization(self, zz):
        found = _bounded_search(Z(2), Z(3), 1)
        assert found is not None
        assert product(found) == zz([[2, 3], [0, 0]])
        assert all(is_idempotent(f) for f in found)

    def test_depth_zero(self):
        assert _bounded_search(Z(2), Z(3), 0) is None
        assert _bounded_search(Z(1), Z(3), 0) is not None


class TestFactorId2:

    def test_top_row(self, zz):
        cert = factor_id2(zz([[2, 3], [0, 0]]))
        assert cert.factors == [zz([[1, 1], [0, 0]]), zz([[4, 6], [-2, -3]])]
        assert verify_cert(cert)

    def test_conjugated(self, zz):
        M = zz([[2, 2], [3, 3]])
        cert = factor_id2(M)
        assert cert.product() == M
        assert all(is_idempotent(f) for f in cert.factors)
        assert cert.top_row_input().c.is_zero()

    @pytest.mark.parametrize('rows', [
        [[0, 0], [0, 0]],
        [[1, 0], [0, 0]],
        [[4, 6], [-2, -3]],
    ])
    def test_idempotent_input(self, zz, rows):
        cert = factor_id2(zz(rows))
        assert cert.factors == [zz(rows)]
        assert verify_cert(cert)

    @pytest.mark.parametrize('rows', [
        [[7, 0], [0, 0]],
        [[-3, 0], [0, 0]],
        [[0, 7], [0, 0]],
        [[0, 0], [7, 0]],
    ])
    def test_base_case_after_conjugation(self, zz, rows):
        # the descent ends in the base table at once and records no step
        M = zz(rows)
        cert = factor_id2(M)
        assert not cert.transcript
        assert cert.product() == M
        assert all(is_idempotent(f) for f in cert.factors)
        assert verify_cert(cert)
        again = IdemCert.deserialize(json.loads(json.dumps(cert.json())), Z)
        assert verify_cert(again)

    def test_base_case_factors_are_replayed(self, zz):
        cert = factor_id2(zz([[7, 0], [0, 0]]))
        cert.factors = [cert.input]
        check = verify_cert(cert)
        assert 'transcript replay mismatch' in check.reasons

    @pytest.mark.parametrize('rows', [
        [['-2*X^2 + 4*X - 4', 0], [0, 0]],
        [[0, 0], ['9*X - 9', 0]],
        [[0, 'X + 1'], [0, 'X^2 - 1']],
    ])
    def test_polynomial_zero_column(self, rows):
        M = Mat2.from_rows([[poly(str(e)) for e in row] for row in rows], RATIONAL_POLYS)
        cert = factor_id2(M)
        assert cert.product() == M
        assert verify_cert(cert)

    def test_not_singular(self, zz):
        with pytest.raises(NotSingular):
            factor_id2(zz([[2, 1], [1, 1]]))

    def test_polynomial_matrix(self):
        x = poly('X')
        M = Mat2(x, x + 1, x * x, x * x + x)
        cert = factor_id2(M)
        assert cert.product() == M
        assert verify_cert(cert)

    @pytest.mark.slow
    def test_random_singular_matrices(self, rng):
        for _ in range(1000):
            M = random_singular(rng)
            cert = factor_id2(M)
            assert cert.product() == M
            assert all(is_idempotent(f) for f in cert.factors)
            assert verify_cert(cert)


class TestVerification:

    def test_perturbed_factor(self, zz):
        cert = factor_id2(zz([[2, 3], [0, 0]]))
        cert.factors[1] = zz([[4, 6], [-2, -2]])
        check = verify_cert(cert)
        assert not check
        assert 'factor 2 not idempotent' in check.reasons
        assert 'product mismatch' in check.reasons

    def test_reordered_factors(self, zz):
        cert = factor_id2(zz([[2, 3], [0, 0]]))
        cert.factors.reverse()
        assert 'product mismatch' in verify_cert(cert).reasons

    def test_bad_conjugator(self, zz):
        cert = factor_id2(zz([[2, 2], [3, 3]]))
        cert.conjugator_inverse = Mat2.identity(Z)
        assert 'conjugator not invertible' in verify_cert(cert).reasons

    def test_tampered_transcript(self, zz):
        cert = factor_id2(zz([[7, 5], [0, 0]]))
        step = cert.transcript[0]
        cert.transcript[0] = DescentStep(step.pair, step.g, step.bezout, ints(0, 0))
        assert 'transcript replay mismatch' in verify_cert(cert).reasons

    def test_json_round_trip(self, zz):
        cert = factor_id2(zz([[2, 2], [3, 3]]))
        rep = json.loads(json.dumps(cert.json()))
        assert rep['kind'] == 'idempotent-certificate'
        again = IdemCert.deserialize(rep, Z)
        assert again.json() == cert.json()
        assert verify_cert(again)


class TestRelations:

    def test_slope_relations(self, zz):
        assert check_rel(Z(2), Z(3), zz([[4, 6], [-2, -3]]))
        assert not check_rel(Z(2), Z(5), zz([[4, 6], [-2, -3]]))

    def test_last_factor_of_every_descent(self, rng):
        # the last idempotent of a factorization lies on the slope of (a, b)
        for _ in range(200):
            a, b = rng.randint(-500, 500), rng.randint(-500, 500)
            if a == 0 or b == 0:
                continue
            factors, steps = descend(Z(a), Z(b))
            if steps:
                assert check_rel(Z(a), Z(b), factors[-1])

    def test_preconditions(self, zz):
        with pytest.raises(PreconditionViolated):
            check_rel(Z(0), Z(3), zz([[4, 6], [-2, -3]]))
        with pytest.raises(NotIdempotent):
            check_rel(Z(2), Z(3), zz([[1, 5], [0, 0]]))
        with pytest.raises(NotIdempotent):
            check_rel(Z(2), Z(3), zz([[2, 1], [1, 1]]))

    def test_solve_transport(self, zz):
        assert solve_transport(Z(2), Z(3), zz([[4, 6], [-2, -3]])) == (Z(1), Z(1))
        with pytest.raises(PreconditionViolated):
            solve_transport(Z(2), Z(5), zz([[4, 6], [-2, -3]]))

    def test_solve_transport_random(self, rng):
        for _ in range(100):
            a, b = rng.randint(1, 300), rng.randint(1, 300)
            g, s, t = gcd_bezout(Z(a), Z(b))
            a1, b1 = a // g.payload, b // g.payload
            m, n = gcd_bezout(Z(a1), Z(b1))[1:]
            tail = slope_idempotent(Z(a1), Z(b1), m, n)
            p, q = solve_transport(Z(a), Z(b), tail)
            assert mul(Mat2(p, q, Z(0), Z(0)), tail) == Mat2(Z(a), Z(b), Z(0), Z(0))


class TestIdealCertificates:

    def test_ideal_identity(self):
        cert = ideal_identity_cert(IdemParams(*ints(4, 6, -2)))
        assert cert.verify()
        assert cert.json()['generators'] == [-12, 24, -18, 36]

    def test_random_idempotents(self, rng):
        for _ in range(200):
            a, b = rng.randint(-100, 100), rng.randint(1, 100)
            g, m, n = gcd_bezout(Z(a), Z(b))
            if g != 1:
                continue
            E = slope_idempotent(Z(a), Z(b), m, n)
            assert ideal_identity_cert(IdemParams.from_matrix(E)).verify()

    def test_invertibility(self, zz):
        tail = zz([[4, 6], [-2, -3]])
        cert = invertibility_cert(Z(2), Z(3), tail)
        assert cert.verify()
        again = InvertibilityCert.deserialize(json.loads(json.dumps(cert.json())), Z)
        assert again.verify()
        again.coefficients = ints(1, 1, 0, 0)
        assert 'combination does not evaluate to b' in again.verify().reasons

    def test_invertibility_off_slope(self, zz):
        with pytest.raises(PreconditionViolated):
            invertibility_cert(Z(2), Z(5), zz([[4, 6], [-2, -3]]))


class TestSingularCorpus:
    """
    Invariants checked on the seeded corpus of singular matrices with
    entries up to 10^6.
    """

    @pytest.fixture
    def corpus(self, rng):
        matrices = [random_singular(rng) for _ in range(1000)]
        return [factor_id2(M) for M in matrices if not is_idempotent(M)]

    @pytest.mark.slow
    def test_descent_depth(self, corpus):
        worst = (0, None)
        for cert in corpus:
            top = cert.top_row_input()
            size = max(abs(top.a.payload), abs(top.b.payload), 1)
            steps = len(cert.transcript)
            assert steps <= 2 * math.log2(size) + 4, (top.a, top.b, steps)
            worst = max(worst, (steps, str(top)), key=lambda w: w[0])
        # the corpus does reach the descent, not only the base table
        assert worst[0] >= 2, worst

    @pytest.mark.slow
    def test_conjugators_are_elementary(self, corpus):
        for cert in corpus:
            U = cert.conjugator
            assert cert.conjugator_factors.verify()
            assert factor_ge2_euclid(U).verify()
            form = tform_recover_int(U)
            assert form.matrix() == U
            assert form.is_normal()
            assert tform_of_elementary_product(cert.conjugator_factors) == form

    @pytest.mark.slow
    def test_conjugation_closure(self, corpus, rng):
        for cert in corpus:
            P = random_elementary_product(rng).input
            P_inv = P.inverse()
            conjugated = [mul(mul(P, F), P_inv) for F in cert.factors]
            assert all(is_idempotent(F) for F in conjugated)
            assert product(conjugated) == mul(mul(P, cert.input), P_inv)
