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

import pytest

import obstruction.engine
from console.corpus import random_elementary_product
from matrices.elementary import TForm
from matrices.elementary import tform_of_elementary_product
from matrices.mat2 import Mat2
from obstruction.engine import Factored
from obstruction.engine import NotFactorable
from obstruction.engine import ObstructionTrace
from obstruction.engine import Unknown
from obstruction.engine import admissible_rk
from obstruction.engine import base_check
from obstruction.engine import check_obstruction
from obstruction.engine import classify
from obstruction.engine import decide_ge2_dor
from rings.core import INTEGERS
from rings.core import INTZ
from rings.core import RATIONAL_POLYS
from rings.errors import InputParseError
from rings.errors import NotDiscretelyOrdered
from rings.errors import NotInvertible
from rings.errors import PreconditionViolated

Z = INTEGERS


def ints(*values):
    return [Z(v) for v in values]


def json_round_trip(trace):
    rep = json.loads(json.dumps(trace.json()))
    return ObstructionTrace.deserialize(rep, trace.root.ring)


def test_doctests():
    failures, tried = doctest.testmod(obstruction.engine)
    assert failures == 0


class TestAdmissibleCoefficients:

    @pytest.mark.parametrize('a, b, case, candidates', [
        (7, 3, 'i', [2]),
        (6, 3, 'i', [1, 2]),
        (3, 3, 'boundary', [0, 1]),
        (2, 3, 'ii', [0]),
        (-4, 3, 'iii', [-2]),
        (0, 3, 'iii', [-1, 0]),
    ])
    def test_integers(self, a, b, case, candidates):
        found = admissible_rk(Z(a), Z(b))
        assert found.case == case == classify(Z(a), Z(b))
        assert found.candidates == ints(*candidates)
        assert found.status == 'finite'
        assert not found.strata

    def test_comparisons(self):
        found = admissible_rk(Z(2), Z(3))
        assert found.comparisons == [
            {'left': 'a', 'right': 'b', 'relation': '<'},
            {'left': 'a', 'right': '0', 'relation': '>'},
            {'left': 'b', 'right': '0', 'relation': '>'},
        ]

    def test_witness_top_row_is_empty(self, witness):
        found = admissible_rk(witness.a, witness.b)
        assert found.status == 'empty'
        assert found.case == 'i'
        assert [s['kind'] for s in found.strata] == \
            ['top-not-cancelled', 'non-integral-quotient', 'degree-overflow']

    def test_constant_intz(self):
        found = admissible_rk(INTZ(7), INTZ(3))
        assert found.candidates == [INTZ(2)]

    def test_preconditions(self):
        with pytest.raises(PreconditionViolated):
            admissible_rk(Z(2), Z(0))
        with pytest.raises(PreconditionViolated):
            admissible_rk(Z(2), Z(-3))
        with pytest.raises(NotDiscretelyOrdered):
            admissible_rk(RATIONAL_POLYS(1), RATIONAL_POLYS(2))


class TestWitness:

    def test_determinant_and_shape(self, witness):
        assert witness.det() == 1
        assert base_check(witness) is None

    def test_not_factorable(self, witness):
        trace = decide_ge2_dor(witness, 3)
        assert isinstance(trace.verdict, NotFactorable)
        assert not trace.tree.children
        assert trace.tree.outcome == 'refuted'
        assert check_obstruction(trace)

    def test_verdict_is_logged(self, witness, caplog):
        with caplog.at_level('INFO', logger='idemfact'):
            decide_ge2_dor(witness, 3)
        assert 'not-factorable' in caplog.text

    def test_json_round_trip(self, witness):
        trace = decide_ge2_dor(witness, 3)
        again = json_round_trip(trace)
        assert again.json() == trace.json()
        assert check_obstruction(again)

    def test_flipped_comparison(self, witness):
        trace = decide_ge2_dor(witness, 3)
        trace.tree.candidates.comparisons[0]['relation'] = '<'
        check = check_obstruction(trace)
        assert not check
        assert 'node root: recorded comparisons do not hold' in check.reasons

    def test_invented_case(self, witness):
        trace = decide_ge2_dor(witness, 3)
        trace.tree.case = 'ii'
        assert not check_obstruction(trace)

    def test_dropped_strata(self, witness):
        trace = decide_ge2_dor(witness, 3)
        trace.tree.candidates.strata = trace.tree.candidates.strata[:1]
        assert 'node root: strata differ from recomputation' in check_obstruction(trace).reasons

    def test_wrong_verdict(self, witness):
        trace = decide_ge2_dor(witness, 3)
        trace.verdict = Unknown('made up')
        assert not check_obstruction(trace)


class TestDecision:

    @pytest.mark.parametrize('ring', [INTEGERS, INTZ])
    def test_fibonacci(self, ring):
        M = Mat2.from_rows([[2, 1], [1, 1]], ring)
        trace = decide_ge2_dor(M)
        assert isinstance(trace.verdict, Factored)
        assert trace.verdict.form == TForm(ring(1), ring(1), [ring(1), ring(1)])
        assert check_obstruction(trace)

    def test_identity(self):
        trace = decide_ge2_dor(Mat2.identity(INTZ))
        assert trace.verdict.form == TForm(INTZ(1), INTZ(1), [])
        assert trace.tree.case == 'base-k0'
        assert check_obstruction(trace)

    @pytest.mark.parametrize('rs', [[0, 2, 3], [1, 2, -3], [4, 1, 1, 0], [2, 5, 1, 7]])
    def test_known_forms(self, rs):
        form = TForm(Z(-1), Z(1), ints(*rs))
        trace = decide_ge2_dor(form.matrix(), 16)
        assert trace.verdict.form == form
        assert check_obstruction(trace)

    def test_corrupted_form(self, zz):
        trace = decide_ge2_dor(zz([[2, 1], [1, 1]]))
        trace.verdict = Factored(TForm(Z(1), Z(1), ints(2, 1)))
        check = check_obstruction(trace)
        assert 'reconstruction does not give the root' in check.reasons

    def test_corrupted_child(self, zz):
        trace = decide_ge2_dor(zz([[5, 3], [3, 2]]))
        r, child = trace.tree.children[-1]
        child.matrix = zz([[1, 0], [0, 1]])
        assert not check_obstruction(trace)

    def test_depth_limit(self):
        M = TForm(Z(1), Z(1), ints(1, 1, 1, 1, 1, 1)).matrix()
        trace = decide_ge2_dor(M, 2)
        assert isinstance(trace.verdict, Unknown)
        assert 'depth limit 2 reached' in trace.verdict.reason
        assert check_obstruction(trace)
        assert isinstance(decide_ge2_dor(M, 8).verdict, Factored)

    def test_default_depth_limit(self, settings):
        settings.OBSTRUCTION_DEPTH_LIMIT = 1
        M = TForm(Z(1), Z(1), ints(1, 1, 1, 1)).matrix()
        assert decide_ge2_dor(M).depth_limit == 1

    def test_preconditions(self, zz):
        with pytest.raises(NotInvertible):
            decide_ge2_dor(zz([[2, 0], [0, 1]]))
        with pytest.raises(PreconditionViolated):
            decide_ge2_dor(zz([[1, 0], [0, 1]]), 0)
        with pytest.raises(NotDiscretelyOrdered):
            decide_ge2_dor(Mat2.identity(RATIONAL_POLYS))

    def test_malformed_trace(self):
        with pytest.raises(InputParseError):
            ObstructionTrace.deserialize({'verdict': {'verdict': 'maybe'}}, Z)
        with pytest.raises(InputParseError):
            ObstructionTrace.deserialize({'root': []}, Z)

    @pytest.mark.slow
    def test_elementary_products_factor(self, rng):
        for _ in range(500):
            cert = random_elementary_product(rng)
            trace = decide_ge2_dor(cert.input, 64)
            assert isinstance(trace.verdict, Factored)
            assert trace.verdict.form == tform_of_elementary_product(cert)
            assert check_obstruction(json_round_trip(trace))
