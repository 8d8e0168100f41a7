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

import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.test import SimpleTestCase

from console.cli import EXIT_ALGEBRA_ERROR
from console.cli import EXIT_OK
from console.cli import EXIT_PARSE_ERROR
from console.cli import EXIT_REJECTED
from console.cli import render
from console.cli import run


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestFactoring:

    def test_factor_id2(self):
        code, doc = run(['factor-id2', '--ring', 'Z', '--matrix', '[[2, 3], [0, 0]]'])
        assert code == EXIT_OK
        assert doc['kind'] == 'idempotent-certificate'
        assert doc['factors'] == [
            {'ring': 'Z', 'rows': [[1, 1], [0, 0]]},
            {'ring': 'Z', 'rows': [[4, 6], [-2, -3]]},
        ]

    def test_factor_id2_base_case(self):
        code, doc = run(['factor-id2', '--ring', 'Z', '--matrix', '[[7, 0], [0, 0]]'])
        assert code == EXIT_OK
        assert doc['transcript'] == []
        assert doc['factors'] == [
            {'ring': 'Z', 'rows': [[1, 1], [0, 0]]},
            {'ring': 'Z', 'rows': [[1, 0], [6, 0]]},
        ]
        code, check = run(['verify', '--certificate', json.dumps(doc)])
        assert code == EXIT_OK
        assert check['ok']

    def test_ring_from_document(self):
        code, doc = run(['factor-id2', '--matrix', '{"ring": "Z", "rows": [[2, 2], [3, 3]]}'])
        assert code == EXIT_OK
        assert doc['input']['rows'] == [[2, 2], [3, 3]]

    def test_polynomial_ring(self):
        code, doc = run(['factor-id2', '--ring', 'Q[X]', '--matrix', '[["X", "X + 1"], ["X^2", "X^2 + X"]]'])
        assert code == EXIT_OK
        assert doc['input']['ring'] == 'Q[X]'

    def test_factor_id2_needs_singular(self):
        code, doc = run(['factor-id2', '--ring', 'Z', '--matrix', '[[2, 1], [1, 1]]'])
        assert code == EXIT_ALGEBRA_ERROR
        assert doc['error']['type'] == 'NotSingular'

    def test_factor_ge2(self):
        code, doc = run(['factor-ge2', '--ring', 'Z', '--matrix', '[[2, 1], [1, 1]]'])
        assert code == EXIT_OK
        assert doc['factors'] == [{'transvection': [1, 2, 1]}, {'transvection': [2, 1, 1]}]


class TestNormalForms:

    def test_tform_of_matrix(self):
        code, doc = run(['tform', '--ring', 'Z', '--matrix', '[[2, 1], [1, 1]]'])
        assert code == EXIT_OK
        assert doc == {
            'kind': 'tform',
            'ring': 'Z',
            'input': {'ring': 'Z', 'rows': [[2, 1], [1, 1]]},
            'alpha': 1,
            'beta': 1,
            'rs': [1, 1],
        }

    def test_tform_of_certificate(self, tmp_path):
        code, cert = run(['factor-ge2', '--ring', 'Z', '--matrix', '[[7, 5], [4, 3]]'])
        path = write_json(tmp_path, 'cert.json', cert)
        code, doc = run(['tform', '--certificate', path])
        assert code == EXIT_OK
        assert run(['tform', '--ring', 'Z', '--matrix', '[[7, 5], [4, 3]]'])[1] == doc

    def test_tform_over_intz(self):
        code, doc = run(['tform', '--ring', 'IntZ', '--matrix', '[[2, 1], [1, 1]]'])
        assert code == EXIT_OK
        assert doc['rs'] == [{'binom': [1]}, {'binom': [1]}]

    def test_tform_of_witness(self):
        code, doc = run(['tform', '--matrix', 'witness.json'])
        assert code == EXIT_ALGEBRA_ERROR
        assert 'not-factorable' in doc['error']['message']

    def test_tform_needs_input(self):
        assert run(['tform'])[0] == EXIT_PARSE_ERROR

    def test_obstruct_witness(self):
        code, doc = run(['obstruct', '--matrix', 'witness.json', '--depth', '3'])
        assert code == EXIT_OK
        assert doc['kind'] == 'obstruction-trace'
        assert doc['verdict'] == {'verdict': 'not-factorable'}
        assert doc['tree']['children'] == []

    def test_obstruct_depth_limit(self):
        code, doc = run(['obstruct', '--ring', 'Z', '--matrix', '[[13, 8], [8, 5]]', '--depth', '2'])
        assert code == EXIT_OK
        assert doc['verdict']['verdict'] == 'unknown'


class TestOtherVerbs:

    def test_intz_convert(self):
        code, doc = run(['intz-convert', '--poly', 'X^2'])
        assert code == EXIT_OK
        assert doc['kind'] == 'intz'
        assert doc['binom'] == [0, 1, 2]

    def test_intz_convert_not_integer_valued(self):
        code, doc = run(['intz-convert', '--poly', 'X/2'])
        assert code == EXIT_ALGEBRA_ERROR
        assert doc['error']['type'] == 'NotIntegerValued'

    def test_curve_report(self):
        code, doc = run(['curve-report', '--F', 'X^2 + Y^2 + 1', '--seed', '5'])
        assert code == EXIT_OK
        assert doc['ge2_fails'] is True
        assert doc['seed'] == 5

    def test_curve_rejected(self):
        code, doc = run(['curve-report', '--F', 'Y^2 - X'])
        assert code == EXIT_ALGEBRA_ERROR
        assert doc['error']['type'] == 'PointsAtInfinityRational'


class TestVerify:

    def test_accepts_fresh_certificate(self, tmp_path):
        code, cert = run(['factor-id2', '--ring', 'Z', '--matrix', '[[2, 2], [3, 3]]'])
        code, doc = run(['verify', '--certificate', write_json(tmp_path, 'cert.json', cert)])
        assert code == EXIT_OK
        assert doc == {'ok': True, 'reasons': []}

    def test_rejects_tampered_certificate(self, tmp_path):
        code, cert = run(['factor-id2', '--ring', 'Z', '--matrix', '[[2, 3], [0, 0]]'])
        cert['factors'][1]['rows'] = [[4, 6], [-2, -2]]
        code, doc = run(['verify', '--certificate', write_json(tmp_path, 'cert.json', cert)])
        assert code == EXIT_REJECTED
        assert 'factor 2 not idempotent' in doc['reasons']

    def test_inline_certificate(self):
        doc = json.dumps({'kind': 'intz', 'binom': [0, 1, 2], 'polynomial': 'X^2'})
        assert run(['verify', '--certificate', doc]) == (EXIT_OK, {'ok': True, 'reasons': []})

    def test_unknown_kind(self):
        assert run(['verify', '--certificate', '{"kind": "nope"}'])[0] == EXIT_PARSE_ERROR


class TestErrors:

    @pytest.mark.parametrize('argv', [
        [],
        ['frobnicate'],
        ['factor-id2', '--ring', 'Z'],
        ['factor-id2', '--ring', 'Z', '--matrix', '[[1, 2],'],
        ['factor-id2', '--ring', 'R', '--matrix', '[[1, 2], [3, 4]]'],
        ['factor-id2', '--matrix', '[[1, 2], [3, 4]]'],
        ['factor-id2', '--ring', 'Z', '--matrix', '[[1, 2, 3], [3, 4]]'],
        ['obstruct', '--ring', 'Z', '--matrix', '[[2, 1], [1, 1]]', '--depth', '0'],
    ])
    def test_parse_errors(self, argv):
        code, doc = run(argv)
        assert code == EXIT_PARSE_ERROR
        assert 'error' in doc

    def test_output_file(self, tmp_path):
        path = tmp_path / 'out.json'
        code, doc = run(['intz-convert', '--poly', 'X^2', '--output', str(path)])
        assert json.loads(path.read_text()) == doc


class ManagementCommandTest(SimpleTestCase):

    def test_prints_document(self):
        out = StringIO()
        call_command('idemfact', 'intz-convert', '--poly', 'X^2', stdout=out)
        self.assertEqual(json.loads(out.getvalue())['binom'], [0, 1, 2])

    def test_exit_code(self):
        out = StringIO()
        with self.assertRaises(SystemExit) as e:
            call_command('idemfact', 'factor-id2', '--ring', 'Z', '--matrix', '[[2, 1], [1, 1]]', stdout=out)
        self.assertEqual(e.exception.code, EXIT_ALGEBRA_ERROR)
        self.assertEqual(json.loads(out.getvalue())['error']['type'], 'NotSingular')

    def test_render(self):
        self.assertEqual(render('table\n'), 'table\n')
        self.assertEqual(render({'a': 1}), '{\n  "a": 1\n}\n')
