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

"""
The golden corpus: named cases run in a fixed order, from the Int(Z)
witness and the worked examples to seeded random families. Every
certificate a case produces is serialized, read back and re-checked
by :func:`console.verification.verify_document`.
"""

import json
import logging
import os
import random
from collections import namedtuple

from django.conf import settings

from console.verification import verify_document
from curves.coordinate_ring import d
from curves.coordinate_ring import d_oracle
from curves.coordinate_ring import new_curve
from curves.independence import independence_cert
from curves.independence import verify_example_identity
from matrices.elementary import DiagUnits
from matrices.elementary import ElemCert
from matrices.elementary import TForm
from matrices.elementary import Transvection
from matrices.elementary import check_inequality
from matrices.elementary import factor_ge2_euclid
from matrices.elementary import tform_of_elementary_product
from matrices.elementary import tform_recover_int
from matrices.idempotents import check_rel
from matrices.idempotents import factor_id2
from matrices.idempotents import factor_top_row
from matrices.idempotents import invertibility_cert
from matrices.mat2 import Mat2
from obstruction.engine import Factored
from obstruction.engine import NotFactorable
from obstruction.engine import base_check
from obstruction.engine import check_obstruction
from obstruction.engine import decide_ge2_dor
from rings import intz
from rings.core import INTEGERS
from rings.core import RATIONAL_POLYS
from rings.errors import AlgebraError
from rings.errors import NotIntegerValued
from rings.errors import PointsAtInfinityRational
from rings.parsing import parse_ring
from rings.polynomials import RationalPoly

logger = logging.getLogger('idemfact.' + __name__)

WITNESS_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'witness.json')

CaseResult = namedtuple('CaseResult', ['name', 'ok', 'detail'])


class CorpusFailure(Exception):
    pass


def expect(condition, message):
    if not condition:
        raise CorpusFailure(message)


def round_trip(document):
    """
    Serializes a document, reads it back and verifies it.
    """
    check = verify_document(json.loads(json.dumps(document)))
    expect(check.ok, '%s does not verify: %s' % (document.get('kind'), '; '.join(check.reasons)))


def witness_matrix():
    with open(WITNESS_FILE, 'r') as f:
        doc = json.load(f)
    return Mat2.deserialize(doc, parse_ring(doc['ring']))


def integer_matrix(rows):
    return Mat2.from_rows(rows, INTEGERS)


### Worked examples ###

def case_witness(rng):
    M = witness_matrix()
    expect(M.det() == 1, 'det(witness) = %s' % M.det())
    expect(base_check(M) is None, 'the witness has a base shape')
    trace = decide_ge2_dor(M, 3)
    expect(isinstance(trace.verdict, NotFactorable), 'verdict %s' % trace.verdict.name)
    expect(not trace.tree.children, 'the refutation is not single-level')
    expect(check_obstruction(trace).ok, 'trace does not check')
    round_trip(trace.json())
    return 'not factorable, %d strata refuted' % len(trace.tree.candidates.strata)


def case_top_row(rng):
    factors = factor_top_row(INTEGERS(2), INTEGERS(3))
    expect(factors == [integer_matrix([[1, 1], [0, 0]]), integer_matrix([[4, 6], [-2, -3]])],
           'factors of (2, 3): %s' % factors)
    expect(check_rel(INTEGERS(2), INTEGERS(3), factors[-1]), 'slope relations fail')
    round_trip(invertibility_cert(INTEGERS(2), INTEGERS(3), factors[-1]).json())
    return '(2, 3) = (1, 1; 0, 0)(4, 6; -2, -3)'


def case_factor_id2(rng):
    for rows, count in (([[2, 3], [0, 0]], 2), ([[2, 2], [3, 3]], None), ([[0, 0], [0, 0]], 1)):
        cert = factor_id2(integer_matrix(rows))
        expect(count is None or len(cert.factors) == count,
               '%s has %d factors' % (rows, len(cert.factors)))
        round_trip(cert.json())
    return '3 matrices'


def case_factor_id2_polynomial(rng):
    x = RATIONAL_POLYS(RationalPoly([0, 1]))
    M = Mat2(x, x + 1, x * x, x * x + x)
    cert = factor_id2(M)
    round_trip(cert.json())
    return '%d factors' % len(cert.factors)


def case_elementary(rng):
    M = integer_matrix([[2, 1], [1, 1]])
    cert = factor_ge2_euclid(M)
    round_trip(cert.json())
    form = tform_of_elementary_product(cert)
    expect(form == TForm(INTEGERS(1), INTEGERS(1), [INTEGERS(1), INTEGERS(1)]), 'form %r' % form)
    expect(tform_recover_int(integer_matrix([[-3, 1], [1, 0]])).rs == [INTEGERS(-3)],
           'T(-3) is not its own form')
    return 'T(1)T(1), T(-3)'


def case_intz(rng):
    expect(intz.parse('X^2').coords == (0, 1, 2), 'X^2')
    try:
        intz.parse('X/2')
    except NotIntegerValued as e:
        expect(e.k == 1, 'X/2 fails at %d' % e.k)
    else:
        raise CorpusFailure('X/2 was accepted')
    return 'X^2 = binom[0, 1, 2]'


def case_curves(rng):
    report = independence_cert(new_curve('X^4 + Y^4 + 1'), samples=20, seed=rng.randint(0, 10 ** 6))
    expect(report.ge2_fails, report.conclusion())
    round_trip(report.json())
    expect(independence_cert(new_curve('X^2 + Y^2 + 1'), samples=20).ge2_fails, 'X^2 + Y^2 + 1')
    try:
        new_curve('Y^2 - X')
    except PointsAtInfinityRational:
        pass
    else:
        raise CorpusFailure('Y^2 - X was accepted')
    expect(verify_example_identity().holds, 'example identity')
    return 'quartic and conic reports'


### Seeded families ###

def _small(rng, bound=50):
    return rng.randint(-bound, bound)


def case_random_id2(rng):
    n = settings.CORPUS_SIZES['id2']
    for _ in range(n):
        v = [_small(rng, 1000), _small(rng, 1000)]
        w = [_small(rng, 1000), _small(rng, 1000)]
        M = integer_matrix([[v[0] * w[0], v[0] * w[1]], [v[1] * w[0], v[1] * w[1]]])
        round_trip(factor_id2(M).json())
    return '%d singular integer matrices' % n


def random_normal_form(rng, max_length=6, bound=5):
    k = rng.randint(0, max_length)
    alpha, beta = INTEGERS(rng.choice((1, -1))), INTEGERS(rng.choice((1, -1)))
    if k == 1:
        return TForm(alpha, beta, [INTEGERS(_small(rng, bound))])
    while True:
        rs = [rng.randint(0, bound)]
        rs += [rng.randint(1, bound) for _ in range(k - 2)]
        rs += [_small(rng, bound)]
        if k != 2 or rs != [0, 0]:
            return TForm(alpha, beta, [INTEGERS(r) for r in rs[:k]])


def case_random_tform(rng):
    n = settings.CORPUS_SIZES['tform']
    for _ in range(n):
        form = random_normal_form(rng)
        M = form.matrix()
        expect(tform_recover_int(M) == form, '%r is not recovered from %s' % (form, M))
        expect(check_inequality(form), 'remainder inequality fails for %r' % form)
        round_trip(dict({'kind': form.kind, 'ring': form.ring.json(), 'input': M.json()}, **form.json()))
    return '%d integer normal forms' % n


def case_random_curve(rng):
    n = settings.CORPUS_SIZES['curve']
    C = new_curve('X^4 + Y^4 + 1')
    for _ in range(n):
        z, w = C.random_element(rng, 2), C.random_element(rng, 2)
        expect(d(z * w) == d(z) + d(w), 'd is not additive on %s, %s' % (z, w))
        expect(d(z + w) <= max(d(z), d(w)), 'd(%s + %s) is too large' % (z, w))
        if not z.is_zero():
            expect(d_oracle(z) == d(z).value, 'zero count of %s disagrees with d' % z)
    return '%d pairs on %s' % (n, C)


def random_elementary_product(rng, length=8, bound=5):
    factors = []
    for _ in range(rng.randint(0, length)):
        i = rng.choice((1, 2))
        factors.append(Transvection(i, 3 - i, INTEGERS(rng.randint(-bound, bound))))
    if rng.random() < 0.5:
        factors.append(DiagUnits(INTEGERS(rng.choice((1, -1))), INTEGERS(rng.choice((1, -1)))))
    product = Mat2.identity(INTEGERS)
    for f in factors:
        product = product * f.matrix()
    return ElemCert(product, factors)


def case_random_elementary(rng):
    n = settings.CORPUS_SIZES['elementary']
    for _ in range(n):
        cert = random_elementary_product(rng)
        form = tform_of_elementary_product(cert)
        expect(form.matrix() == cert.input and form.is_normal(), 'bad form %r' % form)
        expect(form == tform_recover_int(cert.input), 'forms differ for %r' % cert.input)
        trace = decide_ge2_dor(cert.input, 64)
        expect(isinstance(trace.verdict, Factored) and trace.verdict.form == form,
               'obstruction search disagrees on %r' % cert.input)
    return '%d elementary products' % n


def case_random_intz(rng):
    n = settings.CORPUS_SIZES['intz']
    for _ in range(n):
        f, g, h = (intz.IntZPoly([_small(rng, 9) for _ in range(rng.randint(0, 3))]) for _ in range(3))
        expect(f * (g + h) == f * g + f * h, 'distributivity fails for %s, %s, %s' % (f, g, h))
        expect((f * g)(7) == f(7) * g(7), 'evaluation is not multiplicative for %s, %s' % (f, g))
    return '%d triples' % n


CASES = (
    ('witness', case_witness),
    ('top-row', case_top_row),
    ('factor-id2', case_factor_id2),
    ('factor-id2-polynomial', case_factor_id2_polynomial),
    ('elementary', case_elementary),
    ('intz', case_intz),
    ('curves', case_curves),
    ('random-id2', case_random_id2),
    ('random-tform', case_random_tform),
    ('random-elementary', case_random_elementary),
    ('random-intz', case_random_intz),
    ('random-curve', case_random_curve),
)


def run_corpus(seed=None):
    """
    Runs every case with its own generator seeded from `seed`, in the
    order of :data:`CASES`.
    """
    if seed is None:
        seed = settings.CORPUS_SEED
    results = []
    for index, (name, case) in enumerate(CASES):
        rng = random.Random(seed + index)
        try:
            detail = case(rng)
            results.append(CaseResult(name, True, detail))
        except (CorpusFailure, AlgebraError) as e:
            results.append(CaseResult(name, False, '%s: %s' % (type(e).__name__, e)))
        logger.info('corpus case %s: %s', name, 'pass' if results[-1].ok else 'FAIL')
    return results


def results_table(results):
    width = max(len(r.name) for r in results)
    lines = ['%s  %s  %s' % (r.name.ljust(width), 'pass' if r.ok else 'FAIL', r.detail)
             for r in results]
    passed = sum(1 for r in results if r.ok)
    lines.append('%d/%d cases passed' % (passed, len(results)))
    return '\n'.join(lines) + '\n'


def results_json(results):
    return {
        'kind': 'corpus-report',
        'cases': [{'name': r.name, 'ok': r.ok, 'detail': r.detail} for r in results],
        'passed': sum(1 for r in results if r.ok),
        'failed': sum(1 for r in results if not r.ok),
    }
