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
Re-checks any document emitted by the command line, dispatching on
its `kind` field.
"""

import logging

from curves.coordinate_ring import new_curve
from curves.independence import independence_cert
from matrices.elementary import ElemCert
from matrices.elementary import TForm
from matrices.idempotents import IdemCert
from matrices.idempotents import InvertibilityCert
from matrices.idempotents import verify_cert
from matrices.mat2 import Mat2
from obstruction.engine import ObstructionTrace
from obstruction.engine import check_obstruction
from rings import intz
from rings.errors import AlgebraError
from rings.errors import CheckResult
from rings.errors import InputParseError
from rings.parsing import parse_ring

logger = logging.getLogger('idemfact.' + __name__)


def _ring_of(doc, *path):
    node = doc
    for key in path:
        node = node[key]
    return parse_ring(node)


def _verify_idempotent(doc):
    ring = _ring_of(doc, 'input', 'ring')
    return verify_cert(IdemCert.deserialize(doc, ring))


def _verify_elementary(doc):
    ring = _ring_of(doc, 'input', 'ring')
    return ElemCert.deserialize(doc, ring).verify()


def _verify_tform(doc):
    ring = parse_ring(doc['ring'])
    form = TForm.deserialize(doc, ring)
    check = form.check()
    if 'input' in doc and form.matrix() != Mat2.deserialize(doc['input'], ring):
        check.fail('form does not multiply to the input')
    return check


def _verify_obstruction(doc):
    ring = _ring_of(doc, 'root', 'ring')
    return check_obstruction(ObstructionTrace.deserialize(doc, ring))


def _verify_intz(doc):
    check = CheckResult()
    f = intz.IntZPoly(doc['binom'])
    if 'polynomial' in doc and intz.to_rational_poly(f) != intz.parse(doc['polynomial']).to_rational_poly():
        check.fail('binomial coordinates do not match the polynomial')
    return check


def _verify_curve_report(doc):
    check = CheckResult()
    curve = new_curve(doc['curve']['F'])
    fresh = independence_cert(curve, samples=doc['independence']['samples'],
                              degree=doc['independence']['max_degree'], seed=doc['seed'])
    if fresh.json() != doc:
        check.fail('report differs from a fresh computation')
    if not fresh.ge2_fails:
        check.fail('report is inconclusive')
    return check


def _verify_invertibility(doc):
    ring = parse_ring(doc['tail']['ring'])
    return InvertibilityCert.deserialize(doc, ring).verify()


VERIFIERS = {
    IdemCert.kind: _verify_idempotent,
    ElemCert.kind: _verify_elementary,
    TForm.kind: _verify_tform,
    ObstructionTrace.kind: _verify_obstruction,
    'intz': _verify_intz,
    'curve-report': _verify_curve_report,
    InvertibilityCert.kind: _verify_invertibility,
}


def verify_document(doc):
    """
    :returns: a :class:`CheckResult`; malformed documents raise
        :class:`InputParseError`
    """
    if not isinstance(doc, dict) or doc.get('kind') not in VERIFIERS:
        raise InputParseError('not a certificate document (kind %r)' %
                              (doc.get('kind') if isinstance(doc, dict) else None))
    try:
        check = VERIFIERS[doc['kind']](doc)
    except (KeyError, TypeError, ValueError) as e:
        raise InputParseError('malformed %s document: %s' % (doc['kind'], e))
    except InputParseError:
        raise
    except AlgebraError as e:
        check = CheckResult(['%s: %s' % (type(e).__name__, e)])
    logger.debug('verified %s: %r', doc['kind'], check)
    return check
