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
Factorization of singular 2x2 matrices over Euclidean domains into
idempotent factors, with certificates.

A singular matrix M = v w^T is first conjugated to the top-row form
(a b; 0 0). Any idempotent factorization of (a b; 0 0) ends with an
idempotent whose rows lie on the line through (a, b): with
(a, b) = g (a', b') and a' m + b' n = 1 this is

    E = (a' m, b' m; a' n, b' n),

and (a b; 0 0) = (p q; 0 0) E as soon as p m + q n = g. The descent
repeats this on (p, q) until a pair of the base table is reached.
"""

import logging
from collections import namedtuple

from django.conf import settings

from matrices.elementary import DiagUnits
from matrices.elementary import ElemCert
from matrices.elementary import Transvection
from matrices.mat2 import Mat2
from matrices.mat2 import is_idempotent
from matrices.mat2 import is_singular
from matrices.mat2 import mul
from matrices.mat2 import slope_idempotent
from rings.core import RingId
from rings.core import euclidean_divmod
from rings.core import euclidean_size
from rings.core import exact_quotient
from rings.core import gcd_bezout
from rings.core import inverse
from rings.errors import AlgebraError
from rings.errors import CheckResult
from rings.errors import DescentStalled
from rings.errors import InternalInvariantViolation
from rings.errors import NotEuclidean
from rings.errors import NotIdempotent
from rings.errors import NotSingular
from rings.errors import PreconditionViolated
from rings.errors import ZeroMatrix
from rings.parsing import element_from_json
from rings.parsing import element_json

logger = logging.getLogger('idemfact.' + __name__)


class DescentStep(object):
    """
    One step of the descent: the current pair, its gcd, the Bezout
    data of the emitted idempotent and the next pair.
    """
    def __init__(self, pair, g, bezout, chosen):
        self.pair = tuple(pair)
        self.g = g
        self.bezout = tuple(bezout)
        self.chosen = tuple(chosen)

    def __eq__(self, other):
        return (isinstance(other, DescentStep) and
                (self.pair, self.g, self.bezout, self.chosen) ==
                (other.pair, other.g, other.bezout, other.chosen))

    def __repr__(self):
        return '<DescentStep (%s, %s) -> (%s, %s)>' % (self.pair + self.chosen)

    def json(self):
        return {
            'pair': [element_json(e) for e in self.pair],
            'gcd': element_json(self.g),
            'bezout': [element_json(e) for e in self.bezout],
            'next': [element_json(e) for e in self.chosen],
        }

    @classmethod
    def deserialize(cls, rep, ring):
        read = lambda values: [element_from_json(v, ring) for v in values]
        return cls(read(rep['pair']), element_from_json(rep['gcd'], ring),
                   read(rep['bezout']), read(rep['next']))


class IdemCert(object):
    kind = 'idempotent-certificate'

    def __init__(self, input, factors, conjugator=None, conjugator_inverse=None,
                 transcript=None, conjugator_factors=None):
        self.input = input
        self.factors = list(factors)
        self.conjugator = conjugator
        self.conjugator_inverse = conjugator_inverse
        self.transcript = list(transcript or [])
        self.conjugator_factors = conjugator_factors

    def product(self):
        result = Mat2.identity(self.input.ring)
        for factor in self.factors:
            result = mul(result, factor)
        return result

    def top_row_input(self):
        """
        The conjugated input U M U^-1, which has a zero bottom row.
        """
        if self.conjugator is None:
            return self.input
        return mul(mul(self.conjugator, self.input), self.conjugator_inverse)

    def __repr__(self):
        return '<IdemCert %r: %d factors>' % (self.input, len(self.factors))

    def json(self):
        optional = lambda m: m.json() if m is not None else None
        return {
            'kind': self.kind,
            'input': self.input.json(),
            'factors': [f.json() for f in self.factors],
            'conjugator': optional(self.conjugator),
            'transcript': [s.json() for s in self.transcript],
            'conjugator_inverse': optional(self.conjugator_inverse),
            'conjugator_factors': [f.json() for f in self.conjugator_factors.factors]
                                  if self.conjugator_factors is not None else None,
        }

    @classmethod
    def deserialize(cls, rep, ring):
        optional = lambda m: Mat2.deserialize(m, ring) if m is not None else None
        conjugator = optional(rep.get('conjugator'))
        conjugator_factors = None
        if rep.get('conjugator_factors') is not None and conjugator is not None:
            conjugator_factors = ElemCert.deserialize(
                {'input': rep['conjugator'], 'factors': rep['conjugator_factors']}, ring)
        return cls(Mat2.deserialize(rep['input'], ring),
                   [Mat2.deserialize(f, ring) for f in rep['factors']],
                   conjugator,
                   optional(rep.get('conjugator_inverse')),
                   [DescentStep.deserialize(s, ring) for s in rep.get('transcript', [])],
                   conjugator_factors)


RankOne = namedtuple('RankOne', ['v', 'w', 'U', 'U_factors'])


def _require_euclidean(ring):
    if not ring.is_euclidean:
        raise NotEuclidean('%s has no Euclidean division' % ring)


def _is_positive(e):
    if e.ring.tag == RingId.INTEGER:
        return e.payload > 0
    return e.payload.leading_coefficient > 0


def rank_one_decompose(M):
    """
    Writes a nonzero singular M as v w^T with v primitive, and finds an
    elementary product U with U v = (1, 0)^T.

    :returns: a :class:`RankOne` (v, w, U, U_factors), U_factors being
        the :class:`ElemCert` of U
    """
    ring = M.ring
    _require_euclidean(ring)
    if M.is_zero():
        raise ZeroMatrix('the zero matrix has no rank one decomposition')
    if not is_singular(M):
        raise NotSingular('%r is not singular' % M)
    column = (M.a, M.c) if not (M.a.is_zero() and M.c.is_zero()) else (M.b, M.d)
    g = gcd_bezout(*column)[0]
    v = [exact_quotient(e, g) for e in column]
    i = 0 if not v[0].is_zero() else 1
    if not _is_positive(v[i]):
        v = [-e for e in v]
    w = [exact_quotient(M.rows[i][0], v[i]), exact_quotient(M.rows[i][1], v[i])]
    if Mat2(v[0] * w[0], v[0] * w[1], v[1] * w[0], v[1] * w[1]) != M:
        raise InternalInvariantViolation('%r is not v w^T for v=%s, w=%s' % (M, v, w))

    x, y = v
    ops = []
    while not y.is_zero():
        q = euclidean_divmod(x, y)[0]
        if not q.is_zero():
            x = x - q * y
            ops.append(Transvection(1, 2, -q))
        if x.is_zero():
            x = x + y
            ops.append(Transvection(1, 2, ring.one()))
        q = euclidean_divmod(y, x)[0]
        y = y - q * x
        ops.append(Transvection(2, 1, -q))
    if x != 1:
        ops.append(DiagUnits(inverse(x), ring.one()))
    U_factors = list(reversed(ops))
    U = Mat2.identity(ring)
    for op in U_factors:
        U = mul(U, op.matrix())
    if mul(U, Mat2(v[0], ring.zero(), v[1], ring.zero())) != Mat2(ring.one(), ring.zero(), ring.zero(), ring.zero()):
        raise InternalInvariantViolation('conjugator does not send %s to (1, 0)' % (v,))
    return RankOne(v, w, U, ElemCert(U, U_factors))


def _base_factors(a, b):
    """
    The base table of the descent, or None.
    """
    ring = a.ring
    zero, one = ring.zero(), ring.one()
    if a.is_zero() and b.is_zero():
        return [Mat2.zero(ring)]
    if a == 1:
        return [Mat2(one, b, zero, zero)]
    if b.is_zero():
        return [Mat2(one, one, zero, zero), Mat2(one, zero, a - 1, zero)]
    if a.is_zero():
        return [Mat2(one, b, zero, zero), Mat2(zero, zero, zero, one)]
    return None


def _measure(a, b):
    return euclidean_size(a) + euclidean_size(b)


def _descent_bezout(a, b):
    """
    (m, n) with a m + b n = 1 for a coprime pair with a, b nonzero.
    Over Z, m is the least positive inverse of a modulo |b|, shifted
    once more when that would make n vanish.
    """
    ring = a.ring
    if ring.tag != RingId.INTEGER:
        g, m, n = gcd_bezout(a, b)
        return m, n
    modulus = abs(b.payload)
    m = pow(a.payload % modulus, -1, modulus) if modulus > 1 else 0
    if m == 0:
        m = modulus
    if a.payload * m == 1:
        m += modulus
    n = exact_quotient(ring(1 - a.payload * m), b)
    return ring(m), n


def _transport(p0, q0, m, n):
    """
    The minimal member of the family (p0 + j n, q0 - j m): p = 1 if
    possible, then smallest p, smallest q, positive p.
    """
    ring = p0.ring
    if n.is_zero():
        j = euclidean_divmod(q0, m)[0]
        return p0, q0 - j * m
    if ring.tag == RingId.INTEGER:
        N = abs(n.payload)
        r0 = p0.payload % N
        ps = {r0, r0 - N}
        if (1 - p0.payload) % N == 0:
            ps.add(1)
        options = []
        for p in ps:
            j = exact_quotient(ring(p) - p0, n)
            options.append((ring(p), q0 - j * m))
        return min(options, key=lambda pq: (pq[0] != 1, abs(pq[0].payload),
                                            abs(pq[1].payload), pq[0].payload < 0))
    j, rest = euclidean_divmod(1 - p0, n)
    if rest.is_zero():
        return ring.one(), q0 - j * m
    j = euclidean_divmod(p0, n)[0]
    return p0 - j * n, q0 + j * m


def _bounded_search(a, b, depth):
    """
    Exhaustive search for (a b; 0 0) = (p q; 0 0) E_1 ... over integer
    idempotents with entries bounded by max(|a|, |b|).
    """
    base = _base_factors(a, b)
    if base is not None:
        return base
    if depth == 0:
        return None
    ring = a.ring
    bound = max(abs(a.payload), abs(b.payload))
    for x in range(-bound + 1, bound + 1):
        for y in range(-bound, bound + 1):
            if y == 0:
                continue
            z, rest = divmod(x * (1 - x), y)
            if rest or abs(z) > bound:
                continue
            for p in range(-bound, bound + 1):
                # p x + q z = a and p y + q (1 - x) = b
                if (1 - x) != 0:
                    q, rest = divmod(b.payload - p * y, 1 - x)
                else:
                    q, rest = divmod(a.payload - p * x, z) if z else (0, 1)
                if rest or abs(q) > bound:
                    continue
                if p * x + q * z != a.payload or p * y + q * (1 - x) != b.payload:
                    continue
                if abs(p) + abs(q) >= abs(a.payload) + abs(b.payload):
                    continue
                found = _bounded_search(ring(p), ring(q), depth - 1)
                if found is not None:
                    return found + [Mat2.from_rows([[x, y], [z, 1 - x]], ring)]
    return None


def descend(a, b):
    """
    Runs the descent on the top row (a, b).

    :returns: the list of idempotent factors and the transcript
    """
    ring = a.ring
    _require_euclidean(ring)
    steps = []
    tail = []
    while True:
        base = _base_factors(a, b)
        if base is not None:
            return base + list(reversed(tail)), steps
        g = gcd_bezout(a, b)[0]
        a1, b1 = exact_quotient(a, g), exact_quotient(b, g)
        m, n = _descent_bezout(a1, b1)
        E = slope_idempotent(a1, b1, m, n)
        p, q = _transport(a, b, m, n)
        if p * m + q * n != g:
            raise InternalInvariantViolation('transport (%s, %s) misses the gcd %s' % (p, q, g))
        steps.append(DescentStep((a, b), g, (m, n), (p, q)))
        tail.append(E)
        logger.debug('descent (%s, %s) -> (%s, %s) via %r', a, b, p, q, E)
        if _base_factors(p, q) is None and _measure(p, q) >= _measure(a, b):
            logger.warning('descent stalled at (%s, %s), trying bounded search', a, b)
            found = None
            if ring.tag == RingId.INTEGER:
                found = _bounded_search(a, b, settings.DESCENT_FALLBACK_DEPTH)
            if found is None:
                raise DescentStalled((a, b))
            steps.pop()
            tail.pop()
            return found + list(reversed(tail)), steps
        a, b = p, q


def factor_top_row(a, b):
    """
    Idempotents I_1, ..., I_k with I_1 ... I_k = (a b; 0 0).

    >>> from rings.core import INTEGERS
    >>> factor_top_row(INTEGERS(2), INTEGERS(3))
    [Mat2(Z, [[1, 1], [0, 0]]), Mat2(Z, [[4, 6], [-2, -3]])]
    """
    return descend(a, b)[0]


def factor_id2(M):
    """
    Idempotent factorization of a singular matrix over Z or Q[X].

    :returns: a verified :class:`IdemCert`
    """
    _require_euclidean(M.ring)
    if not is_singular(M):
        raise NotSingular('%r is not singular' % M)
    if M.is_zero() or is_idempotent(M):
        return IdemCert(M, [M])
    rank = rank_one_decompose(M)
    U, U_inv = rank.U, rank.U.inverse()
    top = mul(mul(U, M), U_inv)
    if not (top.c.is_zero() and top.d.is_zero()):
        raise InternalInvariantViolation('conjugation of %r left a nonzero bottom row' % M)
    factors, steps = descend(top.a, top.b)
    conjugated = [mul(mul(U_inv, F), U) for F in factors]
    cert = IdemCert(M, conjugated, U, U_inv, steps, rank.U_factors)
    check = verify_cert(cert)
    if not check:
        raise InternalInvariantViolation('fresh certificate fails: %s' % '; '.join(check.reasons))
    logger.debug('factored %r into %d idempotents', M, len(conjugated))
    return cert


def verify_cert(cert):
    """
    Re-multiplies the factors, re-tests each for idempotency and
    replays the descent transcript.

    :returns: a :class:`CheckResult` listing every failure
    """
    check = CheckResult()
    try:
        for idx, factor in enumerate(cert.factors):
            if not is_idempotent(factor):
                check.fail('factor %d not idempotent' % (idx + 1))
        if cert.product() != cert.input:
            check.fail('product mismatch')
        if cert.conjugator is not None:
            if (cert.conjugator_inverse is None or
                    mul(cert.conjugator, cert.conjugator_inverse) != Mat2.identity(cert.input.ring)):
                check.fail('conjugator not invertible')
                return check
            if cert.conjugator_factors is not None and not cert.conjugator_factors.verify():
                check.fail('conjugator factors do not multiply to the conjugator')
        if (cert.conjugator is None and not cert.transcript and cert.factors == [cert.input] and
                (cert.input.is_zero() or is_idempotent(cert.input))):
            return check
        top = cert.top_row_input()
        if not (top.c.is_zero() and top.d.is_zero()):
            check.fail('conjugated input is not a top row')
            return check
        factors, steps = descend(top.a, top.b)
        if cert.conjugator is not None:
            factors = [mul(mul(cert.conjugator_inverse, F), cert.conjugator) for F in factors]
        if steps != cert.transcript or factors != cert.factors:
            check.fail('transcript replay mismatch')
    except AlgebraError as e:
        check.fail('verification aborted: %s' % e)
    return check


def check_rel(a, b, tail):
    """
    Checks a y = b x and a (1 - x) = b z for the last factor
    (x y; z 1-x) of a factorization of (a b; 0 0).
    """
    if a.is_zero() or b.is_zero():
        raise PreconditionViolated('check_rel needs a and b nonzero')
    if not is_idempotent(tail) or tail.trace() != 1:
        raise NotIdempotent('%r is not an idempotent of trace 1' % tail)
    x, y, z, w = tail.entries
    if any(e.is_zero() for e in (x, y, z, w)):
        raise NotIdempotent('degenerate idempotent %r: x, y, z and 1 - x must be nonzero' % tail)
    return a * y == b * x and a * w == b * z


def solve_transport(a, b, tail):
    """
    Minimal (p, q) with (p q; 0 0) tail = (a b; 0 0), i.e.
    x p + z q = a and y p + (1 - x) q = b.
    """
    if not is_idempotent(tail) or tail.trace() != 1:
        raise NotIdempotent('%r is not an idempotent of trace 1' % tail)
    rank = rank_one_decompose(tail)
    i = 0 if not rank.w[0].is_zero() else 1
    try:
        scale = exact_quotient((a, b)[i], rank.w[i])
    except PreconditionViolated:
        raise PreconditionViolated('(%s, %s) is not in the row space of %r' % (a, b, tail))
    if (scale * rank.w[0], scale * rank.w[1]) != (a, b):
        raise PreconditionViolated('(%s, %s) is not in the row space of %r' % (a, b, tail))
    v1, v2 = rank.v
    g, s, t = gcd_bezout(v1, v2)
    p, q = _transport(scale * s * inverse(g), scale * t * inverse(g), v1, v2)
    zero = a.ring.zero()
    if mul(Mat2(p, q, zero, zero), tail) != Mat2(a, b, zero, zero):
        raise InternalInvariantViolation('transport solution (%s, %s) is wrong' % (p, q))
    return p, q


class IdealIdentityCert(object):
    """
    Certificate of (x, y)(1 - x, y) = yR for an idempotent pair: the
    four products, their quotients by y, and y as a combination of them.
    """
    kind = 'ideal-identity-certificate'

    def __init__(self, params, generators, quotients, coefficients):
        self.params = params
        self.generators = list(generators)
        self.quotients = list(quotients)
        self.coefficients = list(coefficients)

    def verify(self):
        check = CheckResult()
        x, y, z = self.params.x, self.params.y, self.params.z
        products = [x * (1 - x), x * y, y * (1 - x), y * y]
        if products[0] != y * z:
            check.fail('x(1 - x) differs from yz')
        if self.generators != [y * z] + products[1:]:
            check.fail('generators are not yz, xy, y(1 - x), y^2')
        for idx, (gen, quotient) in enumerate(zip(self.generators, self.quotients)):
            if y * quotient != gen:
                check.fail('generator %d is not y times its quotient' % (idx + 1))
        combination = y.ring.zero()
        for c, gen in zip(self.coefficients, self.generators):
            combination = combination + c * gen
        if combination != y:
            check.fail('combination does not evaluate to y')
        return check

    def json(self):
        return {
            'kind': self.kind,
            'pair': [element_json(e) for e in (self.params.x, self.params.y, self.params.z)],
            'generators': [element_json(e) for e in self.generators],
            'quotients': [element_json(e) for e in self.quotients],
            'coefficients': [element_json(e) for e in self.coefficients],
        }


def ideal_identity_cert(params):
    x, y, z = params.x, params.y, params.z
    zero, one = y.ring.zero(), y.ring.one()
    cert = IdealIdentityCert(params, [y * z, x * y, y * (1 - x), y * y],
                             [z, x, 1 - x, y], [zero, one, one, zero])
    check = cert.verify()
    if not check:
        raise InternalInvariantViolation('ideal identity fails: %s' % '; '.join(check.reasons))
    return cert


class InvertibilityCert(object):
    """
    Certificate that the ideal (a, b) is invertible:
    (a, b)(1 - x, y) = bR, read off the last factor (x y; z 1-x).
    """
    kind = 'invertibility-certificate'

    def __init__(self, a, b, tail, generators, quotients, coefficients):
        self.a, self.b, self.tail = a, b, tail
        self.generators = list(generators)
        self.quotients = list(quotients)
        self.coefficients = list(coefficients)

    def verify(self):
        check = CheckResult()
        a, b = self.a, self.b
        x, y, z, w = self.tail.entries
        if self.generators != [a * w, a * y, b * w, b * y]:
            check.fail('generators are not a(1 - x), ay, b(1 - x), by')
        for idx, (gen, quotient) in enumerate(zip(self.generators, self.quotients)):
            if b * quotient != gen:
                check.fail('generator %d is not b times its quotient' % (idx + 1))
        combination = b.ring.zero()
        for c, gen in zip(self.coefficients, self.generators):
            combination = combination + c * gen
        if combination != b:
            check.fail('combination does not evaluate to b')
        return check

    def json(self):
        return {
            'kind': self.kind,
            'pair': [element_json(self.a), element_json(self.b)],
            'tail': self.tail.json(),
            'generators': [element_json(e) for e in self.generators],
            'quotients': [element_json(e) for e in self.quotients],
            'coefficients': [element_json(e) for e in self.coefficients],
        }

    @classmethod
    def deserialize(cls, rep, ring):
        read = lambda values: [element_from_json(v, ring) for v in values]
        a, b = read(rep['pair'])
        return cls(a, b, Mat2.deserialize(rep['tail'], ring), read(rep['generators']),
                   read(rep['quotients']), read(rep['coefficients']))


def invertibility_cert(a, b, tail):
    if not check_rel(a, b, tail):
        raise PreconditionViolated('(%s, %s) does not lie on the slope of %r' % (a, b, tail))
    x, y, z, w = tail.entries
    zero, one = a.ring.zero(), a.ring.one()
    cert = InvertibilityCert(a, b, tail, [a * w, a * y, b * w, b * y],
                             [z, x, w, y], [zero, one, one, zero])
    check = cert.verify()
    if not check:
        raise InternalInvariantViolation('invertibility certificate fails: %s' % '; '.join(check.reasons))
    return cert
