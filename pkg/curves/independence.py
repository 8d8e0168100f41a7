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
Why GE2 fails for the coordinate ring R of a curve accepted by
:func:`curves.coordinate_ring.new_curve`.

The units of R are the nonzero constants, d(x) = d(y) = n, and (x, y)
is the first row of an invertible matrix. For any z with d(z) > 0,
d(x + yz) = d(y) + d(z) > d(x) and symmetrically, while for a
constant z the representative X + zY keeps degree 1. So x and y are
R-independent, and an R-independent unimodular row cannot be reduced
by elementary operations.
"""

import logging
import random

from django.conf import settings

from curves.coordinate_ring import X
from curves.coordinate_ring import Y
from curves.coordinate_ring import as_poly
from curves.coordinate_ring import d
from curves.coordinate_ring import d_oracle
from curves.coordinate_ring import format_poly
from curves.coordinate_ring import is_unit
from curves.coordinate_ring import new_curve
from matrices.mat2 import Mat2
from rings.core import RingElem
from rings.errors import InternalInvariantViolation
from rings.errors import OriginOnCurve
from rings.errors import PreconditionViolated
from rings.errors import WrongCurve

logger = logging.getLogger('idemfact.' + __name__)

EXAMPLE_CURVE = 'X^4 + Y^4 + 1'


def coordinate_regular_row(curve):
    """
    The invertible matrix (x, y; -B/c, A/c) where F = F(0,0) + X A + Y B,
    every monomial divisible by X going to A, and c = -F(0,0).

    >>> from curves.coordinate_ring import new_curve
    >>> str(coordinate_regular_row(new_curve('X^4 + Y^4 + 1')))
    '(X, Y; Y^3, -X^3)'
    """
    c0 = curve.F.coeff_monomial(1)
    if c0 == 0:
        raise OriginOnCurve('%s passes through the origin' % curve)
    A = sum(coeff * X ** (i - 1) * Y ** j for (i, j), coeff in curve.F.terms() if i >= 1)
    B = sum(coeff * Y ** (j - 1) for (i, j), coeff in curve.F.terms() if i == 0 and j >= 1)
    c = -c0
    ring = curve.ring
    M = Mat2(curve.x, curve.y, RingElem(ring, as_poly(-B / c)), RingElem(ring, as_poly(A / c)))
    if M.det() != 1:
        raise InternalInvariantViolation('regular row matrix %s has determinant %s' % (M, M.det()))
    return M


class CurveReport(object):
    """
    The four facts behind the failure of GE2, each with the data that
    was checked.
    """
    kind = 'curve-report'

    def __init__(self, curve, units, degrees, regular_row, independence, seed=None):
        self.curve = curve
        self.seed = seed
        self.units = units
        self.degrees = degrees
        self.regular_row = regular_row
        self.independence = independence

    @property
    def ge2_fails(self):
        return (self.units['holds'] and self.degrees['holds'] and
                self.independence['holds'] and self.regular_row is not None)

    def conclusion(self):
        if self.ge2_fails:
            return ('x and y are R-independent and form a unimodular row, '
                    'so GE2 fails for the coordinate ring of %s' % self.curve)
        return 'inconclusive for %s' % self.curve

    def json(self):
        return {
            'kind': self.kind,
            'curve': self.curve.json(),
            'n': self.curve.n,
            'seed': self.seed,
            'mu': str(self.curve.mu.as_expr()).replace('**', '^'),
            'smooth': self.curve.smooth,
            'units': self.units,
            'degrees': self.degrees,
            'regular_row': self.regular_row.json() if self.regular_row is not None else None,
            'independence': self.independence,
            'ge2_fails': self.ge2_fails,
            'conclusion': self.conclusion(),
        }


def _independence_samples(curve, rng, samples, degree):
    x, y = curve.x, curve.y
    dx, dy = d(x), d(y)
    failures = []
    checked = constants = 0
    for _ in range(samples):
        z = curve.random_element(rng, degree)
        if z.is_zero():
            continue
        for first, second, d_first, d_second in ((x, y, dx, dy), (y, x, dy, dx)):
            value = d(first + second * z)
            if is_unit(z):
                constants += 1
                ok = value == d_first
            else:
                checked += 1
                ok = value == d_second + d(z) and value > d_first
            if not ok:
                failures.append('d(%s + (%s)(%s)) = %s' % (first, second, z, value))
    return {
        'samples': samples,
        'max_degree': degree,
        'nonconstant_checks': checked,
        'constant_checks': constants,
        'failures': failures,
    }


def independence_cert(curve, samples=100, degree=3, seed=None):
    """
    Builds the :class:`CurveReport` of a curve of degree at least 2.
    """
    if curve.n < 2:
        raise PreconditionViolated('independence needs a curve of degree at least 2')
    if seed is None:
        seed = settings.CORPUS_SEED
    rng = random.Random(seed)

    unit_checks = []
    for _ in range(samples):
        z = curve.random_element(rng, degree)
        unit_checks.append(is_unit(z) == (z.payload.is_constant() and not z.is_zero()))
    units = {
        'statement': 'R* = Q*',
        'route': 'a unit has d = 0, and d = 0 only on nonzero constants',
        'samples': len(unit_checks),
        'holds': all(unit_checks),
    }

    dx, dy = d(curve.x), d(curve.y)
    oracle_x, oracle_y = d_oracle(curve.x), d_oracle(curve.y)
    if (oracle_x, oracle_y) != (dx.value, dy.value):
        logger.warning('degree oracle disagrees on %s: %s, %s', curve, oracle_x, oracle_y)
    degrees = {
        'd_x': dx.json(),
        'd_y': dy.json(),
        'oracle_x': oracle_x,
        'oracle_y': oracle_y,
        'holds': dx == dy == curve.n and (oracle_x, oracle_y) == (curve.n, curve.n),
    }

    regular_row = coordinate_regular_row(curve)

    independence = _independence_samples(curve, rng, samples, degree)
    independence['rule'] = 'd(x + yz) = d(y) + d(z) > d(x) when d(z) > 0; d(x + cy) = d(x) for constants c'
    independence['holds'] = not independence['failures']

    report = CurveReport(curve, units, degrees, regular_row, independence, seed)
    logger.info('curve report for %s: GE2 fails = %s', curve, report.ge2_fails)
    return report


class ExampleIdentity(object):
    """
    (x^2 + y^2 - 1)(x^2 + y^2 + 1) = 2(xy - 1)(xy + 1) on x^4 + y^4 + 1,
    two factorizations into nonunits.
    """
    kind = 'example-identity'

    def __init__(self, difference, polynomial_difference, factors):
        self.difference = difference
        self.polynomial_difference = polynomial_difference
        self.factors = factors

    @property
    def holds(self):
        return self.difference.is_zero() and all(f['nonunit'] for f in self.factors)

    def __bool__(self):
        return self.holds

    def json(self):
        return {
            'kind': self.kind,
            'difference': str(self.difference),
            'polynomial_difference': format_poly(self.polynomial_difference),
            'unit_factor': '2',
            'factors': self.factors,
            'holds': self.holds,
        }


def verify_example_identity(curve=None):
    curve = curve or new_curve(EXAMPLE_CURVE)
    if curve != new_curve(EXAMPLE_CURVE):
        raise WrongCurve('the identity lives on %s, not on %s' % (EXAMPLE_CURVE, curve))
    left = [X ** 2 + Y ** 2 - 1, X ** 2 + Y ** 2 + 1]
    right = [X * Y - 1, X * Y + 1]
    polynomial_difference = as_poly(left[0] * left[1] - 2 * right[0] * right[1])
    elements = [RingElem(curve.ring, f) for f in left + right]
    difference = elements[0] * elements[1] - 2 * elements[2] * elements[3]
    factors = [{'factor': str(e), 'd': d(e).json(), 'nonunit': not is_unit(e)} for e in elements]
    return ExampleIdentity(difference, polynomial_difference, factors)
