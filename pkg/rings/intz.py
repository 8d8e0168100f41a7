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
The ring Int(Z) of integer-valued polynomials.

Elements are stored by their integer coordinates in the binomial basis
C(X,0), C(X,1), ..., C(X,n). The ring is discretely ordered: f > 0 iff
its leading coordinate is positive.

>>> f = IntZPoly([1, 2])
>>> str(f * f)
'binom[1, 8, 8]'
>>> compare(IntZPoly([1, 2]), IntZPoly([4]))
1
"""

import logging
from fractions import Fraction
from functools import cmp_to_key
from math import ceil
from math import comb
from math import floor

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from rings.errors import InputParseError
from rings.errors import InternalInvariantViolation
from rings.errors import NotIntegerValued
from rings.errors import PreconditionViolated
from rings.polynomials import RationalPoly
from rings.polynomials import binomial_basis

logger = logging.getLogger('idemfact.' + __name__)


class IntZPoly(object):
    __slots__ = ('coords',)

    def __init__(self, coords=()):
        coords = list(coords)
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError('binomial coordinates must be integers, got %r' % (c,))
        while coords and coords[-1] == 0:
            coords.pop()
        self.coords = tuple(coords)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def degree(self):
        return len(self.coords) - 1

    @property
    def leading(self):
        return self.coords[-1] if self.coords else 0

    def coordinate(self, k):
        if 0 <= k < len(self.coords):
            return self.coords[k]
        return 0

    def is_zero(self):
        return not self.coords

    def is_unit(self):
        return is_unit(self)

    def sign(self):
        if not self.coords:
            return 0
        return 1 if self.coords[-1] > 0 else -1

    def __eq__(self, other):
        if isinstance(other, IntZPoly):
            return self.coords == other.coords
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coords == IntZPoly.constant(other).coords
        return NotImplemented

    def __hash__(self):
        return hash(('IntZ', self.coords))

    def __add__(self, other):
        return add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(_lift(other)))

    def __rsub__(self, other):
        return add(_lift(other), neg(self))

    def __mul__(self, other):
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __call__(self, n):
        """
        Value at the integer n.
        """
        total = 0
        for k, c in enumerate(self.coords):
            total += c * _binom_at(n, k)
        return total

    def to_rational_poly(self):
        result = RationalPoly()
        for k, c in enumerate(self.coords):
            if c:
                result = result + binomial_basis(k) * c
        return result

    def __str__(self):
        return 'binom[%s]' % ', '.join(str(c) for c in self.coords)

    def __repr__(self):
        return 'IntZPoly(%s)' % str(self)

    def json(self):
        return {'binom': list(self.coords)}


def _lift(value):
    if isinstance(value, IntZPoly):
        return value
    return IntZPoly.constant(value)


def _binom_at(n, k):
    """
    C(n, k) for any integer n, using C(n, k) = (-1)^k C(k - n - 1, k)
    for negative n.
    """
    if n < 0:
        return (-1) ** k * comb(k - n - 1, k)
    return comb(n, k)


def binomial_coordinates(f):
    """
    Coordinates of a rational polynomial in the binomial basis,
    as fractions: a_k is the k-th finite difference of f at 0.
    """
    values = [f(j) for j in range(len(f.coeffs))]
    coords = []
    for k in range(len(values)):
        coords.append(sum((-1) ** (k - j) * comb(k, j) * values[j] for j in range(k + 1)))
    return coords


def from_rational_poly(f):
    """
    Converts an integer-valued rational polynomial.

    :param f: a :class:`RationalPoly`
    :returns: the :class:`IntZPoly` with the same values
    :raises NotIntegerValued: at the first non-integral coordinate

    >>> from_rational_poly(RationalPoly([0, 0, 1]))
    IntZPoly(binom[0, 1, 2])
    >>> from_rational_poly(RationalPoly([0, Fraction(1, 2)]))
    Traceback (most recent call last):
    ...
    rings.errors.NotIntegerValued: not integer-valued: coordinate 1 is 1/2
    """
    coords = []
    for k, a in enumerate(binomial_coordinates(f)):
        if a.denominator != 1:
            raise NotIntegerValued(k, a)
        coords.append(int(a))
    result = IntZPoly(coords)
    if result.to_rational_poly() != f:
        raise InternalInvariantViolation('binomial conversion of %s does not round-trip' % f)
    return result


def to_rational_poly(f):
    return f.to_rational_poly()


def add(f, g):
    n = max(len(f.coords), len(g.coords))
    return IntZPoly([f.coordinate(k) + g.coordinate(k) for k in range(n)])


def neg(f):
    return IntZPoly([-c for c in f.coords])


def _crosscheck_enabled():
    try:
        return getattr(settings, 'INTZ_CROSSCHECK_PRODUCTS', False)
    except ImproperlyConfigured:
        return False


def binomial_product(f, g):
    """
    Product computed in the binomial basis directly, with
    C(X,m)C(X,n) = sum_k (m+n-k)!/(k!(m-k)!(n-k)!) C(X, m+n-k).
    """
    if f.is_zero() or g.is_zero():
        return IntZPoly()
    coords = [0] * (len(f.coords) + len(g.coords) - 1)
    for m, a in enumerate(f.coords):
        if not a:
            continue
        for n, b in enumerate(g.coords):
            if not b:
                continue
            for k in range(min(m, n) + 1):
                coords[m + n - k] += a * b * comb(m + n - k, m) * comb(m, k)
    return IntZPoly(coords)


def mul(f, g):
    if f.is_zero() or g.is_zero():
        return IntZPoly()
    product = from_rational_poly(f.to_rational_poly() * g.to_rational_poly())
    expected_leading = f.leading * g.leading * comb(f.degree + g.degree, f.degree)
    if product.degree != f.degree + g.degree or product.leading != expected_leading:
        raise InternalInvariantViolation(
            'leading coordinate of %s * %s is %s, expected %s' % (f, g, product.leading, expected_leading))
    if _crosscheck_enabled():
        direct = binomial_product(f, g)
        if direct != product:
            raise InternalInvariantViolation(
                'binomial product %s disagrees with %s for %s * %s' % (direct, product, f, g))
    return product


def compare(f, g):
    """
    Returns -1, 0 or 1 as f < g, f == g or f > g: the sign of the
    leading coordinate of f - g.
    """
    return add(f, neg(g)).sign()


def is_unit(f):
    return f.coords in ((1,), (-1,))


def parse(text):
    """
    Reads ``binom[a0, ..., an]`` or any rational polynomial in X.

    >>> parse('binom[0, 1, 2]')
    IntZPoly(binom[0, 1, 2])
    >>> parse('X^2')
    IntZPoly(binom[0, 1, 2])
    """
    text = text.strip()
    if text.startswith('binom'):
        body = text[len('binom'):].strip()
        if not (body.startswith('[') and body.endswith(']')):
            raise InputParseError('malformed binomial coordinates %r' % text)
        inner = body[1:-1].strip()
        if not inner:
            return IntZPoly()
        try:
            return IntZPoly(int(c) for c in inner.split(','))
        except ValueError:
            raise InputParseError('binomial coordinates must be integers: %r' % text)
    return from_rational_poly(RationalPoly.parse(text))


class Stratum(object):
    """
    The candidates r of one degree range in the search for
    0 <= a - b*r <= b, or the reason the range holds none.
    """
    RESOLVED = 'resolved'
    REFUTED = 'refuted'

    def __init__(self, low, high, status, kind, candidates=(), evidence=None):
        self.low = low
        self.high = high  # None: unbounded above
        self.status = status
        self.kind = kind
        self.candidates = list(candidates)
        self.evidence = evidence or {}

    def __eq__(self, other):
        return isinstance(other, Stratum) and self.json() == other.json()

    def __repr__(self):
        return '<Stratum %s..%s %s (%s)>' % (self.low, self.high, self.status, self.kind)

    def json(self):
        return {
            'degrees': [self.low, self.high],
            'status': self.status,
            'kind': self.kind,
            'candidates': [c.json() for c in self.candidates],
            'evidence': self.evidence,
        }


def _in_window(a, b, r):
    t = a - b * r
    return t.sign() >= 0 and compare(b, t) >= 0


def _constant_window(a, b):
    """
    Integers c with 0 <= a - b*c <= b when deg a <= deg b. Outside
    [q-1, q], q = a_m / b_m, the coordinate at m = deg b already decides.
    """
    m = b.degree
    q = Fraction(a.coordinate(m), b.leading)
    low, high = ceil(q) - 1, floor(q)
    found, rejected = [], []
    for c in range(low, high + 1):
        r = IntZPoly.constant(c)
        t = a - b * r
        if t.sign() < 0:
            rejected.append({'r': c, 'failed': 'a - b*r >= 0'})
        elif compare(b, t) < 0:
            rejected.append({'r': c, 'failed': 'a - b*r <= b'})
        else:
            found.append(r)
    evidence = {
        'window': [low, high],
        'a_coordinate': a.coordinate(m),
        'b_leading': b.leading,
        'rejected': rejected,
    }
    return found, evidence


def quotient_strata(a, b):
    """
    Splits the search for r with 0 <= a - b*r <= b by the degree of r.
    Every stratum is either resolved to finitely many candidates or
    refuted by a leading coordinate sign, so the result is always finite.

    :param a: an :class:`IntZPoly`
    :param b: a positive :class:`IntZPoly`
    """
    if b.sign() <= 0:
        raise PreconditionViolated('quotient candidates need b > 0, got %s' % b)
    m, d = b.degree, a.degree
    top = max(d - m, 0)
    strata = []
    if d > m:
        strata.append(Stratum(0, top - 1, Stratum.REFUTED, 'top-not-cancelled',
            evidence={'a_degree': d, 'b_degree': m, 'a_leading': a.leading}))
        quotient = divmod(a.to_rational_poly(), b.to_rational_poly())[0]
        coords = binomial_coordinates(quotient)
        bad = [k for k in range(1, len(coords)) if coords[k].denominator != 1]
        if bad:
            strata.append(Stratum(top, top, Stratum.REFUTED, 'non-integral-quotient',
                evidence={'index': bad[0], 'value': str(coords[bad[0]]),
                          'quotient': [str(c) for c in coords]}))
        else:
            shift = IntZPoly([0] + [int(c) for c in coords[1:]])
            found, evidence = _constant_window(a - b * shift, b)
            candidates = [shift + r for r in found]
            evidence['shift'] = list(shift.coords)
            strata.append(Stratum(top, top,
                Stratum.RESOLVED if candidates else Stratum.REFUTED, 'window',
                candidates, evidence))
    else:
        found, evidence = _constant_window(a, b)
        strata.append(Stratum(0, 0,
            Stratum.RESOLVED if found else Stratum.REFUTED, 'window', found, evidence))
    strata.append(Stratum(top + 1, None, Stratum.REFUTED, 'degree-overflow',
        evidence={'a_degree': d, 'b_degree': m}))
    for stratum in strata:
        for r in stratum.candidates:
            if not _in_window(a, b, r):
                raise InternalInvariantViolation('candidate %s escapes the window for (%s, %s)' % (r, a, b))
    logger.debug('quotient strata for (%s, %s): %s', a, b, strata)
    return strata


def quotient_candidates(a, b):
    candidates = [r for s in quotient_strata(a, b) for r in s.candidates]
    return sorted(set(candidates), key=cmp_to_key(compare))
