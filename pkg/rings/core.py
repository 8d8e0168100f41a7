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
Exact elements of the supported rings.

A :class:`RingElem` pairs a :class:`RingId` with a normalized payload:

- ``Z``: a Python integer
- ``Q``: a reduced :class:`fractions.Fraction`
- ``Q[X]``: a :class:`rings.polynomials.RationalPoly`
- ``IntZ``: a :class:`rings.intz.IntZPoly`
- ``curve``: a :class:`curves.coordinate_ring.CurveElem`

Arithmetic between elements of different rings raises
:class:`RingMismatch`. Plain Python integers are lifted into the ring of
the other operand, which keeps formulas like ``1 - x`` readable.

>>> a, b = INTEGERS(2), INTEGERS(3)
>>> a + b
RingElem(Z, 5)
>>> gcd_bezout(INTEGERS(4), INTEGERS(6))
(RingElem(Z, 2), RingElem(Z, -1), RingElem(Z, 1))
"""

import enum
from fractions import Fraction

from rings import intz
from rings.errors import BothZero
from rings.errors import NotAUnit
from rings.errors import NotDiscretelyOrdered
from rings.errors import NotEuclidean
from rings.errors import PreconditionViolated
from rings.errors import RingMismatch
from rings.intz import IntZPoly
from rings.polynomials import RationalPoly
from rings.polynomials import format_rational
from rings.polynomials import gcdex


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class RingId(object):
    """
    Identifies one of the built-in rings. The tag decides which
    operations are available.
    """
    INTEGER = 'Z'
    RATIONAL = 'Q'
    RATIONAL_POLY = 'Q[X]'
    INTZ = 'IntZ'
    CURVE = 'curve'

    TAGS = (INTEGER, RATIONAL, RATIONAL_POLY, INTZ, CURVE)

    def __init__(self, tag, curve=None):
        if tag not in self.TAGS:
            raise ValueError('unknown ring tag %r' % tag)
        if (tag == self.CURVE) != (curve is not None):
            raise ValueError('a curve descriptor is required exactly for curve rings')
        self.tag = tag
        self.curve = curve

    @property
    def is_euclidean(self):
        return self.tag in (self.INTEGER, self.RATIONAL_POLY)

    @property
    def is_ordered(self):
        return self.tag in (self.INTEGER, self.INTZ)

    def __eq__(self, other):
        return isinstance(other, RingId) and self.tag == other.tag and self.curve == other.curve

    def __hash__(self):
        return hash((self.tag, self.curve))

    def __str__(self):
        if self.curve is not None:
            return 'curve(%s)' % self.curve
        return self.tag

    __repr__ = __str__

    def __call__(self, value):
        """
        Builds an element of this ring from a payload or an integer.
        """
        return RingElem(self, value)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def json(self):
        return self.tag


INTEGERS = RingId(RingId.INTEGER)
RATIONALS = RingId(RingId.RATIONAL)
RATIONAL_POLYS = RingId(RingId.RATIONAL_POLY)
INTZ = RingId(RingId.INTZ)


def _normalize(ring, value):
    if isinstance(value, bool):
        raise TypeError('booleans are not ring elements')
    tag = ring.tag
    if tag == RingId.INTEGER:
        if isinstance(value, Fraction) and value.denominator == 1:
            value = value.numerator
        if not isinstance(value, int):
            raise TypeError('integer expected, got %r' % (value,))
        return value
    if tag == RingId.RATIONAL:
        if not isinstance(value, (int, Fraction)):
            raise TypeError('rational expected, got %r' % (value,))
        return Fraction(value)
    if tag == RingId.RATIONAL_POLY:
        if isinstance(value, RationalPoly):
            return value
        return RationalPoly.constant(value)
    if tag == RingId.INTZ:
        if isinstance(value, IntZPoly):
            return value
        if isinstance(value, RationalPoly):
            return intz.from_rational_poly(value)
        return IntZPoly.constant(value)
    return ring.curve.element(value)


class RingElem(object):
    """
    An immutable element of one of the built-in rings.
    """
    __slots__ = ('ring', 'payload')

    def __init__(self, ring, payload):
        object.__setattr__(self, 'ring', ring)
        object.__setattr__(self, 'payload', _normalize(ring, payload))

    def __setattr__(self, name, value):
        raise AttributeError('ring elements are immutable')

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise RingMismatch('cannot combine %s with %s' % (self.ring, other.ring))
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return RingElem(self.ring, other)
        raise RingMismatch('cannot combine %s with %r' % (self.ring, other))

    def __add__(self, other):
        other = self._coerce(other)
        return RingElem(self.ring, self.payload + other.payload)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return RingElem(self.ring, self.payload - other.payload)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RingElem(self.ring, self.payload * other.payload)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, -self.payload)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.payload == other.payload
        if isinstance(other, int) and not isinstance(other, bool):
            return self.payload == RingElem(self.ring, other).payload
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ring.tag, self.payload))

    def _compare(self, other):
        return compare(self, self._coerce(other)).value

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0

    def is_zero(self):
        return self.payload == 0

    def is_unit(self):
        return is_unit(self)

    def inverse(self):
        return inverse(self)

    def sign(self):
        return sign(self)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return 'RingElem(%s, %s)' % (self.ring, format_element(self))


def format_element(a):
    """
    Canonical text of an element, in the grammar read by
    :func:`rings.parsing.parse_element`.
    """
    tag = a.ring.tag
    if tag == RingId.INTEGER:
        return str(a.payload)
    if tag == RingId.RATIONAL:
        return format_rational(a.payload)
    return str(a.payload)


def _same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatch('cannot combine %s with %s' % (a.ring, b.ring))


def add(a, b):
    _same_ring(a, b)
    return a + b


def sub(a, b):
    _same_ring(a, b)
    return a - b


def mul(a, b):
    _same_ring(a, b)
    return a * b


def neg(a):
    return -a


def is_unit(a):
    tag = a.ring.tag
    if tag == RingId.INTEGER:
        return a.payload in (1, -1)
    if tag == RingId.RATIONAL:
        return a.payload != 0
    if tag == RingId.RATIONAL_POLY:
        return a.payload.degree == 0
    return a.payload.is_unit()


def inverse(a):
    if not is_unit(a):
        raise NotAUnit('%s is not a unit of %s' % (a, a.ring))
    tag = a.ring.tag
    if tag == RingId.INTEGER:
        return a
    if tag == RingId.RATIONAL:
        return RingElem(a.ring, 1 / a.payload)
    if tag == RingId.RATIONAL_POLY:
        return RingElem(a.ring, RationalPoly.constant(1 / a.payload.leading_coefficient))
    if tag == RingId.INTZ:
        return a
    return RingElem(a.ring, a.payload.inverse())


def sign(a):
    """
    -1, 0 or 1 in the discrete order of Z or Int(Z).
    """
    tag = a.ring.tag
    if tag == RingId.INTEGER:
        return (a.payload > 0) - (a.payload < 0)
    if tag == RingId.INTZ:
        return a.payload.sign()
    raise NotDiscretelyOrdered('%s carries no discrete order' % a.ring)


def compare(a, b):
    _same_ring(a, b)
    return Ordering(sign(a - b))


def _egcd(a, b):
    s, old_s = 0, 1
    r, old_r = b, a
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if b:
        t = (old_r - old_s * a) // b
    else:
        t = 0
    return old_r, old_s, t


def gcd_bezout(a, b):
    """
    Returns (g, s, t) with s*a + t*b = g.

    g is positive over Z and monic over Q[X]. Over Z the cofactor s is
    reduced to |s| <= |b/g|/2, ties going to the nonnegative value; over
    Q[X] it has degree below deg(b/g).
    """
    _same_ring(a, b)
    ring = a.ring
    if not ring.is_euclidean:
        raise NotEuclidean('%s has no Euclidean division' % ring)
    if a.is_zero() and b.is_zero():
        raise BothZero('gcd of (0, 0) is undefined')
    if ring.tag == RingId.RATIONAL_POLY:
        g, s, t = gcdex(a.payload, b.payload)
        return ring(g), ring(s), ring(t)
    x, y = a.payload, b.payload
    g, s, t = _egcd(x, y)
    if g < 0:
        g, s, t = -g, -s, -t
    if y == 0:
        return ring(g), ring((x > 0) - (x < 0)), ring(0)
    period = abs(y // g)
    s = s % period
    if 2 * s > period:
        s -= period
    t = (g - s * x) // y
    return ring(g), ring(s), ring(t)


def euclidean_divmod(a, b):
    """
    Division with remainder: a = q*b + r with r smaller than b
    (|r| < |b| over Z, floor convention; deg r < deg b over Q[X]).
    """
    _same_ring(a, b)
    if not a.ring.is_euclidean:
        raise NotEuclidean('%s has no Euclidean division' % a.ring)
    if b.is_zero():
        raise PreconditionViolated('division by zero')
    q, r = divmod(a.payload, b.payload)
    return a.ring(q), a.ring(r)


def euclidean_size(a):
    if a.ring.tag == RingId.INTEGER:
        return abs(a.payload)
    if a.ring.tag == RingId.RATIONAL_POLY:
        return 0 if a.is_zero() else a.payload.degree + 1
    raise NotEuclidean('%s has no Euclidean division' % a.ring)


def exact_quotient(a, b):
    """
    The element q with a = q*b.

    :raises PreconditionViolated: when b does not divide a
    """
    _same_ring(a, b)
    if b.is_zero():
        raise PreconditionViolated('division by zero')
    tag = a.ring.tag
    if tag == RingId.RATIONAL:
        return a.ring(a.payload / b.payload)
    if tag in (RingId.INTEGER, RingId.RATIONAL_POLY):
        q, r = divmod(a.payload, b.payload)
        if r != 0:
            raise PreconditionViolated('%s does not divide %s' % (b, a))
        return a.ring(q)
    if tag == RingId.INTZ:
        q, r = divmod(a.payload.to_rational_poly(), b.payload.to_rational_poly())
        if not r.is_zero():
            raise PreconditionViolated('%s does not divide %s' % (b, a))
        return a.ring(q)
    if b.is_unit():
        return a * inverse(b)
    raise PreconditionViolated('exact division by the non-unit %s' % b)


def ordered_quotient_candidates(a, b):
    """
    All r in the ring with 0 <= a - b*r <= b, for b > 0, in increasing
    order. There are at most two of them.

    >>> ordered_quotient_candidates(INTEGERS(7), INTEGERS(3))
    [RingElem(Z, 2)]
    >>> ordered_quotient_candidates(INTEGERS(6), INTEGERS(3))
    [RingElem(Z, 1), RingElem(Z, 2)]
    """
    _same_ring(a, b)
    if sign(b) <= 0:
        raise PreconditionViolated('quotient candidates need b > 0, got %s' % b)
    ring = a.ring
    if ring.tag == RingId.INTEGER:
        q, t = divmod(a.payload, b.payload)
        if t == 0:
            return [ring(q - 1), ring(q)]
        return [ring(q)]
    return [ring(r) for r in intz.quotient_candidates(a.payload, b.payload)]
