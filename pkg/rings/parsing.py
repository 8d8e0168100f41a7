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
Text and JSON grammar of ring elements.

- integers: optional sign then decimal digits, ``-12``
- rationals: ``p/q`` or an integer
- polynomials over Q: ``3*X^2 - X + 1``
- Int(Z): ``binom[a0, a1, ...]`` or any polynomial in X taking integer
  values on the integers
- curve rings: polynomials in X and Y, reduced modulo the curve

The ring is always given separately by its tag; it is never guessed
from the text.
"""

import re
from fractions import Fraction

from rings import intz
from rings.core import INTEGERS
from rings.core import INTZ
from rings.core import RATIONALS
from rings.core import RATIONAL_POLYS
from rings.core import RingElem
from rings.core import RingId
from rings.errors import InputParseError
from rings.polynomials import RationalPoly

INTEGER_RE = re.compile(r'^[+-]?\d+$')
RATIONAL_RE = re.compile(r'^([+-]?\d+)\s*/\s*(\d+)$')

RING_TAGS = {
    'Z': INTEGERS,
    'Q': RATIONALS,
    'Q[X]': RATIONAL_POLYS,
    'QX': RATIONAL_POLYS,
    'IntZ': INTZ,
}


def parse_ring(tag):
    """
    Ring of a plain tag. Curve rings are built from their equation by
    :func:`curves.coordinate_ring.new_curve` instead.
    """
    try:
        return RING_TAGS[tag]
    except KeyError:
        raise InputParseError('unknown ring tag %r (expected one of %s)' %
                              (tag, ', '.join(sorted(RING_TAGS))))


def parse_integer(text):
    text = text.strip()
    if not INTEGER_RE.match(text):
        raise InputParseError('%r is not an integer' % text)
    return int(text)


def parse_rational(text):
    """
    >>> parse_rational('-6/4')
    Fraction(-3, 2)
    """
    text = text.strip()
    match = RATIONAL_RE.match(text)
    if match:
        if int(match.group(2)) == 0:
            raise InputParseError('zero denominator in %r' % text)
        return Fraction(int(match.group(1)), int(match.group(2)))
    return Fraction(parse_integer(text))


def parse_element(text, ring):
    """
    Reads one element of `ring` from its text form.

    >>> parse_element('1/2', RATIONALS)
    RingElem(Q, 1/2)
    >>> parse_element('X^2', INTZ)
    RingElem(IntZ, binom[0, 1, 2])
    """
    tag = ring.tag
    if tag == RingId.INTEGER:
        return ring(parse_integer(text))
    if tag == RingId.RATIONAL:
        return ring(parse_rational(text))
    if tag == RingId.RATIONAL_POLY:
        return ring(RationalPoly.parse(text))
    if tag == RingId.INTZ:
        return ring(intz.parse(text))
    return ring(ring.curve.parse(text))


def element_json(a):
    """
    JSON value of an element: a number over Z, ``{"binom": [...]}``
    over Int(Z), the canonical text otherwise.
    """
    tag = a.ring.tag
    if tag == RingId.INTEGER:
        return a.payload
    if tag == RingId.INTZ:
        return a.payload.json()
    return str(a)


def element_from_json(value, ring):
    if isinstance(value, bool):
        raise InputParseError('booleans are not ring elements')
    if isinstance(value, int):
        return ring(value)
    if isinstance(value, str):
        return parse_element(value, ring)
    if isinstance(value, dict) and set(value) == {'binom'}:
        if ring.tag != RingId.INTZ:
            raise InputParseError('binomial coordinates given for the ring %s' % ring)
        coords = value['binom']
        if not isinstance(coords, list) or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in coords):
            raise InputParseError('binomial coordinates must be a list of integers')
        return RingElem(ring, intz.IntZPoly(coords))
    raise InputParseError('cannot read a ring element from %r' % (value,))
