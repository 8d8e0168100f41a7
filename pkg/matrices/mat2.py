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
2x2 matrices over one ring.

>>> from rings.core import INTEGERS
>>> t_product([INTEGERS(1), INTEGERS(1)]).product
Mat2(Z, [[2, 1], [1, 1]])
>>> Mat2.from_rows([[4, 6], [-2, -3]], INTEGERS).is_idempotent()
True
"""

from collections import namedtuple

from rings.core import INTEGERS
from rings.core import RingElem
from rings.core import inverse
from rings.core import is_unit
from rings.errors import BadBezoutPair
from rings.errors import InputParseError
from rings.errors import InternalInvariantViolation
from rings.errors import NotAUnit
from rings.errors import NotIdempotentPair
from rings.errors import NotInvertible
from rings.errors import RingMismatch
from rings.parsing import element_from_json
from rings.parsing import element_json


class Mat2(object):
    """
    The matrix (a b; c d), entries in row-major order.
    """
    __slots__ = ('a', 'b', 'c', 'd')

    def __init__(self, a, b, c, d):
        entries = (a, b, c, d)
        for e in entries:
            if not isinstance(e, RingElem):
                raise TypeError('matrix entries must be ring elements, got %r' % (e,))
        if any(e.ring != a.ring for e in entries[1:]):
            raise RingMismatch('matrix entries from different rings')
        self.a, self.b, self.c, self.d = entries

    @classmethod
    def from_rows(cls, rows, ring):
        """
        Builds a matrix from [[a, b], [c, d]], each entry a
        :class:`RingElem`, an integer or a payload of `ring`.
        """
        (a, b), (c, d) = rows
        return cls(*[e if isinstance(e, RingElem) else ring(e) for e in (a, b, c, d)])

    @classmethod
    def identity(cls, ring):
        return cls(ring.one(), ring.zero(), ring.zero(), ring.one())

    @classmethod
    def zero(cls, ring):
        return cls(ring.zero(), ring.zero(), ring.zero(), ring.zero())

    @property
    def ring(self):
        return self.a.ring

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return mul(self, other)
        return Mat2(*[e * other for e in self.entries])

    def __rmul__(self, other):
        return Mat2(*[other * e for e in self.entries])

    def __add__(self, other):
        if self.ring != other.ring:
            raise RingMismatch('cannot add matrices over %s and %s' % (self.ring, other.ring))
        return Mat2(*[x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Mat2(*[-e for e in self.entries])

    def det(self):
        return det(self)

    def trace(self):
        return self.a + self.d

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def is_identity(self):
        return self == Mat2.identity(self.ring)

    def is_singular(self):
        return is_singular(self)

    def is_invertible(self):
        return is_invertible(self)

    def is_idempotent(self):
        return is_idempotent(self)

    def inverse(self):
        """
        Inverse of a matrix whose determinant is a unit.
        """
        delta = self.det()
        if not is_unit(delta):
            raise NotInvertible('determinant %s is not a unit' % delta)
        u = inverse(delta)
        return Mat2(self.d * u, -self.b * u, -self.c * u, self.a * u)

    def __repr__(self):
        return 'Mat2(%s, [[%s, %s], [%s, %s]])' % ((self.ring,) + self.entries)

    def __str__(self):
        return '(%s, %s; %s, %s)' % self.entries

    def json(self):
        return {
            'ring': self.ring.json(),
            'rows': [[element_json(e) for e in row] for row in self.rows],
        }

    @classmethod
    def deserialize(cls, rep, ring):
        """
        Reads the `rows` of a matrix document (or bare rows) over `ring`.
        """
        rows = rep['rows'] if isinstance(rep, dict) else rep
        if (not isinstance(rows, list) or len(rows) != 2 or
                any(not isinstance(row, list) or len(row) != 2 for row in rows)):
            raise InputParseError('a 2x2 matrix needs two rows of two entries')
        return cls(*[element_from_json(e, ring) for row in rows for e in row])


def det(M):
    return M.a * M.d - M.b * M.c


def mul(M, N):
    if M.ring != N.ring:
        raise RingMismatch('cannot multiply matrices over %s and %s' % (M.ring, N.ring))
    return Mat2(M.a * N.a + M.b * N.c, M.a * N.b + M.b * N.d,
                M.c * N.a + M.d * N.c, M.c * N.b + M.d * N.d)


def is_singular(M):
    return det(M).is_zero()


def is_invertible(M):
    return is_unit(det(M))


def is_idempotent(M):
    """
    Checks M*M == M, and checks the answer against the trace/determinant
    characterization (M is 0, I, or has trace 1 and determinant 0).
    """
    by_definition = mul(M, M) == M
    by_trace = (M.is_zero() or M.is_identity() or
                (M.trace() == 1 and det(M).is_zero()))
    if by_definition != by_trace:
        raise InternalInvariantViolation('idempotency routes disagree on %r' % M)
    return by_definition


def elem_add(i, j, r):
    """
    The transvection I + r*E_ij.
    """
    ring = r.ring
    if (i, j) == (1, 2):
        return Mat2(ring.one(), r, ring.zero(), ring.one())
    if (i, j) == (2, 1):
        return Mat2(ring.one(), ring.zero(), r, ring.one())
    raise ValueError('transvection indices must be (1, 2) or (2, 1), got (%s, %s)' % (i, j))


def diag(u, v):
    for e in (u, v):
        if not is_unit(e):
            raise NotAUnit('%s is not a unit of %s' % (e, e.ring))
    return Mat2(u, u.ring.zero(), v.ring.zero(), v)


def t_mat(r):
    """
    T(r) = (r 1; 1 0).
    """
    return Mat2(r, r.ring.one(), r.ring.one(), r.ring.zero())


def continuant(rs, ring=INTEGERS, order=None):
    """
    p_k(r_1, ..., r_k) with p_0 = 1 and p_k = p_{k-1} r_k + p_{k-2}.
    Pass ``order=-1`` for the convention p_{-1} = 0 (used for the
    interior of a single factor).

    >>> continuant([]).payload, continuant([], order=-1).payload
    (1, 0)
    """
    rs = list(rs)
    if rs:
        ring = rs[0].ring
        if any(r.ring != ring for r in rs):
            raise RingMismatch('continuant of elements from different rings')
    if order == -1:
        return ring.zero()
    if order is not None and order != len(rs):
        raise ValueError('continuant of order %d needs %d arguments' % (order, order))
    previous, current = ring.zero(), ring.one()
    for r in rs:
        previous, current = current, current * r + previous
    return current


TProduct = namedtuple('TProduct', ['product', 'continuant_form'])


def continuant_matrix(rs):
    """
    (p_k, p_{k-1}; p_{k-1}(r_2..r_k), p_{k-2}(r_2..r_{k-1})).
    """
    rs = list(rs)
    ring = rs[0].ring
    interior = continuant(rs[1:-1], ring, order=-1 if len(rs) == 1 else None)
    return Mat2(continuant(rs, ring), continuant(rs[:-1], ring),
                continuant(rs[1:], ring), interior)


def t_product(rs):
    """
    Returns the product T(r_1)...T(r_k) computed literally and in
    continuant form; the two are checked to be equal.
    """
    rs = list(rs)
    if not rs:
        raise ValueError('t_product needs at least one factor')
    product = t_mat(rs[0])
    for r in rs[1:]:
        product = mul(product, t_mat(r))
    closed = continuant_matrix(rs)
    if product != closed:
        raise InternalInvariantViolation('T-product %r differs from continuant form %r' % (product, closed))
    return TProduct(product, closed)


def slope_idempotent(a, b, m, n):
    """
    The idempotent (a m, b m; a n, b n) whose rows lie on the line
    through (a, b), for a Bezout pair a m + b n = 1.
    """
    if a * m + b * n != 1:
        raise BadBezoutPair('%s*%s + %s*%s is not 1' % (a, m, b, n))
    E = Mat2(a * m, b * m, a * n, b * n)
    if not is_idempotent(E):
        raise InternalInvariantViolation('slope idempotent %r is not idempotent' % E)
    return E


class IdemParams(object):
    """
    An idempotent pair: x, y, z with x(1 - x) = yz, i.e. the
    idempotent (x y; z 1-x).
    """
    def __init__(self, x, y, z):
        if x * (1 - x) != y * z:
            raise NotIdempotentPair('%s(1 - %s) != %s*%s' % (x, x, y, z))
        self.x, self.y, self.z = x, y, z

    @classmethod
    def from_matrix(cls, E):
        if E.trace() != 1:
            raise NotIdempotentPair('%r does not have trace 1' % E)
        return cls(E.a, E.b, E.c)

    def matrix(self):
        return Mat2(self.x, self.y, self.z, 1 - self.x)

    def __repr__(self):
        return 'IdemParams(%s, %s, %s)' % (self.x, self.y, self.z)
