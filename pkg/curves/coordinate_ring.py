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
Coordinate rings Q[X, Y]/(F) of affine plane curves whose points at
infinity are non-rational and conjugate, and the degree function
d(z) = -sum of ord_P(z) over the points P at infinity.

F is made monic in Y of Y-degree n = deg F, so every element has a
unique representative of Y-degree < n. The leading form of such a
representative never vanishes at a point at infinity (its
dehomogenization has degree < n while F_n(1, t) is irreducible of
degree n), hence d(z) = n * deg(rep).

>>> C = new_curve('X^4 + Y^4 + 1')
>>> C.n, str(C.mu.as_expr())
(4, 't**4 + 1')
>>> str(C.element(Y**4))
'-X^4 - 1'
"""

import logging
from fractions import Fraction
from functools import total_ordering

import sympy
from sympy.parsing.sympy_parser import convert_xor
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations

from rings.core import RingElem
from rings.core import RingId
from rings.errors import InputParseError
from rings.errors import InternalInvariantViolation
from rings.errors import NotAUnit
from rings.errors import NotMonicInY
from rings.errors import NotSquarefreeAtInfinity
from rings.errors import PointsAtInfinityNotConjugate
from rings.errors import PointsAtInfinityRational
from rings.errors import PreconditionViolated
from rings.errors import RingMismatch
from rings.errors import ZeroElement

logger = logging.getLogger('idemfact.' + __name__)

X, Y = sympy.symbols('X Y')
T = sympy.Symbol('t')

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_SYMBOLS = {'X': X, 'Y': Y, 'x': X, 'y': Y}


def _parse(text):
    try:
        expr = sympy.sympify(parse_expr(text, local_dict=dict(_SYMBOLS),
                                        transformations=_TRANSFORMATIONS))
    except Exception as e:
        raise InputParseError('cannot parse polynomial %r: %s' % (text, e))
    if expr.free_symbols - {X, Y}:
        raise InputParseError('polynomial %r may only use X and Y' % text)
    return as_poly(expr, text)


def as_poly(value, text=None):
    if isinstance(value, Fraction):
        value = sympy.Rational(value.numerator, value.denominator)
    try:
        return sympy.Poly(value, X, Y, domain=sympy.QQ)
    except sympy.PolynomialError as e:
        raise InputParseError('%r is not a polynomial: %s' % (text or value, e))


def format_poly(poly):
    return str(poly.as_expr()).replace('**', '^')


@total_ordering
class PseudoVal(object):
    """
    A value of d: a natural number, or minus infinity for zero.
    """
    def __init__(self, value=None):
        self.value = value

    @classmethod
    def minus_infinity(cls):
        return cls(None)

    @property
    def is_minus_infinity(self):
        return self.value is None

    def _key(self, other):
        if isinstance(other, PseudoVal):
            return other.value
        return other

    def __eq__(self, other):
        return self.value == self._key(other)

    def __lt__(self, other):
        value = self._key(other)
        if self.value is None:
            return value is not None
        return value is not None and self.value < value

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other):
        value = self._key(other)
        if self.value is None or value is None:
            return PseudoVal.minus_infinity()
        return PseudoVal(self.value + value)

    def __repr__(self):
        return '-inf' if self.value is None else str(self.value)

    def json(self):
        return '-inf' if self.value is None else self.value


class Curve(object):
    """
    An affine plane curve F = 0 over Q, validated on construction.

    :param F: the equation, as text or as a sympy expression or Poly
    """
    def __init__(self, F):
        poly = _parse(F) if isinstance(F, str) else as_poly(F)
        n = poly.total_degree()
        if poly.is_zero or n < 1:
            raise PreconditionViolated('the curve equation must be nonconstant')
        top = poly.coeff_monomial(Y ** n)
        if poly.degree(Y) != n or top == 0:
            raise NotMonicInY('%s has no Y^%d term' % (format_poly(poly), n))
        self.F = poly.quo_ground(top)
        self.n = n
        self._F_yx = self.F.reorder(Y, X)
        self.mu = sympy.Poly(sum(c * T ** j for (i, j), c in self.F.terms() if i + j == n),
                             T, domain=sympy.QQ)
        self._check_points_at_infinity()
        self.smooth = self._check_smooth()
        self.ring = RingId(RingId.CURVE, curve=self)

    def _check_points_at_infinity(self):
        coeff, factors = self.mu.factor_list()
        for factor, multiplicity in factors:
            if factor.degree() == 1:
                raise PointsAtInfinityRational(
                    'F_n(1, t) = %s has the rational root %s' % (self.mu.as_expr(), factor.as_expr()))
        for factor, multiplicity in factors:
            if multiplicity > 1:
                raise NotSquarefreeAtInfinity(
                    'F_n(1, t) = %s has the repeated factor %s' % (self.mu.as_expr(), factor.as_expr()))
        if len(factors) > 1:
            raise PointsAtInfinityNotConjugate(
                'F_n(1, t) = %s splits over Q' % self.mu.as_expr())

    def _check_smooth(self):
        """
        The affine curve is smooth iff (F, dF/dX, dF/dY) is the unit ideal.
        """
        basis = sympy.groebner([self.F.as_expr(), self.F.diff(X).as_expr(), self.F.diff(Y).as_expr()],
                               X, Y, domain=sympy.QQ)
        smooth = list(basis.exprs) == [1]
        if not smooth:
            logger.warning('the affine curve %s is singular', self)
        return smooth

    def __eq__(self, other):
        return isinstance(other, Curve) and self.F == other.F

    def __hash__(self):
        return hash(self.F.as_expr())

    def __str__(self):
        return format_poly(self.F)

    __repr__ = __str__

    def reduce(self, poly):
        """
        The representative of Y-degree < n.
        """
        return poly.reorder(Y, X).rem(self._F_yx).reorder(X, Y)

    def element(self, value):
        if isinstance(value, CurveElem):
            if value.curve != self:
                raise RingMismatch('element of %s used on %s' % (value.curve, self))
            return value
        if isinstance(value, bool):
            raise TypeError('booleans are not ring elements')
        return CurveElem(self, as_poly(value))

    def parse(self, text):
        return CurveElem(self, _parse(text))

    @property
    def x(self):
        return RingElem(self.ring, X)

    @property
    def y(self):
        return RingElem(self.ring, Y)

    def random_element(self, rng, degree):
        """
        A representative with small integer coefficients, total degree
        at most `degree` and Y-degree below n.
        """
        terms = [X ** i * Y ** j for i in range(degree + 1) for j in range(min(degree - i + 1, self.n))]
        return RingElem(self.ring, sum(rng.randint(-5, 5) * t for t in terms))

    def json(self):
        return {'F': str(self), 'field': 'Q'}


def new_curve(F):
    return Curve(F)


class CurveElem(object):
    """
    An element of Q[X, Y]/(F), kept as its reduced representative.
    """
    def __init__(self, curve, poly):
        self.curve = curve
        self.rep = curve.reduce(poly)

    def _other(self, other):
        if isinstance(other, CurveElem):
            if other.curve != self.curve:
                raise RingMismatch('elements of different curves')
            return other.rep
        return as_poly(other)

    def __add__(self, other):
        return CurveElem(self.curve, self.rep + self._other(other))

    def __sub__(self, other):
        return CurveElem(self.curve, self.rep - self._other(other))

    def __mul__(self, other):
        return CurveElem(self.curve, self.rep * self._other(other))

    def __neg__(self):
        return CurveElem(self.curve, -self.rep)

    def __eq__(self, other):
        if isinstance(other, CurveElem):
            return self.curve == other.curve and self.rep == other.rep
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.rep == as_poly(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.curve, self.rep.as_expr()))

    def is_zero(self):
        return self.rep.is_zero

    def is_constant(self):
        return self.rep.is_ground

    def d(self):
        if self.rep.is_zero:
            return PseudoVal.minus_infinity()
        return PseudoVal(self.curve.n * self.rep.total_degree())

    def is_unit(self):
        by_rep = self.is_constant() and not self.is_zero()
        by_degree = self.d() == 0
        if by_rep != by_degree:
            raise InternalInvariantViolation('unit routes disagree on %s' % self)
        return by_rep

    def inverse(self):
        if not self.is_unit():
            raise NotAUnit('%s is not a unit of the coordinate ring of %s' % (self, self.curve))
        return CurveElem(self.curve, as_poly(1 / self.rep.as_expr()))

    def __str__(self):
        return format_poly(self.rep)

    def __repr__(self):
        return 'CurveElem(%s)' % self


def _elem(z):
    return z.payload if isinstance(z, RingElem) else z


def reduce(curve, g):
    """
    >>> C = new_curve('X^4 + Y^4 + 1')
    >>> str(reduce(C, Y))
    'Y'
    """
    return RingElem(curve.ring, curve.element(g))


def d(z):
    """
    >>> C = new_curve('X^4 + Y^4 + 1')
    >>> d(C.x * C.x * C.y), d(C.ring.zero())
    (12, -inf)
    """
    return _elem(z).d()


def d_oracle(z):
    """
    Counts the affine zeros of z with multiplicity as the X-degree of
    the resultant Res_Y(F, rep).
    """
    z = _elem(z)
    if z.is_zero():
        raise ZeroElement('the zero element has no finite degree')
    resultant = sympy.resultant(z.curve.F.as_expr(), z.rep.as_expr(), Y)
    return sympy.Poly(resultant, X).degree()


def is_unit(z):
    return _elem(z).is_unit()
