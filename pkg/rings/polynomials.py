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
Dense univariate polynomials with rational coefficients.

Coefficients are stored lowest degree first, as a tuple of
:class:`fractions.Fraction`, without trailing zeros: the zero
polynomial is the empty tuple and has degree :data:`DEGREE_OF_ZERO`.

>>> f = RationalPoly([1, -1, 3])
>>> str(f)
'3*X^2 - X + 1'
>>> f.degree
2
>>> RationalPoly([]).degree
-inf
"""

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.parsing.sympy_parser import convert_xor
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations

from rings.errors import InputParseError
from rings.errors import PreconditionViolated

DEGREE_OF_ZERO = float('-inf')

X = sympy.Symbol('X')

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError('exact rational expected, got %r' % (value,))
    return Fraction(value)


def format_rational(q):
    """
    >>> format_rational(Fraction(-3, 4))
    '-3/4'
    >>> format_rational(Fraction(5))
    '5'
    """
    if q.denominator == 1:
        return str(q.numerator)
    return '%d/%d' % (q.numerator, q.denominator)


class RationalPoly(object):
    """
    An element of Q[X].
    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        coeffs = [_fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @property
    def degree(self):
        if not self.coeffs:
            return DEGREE_OF_ZERO
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(('Q[X]', self.coeffs))

    def __add__(self, other):
        return RationalPoly.from_sympy(self.to_sympy() + _lift(other).to_sympy())

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return RationalPoly.from_sympy(self.to_sympy() - _lift(other).to_sympy())

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        return RationalPoly.from_sympy(self.to_sympy() * _lift(other).to_sympy())

    __rmul__ = __mul__

    def __divmod__(self, other):
        """
        Division with remainder by a nonzero polynomial.

        >>> [str(p) for p in divmod(RationalPoly([1, 0, 1]), RationalPoly([0, 2]))]
        ['1/2*X', '1']
        """
        other = _lift(other)
        if other.is_zero():
            raise PreconditionViolated('division by the zero polynomial')
        quotient, remainder = self.to_sympy().div(other.to_sympy())
        return RationalPoly.from_sympy(quotient), RationalPoly.from_sympy(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.leading_coefficient)

    def to_sympy(self):
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                           for c in reversed(self.coeffs)] or [0], X, domain=sympy.QQ)

    @classmethod
    def from_sympy(cls, poly):
        return cls(reversed(poly.all_coeffs()))

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            c = abs(c)
            if i == 0:
                body = format_rational(c)
            else:
                power = 'X' if i == 1 else 'X^%d' % i
                body = power if c == 1 else '%s*%s' % (format_rational(c), power)
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            out += ' %s %s' % (sign, body)
        return out

    def __repr__(self):
        return 'RationalPoly(%s)' % str(self)

    @classmethod
    def parse(cls, text):
        """
        Reads the polynomial grammar, e.g. ``"3*X^2 - X + 1"``.

        >>> RationalPoly.parse('(X^2 - X)/2')
        RationalPoly(1/2*X^2 - 1/2*X)
        """
        try:
            expr = parse_expr(text, local_dict={'X': X}, transformations=_TRANSFORMATIONS)
        except Exception as e:
            raise InputParseError('cannot parse polynomial %r: %s' % (text, e))
        expr = sympy.sympify(expr)
        if expr.free_symbols - {X}:
            raise InputParseError('polynomial %r may only use the variable X' % text)
        try:
            poly = sympy.Poly(expr, X, domain=sympy.QQ)
        except sympy.PolynomialError as e:
            raise InputParseError('%r is not a polynomial: %s' % (text, e))
        return cls.from_sympy(poly)


def _lift(value):
    if isinstance(value, RationalPoly):
        return value
    return RationalPoly.constant(_fraction(value))


@lru_cache(maxsize=None)
def binomial_basis(k):
    """
    The polynomial C(X, k) = X(X-1)...(X-k+1)/k!.

    >>> str(binomial_basis(2))
    '1/2*X^2 - 1/2*X'
    """
    basis = RationalPoly.constant(1)
    for i in range(k):
        basis = basis * RationalPoly([Fraction(-i, i + 1), Fraction(1, i + 1)])
    return basis


def gcdex(a, b):
    """
    Extended Euclid in Q[X]: returns (g, s, t) with s*a + t*b = g,
    g monic (zero only if both inputs are) and deg s < deg b - deg g.

    >>> [str(p) for p in gcdex(RationalPoly([0, 1]), RationalPoly([1, 1]))]
    ['1', '-1', '1']
    """
    if b.is_zero():
        if a.is_zero():
            return RationalPoly(), RationalPoly.constant(1), RationalPoly()
        scale = 1 / a.leading_coefficient
        return a * scale, RationalPoly.constant(scale), RationalPoly()
    s, t, g = a.to_sympy().gcdex(b.to_sympy())
    return RationalPoly.from_sympy(g), RationalPoly.from_sympy(s), RationalPoly.from_sympy(t)
