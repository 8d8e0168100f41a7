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



class AlgebraError(Exception):
    """
    Base class of every error raised by the engines. The command line
    maps these to exit code 2 (3 for :class:`InputParseError`).
    """
    pass


class InputParseError(AlgebraError):
    pass


class RingMismatch(AlgebraError):
    pass


class NotEuclidean(AlgebraError):
    pass


class NotDiscretelyOrdered(AlgebraError):
    pass


class BothZero(AlgebraError):
    pass


class NotAUnit(AlgebraError):
    pass


class BadBezoutPair(AlgebraError):
    pass


class NotIdempotentPair(AlgebraError):
    pass


class NotIdempotent(AlgebraError):
    pass


class NotSingular(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class ZeroMatrix(AlgebraError):
    pass


class DescentStalled(AlgebraError):
    """
    Raised when the idempotent descent cannot shrink the current pair
    and the bounded search did not find a factorization either.
    """
    def __init__(self, pair, message=None):
        self.pair = pair
        super(DescentStalled, self).__init__(
            message or 'descent stalled on the pair (%s, %s)' % pair)


class NotIntegerValued(AlgebraError):
    """
    Raised by the binomial basis conversion. `k` is the index
    of the first coordinate that is not an integer.
    """
    def __init__(self, k, value):
        self.k = k
        self.value = value
        super(NotIntegerValued, self).__init__(
            'not integer-valued: coordinate %d is %s' % (k, value))


class PreconditionViolated(AlgebraError):
    pass


class NotMonicInY(AlgebraError):
    pass


class PointsAtInfinityRational(AlgebraError):
    pass


class PointsAtInfinityNotConjugate(AlgebraError):
    pass


class NotSquarefreeAtInfinity(AlgebraError):
    pass


class OriginOnCurve(AlgebraError):
    pass


class ZeroElement(AlgebraError):
    pass


class WrongCurve(AlgebraError):
    pass


class InternalInvariantViolation(AlgebraError):
    """
    Two computations that must agree did not. This is a bug, never
    an input problem.
    """
    pass


class CheckResult(object):
    """
    Outcome of a verifier: truthy iff no reason was recorded.
    """
    def __init__(self, reasons=None):
        self.reasons = list(reasons or [])

    def fail(self, reason):
        self.reasons.append(reason)

    @property
    def ok(self):
        return not self.reasons

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return '<CheckResult ok>'
        return '<CheckResult failed: %s>' % '; '.join(self.reasons)

    def json(self):
        return {'ok': self.ok, 'reasons': self.reasons}
