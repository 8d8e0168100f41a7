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
Elementary factorizations of invertible 2x2 matrices and the normal
form diag(alpha, beta) T(r_1) ... T(r_k) over discretely ordered rings.

>>> from rings.core import INTEGERS
>>> M = Mat2.from_rows([[2, 1], [1, 1]], INTEGERS)
>>> tform_recover_int(M)
TForm(1, 1, [1, 1])
"""

import logging

from matrices.mat2 import Mat2
from matrices.mat2 import continuant_matrix
from matrices.mat2 import diag
from matrices.mat2 import elem_add
from matrices.mat2 import is_invertible
from matrices.mat2 import mul
from matrices.mat2 import t_product
from rings.core import euclidean_divmod
from rings.core import inverse
from rings.core import is_unit
from rings.core import RingId
from rings.core import ordered_quotient_candidates
from rings.core import sign
from rings.errors import CheckResult
from rings.errors import InputParseError
from rings.errors import InternalInvariantViolation
from rings.errors import NotDiscretelyOrdered
from rings.errors import NotEuclidean
from rings.errors import NotInvertible
from rings.errors import PreconditionViolated
from rings.parsing import element_from_json
from rings.parsing import element_json

logger = logging.getLogger('idemfact.' + __name__)


class Transvection(object):
    """
    The factor I + r*E_ij.
    """
    def __init__(self, i, j, r):
        if (i, j) not in ((1, 2), (2, 1)):
            raise ValueError('transvection indices must be (1, 2) or (2, 1)')
        self.i, self.j, self.r = i, j, r

    def matrix(self):
        return elem_add(self.i, self.j, self.r)

    def __eq__(self, other):
        return (isinstance(other, Transvection) and
                (self.i, self.j, self.r) == (other.i, other.j, other.r))

    def __repr__(self):
        return 'Transvection(%d, %d, %s)' % (self.i, self.j, self.r)

    def json(self):
        return {'transvection': [self.i, self.j, element_json(self.r)]}


class DiagUnits(object):
    """
    The invertible diagonal factor diag(u, v).
    """
    def __init__(self, u, v):
        self.u, self.v = u, v

    def matrix(self):
        return diag(self.u, self.v)

    def __eq__(self, other):
        return isinstance(other, DiagUnits) and (self.u, self.v) == (other.u, other.v)

    def __repr__(self):
        return 'DiagUnits(%s, %s)' % (self.u, self.v)

    def json(self):
        return {'diag': [element_json(self.u), element_json(self.v)]}


def factor_from_json(rep, ring):
    if not isinstance(rep, dict) or len(rep) != 1:
        raise InputParseError('malformed elementary factor %r' % (rep,))
    if 'transvection' in rep:
        i, j, r = rep['transvection']
        return Transvection(i, j, element_from_json(r, ring))
    if 'diag' in rep:
        u, v = rep['diag']
        return DiagUnits(element_from_json(u, ring), element_from_json(v, ring))
    raise InputParseError('unknown elementary factor %r' % (rep,))


class ElemCert(object):
    """
    An invertible matrix together with elementary factors whose
    ordered product is that matrix.
    """
    kind = 'elementary-certificate'

    def __init__(self, input, factors):
        self.input = input
        self.factors = list(factors)

    def product(self):
        result = Mat2.identity(self.input.ring)
        for factor in self.factors:
            result = mul(result, factor.matrix())
        return result

    def verify(self):
        check = CheckResult()
        for idx, factor in enumerate(self.factors):
            if isinstance(factor, DiagUnits) and not (is_unit(factor.u) and is_unit(factor.v)):
                check.fail('factor %d is not a unit diagonal' % (idx + 1))
                return check
            if not isinstance(factor, (Transvection, DiagUnits)):
                check.fail('factor %d is not elementary' % (idx + 1))
                return check
        if self.product() != self.input:
            check.fail('product mismatch')
        return check

    def __repr__(self):
        return 'ElemCert(%r, %r)' % (self.input, self.factors)

    def json(self):
        return {
            'kind': self.kind,
            'input': self.input.json(),
            'factors': [f.json() for f in self.factors],
        }

    @classmethod
    def deserialize(cls, rep, ring):
        return cls(Mat2.deserialize(rep['input'], ring),
                   [factor_from_json(f, ring) for f in rep['factors']])


class TForm(object):
    """
    The form diag(alpha, beta) T(r_1) ... T(r_k).

    In normal form r_1 >= 0 and r_i > 0 for 1 < i < k when k >= 2,
    with (r_1, r_2) != (0, 0) when k = 2. A single factor (k = 1) may
    carry any sign: T(-3) has no other shape.
    """
    kind = 'tform'

    def __init__(self, alpha, beta, rs):
        self.alpha = alpha
        self.beta = beta
        self.rs = list(rs)

    @property
    def ring(self):
        return self.alpha.ring

    def matrix(self):
        D = diag(self.alpha, self.beta)
        if not self.rs:
            return D
        return mul(D, t_product(self.rs).product)

    def continuant_entries(self):
        """
        (alpha p_k, alpha p_{k-1}; beta p_{k-1}(tail), beta p_{k-2}(interior)).
        """
        if not self.rs:
            return diag(self.alpha, self.beta)
        P = continuant_matrix(self.rs)
        return Mat2(self.alpha * P.a, self.alpha * P.b, self.beta * P.c, self.beta * P.d)

    def check(self):
        check = CheckResult()
        if not (is_unit(self.alpha) and is_unit(self.beta)):
            check.fail('alpha and beta must be units')
        k = len(self.rs)
        if k >= 2:
            if sign(self.rs[0]) < 0:
                check.fail('r_1 must be nonnegative')
            for i in range(1, k - 1):
                if sign(self.rs[i]) <= 0:
                    check.fail('r_%d must be positive' % (i + 1))
            if k == 2 and self.rs[0].is_zero() and self.rs[1].is_zero():
                check.fail('r_1 and r_2 cannot both be zero')
        return check

    def is_normal(self):
        return bool(self.check())

    def __eq__(self, other):
        return (isinstance(other, TForm) and
                (self.alpha, self.beta, self.rs) == (other.alpha, other.beta, other.rs))

    def __repr__(self):
        return 'TForm(%s, %s, [%s])' % (self.alpha, self.beta, ', '.join(str(r) for r in self.rs))

    def json(self):
        return {
            'alpha': element_json(self.alpha),
            'beta': element_json(self.beta),
            'rs': [element_json(r) for r in self.rs],
        }

    @classmethod
    def deserialize(cls, rep, ring):
        return cls(element_from_json(rep['alpha'], ring),
                   element_from_json(rep['beta'], ring),
                   [element_from_json(r, ring) for r in rep['rs']])


class BaseShape(object):
    """
    A matrix whose normal form has at most two factors and can be read
    off its entries: ``k0`` is diag(alpha, beta), ``k1`` is
    (alpha r_1, alpha; beta, 0), ``k2`` is (alpha, 0; beta r_2, beta),
    the form with r_1 = 0.
    """
    def __init__(self, kind, alpha, beta, rs):
        self.kind = kind
        self.alpha = alpha
        self.beta = beta
        self.rs = list(rs)

    def tform(self):
        return TForm(self.alpha, self.beta, self.rs)

    def __eq__(self, other):
        return (isinstance(other, BaseShape) and self.kind == other.kind and
                self.tform() == other.tform())

    def __repr__(self):
        return '%s(%s, %s%s)' % (self.kind.upper(), self.alpha, self.beta,
                                 ''.join(', %s' % r for r in self.rs if self.kind == 'k1'))

    def json(self):
        return dict(self.tform().json(), shape=self.kind)


def base_shape(M):
    a, b, c, d = M.entries
    if b.is_zero() and c.is_zero() and is_unit(a) and is_unit(d):
        return BaseShape('k0', a, d, [])
    if d.is_zero() and is_unit(b) and is_unit(c):
        return BaseShape('k1', b, c, [inverse(b) * a])
    if b.is_zero() and is_unit(a) and is_unit(d):
        return BaseShape('k2', a, d, [a.ring.zero(), inverse(d) * c])
    return None


def base_valid_below_root(shape):
    """
    Whether a base shape reached after peeling can start a longer
    normal form: its last coefficient becomes r_1 or an interior one.
    """
    if shape.kind == 'k0':
        return True
    if shape.kind == 'k1':
        return sign(shape.rs[0]) >= 0
    return sign(shape.rs[1]) > 0


def peel_step(M, r):
    """
    M T(r)^-1 = (b, a - b r; d, c - d r).
    """
    a, b, c, d = M.entries
    return Mat2(b, a - b * r, d, c - d * r)


def factor_ge2_euclid(M):
    """
    Gauss-Euclid reduction of an invertible matrix over Z or Q[X].

    :returns: an :class:`ElemCert` whose factors multiply to M
    """
    ring = M.ring
    if not ring.is_euclidean:
        raise NotEuclidean('%s has no Euclidean division' % ring)
    if not is_invertible(M):
        raise NotInvertible('%r is not invertible' % M)
    a, b, c, d = M.entries
    factors = []

    def row1_minus(q):
        # row1 -= q * row2, recorded as its inverse E12(q)
        nonlocal a, b
        a, b = a - q * c, b - q * d
        factors.append(Transvection(1, 2, q))

    def row2_minus(q):
        nonlocal c, d
        c, d = c - q * a, d - q * b
        factors.append(Transvection(2, 1, q))

    while not c.is_zero():
        q = euclidean_divmod(a, c)[0]
        if not q.is_zero():
            row1_minus(q)
        if a.is_zero():
            row1_minus(ring(-1))
        row2_minus(euclidean_divmod(c, a)[0])
    if not b.is_zero():
        row1_minus(b * inverse(d))
    factors = _merge_transvections(factors)
    if not factors or not (a == 1 and d == 1):
        factors.append(DiagUnits(a, d))
    cert = ElemCert(M, factors)
    if cert.product() != M:
        raise InternalInvariantViolation('Euclidean reduction of %r does not multiply back' % M)
    return cert


def _merge_transvections(factors):
    merged = []
    for f in factors:
        if merged and isinstance(f, Transvection) and (merged[-1].i, merged[-1].j) == (f.i, f.j):
            r = merged.pop().r + f.r
            if not r.is_zero():
                merged.append(Transvection(f.i, f.j, r))
        elif not f.r.is_zero():
            merged.append(f)
    return merged


def _push_diag(rs, u, v):
    """
    Moves diag(u, v) from the right of T(rs) to its left, using
    T(r) diag(u, v) = diag(v, u) T(v^-1 r u).
    """
    moved = []
    for r in reversed(rs):
        moved.append(inverse(v) * r * u)
        u, v = v, u
    return u, v, list(reversed(moved))


def _simplify(rs):
    """
    Drops T(0)T(0) pairs and folds T(a)T(0)T(b) into T(a + b).
    """
    changed = True
    rs = list(rs)
    while changed:
        changed = False
        for i in range(len(rs) - 1):
            if rs[i].is_zero() and rs[i + 1].is_zero():
                del rs[i:i + 2]
                changed = True
                break
        else:
            for i in range(1, len(rs) - 1):
                if rs[i].is_zero():
                    rs[i - 1:i + 2] = [rs[i - 1] + rs[i + 1]]
                    changed = True
                    break
    return rs


def _peel(M, depth, limit):
    """
    Depth-first search for the normal form of M; peeling is forced up to
    the two boundary candidates of 0 <= a - b r <= b.
    """
    shape = base_shape(M)
    if shape is not None and (depth == 0 or base_valid_below_root(shape)):
        return shape.tform()
    if M.b.is_zero() or depth >= limit:
        return None
    sigma = 1
    if sign(M.b) < 0:
        M, sigma = -M, -1
    for r in ordered_quotient_candidates(M.a, M.b):
        if depth > 0 and sign(r) < 0:
            continue
        child = peel_step(M, r)
        if depth > 0 and r.is_zero():
            shape = base_shape(child)
            found = shape.tform() if shape is not None and shape.kind == 'k0' else None
        else:
            found = _peel(child, depth + 1, limit)
        if found is not None:
            return TForm(found.alpha * sigma, found.beta * sigma, found.rs + [r])
    return None


def _peeling_limit(M):
    if M.ring.tag == RingId.INTEGER:
        size = max(abs(e.payload) for e in M.entries)
        return 2 * size.bit_length() + 8
    return 64


def normal_form(M, limit=None):
    """
    The normal form of an invertible matrix over a discretely ordered
    ring, or None if none is found within `limit` peeling steps.
    """
    if not M.ring.is_ordered:
        raise NotDiscretelyOrdered('%s carries no discrete order' % M.ring)
    form = _peel(M, 0, limit or _peeling_limit(M))
    if form is not None:
        if form.matrix() != M or not form.is_normal():
            raise InternalInvariantViolation('peeling produced %r for %r' % (form, M))
        logger.debug('normal form of %r is %r', M, form)
    return form


def tform_of_elementary_product(cert):
    """
    Rewrites an elementary factorization into the normal form:
    E12(r) = T(r)T(0), E21(r) = T(0)T(r), unit diagonals moved to the
    left, then zero factors folded away and signs settled by peeling.
    """
    ring = cert.input.ring
    if not ring.is_ordered:
        raise NotDiscretelyOrdered('%s carries no discrete order' % ring)
    if not cert.verify():
        raise PreconditionViolated('the elementary certificate does not multiply to its input')
    alpha, beta, rs = ring.one(), ring.one(), []
    for factor in cert.factors:
        if isinstance(factor, DiagUnits):
            u, v, rs = _push_diag(rs, factor.u, factor.v)
            alpha, beta = alpha * u, beta * v
        elif factor.r.is_zero():
            continue
        elif factor.i == 1:
            rs += [factor.r, ring.zero()]
        else:
            rs += [ring.zero(), factor.r]
    rs = _simplify(rs)
    form = TForm(alpha, beta, rs)
    if form.matrix() != cert.input:
        raise InternalInvariantViolation('rewriting changed the product of %r' % cert)
    if not form.is_normal():
        form = normal_form(cert.input, limit=max(4 * len(rs) + 8, _peeling_limit(cert.input)))
        if form is None:
            raise InternalInvariantViolation('no normal form found for %r' % cert.input)
    return form


def tform_recover_int(M):
    """
    Normal form of an invertible integer matrix.
    """
    if M.ring.tag != RingId.INTEGER:
        raise PreconditionViolated('integer matrix expected, got one over %s' % M.ring)
    if not is_invertible(M):
        raise NotInvertible('%r is not invertible' % M)
    form = normal_form(M)
    if form is None:
        raise InternalInvariantViolation('integer matrix %r has no normal form' % M)
    return form


def check_inequality(form):
    """
    For k >= 2 and M = form.matrix() with b > 0, the last coefficient
    satisfies 0 <= a - b r_k <= b.
    """
    M = form.matrix()
    if len(form.rs) < 2 or sign(M.b) <= 0:
        return True
    t = M.a - M.b * form.rs[-1]
    return sign(t) >= 0 and sign(M.b - t) >= 0
