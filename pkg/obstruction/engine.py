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
Decision and obstruction search for the GE2 property over discretely
ordered rings (the integers and Int(Z)).

An invertible M = alpha*beta T(r_1)...T(r_k) in normal form can be
peeled from the right: M T(r_k)^-1 = (b, a - b r_k; d, c - d r_k), and
r_k satisfies 0 <= a - b r_k <= b once b > 0 (the sign of M is
normalized first). The search explores every admissible r_k and
records the comparisons it relied on so that a refutation can be
checked independently by :func:`check_obstruction`.
"""

import logging

from django.conf import settings

from matrices.elementary import TForm
from matrices.elementary import base_shape
from matrices.elementary import base_valid_below_root
from matrices.elementary import peel_step
from matrices.mat2 import Mat2
from matrices.mat2 import is_invertible
from rings import intz
from rings.core import Ordering
from rings.core import RingId
from rings.core import compare
from rings.core import ordered_quotient_candidates
from rings.core import sign
from rings.errors import AlgebraError
from rings.errors import CheckResult
from rings.errors import InputParseError
from rings.errors import InternalInvariantViolation
from rings.errors import NotDiscretelyOrdered
from rings.errors import NotInvertible
from rings.errors import PreconditionViolated
from rings.parsing import element_from_json
from rings.parsing import element_json

logger = logging.getLogger('idemfact.' + __name__)

RELATIONS = {
    Ordering.LESS: '<',
    Ordering.EQUAL: '=',
    Ordering.GREATER: '>',
}

#: Sign of r forced by each case of the trichotomy on (a, b).
CASE_CONSTRAINTS = {
    'i': 'r > 0',
    'ii': 'r = 0',
    'iii': 'r <= 0',
    'boundary': 'r in {0, 1}',
}


def base_check(M):
    """
    Detects the normal forms of length 0, 1 and the length 2 form
    with r_1 = 0.

    >>> from rings.core import INTEGERS
    >>> base_check(Mat2.from_rows([[3, 1], [1, 0]], INTEGERS))
    K1(1, 1, 3)
    """
    return base_shape(M)


def _comparisons(a, b):
    zero = a.ring.zero()
    return [
        {'left': 'a', 'right': 'b', 'relation': RELATIONS[compare(a, b)]},
        {'left': 'a', 'right': '0', 'relation': RELATIONS[compare(a, zero)]},
        {'left': 'b', 'right': '0', 'relation': RELATIONS[compare(b, zero)]},
    ]


def classify(a, b):
    """
    The case of (a, b), b > 0: `i` when a > b, `boundary` when a = b,
    `ii` when 0 < a < b and `iii` when a <= 0.
    """
    by_b = compare(a, b)
    if by_b == Ordering.GREATER:
        return 'i'
    if by_b == Ordering.EQUAL:
        return 'boundary'
    if sign(a) > 0:
        return 'ii'
    return 'iii'


def _respects_case(case, r):
    s = sign(r)
    if case == 'i':
        return s > 0
    if case == 'ii':
        return s == 0
    if case == 'iii':
        return s <= 0
    return r == 0 or r == 1


class CandidateSet(object):
    """
    The admissible last coefficients for a top row (a, b) with b > 0,
    together with the comparisons and strata that justify them.
    """
    FINITE = 'finite'
    EMPTY = 'empty'

    def __init__(self, case, comparisons, candidates, strata=()):
        self.case = case
        self.comparisons = comparisons
        self.candidates = list(candidates)
        self.strata = [s if isinstance(s, dict) else s.json() for s in strata]

    @property
    def status(self):
        return self.FINITE if self.candidates else self.EMPTY

    def __repr__(self):
        return '<CandidateSet %s %s>' % (self.status, self.candidates)

    def json(self):
        return {
            'status': self.status,
            'case': self.case,
            'comparisons': self.comparisons,
            'candidates': [element_json(r) for r in self.candidates],
            'strata': self.strata,
        }


def admissible_rk(a, b):
    """
    All r with 0 <= a - b r <= b, checked against the sign forced by
    the case of (a, b).

    >>> from rings.core import INTEGERS
    >>> admissible_rk(INTEGERS(7), INTEGERS(3))
    <CandidateSet finite [RingElem(Z, 2)]>
    """
    if not a.ring.is_ordered:
        raise NotDiscretelyOrdered('%s carries no discrete order' % a.ring)
    if sign(b) <= 0:
        raise PreconditionViolated('admissible coefficients need b > 0, got %s' % b)
    case = classify(a, b)
    strata = []
    if a.ring.tag == RingId.INTZ:
        strata = intz.quotient_strata(a.payload, b.payload)
    candidates = ordered_quotient_candidates(a, b)
    for r in candidates:
        if not _respects_case(case, r):
            raise InternalInvariantViolation(
                'candidate %s for (%s, %s) breaks case %s (%s)' % (r, a, b, case, CASE_CONSTRAINTS[case]))
    return CandidateSet(case, _comparisons(a, b), candidates, strata)


class ObstructionNode(object):
    FACTORED = 'factored'
    REFUTED = 'refuted'
    UNKNOWN = 'unknown'

    def __init__(self, matrix, depth):
        self.matrix = matrix
        self.depth = depth
        self.sigma = 1
        self.case = None
        self.candidates = None
        self.children = []
        self.rejected = []
        self.outcome = None
        self.note = None
        self.form = None

    def walk(self):
        yield self
        for r, child in self.children:
            for node in child.walk():
                yield node

    def json(self):
        return {
            'matrix': self.matrix.json()['rows'],
            'depth': self.depth,
            'sigma': self.sigma,
            'case': self.case,
            'candidates': self.candidates.json() if self.candidates is not None else None,
            'children': [{'r': element_json(r), 'node': child.json()} for r, child in self.children],
            'rejected': [{'r': element_json(r), 'reason': reason} for r, reason in self.rejected],
            'outcome': self.outcome,
            'note': self.note,
            'tform': self.form.json() if self.form is not None else None,
        }

    @classmethod
    def deserialize(cls, rep, ring):
        node = cls(Mat2.deserialize(rep['matrix'], ring), rep['depth'])
        node.sigma = rep['sigma']
        node.case = rep['case']
        cands = rep.get('candidates')
        if cands is not None:
            node.candidates = CandidateSet(cands['case'], cands['comparisons'],
                [element_from_json(r, ring) for r in cands['candidates']], cands['strata'])
        node.children = [(element_from_json(c['r'], ring), cls.deserialize(c['node'], ring))
                         for c in rep.get('children', [])]
        node.rejected = [(element_from_json(c['r'], ring), c['reason']) for c in rep.get('rejected', [])]
        node.outcome = rep['outcome']
        node.note = rep.get('note')
        if rep.get('tform') is not None:
            node.form = TForm.deserialize(rep['tform'], ring)
        return node


class Factored(object):
    name = 'factored'

    def __init__(self, form):
        self.form = form

    def json(self):
        return {'verdict': self.name, 'tform': self.form.json()}


class NotFactorable(object):
    name = 'not-factorable'

    def json(self):
        return {'verdict': self.name}


class Unknown(object):
    name = 'unknown'

    def __init__(self, reason):
        self.reason = reason

    def json(self):
        return {'verdict': self.name, 'reason': self.reason}


class ObstructionTrace(object):
    kind = 'obstruction-trace'

    def __init__(self, root, tree, verdict, depth_limit):
        self.root = root
        self.tree = tree
        self.verdict = verdict
        self.depth_limit = depth_limit

    def nodes(self):
        return list(self.tree.walk())

    def __repr__(self):
        return '<ObstructionTrace %r: %s>' % (self.root, self.verdict.name)

    def json(self):
        return {
            'kind': self.kind,
            'root': self.root.json(),
            'depth_limit': self.depth_limit,
            'verdict': self.verdict.json(),
            'tree': self.tree.json(),
        }

    @classmethod
    def deserialize(cls, rep, ring):
        try:
            verdict_rep = rep['verdict']
            name = verdict_rep['verdict']
            if name == Factored.name:
                verdict = Factored(TForm.deserialize(verdict_rep['tform'], ring))
            elif name == NotFactorable.name:
                verdict = NotFactorable()
            elif name == Unknown.name:
                verdict = Unknown(verdict_rep.get('reason'))
            else:
                raise InputParseError('unknown verdict %r' % name)
            return cls(Mat2.deserialize(rep['root'], ring),
                       ObstructionNode.deserialize(rep['tree'], ring),
                       verdict, rep['depth_limit'])
        except (KeyError, TypeError) as e:
            raise InputParseError('malformed obstruction trace: %s' % e)


def _explore(M, depth, limit):
    node = ObstructionNode(M, depth)
    shape = base_check(M)
    if shape is not None and (depth == 0 or base_valid_below_root(shape)):
        node.case = 'base-' + shape.kind
        node.outcome = node.FACTORED
        node.form = shape.tform()
        return node
    if M.b.is_zero():
        node.case = 'degenerate'
        node.outcome = node.REFUTED
        node.note = 'b = 0 below the root and no base shape applies'
        return node
    if depth >= limit:
        node.outcome = node.UNKNOWN
        node.note = 'depth limit %d reached' % limit
        return node
    if sign(M.b) < 0:
        node.sigma = -1
    N = M * node.sigma
    node.candidates = admissible_rk(N.a, N.b)
    node.case = node.candidates.case
    logger.debug('node %r at depth %d: case %s, candidates %s',
                 M, depth, node.case, node.candidates.candidates)
    for r in node.candidates.candidates:
        if depth > 0 and sign(r) < 0:
            node.rejected.append((r, 'negative coefficient below the root'))
            continue
        child_matrix = peel_step(N, r)
        if depth > 0 and r.is_zero():
            child = ObstructionNode(child_matrix, depth + 1)
            child_shape = base_check(child_matrix)
            if child_shape is not None and child_shape.kind == 'k0':
                child.case = 'base-k0'
                child.outcome = child.FACTORED
                child.form = child_shape.tform()
            else:
                child.case = 'zero-step'
                child.outcome = child.REFUTED
                child.note = 'a zero interior coefficient must be followed by a diagonal'
        else:
            child = _explore(child_matrix, depth + 1, limit)
        node.children.append((r, child))
        if child.outcome == child.FACTORED:
            found = child.form
            node.form = TForm(found.alpha * node.sigma, found.beta * node.sigma, found.rs + [r])
            node.outcome = node.FACTORED
            return node
    if any(child.outcome == child.UNKNOWN for r, child in node.children):
        node.outcome = node.UNKNOWN
    else:
        node.outcome = node.REFUTED
    return node


def decide_ge2_dor(M, depth_limit=None):
    """
    Searches for the normal form of an invertible matrix over Z or
    Int(Z), peeling at most `depth_limit` factors.

    :returns: an :class:`ObstructionTrace` whose verdict is
        :class:`Factored`, :class:`NotFactorable` or :class:`Unknown`
    """
    if not M.ring.is_ordered:
        raise NotDiscretelyOrdered('%s carries no discrete order' % M.ring)
    if depth_limit is None:
        depth_limit = settings.OBSTRUCTION_DEPTH_LIMIT
    if depth_limit < 1:
        raise PreconditionViolated('depth limit must be positive, got %s' % depth_limit)
    if not is_invertible(M):
        raise NotInvertible('%r is not invertible: determinant %s' % (M, M.det()))
    tree = _explore(M, 0, depth_limit)
    if tree.outcome == tree.FACTORED:
        if tree.form.matrix() != M or not tree.form.is_normal():
            raise InternalInvariantViolation('reconstruction %r does not give %r' % (tree.form, M))
        verdict = Factored(tree.form)
    elif tree.outcome == tree.REFUTED:
        verdict = NotFactorable()
    else:
        blocking = next(n for n in tree.walk() if n.outcome == n.UNKNOWN and not n.children)
        verdict = Unknown('%s at %s' % (blocking.note, blocking.matrix))
    logger.info('verdict for %s: %s', M, verdict.name)
    return ObstructionTrace(M, tree, verdict, depth_limit)


def _check_node(node, expected, limit, check, path):
    where = 'node %s' % (path or 'root')
    if node.matrix != expected:
        check.fail('%s: matrix does not match the peeling of its parent' % where)
        return
    M = node.matrix
    shape = base_check(M)
    if node.case is not None and node.case.startswith('base-'):
        if shape is None or 'base-' + shape.kind != node.case:
            check.fail('%s: not a %s shape' % (where, node.case))
        elif node.depth > 0 and not base_valid_below_root(shape):
            check.fail('%s: base shape not allowed below the root' % where)
        elif node.outcome != node.FACTORED or node.form != shape.tform():
            check.fail('%s: base shape has the wrong form' % where)
        return
    if node.case == 'zero-step':
        if (shape is not None and shape.kind == 'k0') or node.outcome != node.REFUTED:
            check.fail('%s: zero step wrongly refuted' % where)
        return
    if node.case == 'degenerate':
        if not M.b.is_zero() or node.depth == 0 or node.outcome != node.REFUTED:
            check.fail('%s: wrongly marked degenerate' % where)
        elif shape is not None and base_valid_below_root(shape):
            check.fail('%s: degenerate node has a valid base shape' % where)
        return
    if shape is not None and (node.depth == 0 or base_valid_below_root(shape)):
        check.fail('%s: base shape %s was missed' % (where, shape.kind))
        return
    if node.outcome == node.UNKNOWN and node.candidates is None:
        if node.depth < limit:
            check.fail('%s: unknown before the depth limit' % where)
        return
    if M.b.is_zero():
        check.fail('%s: b = 0 but the node was peeled' % where)
        return
    sigma = -1 if sign(M.b) < 0 else 1
    if node.sigma != sigma:
        check.fail('%s: wrong sign normalization' % where)
        return
    N = M * sigma
    a, b = N.a, N.b
    recorded = node.candidates
    if recorded is None:
        check.fail('%s: candidate set missing' % where)
        return
    if recorded.comparisons != _comparisons(a, b):
        check.fail('%s: recorded comparisons do not hold' % where)
    if node.case != classify(a, b) or recorded.case != node.case:
        check.fail('%s: case tag %s is not justified' % (where, node.case))
    try:
        fresh = admissible_rk(a, b)
    except AlgebraError as e:
        check.fail('%s: candidates cannot be recomputed: %s' % (where, e))
        return
    if fresh.candidates != recorded.candidates:
        check.fail('%s: candidate set differs from recomputation' % where)
    if fresh.strata != recorded.strata:
        check.fail('%s: strata differ from recomputation' % where)
    for r in recorded.candidates:
        if not _respects_case(node.case, r):
            check.fail('%s: candidate %s breaks case %s' % (where, r, node.case))

    covered = set()
    for r, reason in node.rejected:
        covered.add(r)
        if node.depth == 0 or sign(r) >= 0:
            check.fail('%s: candidate %s rejected without cause' % (where, r))
    for r, child in node.children:
        covered.add(r)
        if r not in fresh.candidates:
            check.fail('%s: child for non-candidate %s' % (where, r))
            continue
        child_path = '%s/%s' % (path, r) if path else str(r)
        if node.depth > 0 and r.is_zero():
            if child.case not in ('base-k0', 'zero-step'):
                check.fail('node %s: zero step must end in a diagonal' % child_path)
        _check_node(child, peel_step(N, r), limit, check, child_path)

    outcomes = [child.outcome for r, child in node.children]
    if node.outcome == node.FACTORED:
        if not outcomes or outcomes[-1] != node.FACTORED:
            check.fail('%s: factored without a factored child' % where)
            return
        r, child = node.children[-1]
        if child.form is None or node.form is None:
            check.fail('%s: factored without a form' % where)
            return
        expected_form = TForm(child.form.alpha * sigma, child.form.beta * sigma, child.form.rs + [r])
        if node.form != expected_form or node.form.matrix() != M:
            check.fail('%s: reconstruction does not give the node matrix' % where)
        return
    if covered != set(fresh.candidates):
        check.fail('%s: not every candidate was explored' % where)
    if node.FACTORED in outcomes:
        check.fail('%s: a factored child was ignored' % where)
    if node.outcome == node.REFUTED and node.UNKNOWN in outcomes:
        check.fail('%s: refuted with an unknown child' % where)
    if node.outcome == node.UNKNOWN and node.UNKNOWN not in outcomes:
        check.fail('%s: unknown without an unknown child' % where)


def check_obstruction(trace):
    """
    Re-derives every comparison, case tag, candidate set and peeling
    product of a trace, and checks the verdict against the tree.

    :returns: a :class:`CheckResult`
    """
    check = CheckResult()
    try:
        if not is_invertible(trace.root):
            check.fail('root is not invertible')
            return check
        _check_node(trace.tree, trace.root, trace.depth_limit, check, '')
        outcome = trace.tree.outcome
        verdict = trace.verdict
        if isinstance(verdict, Factored):
            if outcome != ObstructionNode.FACTORED:
                check.fail('verdict factored but the tree is %s' % outcome)
            if verdict.form.matrix() != trace.root or verdict.form != trace.tree.form:
                check.fail('reconstruction does not give the root')
            if not verdict.form.is_normal():
                check.fail('factored form is not normal')
        elif isinstance(verdict, NotFactorable):
            if outcome != ObstructionNode.REFUTED:
                check.fail('verdict not-factorable but the tree is %s' % outcome)
        elif outcome != ObstructionNode.UNKNOWN:
            check.fail('verdict unknown but the tree is %s' % outcome)
    except AlgebraError as e:
        check.fail('check aborted: %s' % e)
    return check
