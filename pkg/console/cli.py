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
Command line front end. :func:`run` parses the arguments, calls the
engines and returns the exit code with the document to print; the
``idemfact`` management command writes that document out.

Exit codes: 0 on success, 1 when ``verify`` rejects a certificate,
2 on algebraic errors and 3 on unreadable input.
"""

import argparse
import json
import logging
import os

from console import corpus
from console.verification import verify_document
from curves.coordinate_ring import new_curve
from curves.independence import independence_cert
from matrices.elementary import ElemCert
from matrices.elementary import factor_ge2_euclid
from matrices.elementary import tform_of_elementary_product
from matrices.elementary import tform_recover_int
from matrices.idempotents import factor_id2
from matrices.mat2 import Mat2
from obstruction.engine import Factored
from obstruction.engine import decide_ge2_dor
from rings import intz
from rings.core import RingId
from rings.errors import AlgebraError
from rings.errors import InputParseError
from rings.errors import PreconditionViolated
from rings.parsing import parse_ring

logger = logging.getLogger('idemfact.' + __name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_ALGEBRA_ERROR = 2
EXIT_PARSE_ERROR = 3


class ArgumentParser(argparse.ArgumentParser):
    """
    Reports bad arguments as :class:`InputParseError` instead of exiting.
    """
    def error(self, message):
        raise InputParseError(message)


def _load_json(value, what):
    """
    Inline JSON, or the path of a JSON file (looked up in the bundled
    data directory when it does not exist as given).
    """
    text = value
    for path in (value, os.path.join(DATA_DIR, value)):
        if os.path.isfile(path):
            with open(path, 'r') as f:
                text = f.read()
            break
    try:
        return json.loads(text)
    except ValueError as e:
        raise InputParseError('cannot read %s %r: %s' % (what, value, e))


def _read_matrix(args):
    doc = _load_json(args.matrix, 'matrix')
    tag = args.ring or (doc.get('ring') if isinstance(doc, dict) else None)
    if tag is None:
        raise InputParseError('no ring given: pass --ring or a matrix document with a ring')
    return Mat2.deserialize(doc, parse_ring(tag))


def _factor_id2(args):
    return factor_id2(_read_matrix(args)).json()


def _factor_ge2(args):
    return factor_ge2_euclid(_read_matrix(args)).json()


def _tform_document(form, M):
    return dict({'kind': form.kind, 'ring': form.ring.json(), 'input': M.json()}, **form.json())


def _tform(args):
    if args.certificate:
        doc = _load_json(args.certificate, 'certificate')
        ring = parse_ring(doc['input']['ring'])
        cert = ElemCert.deserialize(doc, ring)
        return _tform_document(tform_of_elementary_product(cert), cert.input)
    M = _read_matrix(args)
    if M.ring.tag == RingId.INTEGER:
        return _tform_document(tform_recover_int(M), M)
    trace = decide_ge2_dor(M, args.depth)
    if not isinstance(trace.verdict, Factored):
        raise PreconditionViolated('no normal form found for %s (%s)' % (M, trace.verdict.name))
    return _tform_document(trace.verdict.form, M)


def _obstruct(args):
    return decide_ge2_dor(_read_matrix(args), args.depth).json()


def _intz_convert(args):
    f = intz.parse(args.poly)
    return {
        'kind': 'intz',
        'binom': list(f.coords),
        'polynomial': str(intz.to_rational_poly(f)),
    }


def _curve_report(args):
    curve = new_curve(args.F)
    return independence_cert(curve, seed=args.seed).json()


def _verify(args):
    check = verify_document(_load_json(args.certificate, 'certificate'))
    return check.json(), check.ok


def _corpus(args):
    results = corpus.run_corpus(seed=args.seed)
    passed = all(result.ok for result in results)
    if args.json:
        return corpus.results_json(results), passed
    return corpus.results_table(results), passed


VERBS = {
    'factor-id2': _factor_id2,
    'factor-ge2': _factor_ge2,
    'tform': _tform,
    'obstruct': _obstruct,
    'intz-convert': _intz_convert,
    'curve-report': _curve_report,
    'verify': _verify,
    'corpus': _corpus,
}


def build_parser():
    parser = ArgumentParser(prog='idemfact',
                            description='Exact factorization of 2x2 matrices over rings.')
    subparsers = parser.add_subparsers(dest='verb')

    def matrix_options(sub, required=True):
        sub.add_argument('--ring', help='Z, Q, Q[X] or IntZ (defaults to the ring of the matrix document)')
        sub.add_argument('--matrix', required=required,
                         help='inline JSON rows, or a JSON file')

    for verb in ('factor-id2', 'factor-ge2'):
        matrix_options(subparsers.add_parser(verb))
    sub = subparsers.add_parser('tform')
    matrix_options(sub, required=False)
    sub.add_argument('--certificate', help='elementary certificate to rewrite')
    sub.add_argument('--depth', type=int)
    sub = subparsers.add_parser('obstruct')
    matrix_options(sub)
    sub.add_argument('--depth', type=int)
    sub = subparsers.add_parser('intz-convert')
    sub.add_argument('--poly', required=True)
    sub = subparsers.add_parser('curve-report')
    sub.add_argument('--F', required=True, dest='F')
    sub.add_argument('--seed', type=int)
    sub = subparsers.add_parser('verify')
    sub.add_argument('--certificate', required=True)
    sub = subparsers.add_parser('corpus')
    sub.add_argument('--seed', type=int)
    sub.add_argument('--json', action='store_true')
    for sub in subparsers.choices.values():
        sub.add_argument('--output', help='write the document to this file')
    return parser


def error_document(e):
    return {'error': {'type': type(e).__name__, 'message': str(e)}}


def run(argv):
    """
    :returns: (exit code, document), the document being a dict to be
        printed as JSON or, for the corpus table, plain text
    """
    try:
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise InputParseError('a verb is required: %s' % ', '.join(VERBS))
        if args.verb == 'tform' and not (args.matrix or args.certificate):
            raise InputParseError('tform needs --matrix or --certificate')
        if getattr(args, 'depth', None) is not None and args.depth < 1:
            raise InputParseError('--depth must be positive')
        outcome = VERBS[args.verb](args)
    except InputParseError as e:
        return EXIT_PARSE_ERROR, error_document(e)
    except AlgebraError as e:
        return EXIT_ALGEBRA_ERROR, error_document(e)
    except (KeyError, TypeError) as e:
        return EXIT_PARSE_ERROR, error_document(InputParseError('malformed input: %s' % e))
    except Exception as e:
        logger.exception('unexpected failure running %s', ' '.join(argv))
        return EXIT_ALGEBRA_ERROR, error_document(e)

    document, accepted = outcome if isinstance(outcome, tuple) else (outcome, True)
    exit_code = EXIT_OK if accepted else EXIT_REJECTED
    if args.output:
        with open(args.output, 'w') as f:
            f.write(render(document))
    return exit_code, document


def render(document):
    if isinstance(document, str):
        return document
    return json.dumps(document, indent=2) + '\n'
