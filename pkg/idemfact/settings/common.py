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
Django settings for the Idemfact project.

Every default lives here; dev.py and prod.py only adjust the debug flag
and the log level. The library reads the settings below through
django.conf.settings, so the management command and the test suite see
the same configuration.
"""

import os

from django.core.exceptions import ImproperlyConfigured

# dirname(__file__) → repo/idemfact/settings
BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

SECRET_KEY = os.environ.get('IDEMFACT_SECRET_KEY', 'idemfact-is-a-batch-tool-without-sessions')

SENTRY_DSN = os.environ.get('IDEMFACT_SENTRY_DSN')

if SENTRY_DSN:
    try:
        import sentry_sdk
        from sentry_sdk.integrations.django import DjangoIntegration
    except ImportError:
        print('Sentry module is not available although a Sentry DSN was set. '
              'Disabling Sentry reporting...')
    else:
        sentry_sdk.init(dsn=SENTRY_DSN, integrations=[DjangoIntegration()])

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = (
    'rings',
    'matrices',
    'obstruction',
    'curves',
    'console',
)

# The engines are pure computations, nothing is ever persisted.
DATABASES = {}

USE_TZ = True


### Engines ###

def _positive_int_from_env(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        parsed = int(value)
    except ValueError:
        raise ImproperlyConfigured('%s must be a positive integer, got %r' % (name, value))
    if parsed <= 0:
        raise ImproperlyConfigured('%s must be a positive integer, got %r' % (name, value))
    return parsed

# Default depth of the peeling search of the obstruction engine.
OBSTRUCTION_DEPTH_LIMIT = _positive_int_from_env('IDEMFACT_DEPTH', 8)

# Bounded exhaustive search used when the idempotent descent stalls.
DESCENT_FALLBACK_DEPTH = 4

# Re-run every Int(Z) product through the binomial product formula.
# Set to DEBUG in dev.py.
INTZ_CROSSCHECK_PRODUCTS = False

# Seeded families run by the corpus command.
CORPUS_SEED = 20190601
CORPUS_SIZES = {
    'id2': 200,
    'tform': 100,
    'elementary': 100,
    'intz': 100,
    'curve': 100,
}


### Logging ###
# To get a logger use logger = logging.getLogger('idemfact.' + __name__)
# so that records end up in the idemfact logger below.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'console': {
            'format': '%(asctime)s %(levelname)s %(name)s:%(lineno)s  %(message)s',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'console',
        },
    },
    'loggers': {
        '': {
            'level': 'WARNING',
            'handlers': ['console'],
        },
        'idemfact': {
            'level': os.environ.get('IDEMFACT_LOGLEVEL', 'INFO').upper(),
            'handlers': ['console'],
            'propagate': False,
        },
    },
}

# If sentry is set, we send all errors to sentry.

if SENTRY_DSN:
    LOGGING['handlers'].update({
        'sentry': {
            'level': 'ERROR',
            'class': 'sentry_sdk.integrations.logging.EventHandler',
            }
        })

    LOGGING['loggers']['']['handlers'] += ['sentry']
    LOGGING['loggers']['idemfact']['handlers'] += ['sentry']
