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
Production specific settings for Idemfact.

Long corpus runs, warnings only.
"""

import os

from .common import *

DEBUG = False

LOGLEVEL = 'WARNING'
LOGGING['loggers']['idemfact']['level'] = os.environ.get('IDEMFACT_LOGLEVEL', LOGLEVEL).upper()

CORPUS_SIZES = {
    'id2': 1000,
    'tform': 500,
    'elementary': 500,
    'intz': 500,
    'curve': 500,
}
