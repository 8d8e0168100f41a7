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

import argparse
import sys

from django.core.management.base import BaseCommand

from console.cli import render
from console.cli import run


class Command(BaseCommand):
    help = 'Factor 2x2 matrices, search obstructions and check certificates. Run "idemfact <verb> -h" for the options of a verb.'

    def add_arguments(self, parser):
        parser.add_argument('argv', nargs=argparse.REMAINDER)

    def handle(self, *args, **options):
        exit_code, document = run(options['argv'])
        self.stdout.write(render(document), ending='')
        if exit_code:
            sys.exit(exit_code)
