import json
import os
import random

import pytest

from curves.coordinate_ring import new_curve
from matrices.mat2 import Mat2
from rings.core import INTEGERS
from rings.parsing import parse_ring

BASE_DIR = os.path.dirname(os.path.abspath(__file__))


@pytest.fixture
def zz():
    """
    Builds an integer matrix from its rows: zz([[2, 3], [0, 0]]).
    """
    def build(rows):
        return Mat2.from_rows(rows, INTEGERS)
    return build


@pytest.fixture
def witness():
    """
    The invertible Int(Z) matrix (1+2X, 4; 1+4X+2C(X,2), 5+2X) shipped
    with the console app.
    """
    with open(os.path.join(BASE_DIR, 'console', 'data', 'witness.json')) as f:
        doc = json.load(f)
    return Mat2.deserialize(doc, parse_ring(doc['ring']))


@pytest.fixture(scope='session')
def quartic():
    return new_curve('X^4 + Y^4 + 1')


@pytest.fixture(scope='session')
def conic():
    return new_curve('X^2 + Y^2 + 1')


@pytest.fixture
def rng(settings):
    return random.Random(settings.CORPUS_SEED)
