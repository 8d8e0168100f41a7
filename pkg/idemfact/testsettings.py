from idemfact.settings.common import *

DEBUG = False

# Cross-check every Int(Z) product during the tests
INTZ_CROSSCHECK_PRODUCTS = True

CORPUS_SIZES = {
    'id2': 50,
    'tform': 25,
    'elementary': 25,
    'intz': 25,
    'curve': 20,
}

# We delete the logger 'idemfact', so that it goes to root logger and gets catched by pytest caplog fixture
try:
    del LOGGING['loggers']['idemfact']
except KeyError:
    pass
