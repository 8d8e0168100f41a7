# Select the settings flavour with IDEMFACT_SETTINGS=dev|prod (default: dev).
import os

if os.environ.get('IDEMFACT_SETTINGS', 'dev') == 'prod':
    from .prod import *
else:
    from .dev import *
