# Sphinx configuration for the Idemfact documentation.
#
# Build with: sphinx-build -b html . _build/html

from datetime import date

# -- Project information -----------------------------------------------------

project = 'Idemfact'
copyright = 'The Idemfact developers, {}'.format(date.today().year)

# -- General configuration ---------------------------------------------------

# The documentation is hand written; the JSON formats are described in
# formats.rst rather than extracted from the sources.
extensions = []

source_suffix = '.rst'
master_doc = 'index'

exclude_patterns = ['_build']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'style_external_links': True,
}
