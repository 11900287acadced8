# -*- coding: utf-8 -*-
#
# PPT documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

# The package lives two levels up.
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from ppt import __version__

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.coverage',
              'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'PPT'
copyright = u'2026, The PPT Authors'

# The short X.Y version.
version = '.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'alabaster'
html_static_path = []
htmlhelp_basename = 'PPTdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'PPT.tex', u'PPT Documentation',
   u'The PPT Authors', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'ppt', u'PPT Documentation',
     [u'The PPT Authors'], 1)
]

autodoc_member_order = 'bysource'
