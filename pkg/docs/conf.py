# -*- coding: utf-8 -*-

# linrank documentation build configuration file

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from linrank.about import version as linrank_version

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.extlinks',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinxarg.ext',
]

autodoc_default_flags = ['members']

# The suffix(es) of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = u'linrank'
copyright = u'2016-2017, linrank contributors'
author = u'linrank contributors'

version = linrank_version()
release = version

language = None

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_static_path = []

htmlhelp_basename = 'linrankdoc'

intersphinx_mapping = {'python': ('https://docs.python.org/3.6', None)}
