#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# schurdim documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.
import os.path as op
import sys

# include parent directory
pdir = op.dirname(op.dirname(op.abspath(__file__)))
sys.path.insert(0, pdir)

import schurdim  # noqa: E402

# http://www.sphinx-doc.org/en/stable/ext/autodoc.html#confval-autodoc_member_order
# Order class attributes and functions in separate blocks
autodoc_member_order = 'bysource'
autoclass_content = 'both'

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.intersphinx',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode',
              'sphinx.ext.napoleon',
              ]

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'schurdim'
copyright = '2026, schurdim developers'
author = 'schurdim developers'

# The full version, including alpha/beta/rc tags.
version = schurdim.__version__
release = version

language = 'en'

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

# Output file base name for HTML help builder.
htmlhelp_basename = 'schurdimdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'schurdim.tex', 'schurdim Documentation',
     author, 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'schurdim', 'schurdim Documentation',
     [author], 1)
]


intersphinx_mapping = {
    "python": ('https://docs.python.org/3', None),
    "numpy": ('https://numpy.org/doc/stable/', None),
    "networkx": ('https://networkx.org/documentation/stable/', None),
    "sympy": ('https://docs.sympy.org/latest/', None),
    }
