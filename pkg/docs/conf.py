#!/usr/bin/env python3

# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

# -- General configuration ------------------------------------------------

import os
import sys

# Document the source tree without installing the package.
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

extensions = [
  "sphinx_copybutton",
  "sphinxcontrib.rsvgconverter",
  "sphinx.ext.autodoc",
  "sphinx.ext.intersphinx",
  "sphinx.ext.autosummary",
  "sphinx.ext.mathjax",
  "sphinx.ext.napoleon",
]

autosummary_generate = True
python_use_unqualified_type_names = True
autodoc_member_order = "bysource"

intersphinx_mapping = {
  "python": ("https://docs.python.org/3", None),
  "numpy": ("https://numpy.org/doc/stable", None),
  "pandas": ("https://pandas.pydata.org/docs", None),
  "scipy": ("https://docs.scipy.org/doc/scipy", None),
}

templates_path = [".templates"]

source_suffix = ".rst"

master_doc = "index"

# General information about the project.
project = "fermatpy"
copyright = "2024, The fermatpy developers"
author = "The fermatpy developers"

try:
    from fermatpy import __version__ as version
except ImportError:
    version = "unknown"
release = version

language = "en"

exclude_patterns = [".build", "release.rst"]

default_role = "any"

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = "furo"

htmlhelp_basename = "fermatpy_doc"

# Tweak copybutton https://sphinx-copybutton.readthedocs.io/en/latest/use.html
copybutton_selector = "div:not(.no-copybutton) > div.highlight > pre"
copybutton_exclude = '.linenos, .gp, .go'
copybutton_copy_empty_lines = False

# -- Options for LaTeX output ---------------------------------------------

latex_engine = "xelatex"

latex_elements = {
  'papersize': 'a4paper',
  'pointsize': '10pt',
  "classoptions": ",openany,oneside",
}

latex_documents = [
  (master_doc, "fermatpy.tex", "fermatpy Documentation", author, "manual"),
]
