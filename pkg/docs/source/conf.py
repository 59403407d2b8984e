# Sphinx configuration for the PolarScaling documentation.

import os
import sys
from datetime import datetime
from importlib.metadata import PackageNotFoundError, version

sys.path.insert(0, os.path.abspath("../.."))

# -- Project -----------------------------------------------------------------
project = "PolarScaling"
author = "polarscaling developers"
copyright = f"{datetime.now().year}, polarscaling developers"

try:
    release = version("polarscaling")
except PackageNotFoundError:
    release = "0.0.0"

# -- Extensions --------------------------------------------------------------
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",  # NumPy-style docstrings
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",  # math directives in bounds.py
]

templates_path = ["_templates"]
exclude_patterns = []

napoleon_google_docstring = False
napoleon_numpy_docstring = True

autodoc_typehints = "description"
autoclass_content = "both"
autodoc_default_options = {
    "members": True,
    "undoc-members": True,
    "show-inheritance": True,
}

# -- HTML --------------------------------------------------------------------
html_theme = "sphinx_rtd_theme"
html_static_path = []
