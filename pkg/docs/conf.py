# docs/conf.py
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

project = "frobenius-characters"
author = "Matthew Dobley"
release = "0.1.0"

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode"]
autodoc_member_order = "bysource"
exclude_patterns = ["_build", "test_plan"]
html_theme = "alabaster"
