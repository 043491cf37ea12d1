#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# foldkit documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.doctest',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

source_suffix = '.rst'
master_doc = 'index'

project = 'foldkit'
copyright = '2021, foldkit developers'
author = 'foldkit developers'
version = '0.1'
release = '0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'
autodoc_member_order = 'bysource'

html_theme = 'alabaster'
html_sidebars = {
    '**': [
        'relations.html',
        'searchbox.html',
    ]
}
htmlhelp_basename = 'foldkitdoc'

man_pages = [
    (master_doc, 'foldkit', 'foldkit Documentation', [author], 1)
]
