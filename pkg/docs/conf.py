# -*- coding: utf-8 -*-
#
# Configuração do Sphinx pra documentação do schurlsd.

import sys, os

extensions = ['sphinx.ext.mathjax',]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'schurlsd'
copyright = u'2013, schurlsd'

version = '1.0'
release = '1.0.0'

language = "pt_BR"

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'schurlsddoc'

latex_documents = [
  ('index', 'schurlsd.tex', u'schurlsd', u'schurlsd', 'manual'),
]

man_pages = [
    ('index', 'schurlsd', u'schurlsd', [u'schurlsd'], 1)
]
