#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Text and file helpers shared by the graph, trace and coloring codecs.

Using `regex` instead of Python built-in `re` module.
"""

import os
import sys
import gzip
import logging

import regex as re

from .errors import ExportError

re_comment = re.compile(r'#.*$')
re_space = re.compile(r'\s+')


def remove_extra_space(text):
    """Remove multiple occurrence of whitespaces
    """
    return re_space.sub(' ', text).strip()


def content_lines(text):
    """Yield (line number, stripped line) for non-blank, non-comment lines

       Line numbers are 1-based and count every physical line.
    """
    for i, line in enumerate(text.splitlines()):
        line = remove_extra_space(re_comment.sub('', line))
        if line:
            yield i + 1, line


def read_text(filename):
    """Read a whole text input; '-' means stdin, '.gz' files are unpacked
    """
    if filename == '-':
        return sys.stdin.read()
    _open = gzip.open if filename.endswith('.gz') else open
    with _open(filename, 'rt', encoding='ascii') as f:
        return f.read()


def get_export_path(filename):
    """Returns absolute export filename
    """
    return os.path.abspath(os.path.expanduser(filename))


def export(filename, text):
    """Export text to output filename (creating the directory)
    """
    fname = get_export_path(filename)
    logging.info("Exporting: {0}...".format(fname))
    extdir = os.path.dirname(fname)
    try:
        if extdir and not os.path.exists(extdir):
            os.makedirs(extdir)
        with open(fname, 'wt', encoding='ascii') as f:
            f.write(text)
    except (IOError, OSError) as e:
        raise ExportError('cannot write {0}: {1}'.format(fname, e.strerror))
    return fname
