#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import logging
from collections import namedtuple

from six.moves.configparser import ConfigParser

from .errors import ConfigError


""" Defaults declaration
"""
CANON_LIMIT = 12
SIGMA_BOUND = 9
CHI_BOUND = 16
PSI_BOUND = 10
ENUM_BOUND = 7

CONFIG_FILE = 'foldkit.cfg'
CONFIG_SECTION = 'limits'

# config key -> environment override
ENV_OVERRIDES = {
    'canon': 'FOLDKIT_CANON_LIMIT',
    'sigma': 'FOLDKIT_SIGMA_BOUND',
    'chi': 'FOLDKIT_CHI_BOUND',
    'psi': 'FOLDKIT_PSI_BOUND',
    'enumerate': 'FOLDKIT_ENUM_BOUND',
}

Limits = namedtuple('Limits', ['canon', 'sigma', 'chi', 'psi', 'enumerate'])

DEFAULT_LIMITS = Limits(canon=CANON_LIMIT, sigma=SIGMA_BOUND, chi=CHI_BOUND,
                        psi=PSI_BOUND, enumerate=ENUM_BOUND)

_limits = None


def _to_bound(key, value, source):
    try:
        v = int(value)
    except (TypeError, ValueError):
        raise ConfigError("{0}: '{1}' is not an integer (from {2})"
                          .format(key, value, source))
    if v < 0 or v > 64:
        raise ConfigError('{0}: {1} outside 0..64 (from {2})'
                          .format(key, v, source))
    return v


def load_limits(path=None, environ=None):
    """Build limits from defaults, an optional INI file and the environment

       Later sources win: defaults < [limits] section of `path` (or
       ./foldkit.cfg when present) < FOLDKIT_* environment variables.
    """
    if environ is None:
        environ = os.environ
    values = DEFAULT_LIMITS._asdict()

    if path is None and os.path.exists(CONFIG_FILE):
        path = CONFIG_FILE
    if path is not None:
        parser = ConfigParser()
        if not parser.read(path):
            raise ConfigError('Cannot read config file {0}'.format(path))
        if parser.has_section(CONFIG_SECTION):
            for key, value in parser.items(CONFIG_SECTION):
                if key not in values:
                    raise ConfigError("Unknown limit '{0}' in {1}"
                                      .format(key, path))
                values[key] = _to_bound(key, value, path)
        logging.debug('Loaded limits from {0}'.format(path))

    for key, var in ENV_OVERRIDES.items():
        if environ.get(var):
            values[key] = _to_bound(key, environ[var], var)

    return Limits(**values)


def get_limits():
    """Limits currently in effect (loaded lazily on first use)
    """
    global _limits
    if _limits is None:
        _limits = load_limits()
    return _limits


def set_limits(limits):
    global _limits
    _limits = limits


def reset_limits():
    global _limits
    _limits = None
