#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Exceptions raised by foldkit.

Every class carries the process exit code the command line front end uses
when the exception escapes a command.
"""

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RANGE = 4


class FoldkitError(Exception):
    exit_code = EXIT_PRECONDITION


class ConfigError(FoldkitError):
    """Bad value in a config file or environment override
    """
    exit_code = EXIT_PRECONDITION


class GraphParseError(FoldkitError):
    """Malformed graph6, edge list or family description

       `offset` is the 0-based byte offset (graph6) and `line` the 1-based
       line number (text formats) where parsing stopped, when known.
    """
    exit_code = EXIT_PARSE

    def __init__(self, message, offset=None, line=None):
        if offset is not None:
            message = '{0} (byte offset {1})'.format(message, offset)
        if line is not None:
            message = '{0} (line {1})'.format(message, line)
        super(GraphParseError, self).__init__(message)
        self.offset = offset
        self.line = line


class TraceFormatError(GraphParseError):
    pass


class ExportError(FoldkitError):
    """Output file or directory could not be written
    """
    exit_code = EXIT_PRECONDITION


class PreconditionError(FoldkitError):
    exit_code = EXIT_PRECONDITION


class DisconnectedGraphError(PreconditionError):
    pass


class SizeLimitError(PreconditionError):
    """Input larger than a solver's configured bound
    """

    def __init__(self, what, n, bound):
        super(SizeLimitError, self).__init__(
            '{0}: graph has {1} vertices, bound is {2}'.format(what, n, bound))
        self.n = n
        self.bound = bound


class CanonicalizationLimitError(SizeLimitError):
    """Graph too large to canonicalize
    """

    def __init__(self, n, bound):
        super(CanonicalizationLimitError, self).__init__(
            'too large to canonicalize', n, bound)


class FoldPreconditionError(PreconditionError):
    """Simple fold requested on a pair not at distance two
    """

    def __init__(self, x, y, dist):
        if dist is None:
            reason = 'unreachable'
        else:
            reason = 'distance {0}'.format(dist)
        super(FoldPreconditionError, self).__init__(
            'cannot fold {0} and {1}: {2}'.format(x, y, reason))
        self.x = x
        self.y = y
        self.distance = dist


class KRangeError(FoldkitError):
    """Requested clique size outside the achievable interval
    """
    exit_code = EXIT_RANGE

    def __init__(self, k, low, high):
        super(KRangeError, self).__init__(
            'k={0} outside [{1},{2}]'.format(k, low, high))
        self.k = k
        self.low = low
        self.high = high
