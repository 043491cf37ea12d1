import sys
from contextlib import contextmanager
try:
    from StringIO import StringIO
except:
    from io import StringIO


@contextmanager
def capture(command, *args, **kwargs):
    """Run command with stdout redirected; yields (return value, output)
    """
    out, sys.stdout = sys.stdout, StringIO()
    try:
        result = command(*args, **kwargs)
        sys.stdout.seek(0)
        output = sys.stdout.read()
    finally:
        sys.stdout = out
    yield result, output
