"""Cosmological polytopes of multigraphs.

Polynomials are returned as coefficient lists, constant term first.
"""

import sys

from ._core import *  # noqa: F401,F403
from ._core import run_cli


def main() -> int:
    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
