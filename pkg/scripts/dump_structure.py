#!/usr/bin/env python3
"""Emit the structure-constant table as line records for cross-checking
against other computer algebra systems."""

import sys

from triv9 import e8


def main() -> int:
    _, alg = e8.build()
    sys.stdout.write(e8.dump_structure(alg))
    return 0


if __name__ == "__main__":
    sys.exit(main())
