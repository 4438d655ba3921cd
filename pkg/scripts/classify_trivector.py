#!/usr/bin/env python3
"""Classify trivectors from the command line or stdin, one expression per
line; thin wrapper over the library for batch experiments."""

import sys

from triv9 import e8
from triv9.classify import classify
from triv9.trivector import parse_trivector


def main() -> int:
    _, alg = e8.build()
    exprs = sys.argv[1:] or [line.strip() for line in sys.stdin if line.strip()]
    for expr in exprs:
        rep = classify(alg, parse_trivector(expr))
        print(f"{expr}: " + " ".join(rep.lines()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
