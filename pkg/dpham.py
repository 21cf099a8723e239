#!/usr/bin/env python3
"""Command line entry point: python3 dpham.py cycle 7 3."""
import sys

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
