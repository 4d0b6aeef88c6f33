#!/usr/bin/env python3
"""
Filename: run.py
Created Date: 2026-10-18
Description: Main entry point for coxcheck.
"""

import sys

from src.cli import run


def main():
    """Main entry point"""
    from src.utils import init_utils
    init_utils()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
