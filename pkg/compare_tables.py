#!/usr/bin/env python3
"""
Simple utility to compare two emitted JSON documents.

Usage:
    python compare_tables.py <document1.json> <document2.json>

Example:
    python compare_tables.py golden/table-real-k.json out/table-real-k.json
"""

from utils.compare_tables import main
import sys

if __name__ == "__main__":
    sys.exit(main())
