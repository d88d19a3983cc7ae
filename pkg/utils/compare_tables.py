#!/usr/bin/env python3
"""
Simple utility to compare two emitted JSON documents.

Compares table, classify and verify documents entry by entry and reports the
first mismatching field. Timing fields are skipped unless requested.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Tuple

TIMING_FIELDS = ("seconds", "total_time", "avg_time_per_check", "timing")
ENTRY_KEYS = ("columns", "rows", "reports")


def load_document(file_path: str) -> Tuple[str, List[Dict[str, Any]]]:
    """
    Load a document and pick its list of entries.

    Returns:
        (kind, entries) tuple; a document without an entry list is one entry
    """
    with open(file_path, "r", encoding="utf-8") as f:
        doc = json.load(f)
    for key in ENTRY_KEYS:
        if isinstance(doc.get(key), list):
            return key, doc[key]
    return "document", [doc]


def strip_fields(value: Any, ignored) -> Any:
    """Drop ignored keys at every nesting level."""
    if isinstance(value, dict):
        return {k: strip_fields(v, ignored) for k, v in value.items() if k not in ignored}
    if isinstance(value, list):
        return [strip_fields(v, ignored) for v in value]
    return value


def compare_entries(entry1: Dict[str, Any], entry2: Dict[str, Any], ignored=()) -> Tuple[bool, str]:
    """
    Compare two entries field by field.

    Returns:
        (matches, error_message) tuple
    """
    first = strip_fields(entry1, set(ignored))
    second = strip_fields(entry2, set(ignored))
    for key in sorted(set(first) | set(second)):
        if key not in first or key not in second:
            return False, f"Field '{key}' present in only one document"
        if first[key] != second[key]:
            return False, f"Field '{key}' mismatch: {json.dumps(first[key], ensure_ascii=False)} vs " \
                          f"{json.dumps(second[key], ensure_ascii=False)}"
    return True, ""


def main(argv=None):
    """Main comparison function."""
    parser = argparse.ArgumentParser(
        description="Compare two table, classify or verify JSON documents",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Example:
  python compare_tables.py golden/table-real-k.json out/table-real-k.json
  python compare_tables.py --ignore witnesses a/verify-all.json b/verify-all.json
        """,
    )
    parser.add_argument("file1", help="First JSON document")
    parser.add_argument("file2", help="Second JSON document")
    parser.add_argument("--ignore", action="append", default=[], metavar="FIELD", help="Skip a field (repeatable)")
    parser.add_argument("--with-timing", action="store_true", help="Also compare timing fields")

    args = parser.parse_args(argv)
    ignored = set(args.ignore)
    if not args.with_timing:
        ignored.update(TIMING_FIELDS)

    print("Loading documents...")
    print(f"  File 1: {args.file1}")
    print(f"  File 2: {args.file2}")
    if ignored:
        print(f"  Ignoring: {', '.join(sorted(ignored))}")

    kind1, entries1 = load_document(args.file1)
    kind2, entries2 = load_document(args.file2)

    print("\nEntries:")
    print(f"  File 1: {len(entries1)} {kind1}")
    print(f"  File 2: {len(entries2)} {kind2}")

    if kind1 != kind2:
        print(f"\n❌ MISMATCH: document kinds differ ({kind1} vs {kind2})")
        return 1
    if len(entries1) != len(entries2):
        print("\n⚠️  WARNING: Entry counts differ!")

    print("\nComparing entries...")

    min_length = min(len(entries1), len(entries2))
    for i in range(min_length):
        matches, error = compare_entries(entries1[i], entries2[i], ignored)
        if not matches:
            print(f"\n❌ MISMATCH at entry {i + 1} (index {i}):")
            print(f"   {error}")
            return 1

    if len(entries1) != len(entries2):
        print(f"\n⚠️  First {min_length} entries match, but entry counts differ.")
        return 1

    print(f"\n✅ SUCCESS: All {len(entries1)} entries match!")
    return 0


if __name__ == "__main__":
    sys.exit(main())
