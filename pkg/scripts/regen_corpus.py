#!/usr/bin/env python3
"""Regenerate the frozen expected-report fixtures for the corpus.

Run after any intentional change to report content; review the diff before
committing, since the test suite byte-compares against these files.
"""

import sys
from pathlib import Path

from planecurves.cli import report_json_bytes

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main() -> int:
    for spec in sorted(CORPUS.glob("*.curve")):
        out = spec.with_suffix(".expected.json")
        data = report_json_bytes(spec)
        out.write_bytes(data)
        print(f"wrote {out.name} ({len(data)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
