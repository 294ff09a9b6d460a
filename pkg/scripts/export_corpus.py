#!/usr/bin/env python3
"""
Write every corpus entry as a category file.
"""

import argparse
import os
import sys
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.corpus import DEFAULT_N, export_entry, load_corpus
from src.utils import atomic_write_text


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Export the built-in corpus")
    parser.add_argument("directory", nargs="?", default="corpus")
    parser.add_argument("--n", type=int, default=DEFAULT_N)
    args = parser.parse_args(argv)

    print("📦 Corpus Export")
    print("=" * 50)
    os.makedirs(args.directory, exist_ok=True)
    entries = load_corpus(n=args.n)
    for entry in entries:
        path = os.path.join(args.directory, f"{entry.name}.cat")
        atomic_write_text(path, export_entry(entry))
        print(f"✅ {entry.name} -> {path}")
    print(f"\n🎉 Exported {len(entries)} entries to {args.directory}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
