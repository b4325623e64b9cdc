#!/usr/bin/env python3
"""Download the FIMI benchmark transaction files used by the acceptance suite.

Usage:
    python scripts/fetch_datasets.py [--dest data]

Needs internet access to the FIMI repository (fimi.uantwerpen.be) or one of
its mirrors.  If this machine is offline, run the script elsewhere and copy
the resulting ``mushroom.dat`` and ``chess.dat`` into ``data/``.
"""

from __future__ import annotations

import argparse
import sys
import urllib.request
from pathlib import Path

DATASETS = {
    "mushroom.dat": (
        8124,
        [
            "http://fimi.uantwerpen.be/data/mushroom.dat",
            "https://fimi.uantwerpen.be/data/mushroom.dat",
        ],
    ),
    "chess.dat": (
        3196,
        [
            "http://fimi.uantwerpen.be/data/chess.dat",
            "https://fimi.uantwerpen.be/data/chess.dat",
        ],
    ),
}


def fetch(name: str, expected_lines: int, urls: list[str], dest: Path) -> bool:
    target = dest / name
    if target.exists():
        print(f"{target} already present, skipping")
        return True
    for url in urls:
        try:
            print(f"fetching {url} ...")
            with urllib.request.urlopen(url, timeout=60) as response:
                payload = response.read()
        except OSError as exc:
            print(f"  failed: {exc}", file=sys.stderr)
            continue
        text = payload.decode("ascii")
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != expected_lines:
            print(
                f"  unexpected shape: {len(lines)} non-empty lines, wanted {expected_lines}",
                file=sys.stderr,
            )
            continue
        tmp = target.with_suffix(".tmp")
        tmp.write_bytes(payload)
        tmp.replace(target)
        print(f"  wrote {target} ({len(lines)} transactions)")
        return True
    return False


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", default="data", help="target directory (default: data)")
    args = parser.parse_args()
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    ok = True
    for name, (expected_lines, urls) in DATASETS.items():
        if not fetch(name, expected_lines, urls, dest):
            print(f"could not fetch {name}", file=sys.stderr)
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
