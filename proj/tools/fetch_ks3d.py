#!/usr/bin/env python3
"""Download the 4319 reflexive 3-polytopes (PALP format) into data/.

The file ships inside the sage-data-polytopes wheel on PyPI; this fetches the
wheel with pip and extracts the single data file. Polytopes appear in the same
order as the Graded Ring Database ids 1..4319.
"""

import argparse
import pathlib
import subprocess
import sys
import tempfile
import zipfile

MEMBER = "sage_data_polytopes/data/reflexive_polytopes_3d"
ROOT = pathlib.Path(__file__).resolve().parent.parent


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=pathlib.Path, default=ROOT / "data" / "reflexive_polytopes_3d")
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        subprocess.run(
            [sys.executable, "-m", "pip", "download", "--no-deps", "--only-binary=:all:",
             "-d", tmp, "sage-data-polytopes"],
            check=True,
        )
        wheels = list(pathlib.Path(tmp).glob("*.whl"))
        if not wheels:
            print("no wheel downloaded", file=sys.stderr)
            return 1
        with zipfile.ZipFile(wheels[0]) as zf:
            data = zf.read(MEMBER)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_bytes(data)
    print(f"wrote {args.out} ({len(data)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
