#!/usr/bin/env python3
"""Scaling benchmark: direct vs fast transform on random-ring product graphs.

Defaults cover N = 32 .. 1024 with the direct path capped at 256; pass
--sizes/--direct-cap to push further.  Equivalent CLI:

    mwgfrft bench --sizes 32,64,128,256,512,1024 --direct-cap 256 \
        --L 4 --alpha 0.7 --kernel gauss --seed 0 --out results/bench.json
"""

import argparse
from pathlib import Path

from mwgfrft.cli import main as cli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results/timing")
    ap.add_argument("--sizes", default="32,64,128,256,512,1024")
    ap.add_argument("--direct-cap", type=int, default=256)
    ap.add_argument("--L", type=int, default=4)
    args = ap.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    code = cli(["bench", "--sizes", args.sizes, "--reps", "3",
                "--alpha", "0.7", "--L", str(args.L), "--kernel", "gauss",
                "--seed", "0", "--direct-cap", str(args.direct_cap),
                "--out", str(out / "bench.json")])
    raise SystemExit(code)


if __name__ == "__main__":
    main()
