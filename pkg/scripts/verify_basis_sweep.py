#!/usr/bin/env python3
"""Drive the determinant-basis verification across a range of sizes.

Prints one line per n with the per-bidegree certificate summary and
wall-clock time.  Exact mode is the default; --hybrid certifies through
a modular pivot pass, which is what makes n=5 practical.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from altcoinv import coinvariants


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 4
    mode: str = "exact"
    with_dimensions: bool = False


def run(cfg: SweepConfig) -> int:
    failures = 0
    for n in range(2, cfg.max_n + 1):
        t0 = time.perf_counter()
        rep = coinvariants.verify_main_theorem(n, mode=cfg.mode)
        dt = time.perf_counter() - t0
        status = "ok" if rep.ok else "FALSIFIED"
        print(
            f"n={n}: {status}, {rep.total_paths} paths across"
            f" {len(rep.classes)} bidegrees [{cfg.mode}] {dt:.2f}s"
        )
        for line in rep.failures:
            print(f"    {line}")
        failures += len(rep.failures)
        if cfg.with_dimensions:
            t0 = time.perf_counter()
            h, certs = coinvariants.hilbert_series(n, mode=cfg.mode)
            dt = time.perf_counter() - t0
            certified = sum(1 for c in certs if c.certified)
            print(
                f"    full quotient dim {h.at_one()},"
                f" {certified}/{len(certs)} certificates certified, {dt:.2f}s"
            )
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4, help="verify n = 2..max-n")
    ap.add_argument(
        "--mode", choices=["exact", "hybrid", "modular"], default="exact"
    )
    ap.add_argument(
        "--with-dimensions",
        action="store_true",
        help="also compute the full bigraded series per n",
    )
    args = ap.parse_args(argv)
    return run(
        SweepConfig(
            max_n=args.max_n, mode=args.mode, with_dimensions=args.with_dimensions
        )
    )


if __name__ == "__main__":
    raise SystemExit(main())
