"""Scan the block-recursive operator families level by level.

Reports member count, unitarity, independence rank, and wall time per level.
Rank equals the full 4^d at every level reached here; the scan exists to
keep that observation and its cost on record as levels grow.
"""

from __future__ import annotations

import argparse
import time

from tmes.operators import independence_rank, operator_family


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--max-level",
        type=int,
        default=4,
        help="deepest recursion level to scan (default 4)",
    )
    args = parser.parse_args()
    if args.max_level < 1:
        parser.error("--max-level must be at least 1")

    print("level  members  unitary  rank  seconds")
    for level in range(1, args.max_level + 1):
        start = time.perf_counter()
        family = operator_family(level)
        unitary = all(m.is_unitary() for m in family.members)
        rank = independence_rank(family.members)
        elapsed = time.perf_counter() - start
        print(
            f"{level:5d}  {len(family.members):7d}  {str(unitary):>7s}  "
            f"{rank:4d}  {elapsed:7.3f}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
