"""Classify every left regular band up to a size and summarise the verdicts.

    python3 scripts/census.py --max-size 5 --out census.csv
"""
import argparse
import logging
import time
from collections import Counter

from lrbembed.harness import CensusConfig, census_csv, run_census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="write the CSV here instead of stdout")
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")

    start = time.time()
    rows = run_census(CensusConfig(max_size=args.max_size, seed=args.seed))
    text = census_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")

    by_size = Counter((r.size, r.verdict) for r in rows)
    for (size, verdict), k in sorted(by_size.items()):
        print(f"# size {size}: {k} {verdict}")
    split = sum(1 for r in rows if r.fast_path != r.search)
    missing = sum(1 for r in rows if r.right_hereditary and not r.search)
    outside = sum(1 for r in rows if r.qvar is False)
    print(f"# {len(rows)} classes; fast path disagreed on {split}; "
          f"{missing} right hereditary without an order; {outside} outside the quasivariety; "
          f"{time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
