"""Fuzz the pipeline on random subbands of free bands and report round statistics.

    python3 scripts/fuzz.py --count 2000 --max-generators 6 --max-seeds 5
"""
import argparse
import logging
import time
from collections import Counter

from lrbembed.harness import FuzzConfig, fuzz_subbands


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-generators", type=int, default=5)
    ap.add_argument("--max-seeds", type=int, default=4)
    ap.add_argument("--cap", type=int, default=512)
    ap.add_argument("--no-qvar", action="store_true", help="skip the H-separation check")
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING)

    cfg = FuzzConfig(args.seed, args.count, args.max_generators, args.max_seeds, args.cap, not args.no_qvar)
    start = time.time()
    s = fuzz_subbands(cfg)
    rounds = Counter(c.rounds for c in s.cases if c.rounds is not None)
    sizes = [c.size for c in s.cases if c.size]
    print(f"{s.passed} passed, {s.skipped} skipped in {time.time() - start:.1f}s")
    if sizes:
        print(f"closure sizes {min(sizes)}..{max(sizes)}, mean {sum(sizes) / len(sizes):.1f}")
    print("rounds histogram:", dict(sorted(rounds.items())))
    if s.failure:
        f = s.failure
        print(f"FAILED: case seed {f.case_seed}, seeds {f.seeds}: {f.failure}")
        raise SystemExit(1)


if __name__ == "__main__":
    main()
