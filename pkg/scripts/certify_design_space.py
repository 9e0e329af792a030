"""Exhaustively certify every viable switching-pattern matrix.

Rows with fewer than K-2 ones zero every pair product and duplicates add
nothing, so every viable m-row matrix is the (m+2)-row vocabulary minus two
rows. This script scans all omission pairs per K and reports, for each K,
how many candidates certify every receiver and the best receiver count any
candidate reaches. It reproduces the package's central finding: full
per-receiver decodability exists only for K = 3 and K = 4, and from K = 5
on the ceiling is four certified receivers.

Usage:
    python scripts/certify_design_space.py --max-users 6
"""
import argparse
import itertools

import numpy as np

from biakit.scheme import certify_receivers, make_config, row_vocabulary


def scan(K: int):
    vocab = row_vocabulary(K)
    full = []
    best = 0
    candidates = 0
    for omit in itertools.combinations(range(len(vocab)), 2):
        rows = [vocab[r] for r in range(len(vocab)) if r not in omit]
        cert = certify_receivers(np.array(rows, dtype=np.int64))
        candidates += 1
        best = max(best, sum(cert))
        if all(cert):
            full.append(rows)
    return candidates, full, best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-users", type=int, default=6)
    ap.add_argument("--show-matrices", action="store_true",
                    help="print every fully certified matrix")
    args = ap.parse_args(argv)

    print("K   m  candidates  fully_certified  best_receivers")
    for K in range(3, args.max_users + 1):
        m = make_config(K).block_len
        candidates, full, best = scan(K)
        print("%-3d %-2d %-11d %-16d %d of %d"
              % (K, m, candidates, len(full), best, K))
        if args.show_matrices:
            for rows in full:
                for row in rows:
                    print("      ", " ".join(str(x) for x in row))
                print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
