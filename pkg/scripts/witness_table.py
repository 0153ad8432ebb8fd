"""Classify a batch of two-generator involutive braidings and run the witness suite on each.

    python scripts/witness_table.py --count 50 --seed 7
"""

import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from braidalg.braided_autos import DESCRIPTIONS, AutGroupKind, witness_suite
from braidalg.braiding import DiagonalBraiding, canonical_form


@dataclass
class TableConfig:
    count: int = 50
    seed: int = 7
    vectors: list = field(
        default_factory=lambda: [
            (1, 1, 1, 1), (-1, -1, -1, -1), (-1, 1, 1, -1), (1, -1, -1, 1),
            (1, 1, 1, -1), (-1, 1, 1, 1), (1, -1, -1, -1), (-1, -1, -1, 1),
            (1, 5, Fraction(1, 5), 1), (1, -2, Fraction(-1, 2), -1),
        ]
    )


def run(cfg: TableConfig):
    print(f"{'tau':<18} {'canonical':<18} {'group':<22} {'members':>8} {'rejected':>9} {'agree':>6} {'time':>6}")
    all_ok = True
    for vec in cfg.vectors:
        q = DiagonalBraiding.from_vector(vec)
        start = time.perf_counter()
        rep = witness_suite(q, cfg.seed, cfg.count)
        elapsed = time.perf_counter() - start
        rejected = sum(nm["rejected"] for nm in rep["non_members"])
        print(
            f"{str(q):<18} {str(canonical_form(q)):<18} {rep['group']:<22} "
            f"{rep['members_passed']:>4}/{rep['members']:<3} {rejected:>4}/{len(rep['non_members']):<4} "
            f"{str(rep['methods_agree']):>6} {elapsed:>5.2f}s"
        )
        all_ok &= rep["passed"]
    print()
    for kind in AutGroupKind:
        print(f"{kind.value:<22} {DESCRIPTIONS[kind]}")
    return all_ok


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=TableConfig.count)
    parser.add_argument("--seed", type=int, default=TableConfig.seed)
    args = parser.parse_args()
    return 0 if run(TableConfig(count=args.count, seed=args.seed)) else 1


if __name__ == "__main__":
    raise SystemExit(main())
