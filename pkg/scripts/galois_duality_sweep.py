"""Sweep conductors and check compositum = fixed field of the intersection.

For each N, every pair of subgroups of (Z/N)^* is tested; the summary line
gives the number of subgroups, pairs and the wall time.
"""

import argparse
import time
from dataclasses import dataclass

from aqjl.cyclotomic import CyclotomicSubfield, compositum, subgroup_closure, units


@dataclass
class Config:
    n_max: int = 60


def subgroups(N: int) -> set[frozenset[int]]:
    U = units(N)
    found = {subgroup_closure(N, [])}
    frontier = list(found)
    while frontier:
        H = frontier.pop()
        for a in U:
            if a not in H:
                K = subgroup_closure(N, [*H, a])
                if K not in found:
                    found.add(K)
                    frontier.append(K)
    return found


def main(cfg: Config) -> int:
    bad = 0
    for N in range(1, cfg.n_max + 1):
        t0 = time.perf_counter()
        subs = sorted(subgroups(N), key=sorted)
        pairs = 0
        for i, H1 in enumerate(subs):
            for H2 in subs[i:]:
                pairs += 1
                c = compositum([CyclotomicSubfield(N, H1), CyclotomicSubfield(N, H2)])
                if c != CyclotomicSubfield(N, H1 & H2):
                    bad += 1
                    print(f"  mismatch N={N} H1={sorted(H1)} H2={sorted(H2)}")
        print(f"N={N:>3}  subgroups={len(subs):>3}  pairs={pairs:>4}  {time.perf_counter() - t0:.3f}s")
    print("all ok" if not bad else f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
