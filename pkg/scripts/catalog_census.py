"""Count classes in Coh_mu on both sides for a range of k and a few weights.

Columns: k, mu kind, |Coh(GL_k(H))|, |Coh(GL_2k(R))|, tempered counts,
and whether every quaternionic class has a non-empty fiber.
"""

import argparse
import random
from dataclasses import dataclass

from aqjl.aq_catalog import enumerate_coh, is_tempered
from aqjl.jl_transfer import fiber
from aqjl.roots import Quaternionic, SplitReal


@dataclass
class Config:
    k_max: int = 6
    seed: int = 0
    samples: int = 3


def _weight(rng: random.Random, k: int, style: str) -> tuple[int, ...]:
    if style == "zero":
        return (0,) * (2 * k)
    w = rng.randint(-3, 3)
    lam = [2 * rng.randint(0, 2) + (w % 2)]
    for _ in range(k - 1):
        step = rng.randint(1, 3) if style == "regular" else rng.choice([0, 0, 1])
        lam.append(lam[-1] + 2 * step)
    lam.reverse()
    return tuple([(w + x) // 2 for x in lam] + [(w - x) // 2 for x in reversed(lam)])


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    print(f"{'k':>2}  {'mu':<8}  {'|H|':>4}  {'|R|':>4}  {'temp H':>6}  {'temp R':>6}  fibers")
    for k in range(1, cfg.k_max + 1):
        for style in ("zero", "regular", "mixed"):
            for _ in range(1 if style == "zero" else cfg.samples):
                mu = _weight(rng, k, style)
                quat = enumerate_coh(Quaternionic(k), mu)
                split = enumerate_coh(SplitReal(2 * k), mu)
                ok = all(fiber(m, mu) for m in quat)
                print(
                    f"{k:>2}  {style:<8}  {len(quat):>4}  {len(split):>4}  "
                    f"{sum(map(is_tempered, quat)):>6}  {sum(map(is_tempered, split)):>6}  {'ok' if ok else 'EMPTY'}"
                )


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--samples", type=int, default=Config.samples)
    main(Config(**vars(ap.parse_args())))
