"""Print the split and quaternionic tables of Coh_mu for a given k.

    python3 scripts/render_tables.py --k 2 --mu 0
    python3 scripts/render_tables.py --k 3 --mu 2,1,0,0,-1,-2 --out tables.txt
"""

import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from aqjl.tables import render_tables
from aqjl.weights import parse_weight


@dataclass
class Config:
    k: int = 2
    mu: str = "0"
    out: Optional[Path] = None


def main(cfg: Config) -> None:
    text = render_tables(cfg.k, parse_weight(cfg.mu, 2 * cfg.k))
    if cfg.out:
        cfg.out.write_text(text, encoding="utf-8")
    else:
        print(text, end="")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--mu", default=Config.mu)
    ap.add_argument("--out", type=Path)
    main(Config(**vars(ap.parse_args())))
