"""Plain-text tables of Coh_mu(GL_2k(R)) and Coh_mu(GL_k(H))."""

from __future__ import annotations

from typing import Sequence

from .aq_catalog import AqModule, enumerate_coh, langlands_data
from .roots import Quaternionic, SplitReal
from .weights import WeightLike, as_weight


def _mu_label(mu) -> str:
    entries = list(as_weight(mu))
    if not any(entries):
        return "0"
    return "(" + ",".join(str(x) for x in entries) + ")"


def _lam_label(mu) -> str:
    entries = list(as_weight(mu))
    return "0" if not any(entries) else "λ"


def _grid(header: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    def line(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    rule = "-+-".join("-" * w for w in widths)
    return [line(header), rule, *(line(r) for r in rows)]


def split_table(k: int, mu: WeightLike) -> str:
    mods = enumerate_coh(SplitReal(2 * k), mu)
    by_part: dict = {}
    for m in mods:
        by_part.setdefault(m.partition, {})[m.eps] = m
    lam = _lam_label(mu)
    rows = []
    for part, cols in by_part.items():
        plain = langlands_data(cols[0]).label()
        signed = langlands_data(cols.get(1, cols[0])).label()
        rows.append([str(part), plain, signed])
    header = ["n", f"A_q({lam})", f"A_q({lam})⊗sgn"]
    title = f"Coh_{_mu_label(mu)}(GL_{2 * k}(R))"
    return "\n".join([title, *_grid(header, rows)])


def quaternionic_table(k: int, mu: WeightLike) -> str:
    mods: list[AqModule] = enumerate_coh(Quaternionic(k), mu, canonical=False)
    rows = [[str(m.partition), langlands_data(m).label()] for m in mods]
    header = ["k", f"A_q'({_lam_label(mu)})"]
    title = f"Coh_{_mu_label(mu)}(GL_{k}(H))"
    return "\n".join([title, *_grid(header, rows)])


def render_tables(k: int, mu: WeightLike) -> str:
    return split_table(k, mu) + "\n\n" + quaternionic_table(k, mu) + "\n"
