"""Built-in algebras, all given in a strong Malcev basis through the center."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .free_step2 import build_free_step2
from .lie import LieAlgebra, make_algebra


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    description: str


_FIXED = {
    "heisenberg": (3, [(3, 2, {1: 1})], "3-dim Heisenberg algebra, [Z3,Z2] = Z1"),
    "heisenberg5": (5, [(4, 2, {1: 1}), (5, 3, {1: 1})], "5-dim Heisenberg algebra, [Z4,Z2] = [Z5,Z3] = Z1"),
    "heisenberg_plus_line": (4, [(4, 3, {1: 1})], "Heisenberg algebra plus a central line, dim z = 2"),
    "filiform4": (4, [(4, 3, {2: 1}), (4, 2, {1: 1})], "4-dim filiform algebra, [Z4,Z3] = Z2, [Z4,Z2] = Z1"),
    "filiform5": (
        5,
        [(5, 4, {3: 1}), (5, 3, {2: 1}), (5, 2, {1: 1}), (4, 3, {1: 1})],
        "5-dim filiform algebra, [Z5,Zk] = Z(k-1) for k = 2..4 and [Z4,Z3] = Z1",
    ),
    "abelian4": (4, [], "4-dim abelian algebra"),
}

FREE_STEP2_RANGE = range(2, 9)


def names() -> list[str]:
    return list(_FIXED) + [f"free_step2_m{m}" for m in FREE_STEP2_RANGE]


@lru_cache(maxsize=None)
def get(name: str) -> CatalogEntry:
    if name in _FIXED:
        n, brackets, desc = _FIXED[name]
        return CatalogEntry(name, make_algebra(n, brackets), desc)
    if name.startswith("free_step2_m"):
        try:
            m = int(name[len("free_step2_m"):])
        except ValueError:
            m = -1
        if m in FREE_STEP2_RANGE:
            g, layout = build_free_step2(m)
            return CatalogEntry(name, g, f"free nilpotent step-2 algebra on {m} generators, dim {layout.n}")
    raise KeyError(f"no catalog entry named {name!r}; try one of: {', '.join(names())}")


def entries() -> list[CatalogEntry]:
    return [get(nm) for nm in names()]
