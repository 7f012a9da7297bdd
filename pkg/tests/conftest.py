from __future__ import annotations

import functools

import numpy as np
import pytest
from hypothesis import assume, strategies as st

from nakayama import KupischSeries, Uniserial, cyclic, universe


@functools.lru_cache(maxsize=None)
def cached_universe(max_rank: int, max_entry: int) -> tuple[KupischSeries, ...]:
    return tuple(universe(max_rank, max_entry))


@pytest.fixture(scope="session")
def small_universe() -> tuple[KupischSeries, ...]:
    return cached_universe(6, 8)


def hom_dim_linear_algebra(m: Uniserial, n: Uniserial) -> int:
    """dim Hom(m, n) as the solution space of the commutativity equations.

    Each uniserial is a representation of the quiver with arrows i -> i+1:
    basis e_0..e_{len-1}, e_k at vertex top+k, and the arrow out of e_k's
    vertex sends e_k to e_{k+1}.  A morphism is a family of vertex maps that
    commutes with every arrow.
    """
    alg = m.algebra
    r = alg.rank

    def basis(u: Uniserial) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for k in range(u.length):
            out.setdefault(alg.index(u.top + k), []).append(k)
        return out

    bm, bn = basis(m), basis(n)
    unknowns = [(v, a, b) for v in range(1, r + 1) for a in bm.get(v, []) for b in bn.get(v, [])]
    if not unknowns:
        return 0
    col = {u: i for i, u in enumerate(unknowns)}
    rows = []
    # f(arrow . e_a) = arrow . f(e_a) for every basis vector e_a of m
    for a in range(m.length):
        v = alg.index(m.top + a)
        if not alg.in_range(v + 1):
            continue
        w = alg.index(v + 1)
        for b in bn.get(w, []):
            row = np.zeros(len(unknowns))
            if a + 1 < m.length:
                row[col[(w, a + 1, b)]] += 1
            if b >= 1 and (v, a, b - 1) in col:
                row[col[(v, a, b - 1)]] -= 1
            rows.append(row)
    if not rows:
        return len(unknowns)
    return len(unknowns) - int(np.linalg.matrix_rank(np.array(rows)))


@st.composite
def cyclic_series(draw, max_rank: int = 9, max_start: int = 8, max_rise: int = 3) -> KupischSeries:
    n = draw(st.integers(1, max_rank))
    first = draw(st.integers(2, max_start))
    entries = [first]
    for _ in range(n - 1):
        prev = entries[-1]
        entries.append(draw(st.integers(max(2, prev - 1), prev + max_rise)))
    assume(entries[-1] <= entries[0] + 1)
    return cyclic(*entries)
