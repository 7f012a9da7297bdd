"""Defects, socle/top/base sets, filtered and minimal projectives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .kupisch import KupischSeries, NotCyclic, components
from .uniserial import (
    Uniserial,
    injective,
    injective_length,
    is_injective,
    is_projective,
    projective,
)


def _require_cyclic(algebra: KupischSeries, what: str) -> None:
    if not algebra.is_cyclic:
        raise NotCyclic(what)


def defect_by_quotients(algebra: KupischSeries, i: int) -> int:
    """Proper quotients of P_i that are injective (connected algebra)."""
    return sum(1 for t in range(1, algebra[i]) if is_injective(Uniserial(algebra, i, t)))


def defect_by_kupisch(entries: tuple[int, ...] | list[int], i: int) -> int:
    """``max(c_i - c_{i-1}, 0)`` read cyclically; 1-based ``i``."""
    n = len(entries)
    return max(entries[i - 1] - entries[(i - 2) % n], 0)


def defect_of_projective(algebra: KupischSeries, i: int) -> int:
    if not algebra.is_connected:
        offset = 0
        for comp in components(algebra):
            if i <= offset + comp.rank:
                return defect_by_quotients(comp, i - offset)
            offset += comp.rank
        raise IndexError(i)
    d = defect_by_quotients(algebra, i)
    if algebra.is_cyclic:
        k = defect_by_kupisch(algebra.entries, i)
        if d != k:
            raise AssertionError(f"defect routes disagree at P_{i} of {algebra}: {d} vs {k}")
    return d


def defect_vector(algebra: KupischSeries) -> tuple[int, ...]:
    return tuple(defect_of_projective(algebra, i) for i in range(1, algebra.rank + 1))


def defect(algebra: KupischSeries) -> int:
    return sum(defect_vector(algebra))


def is_selfinjective(algebra: KupischSeries) -> bool:
    return algebra.is_cyclic and len(set(algebra.entries)) == 1


def socle_set(algebra: KupischSeries) -> list[int]:
    _require_cyclic(algebra, "socle_set")
    return sorted({algebra.index(i + algebra[i] - 1) for i in range(1, algebra.rank + 1)})


def top_set(algebra: KupischSeries) -> list[int]:
    return sorted(algebra.index(s + 1) for s in socle_set(algebra))


def base_set(algebra: KupischSeries) -> list[Uniserial]:
    """One element per socle-set member, in increasing order of socles."""
    socles = socle_set(algebra)
    marked = set(socles)
    out = []
    for s in socles:
        n = 1
        while algebra.index(s - n) not in marked:
            n += 1
        out.append(Uniserial(algebra, s - n + 1, n))
    return out


def base_lengths_by_kupisch(algebra: KupischSeries) -> list[int]:
    c, n = algebra.entries, algebra.rank
    return [c[(i + 1) % n] - c[i] + 1 for i in range(n) if c[i] <= c[(i + 1) % n]]


def filtered_projectives(algebra: KupischSeries) -> list[int]:
    _require_cyclic(algebra, "filtered_projectives")
    return top_set(algebra)


def projective_injectives(algebra: KupischSeries) -> list[int]:
    return [i for i in range(1, algebra.rank + 1) if is_injective(projective(algebra, i))]


def minimal_projectives(algebra: KupischSeries) -> list[int]:
    """Vertices whose projective has a nonzero non-projective radical."""
    out = []
    for i in range(1, algebra.rank + 1):
        c = algebra[i]
        if c > 1 and not is_projective(Uniserial(algebra, i + 1, c - 1)):
            out.append(i)
    return out


def minimal_injectives(algebra: KupischSeries) -> list[int]:
    """Socle vertices of injectives I with I/soc I nonzero and non-injective."""
    out = []
    for j in range(1, algebra.rank + 1):
        inj = injective(algebra, j)
        if inj.length > 1 and not is_injective(Uniserial(algebra, inj.top, inj.length - 1)):
            out.append(j)
    return out


@dataclass(frozen=True)
class StructureSets:
    socle_set: tuple[int, ...]
    top_set: tuple[int, ...]
    base_set: tuple[Uniserial, ...]
    filtered_projectives: tuple[int, ...]
    defect_per_projective: dict[int, int]
    defect_total: int
    num_relations: int
    minimal_projectives: tuple[int, ...]
    minimal_injectives: tuple[int, ...]
    projective_injectives: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "socle_set": list(self.socle_set),
            "top_set": list(self.top_set),
            "base_set": [{"top": b.top, "len": b.length} for b in self.base_set],
            "filtered_projectives": list(self.filtered_projectives),
            "defect_per_projective": {str(k): v for k, v in self.defect_per_projective.items()},
            "defect": self.defect_total,
            "num_relations": self.num_relations,
            "minimal_projectives": list(self.minimal_projectives),
            "minimal_injectives": list(self.minimal_injectives),
            "projective_injectives": list(self.projective_injectives),
        }


def structure_sets(algebra: KupischSeries) -> StructureSets:
    """Everything at once.  Socle, top and base sets are empty for linear input."""
    dv = defect_vector(algebra)
    total = sum(dv)
    if algebra.is_cyclic:
        socles, tops, base = socle_set(algebra), top_set(algebra), base_set(algebra)
        filtered = tops
        mp, mi, pi = minimal_projectives(algebra), minimal_injectives(algebra), projective_injectives(algebra)
    else:
        socles, tops, base, filtered = [], [], [], []
        mp, mi, pi = [], [], []
        offset = 0
        for comp in components(algebra):
            mp += [offset + i for i in minimal_projectives(comp)]
            mi += [offset + i for i in minimal_injectives(comp)]
            pi += [offset + i for i in projective_injectives(comp)]
            offset += comp.rank
    return StructureSets(
        socle_set=tuple(socles),
        top_set=tuple(tops),
        base_set=tuple(base),
        filtered_projectives=tuple(filtered),
        defect_per_projective={i + 1: d for i, d in enumerate(dv)},
        defect_total=total,
        num_relations=algebra.rank - total,
        minimal_projectives=tuple(mp),
        minimal_injectives=tuple(mi),
        projective_injectives=tuple(pi),
    )
