"""Uniserial modules over a connected Nakayama algebra and their resolutions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .kupisch import KupischSeries, KupischError

INF = math.inf
Dim = int | float


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Uniserial:
    """The module with top ``S_top`` and composition length ``length``."""

    algebra: KupischSeries = field(repr=False)
    top: int
    length: int

    def __post_init__(self) -> None:
        if not self.algebra.is_connected:
            raise KupischError("uniserial modules live over a connected algebra")
        top = self.algebra.index(self.top)
        object.__setattr__(self, "top", top)
        if not 1 <= self.length <= self.algebra[top]:
            raise KupischError(f"no uniserial with top {top} and length {self.length}")

    @property
    def socle(self) -> int:
        return self.algebra.index(self.top + self.length - 1)

    def factors(self) -> list[int]:
        """Composition factors from the top down."""
        return [self.algebra.index(self.top + k) for k in range(self.length)]

    def __str__(self) -> str:
        return f"M(top={self.top}, len={self.length})"


def simple(algebra: KupischSeries, i: int) -> Uniserial:
    return Uniserial(algebra, i, 1)


def projective(algebra: KupischSeries, i: int) -> Uniserial:
    return Uniserial(algebra, i, algebra[i])


def injective_length(algebra: KupischSeries, j: int) -> int:
    """Length of the injective envelope of ``S_j``."""
    t = 1
    while algebra.in_range(j - t) and algebra[j - t] >= t + 1:
        t += 1
    return t


def injective(algebra: KupischSeries, j: int) -> Uniserial:
    """The indecomposable injective with socle ``S_j``."""
    length = injective_length(algebra, j)
    return Uniserial(algebra, algebra.index(j - length + 1), length)


def all_uniserials(algebra: KupischSeries) -> Iterator[Uniserial]:
    for i in range(1, algebra.rank + 1):
        for length in range(1, algebra[i] + 1):
            yield Uniserial(algebra, i, length)


def is_projective(m: Uniserial) -> bool:
    return m.length == m.algebra[m.top]


def is_injective(m: Uniserial) -> bool:
    return m.length == injective_length(m.algebra, m.socle)


def projective_cover(m: Uniserial) -> Uniserial:
    return projective(m.algebra, m.top)


def injective_envelope(m: Uniserial) -> Uniserial:
    return injective(m.algebra, m.socle)


def radical(m: Uniserial) -> Uniserial | None:
    if m.length == 1:
        return None
    return Uniserial(m.algebra, m.top + 1, m.length - 1)


def syzygy(m: Uniserial) -> Uniserial | None:
    c = m.algebra[m.top]
    if m.length == c:
        return None
    return Uniserial(m.algebra, m.top + m.length, c - m.length)


def cosyzygy(m: Uniserial) -> Uniserial | None:
    env = injective_envelope(m)
    if env.length == m.length:
        return None
    return Uniserial(m.algebra, env.top, env.length - m.length)


def hom_dim(m: Uniserial, n: Uniserial) -> int:
    """dim Hom(m, n): count lengths t whose top-t quotient of m sits at the bottom of n."""
    if m.algebra != n.algebra:
        raise KupischError("modules over different algebras")
    alg = m.algebra
    return sum(
        1
        for t in range(1, min(m.length, n.length) + 1)
        if alg.index(n.top + n.length - t) == m.top
    )


def hom_dim_bruteforce(m: Uniserial, n: Uniserial) -> int:
    """Enumerate quotients of m and submodules of n and count equal factor lists."""
    fm, fn = m.factors(), n.factors()
    quotients = [fm[:t] for t in range(1, len(fm) + 1)]
    submodules = [fn[len(fn) - t:] for t in range(1, len(fn) + 1)]
    return sum(1 for q in quotients for s in submodules if q == s)


@dataclass(frozen=True)
class ResolutionSummary:
    """Tops (or socles, for coresolutions) of successive terms.

    ``period`` is None when the resolution terminates; otherwise the
    (co)syzygy sequence revisits a state and the dimension is infinite.
    """

    terms: tuple[int, ...]
    terminates: bool
    period: int | None
    dimension: Dim

    @property
    def final_status(self) -> str:
        if self.terminates:
            return f"terminates-at-step-{len(self.terms) - 1}"
        return f"infinite-periodic({self.period})"


def _resolve(
    m: Uniserial,
    step: Callable[[Uniserial], Uniserial | None],
    term: Callable[[Uniserial], Uniserial],
    label: Callable[[Uniserial], int],
    cap: int | None,
) -> ResolutionSummary:
    if cap is None:
        cap = sum(m.algebra.entries) + 1
    seen: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    cur: Uniserial | None = m
    while cur is not None:
        state = (cur.top, cur.length)
        if state in seen:
            return ResolutionSummary(tuple(terms), False, len(terms) - seen[state], INF)
        if len(terms) >= cap:
            raise CapExceeded(f"no termination or repetition within {cap} steps")
        seen[state] = len(terms)
        terms.append(label(term(cur)))
        cur = step(cur)
    return ResolutionSummary(tuple(terms), True, None, len(terms) - 1)


def resolve_projective(m: Uniserial, cap: int | None = None) -> ResolutionSummary:
    return _resolve(m, syzygy, projective_cover, lambda p: p.top, cap)


def resolve_injective(m: Uniserial, cap: int | None = None) -> ResolutionSummary:
    return _resolve(m, cosyzygy, injective_envelope, lambda e: e.socle, cap)


def pdim(m: Uniserial) -> Dim:
    return resolve_projective(m).dimension


def injdim(m: Uniserial) -> Dim:
    return resolve_injective(m).dimension


def dominant_dimension(m: Uniserial) -> Dim:
    """Number of leading projective-injective terms in the minimal injective coresolution."""
    seen: set[tuple[int, int]] = set()
    count = 0
    cur: Uniserial | None = m
    while cur is not None:
        if (cur.top, cur.length) in seen:
            return INF
        seen.add((cur.top, cur.length))
        if not is_projective(injective_envelope(cur)):
            return count
        count += 1
        cur = cosyzygy(cur)
    return INF


def codominant_dimension(m: Uniserial) -> Dim:
    """Number of leading projective-injective terms in the minimal projective resolution."""
    seen: set[tuple[int, int]] = set()
    count = 0
    cur: Uniserial | None = m
    while cur is not None:
        if (cur.top, cur.length) in seen:
            return INF
        seen.add((cur.top, cur.length))
        if not is_injective(projective_cover(cur)):
            return count
        count += 1
        cur = syzygy(cur)
    return INF
