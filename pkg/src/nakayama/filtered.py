"""The syzygy filtered algebra, its iterates, and the cosyzygy filtered algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .kupisch import (
    KupischSeries,
    NotCyclic,
    from_cyclic_word,
    iso_key,
    opposite,
)
from .structure import (
    base_set,
    filtered_projectives,
    is_selfinjective,
    minimal_projectives,
    projective_injectives,
)
from .uniserial import Uniserial, hom_dim, injective, projective


class FiltrationMismatch(AssertionError):
    """Internal consistency failure between a recipe and its oracle."""


@dataclass(frozen=True)
class EpsilonResult:
    """``theta`` with maps into its vertices.

    ``vertex_map`` sends the index of a base-set element (position in
    ``base_set``, 0-based) to its Theta vertex; ``filtered_projective_map``
    sends a filtered projective's vertex to the same Theta vertex.
    """

    theta: KupischSeries
    vertex_map: dict[int, int]
    filtered_projective_map: dict[int, int]
    word: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "theta": self.theta.to_dict(),
            "vertex_map": {str(k): v for k, v in self.vertex_map.items()},
            "filtered_projective_map": {str(k): v for k, v in self.filtered_projective_map.items()},
        }


def _word_to_series(word: Sequence[int]) -> tuple[KupischSeries, int]:
    """Series for a cyclic word plus the rotation applied (index of new vertex 1)."""
    word = tuple(word)
    if 1 not in word:
        return KupischSeries("cyclic", word), 0
    cut = (max(i for i, c in enumerate(word) if c == 1) + 1) % len(word)
    return from_cyclic_word(word), cut


def _peel(algebra: KupischSeries, start: int, length: int, pieces: dict[int, int], step: int) -> int:
    """Count consecutive pieces covering ``length`` factors from ``start``.

    ``pieces`` maps an anchor vertex to a piece length; walking moves by
    ``step * len`` (down from a top when step=+1, up from a socle when step=-1).
    """
    pos, remaining, count = start, length, 0
    while remaining > 0:
        size = pieces.get(algebra.index(pos))
        if size is None or size > remaining:
            raise FiltrationMismatch(f"no clean filtration from vertex {start} of {algebra}")
        remaining -= size
        pos += step * size
        count += 1
    return count


def epsilon_word(algebra: KupischSeries) -> tuple[list[int], list[Uniserial]]:
    """Base-set layer counts of the filtered projectives, ordered by their tops."""
    if not algebra.is_cyclic:
        raise NotCyclic("epsilon")
    base = sorted(base_set(algebra), key=lambda b: b.top)
    pieces = {b.top: b.length for b in base}
    word = [_peel(algebra, b.top, algebra[b.top], pieces, +1) for b in base]
    return word, base


def epsilon(algebra: KupischSeries) -> EpsilonResult:
    word, base = epsilon_word(algebra)
    theta, cut = _word_to_series(word)
    n = len(word)
    by_socle = {b.socle: k for k, b in enumerate(sorted(base, key=lambda b: b.socle))}
    vertex_map: dict[int, int] = {}
    fp_map: dict[int, int] = {}
    for k, b in enumerate(base):
        v = (k - cut) % n + 1
        vertex_map[by_socle[b.socle]] = v
        fp_map[b.top] = v
    return EpsilonResult(theta, vertex_map, fp_map, tuple(word))


def endomorphism_word(modules: Sequence[Uniserial], op: bool = False) -> list[int]:
    """Lengths of indecomposable projectives of End(M) (or End(M)^op) via Hom dimensions.

    For End(M) the entry at ``k`` is ``sum_j dim Hom(M_j, M_k)``; for the
    opposite ring it is ``sum_j dim Hom(M_k, M_j)``.  The caller fixes the
    vertex order.
    """
    if op:
        return [sum(hom_dim(mk, mj) for mj in modules) for mk in modules]
    return [sum(hom_dim(mj, mk) for mj in modules) for mk in modules]


def epsilon_by_hom(algebra: KupischSeries) -> list[int]:
    """Oracle for ``epsilon_word``: End of the filtered projectives, ordered by top."""
    tops = filtered_projectives(algebra)
    return endomorphism_word([projective(algebra, i) for i in tops])


def epsilon_tower(algebra: KupischSeries, max_steps: int = 32) -> list[KupischSeries]:
    """Iterate epsilon until the result is linear, selfinjective, or steps run out."""
    if not algebra.is_cyclic:
        raise NotCyclic("epsilon_tower")
    stages: list[KupischSeries] = []
    cur = algebra
    for _ in range(max_steps):
        cur = epsilon(cur).theta
        stages.append(cur)
        if not cur.is_cyclic or is_selfinjective(cur):
            break
    return stages


def nabla_pieces(algebra: KupischSeries) -> dict[int, int]:
    """Costandard pieces keyed by socle: one per top of a projective-injective."""
    tops = projective_injectives(algebra)
    marked = set(tops)
    pieces = {}
    for t in tops:
        n = 1
        while algebra.index(t + n) not in marked:
            n += 1
        pieces[algebra.index(t + n - 1)] = n
    return pieces


def eta_word(algebra: KupischSeries) -> list[int]:
    """Layer counts of the filtered injectives, peeled from the socle side.

    Filtered injectives have socle ``t - 1`` for each top ``t`` of a
    projective-injective; they are listed by decreasing socle.
    """
    if not algebra.is_cyclic:
        raise NotCyclic("eta")
    pieces = nabla_pieces(algebra)
    socles = sorted({algebra.index(t - 1) for t in projective_injectives(algebra)}, reverse=True)
    return [_peel(algebra, s, injective(algebra, s).length, pieces, -1) for s in socles]


def eta_by_hom(algebra: KupischSeries) -> list[int]:
    """Oracle: End(filtered injectives)^op, vertices by decreasing socle."""
    socles = sorted({algebra.index(t - 1) for t in projective_injectives(algebra)}, reverse=True)
    return endomorphism_word([injective(algebra, s) for s in socles], op=True)


def eta_by_minimal_projectives(algebra: KupischSeries) -> list[int]:
    """Oracle: End(minimal projectives)^op, vertices by decreasing top."""
    tops = sorted(minimal_projectives(algebra), reverse=True)
    return endomorphism_word([projective(algebra, i) for i in tops], op=True)


def eta(algebra: KupischSeries) -> KupischSeries:
    word = eta_word(algebra)
    oracle = eta_by_minimal_projectives(algebra)
    if iso_key(from_cyclic_word(word)) != iso_key(from_cyclic_word(oracle)):
        raise FiltrationMismatch(f"eta recipe {word} disagrees with End oracle {oracle} on {algebra}")
    return from_cyclic_word(word)


@dataclass(frozen=True)
class DualityWitness:
    """``holds``: epsilon(L) = eta(L)^op.

    ``opposite_route_holds``: epsilon(L^op) = eta(L), the same statement after
    passing to opposites.  ``opposite_route_op_holds`` records the variant
    epsilon(L^op) = eta(L)^op, which is not an identity.
    """

    holds: bool
    epsilon: KupischSeries
    eta: KupischSeries
    eta_opposite: KupischSeries
    epsilon_of_opposite: KupischSeries
    opposite_route_holds: bool
    opposite_route_op_holds: bool

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict[str, Any]:
        return {
            "holds": self.holds,
            "epsilon": self.epsilon.to_dict(),
            "eta": self.eta.to_dict(),
            "eta_opposite": self.eta_opposite.to_dict(),
            "epsilon_of_opposite": self.epsilon_of_opposite.to_dict(),
            "opposite_route_holds": self.opposite_route_holds,
            "opposite_route_op_holds": self.opposite_route_op_holds,
        }


def check_duality(algebra: KupischSeries) -> DualityWitness:
    """Compare epsilon with the opposite of eta, and epsilon of the opposite with eta."""
    e = epsilon(algebra).theta
    h = eta(algebra)
    h_op = opposite(h)
    e_of_op = epsilon(opposite(algebra)).theta
    return DualityWitness(
        holds=iso_key(e) == iso_key(h_op),
        epsilon=e,
        eta=h,
        eta_opposite=h_op,
        epsilon_of_opposite=e_of_op,
        opposite_route_holds=iso_key(e_of_op) == iso_key(h),
        opposite_route_op_holds=iso_key(e_of_op) == iso_key(h_op),
    )
