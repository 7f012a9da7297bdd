"""Reverses of the syzygy filtered construction.

Given Theta (cyclic, or linear read cyclically through its flattened word) and
weights ``w`` with ``w_i >= defect P_i``, a reverse Lambda has rank
``rank Theta + |w|``.  Lambda's vertices split into intervals, one per Theta
vertex ``i``; the interval starts at the filtered vertex ``z_i`` and is followed
by a gap of ``w_{i+1}`` non-filtered vertices.

Each gap entry is fixed by its socle.  Inside the gap after ``z_i`` the socles
climb weakly through the Lambda socles that lie strictly between soc P(z_i) and
soc P(z_{i+1}), each attained at least once.  Such a climb is encoded by
``b_positions`` (where each intermediate socle is first reached) and ``lifts``
(how many trailing entries already share the socle of P(z_{i+1})).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .kupisch import (
    CYCLIC,
    KupischError,
    KupischSeries,
    NotAdmissible,
    canonical_form,
    components,
    from_components,
    iso_key,
)
from .structure import defect, is_selfinjective


class ReverseError(KupischError):
    pass


class WeightTooSmall(ReverseError):
    def __init__(self, index: int, weight: int, needed: int) -> None:
        self.index = index
        super().__init__(f"w_{index} = {weight} is below defect P_{index} = {needed}")


class InvalidChoice(ReverseError):
    pass


class ConstructionInadmissible(AssertionError):
    """The construction produced something it promises never to produce."""


class NoDefectInvariantReverse(ReverseError):
    pass


@dataclass(frozen=True)
class ReverseChoice:
    """Free parameters of a weighted reverse.

    ``b_positions[i]`` and ``lifts[i]`` describe the gap after ``z_{i+1}``
    (0-based ``i``); positions are 1-based inside the gap.  ``a0`` is how many
    entries of the last gap stay at the end of the series; the rest move to the
    front.  ``None`` keeps them all, so the series starts at ``z_1``.
    """

    b_positions: tuple[tuple[int, ...], ...]
    lifts: tuple[int, ...]
    a0: int | None = None


@dataclass(frozen=True)
class ReverseLayout:
    """Positions and forced values of a weighted reverse, before any choice."""

    theta: tuple[int, ...]
    weights: tuple[int, ...]
    filtered_positions: tuple[int, ...]
    filtered_entries: tuple[int, ...]
    gap_sizes: tuple[int, ...]
    gap_defects: tuple[int, ...]
    lift_allowed: tuple[bool, ...]

    @property
    def rank(self) -> int:
        return len(self.theta) + sum(self.weights)


def kupisch_defects(entries: Sequence[int]) -> tuple[int, ...]:
    """``max(c_i - c_{i-1}, 0)`` on the word read cyclically.

    On a flattened linear series this is the per-projective defect too, since
    each component starts right after an entry equal to 1.
    """
    n = len(entries)
    return tuple(max(entries[i] - entries[i - 1], 0) for i in range(n))


def layout(theta: KupischSeries, w: Sequence[int]) -> ReverseLayout:
    ell = theta.entries
    n = len(ell)
    w = tuple(int(x) for x in w)
    if len(w) != n:
        raise InvalidChoice(f"need {n} weights, got {len(w)}")
    need = kupisch_defects(ell)
    for i, (wi, di) in enumerate(zip(w, need), start=1):
        if wi < di:
            raise WeightTooSmall(i, wi, di)
    sizes = [w[(i + 1) % n] for i in range(n)]
    starts = list(itertools.accumulate([0] + [s + 1 for s in sizes[:-1]]))
    ranks = sum(sizes) + n
    last = [starts[i] + sizes[i] for i in range(n)]

    def socle(j: int) -> int:
        q, r = divmod(j, n)
        return last[r] + q * ranks

    filtered = tuple(socle(i + ell[i] - 1) - starts[i] + 1 for i in range(n))
    return ReverseLayout(
        theta=ell,
        weights=w,
        filtered_positions=tuple(s + 1 for s in starts),
        filtered_entries=filtered,
        gap_sizes=tuple(sizes),
        gap_defects=tuple(max(ell[(i + 1) % n] - ell[i], 0) for i in range(n)),
        lift_allowed=tuple(ell[(i + 1) % n] >= ell[i] for i in range(n)),
    )


def _gap_steps(size: int, d: int, b: Sequence[int], lifts: int, lift_ok: bool, gap: int) -> list[int]:
    if len(b) != d:
        raise InvalidChoice(f"gap {gap}: need {d} b-positions, got {len(b)}")
    if lifts < 0 or lifts > size or (lifts and not lift_ok):
        raise InvalidChoice(f"gap {gap}: lift count {lifts} not allowed")
    if any(x >= y for x, y in zip(b, b[1:])) or any(not 1 <= p <= size - lifts for p in b):
        raise InvalidChoice(f"gap {gap}: b-positions {tuple(b)} out of order or range")
    steps = [sum(1 for p in b if p <= pos) for pos in range(1, size + 1)]
    for k in range(size - lifts, size):
        steps[k] = d + 1
    return steps


def weighted_reverse(
    theta: KupischSeries,
    w: Sequence[int],
    choice: ReverseChoice | None = None,
    validate: bool = True,
) -> KupischSeries:
    lay = layout(theta, w)
    n = len(lay.theta)
    if choice is None:
        choice = ReverseChoice(tuple(tuple(range(1, d + 1)) for d in lay.gap_defects), (0,) * n)
    if len(choice.b_positions) != n or len(choice.lifts) != n:
        raise InvalidChoice(f"choice must describe {n} gaps")
    ell, N = lay.theta, lay.rank
    starts = [p - 1 for p in lay.filtered_positions]
    last = [starts[i] + lay.gap_sizes[i] for i in range(n)]

    def socle(j: int) -> int:
        q, r = divmod(j, n)
        return last[r] + q * N

    c = [0] * N
    for i in range(n):
        c[starts[i]] = lay.filtered_entries[i]
        if c[starts[i]] < 2:
            raise InvalidChoice(f"weights give filtered vertex {starts[i] + 1} length {c[starts[i]]}")
        steps = _gap_steps(
            lay.gap_sizes[i], lay.gap_defects[i], choice.b_positions[i],
            choice.lifts[i], lay.lift_allowed[i], i + 1,
        )
        base = i + ell[i] - 1
        for k, s in enumerate(steps):
            v = starts[i] + 1 + k
            c[v] = socle(base + s) - v + 1
            if c[v] < 2:
                raise InvalidChoice(f"gap {i + 1}: entry at vertex {v + 1} would be {c[v]}")
    size = lay.gap_sizes[-1]
    a0 = size if choice.a0 is None else choice.a0
    if not 0 <= a0 <= size:
        raise InvalidChoice(f"a0 = {a0} outside 0..{size}")
    moved = size - a0
    if moved:
        c = c[-moved:] + c[:-moved]
    try:
        out = KupischSeries(CYCLIC, tuple(c))
    except NotAdmissible as exc:
        raise ConstructionInadmissible(f"{c} from theta={theta}, w={lay.weights}: {exc}") from exc
    if validate:
        _validate(out, theta, sum(lay.weights))
    return out


def _validate(out: KupischSeries, theta: KupischSeries, d: int) -> None:
    from .filtered import epsilon

    got = epsilon(out).theta
    if iso_key(got) != iso_key(theta) or defect(out) != d:
        raise ConstructionInadmissible(
            f"{out} has epsilon {got} and defect {defect(out)}; wanted {theta} and {d}"
        )


def enumerate_choices(theta: KupischSeries, w: Sequence[int]) -> Iterator[ReverseChoice]:
    """Every climb pattern, gap by gap; some may still be rejected for entries below 2."""
    lay = layout(theta, w)
    per_gap = []
    for size, d, lift_ok in zip(lay.gap_sizes, lay.gap_defects, lay.lift_allowed):
        options = []
        for t in range(size - d + 1 if lift_ok else 1):
            options += [(b, t) for b in itertools.combinations(range(1, size - t + 1), d)]
        per_gap.append(options)
    for combo in itertools.product(*per_gap):
        yield ReverseChoice(tuple(b for b, _ in combo), tuple(t for _, t in combo))


def enumerate_reverses(
    theta: KupischSeries, w: Sequence[int], limit: int | None = None
) -> list[KupischSeries]:
    """Distinct reverses for fixed weights, in canonical rotation, sorted."""
    found: dict[tuple, KupischSeries] = {}
    for choice in enumerate_choices(theta, w):
        try:
            lam = weighted_reverse(theta, w, choice, validate=False)
        except InvalidChoice:
            continue
        key = iso_key(lam)
        if key not in found:
            _validate(lam, theta, sum(w))
            found[key] = canonical_form(lam)
    out = sorted(found.values(), key=lambda s: s.entries)
    return out if limit is None else out[:limit]


def has_simple_component(theta: KupischSeries) -> bool:
    return not theta.is_cyclic and any(comp.rank == 1 for comp in components(theta))


def defect_invariant_reverse(theta: KupischSeries) -> KupischSeries:
    """The reverse whose weights equal Theta's defect vector (one choice only)."""
    if is_selfinjective(theta):
        return theta
    if has_simple_component(theta):
        raise NoDefectInvariantReverse(f"{theta} has a simple component")
    w = kupisch_defects(theta.entries)
    try:
        return weighted_reverse(theta, w)
    except InvalidChoice as exc:
        raise NoDefectInvariantReverse(str(exc)) from exc


def weight_vectors(floor: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """All ``w >= floor`` componentwise with ``sum(w) == total``."""
    spare = total - sum(floor)
    if spare < 0:
        return
    n = len(floor)
    for bars in itertools.combinations(range(spare + n - 1), n - 1):
        cuts = (-1,) + bars + (spare + n - 1,)
        yield tuple(f + cuts[k + 1] - cuts[k] - 1 for k, f in enumerate(floor))


def arrangements(theta: KupischSeries) -> list[KupischSeries]:
    """Distinct cyclic orders of Theta's components (Theta itself if cyclic)."""
    if theta.is_cyclic:
        return [theta]
    comps = [c.entries for c in components(theta)]
    first, rest = comps[0], comps[1:]
    seen: dict[tuple, KupischSeries] = {}
    for perm in itertools.permutations(rest):
        flat = first + tuple(x for p in perm for x in p)
        seen.setdefault(flat, from_components([first, *perm]))
    return list(seen.values())


def reverse_fiber(theta: KupischSeries, d: int) -> list[KupischSeries]:
    """All reverses of defect ``d`` up to rotation, over every weight and arrangement."""
    found: dict[tuple, KupischSeries] = {}
    for arr in arrangements(theta):
        for w in weight_vectors(kupisch_defects(arr.entries), d):
            for lam in enumerate_reverses(arr, w):
                found.setdefault(iso_key(lam), lam)
    return sorted(found.values(), key=lambda s: s.entries)
