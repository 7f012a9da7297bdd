"""Exhaustive enumeration of admissible Kupisch series."""

from __future__ import annotations

import functools
import itertools
from typing import Iterator

from .kupisch import CYCLIC, LINEAR, KupischError, KupischSeries, canonical_form, iso_key


def _cyclic_words(rank: int, max_entry: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Minimal-rotation admissible cyclic words; the first entry is the minimum."""
    starts = range(2, max_entry + 1) if first is None else [first]
    for f in starts:
        seq = [f]

        def rec() -> Iterator[tuple[int, ...]]:
            if len(seq) == rank:
                last = seq[-1]
                if last > f and last != f + 1:
                    return
                s = tuple(seq)
                if all(s <= s[i:] + s[:i] for i in range(1, rank)):
                    yield s
                return
            prev = seq[-1]
            # entries fall by at most one per step and must end at most f + 1
            top = min(max_entry, f + rank - len(seq))
            for v in range(max(f, prev - 1), top + 1):
                seq.append(v)
                yield from rec()
                seq.pop()

        yield from rec()


def _linear_words(rank: int, max_entry: int) -> Iterator[tuple[int, ...]]:
    """Flattened linear words read right to left: c_N = 1 and c_i <= c_{i+1} + 1."""
    seq = [1]

    def rec() -> Iterator[tuple[int, ...]]:
        if len(seq) == rank:
            yield tuple(reversed(seq))
            return
        for v in range(1, min(seq[-1] + 1, max_entry) + 1):
            seq.append(v)
            yield from rec()
            seq.pop()

    yield from rec()


def enumerate_admissible(
    rank: int, max_entry: int, kind: str = CYCLIC, first: int | None = None
) -> Iterator[KupischSeries]:
    """One series per isomorphism class, in lexicographic order.

    Linear output covers disconnected algebras too, each in the canonical
    component order.  ``first`` restricts cyclic output to one minimal entry,
    which is how the harness shards work.
    """
    if rank < 1:
        return
    if kind == CYCLIC:
        for word in _cyclic_words(rank, max_entry, first):
            yield KupischSeries(CYCLIC, word)
    elif kind == LINEAR:
        for word in sorted(_linear_words(rank, max_entry)):
            s = KupischSeries(LINEAR, word)
            if canonical_form(s) == s:
                yield s
    else:
        raise KupischError(f"unknown kind {kind!r}")


def brute_force_classes(rank: int, max_entry: int, kind: str = CYCLIC) -> set[tuple]:
    """Filter every tuple for admissibility and collect isomorphism keys."""
    lo = 2 if kind == CYCLIC else 1
    out = set()
    for word in itertools.product(range(lo, max_entry + 1), repeat=rank):
        try:
            s = KupischSeries(kind, word)
        except KupischError:
            continue
        out.add(iso_key(s))
    return out


def universe(max_rank: int, max_entry: int) -> list[KupischSeries]:
    """Every cyclic class with rank at most ``max_rank`` and entries at most ``max_entry``."""
    return [s for n in range(1, max_rank + 1) for s in enumerate_admissible(n, max_entry)]


def fiber_entry_bound(theta: KupischSeries, d: int) -> int:
    """Upper bound on entries of any Lambda with epsilon(Lambda) = Theta and defect d.

    A filtered projective is filtered by ell consecutive base-set elements, and
    any n consecutive ones have total length N = n + d.  Other entries exceed the
    next filtered entry by less than N.
    """
    n = theta.rank
    big = n + d
    ell = max(theta.entries)
    return big * -(-ell // n) + big - 1


@functools.lru_cache(maxsize=64)
def _words_by_relations(rank: int, max_entry: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Cyclic words of one rank grouped by their number of relations."""
    groups: dict[int, list[tuple[int, ...]]] = {}
    for word in _cyclic_words(rank, max_entry):
        rel = len({(i + c - 1) % rank for i, c in enumerate(word)})
        groups.setdefault(rel, []).append(word)
    return {k: tuple(v) for k, v in groups.items()}


def exhaustive_fiber(theta: KupischSeries, d: int) -> list[KupischSeries]:
    """Every cyclic Lambda of defect d over Theta, found by search rather than construction."""
    from .filtered import epsilon

    key = iso_key(theta)
    rank = theta.rank + d
    words = _words_by_relations(rank, fiber_entry_bound(theta, d)).get(theta.rank, ())
    out = []
    for word in words:
        lam = KupischSeries(CYCLIC, word)
        if iso_key(epsilon(lam).theta) == key:
            out.append(lam)
    return out


__all__ = [
    "brute_force_classes",
    "enumerate_admissible",
    "exhaustive_fiber",
    "fiber_entry_bound",
    "universe",
]
