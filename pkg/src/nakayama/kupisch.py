"""Kupisch series: the encoding of a Nakayama algebra by the lengths of its
indecomposable projectives.

Vertices are numbered 1..N.  The translate acts on simples by ``tau S_i = S_{i+1}``,
so the projective ``P_i`` has composition factors ``S_i, S_{i+1}, ...`` from the
top down.  A cyclic series is always connected.  A linear series may hold several
components back to back; each component ends with an entry equal to 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

CYCLIC = "cyclic"
LINEAR = "linear"
KINDS = (CYCLIC, LINEAR)


class KupischError(ValueError):
    """Base class for invalid Kupisch input."""


class EmptySeries(KupischError):
    def __init__(self) -> None:
        super().__init__("Kupisch series must be nonempty")


class NotAdmissible(KupischError):
    """Raised with the 1-based index of the first violated constraint."""

    def __init__(self, index: int, reason: str) -> None:
        self.index = index
        self.reason = reason
        super().__init__(f"not admissible at index {index}: {reason}")


class NotCyclic(KupischError):
    def __init__(self, what: str = "operation") -> None:
        super().__init__(f"{what} requires a cyclic Nakayama algebra")


class ParseError(KupischError):
    pass


def _first_violation(entries: Sequence[int], kind: str) -> tuple[int, str] | None:
    n = len(entries)
    if kind == CYCLIC:
        for i in range(n):
            c, nxt = entries[i], entries[(i + 1) % n]
            if c < 2:
                return i + 1, "cyclic entries must be at least 2"
            if c > nxt and c != nxt + 1:
                return i + 1, f"drop from {c} to {nxt} exceeds one"
        return None
    for i in range(n):
        c = entries[i]
        if c < 1:
            return i + 1, "entries must be positive"
        if c == 1:
            continue
        if i == n - 1:
            return n, "a linear series must end with 1"
        if c > entries[i + 1] + 1:
            return i + 1, f"drop from {c} to {entries[i + 1]} exceeds one"
    return None


@dataclass(frozen=True)
class KupischSeries:
    """A validated Kupisch series.  Construction raises on inadmissible input."""

    kind: str
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise KupischError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "entries", tuple(int(c) for c in self.entries))
        if not self.entries:
            raise EmptySeries()
        bad = _first_violation(self.entries, self.kind)
        if bad is not None:
            raise NotAdmissible(*bad)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def is_cyclic(self) -> bool:
        return self.kind == CYCLIC

    @property
    def is_connected(self) -> bool:
        return self.is_cyclic or self.entries.count(1) == 1

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        """1-based access, wrapping on cyclic series."""
        return self.entries[self.index(i) - 1]

    def index(self, x: int) -> int:
        """Reduce ``x`` into 1..N; on linear series out-of-range is an error."""
        n = self.rank
        if self.is_cyclic:
            return (x - 1) % n + 1
        if not 1 <= x <= n:
            raise IndexError(f"vertex {x} outside 1..{n} on a linear series")
        return x

    def in_range(self, x: int) -> bool:
        return self.is_cyclic or 1 <= x <= self.rank

    def to_text(self) -> str:
        return f"{self.kind}:" + ",".join(map(str, self.entries))

    def to_dict(self) -> dict[str, Any]:
        if self.is_connected:
            return {"kind": self.kind, "entries": list(self.entries)}
        return {"components": [c.to_dict() for c in components(self)]}

    def __str__(self) -> str:
        return self.to_text()


def check_admissible(entries: Iterable[int], kind: str = CYCLIC) -> KupischSeries:
    return KupischSeries(kind, tuple(entries))


def cyclic(*entries: int) -> KupischSeries:
    return KupischSeries(CYCLIC, entries)


def linear(*entries: int) -> KupischSeries:
    return KupischSeries(LINEAR, entries)


def min_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    s = tuple(seq)
    return min(s[i:] + s[:i] for i in range(len(s)))


def rotation_offset(seq: Sequence[int]) -> int:
    """Offset ``k`` such that ``seq[k:] + seq[:k]`` is the minimal rotation."""
    s = tuple(seq)
    return min(range(len(s)), key=lambda i: s[i:] + s[:i])


def canonical_rotation(s: KupischSeries) -> KupischSeries:
    if not s.is_cyclic:
        raise NotCyclic("canonical_rotation")
    return KupischSeries(CYCLIC, min_rotation(s.entries))


def split_linear(entries: Sequence[int]) -> list[tuple[int, ...]]:
    """Cut a flattened linear sequence after every entry equal to 1."""
    parts: list[tuple[int, ...]] = []
    cur: list[int] = []
    for c in entries:
        cur.append(c)
        if c == 1:
            parts.append(tuple(cur))
            cur = []
    if cur:
        parts.append(tuple(cur))
    return parts


def components(s: KupischSeries) -> list[KupischSeries]:
    if s.is_cyclic:
        return [s]
    return [KupischSeries(LINEAR, part) for part in split_linear(s.entries)]


def from_components(parts: Sequence[KupischSeries | Sequence[int]]) -> KupischSeries:
    """Direct sum of linear components, or the single cyclic component."""
    series = [p if isinstance(p, KupischSeries) else KupischSeries(LINEAR, tuple(p)) for p in parts]
    if len(series) == 1:
        return series[0]
    if any(p.is_cyclic for p in series):
        raise KupischError("direct sums are only encoded for linear components")
    return KupischSeries(LINEAR, tuple(c for p in series for c in p.entries))


def from_cyclic_word(word: Sequence[int]) -> KupischSeries:
    """Interpret a cyclically ordered word that may contain 1s.

    Without 1s this is a cyclic series.  Otherwise the word is rotated to end
    at its last 1 and read as a direct sum of linear components.
    """
    word = tuple(word)
    if 1 not in word:
        return KupischSeries(CYCLIC, word)
    cut = max(i for i, c in enumerate(word) if c == 1) + 1
    return KupischSeries(LINEAR, word[cut:] + word[:cut])


def iso_key(s: KupischSeries) -> tuple:
    """Isomorphism invariant: minimal rotation, or the sorted component multiset."""
    if s.is_cyclic:
        return (CYCLIC, min_rotation(s.entries))
    return (LINEAR, tuple(sorted(split_linear(s.entries))))


def is_isomorphic(a: KupischSeries, b: KupischSeries) -> bool:
    return iso_key(a) == iso_key(b)


def canonical_form(s: KupischSeries) -> KupischSeries:
    if s.is_cyclic:
        return canonical_rotation(s)
    return from_components(sorted(split_linear(s.entries)))


def opposite(s: KupischSeries) -> KupischSeries:
    """Series of the opposite algebra: injective lengths in reversed vertex order."""
    from .uniserial import injective_length

    if s.is_cyclic:
        lengths = [injective_length(s, j) for j in range(1, s.rank + 1)]
        return KupischSeries(CYCLIC, min_rotation(lengths[::-1]))
    parts = []
    for comp in components(s):
        lengths = [injective_length(comp, j) for j in range(1, comp.rank + 1)]
        parts.append(KupischSeries(LINEAR, tuple(lengths[::-1])))
    return from_components(parts)


def parse(text: str) -> KupischSeries:
    """Parse ``cyclic:2,4,3`` / ``linear:2,2,1`` or the JSON encodings."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
    kind, sep, body = text.partition(":")
    if not sep:
        kind, body = CYCLIC, text
    kind = kind.strip().lower()
    body = body.strip().strip("()[]")
    try:
        entries = tuple(int(tok) for tok in body.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise ParseError(f"bad integer list {body!r}") from exc
    return KupischSeries(kind, entries)


def from_json(obj: Any) -> KupischSeries:
    if isinstance(obj, dict) and "components" in obj:
        return from_components([from_json(c) for c in obj["components"]])
    if isinstance(obj, dict) and "entries" in obj:
        return KupischSeries(obj.get("kind", CYCLIC), tuple(obj["entries"]))
    raise ParseError("expected {'kind','entries'} or {'components': [...]}")
