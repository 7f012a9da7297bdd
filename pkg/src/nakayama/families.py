"""Closed-form Kupisch families and their self-checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .kupisch import CYCLIC, KupischError, KupischSeries, cyclic, from_components, from_cyclic_word, iso_key, linear
from .structure import defect, is_selfinjective, projective_injectives
from .uniserial import INF, projective


class InvalidParams(KupischError):
    pass


class NotSelfinjective(InvalidParams):
    pass


class InvalidF(InvalidParams):
    pass


class FamilyCheckFailed(AssertionError):
    """A generated algebra lacks a property its family guarantees."""


def _series(entries: Sequence[int]) -> KupischSeries:
    try:
        return KupischSeries(CYCLIC, tuple(entries))
    except KupischError as exc:
        raise InvalidParams(f"formula gives an inadmissible series {tuple(entries)}: {exc}") from exc


def _check(ok: bool, what: str, lam: KupischSeries) -> None:
    if not ok:
        raise FamilyCheckFailed(f"{lam}: {what}")


def path_algebra(n: int) -> KupischSeries:
    """Linearly oriented A_n without relations."""
    return linear(*range(n, 0, -1))


def auslander_linear(k: int) -> KupischSeries:
    """The linear Auslander algebra B_k with series (23)^k 221."""
    return linear(*([2, 3] * k + [2, 2, 1]))


# 2-Auslander-Gorenstein algebras over a selfinjective Theta.


@dataclass(frozen=True)
class TwoAGSpec:
    """``f[i]`` is f(S_{i+1}) in {1, 2}; ``placement`` rotates the output."""

    theta: KupischSeries
    f: tuple[int, ...]
    placement: int = 0

    @property
    def d(self) -> int:
        return sum(1 for x in self.f if x == 2)


def generate_2AG(spec: TwoAGSpec, validate: bool = True) -> KupischSeries:
    theta, f = spec.theta, tuple(spec.f)
    if not is_selfinjective(theta):
        raise NotSelfinjective(f"{theta} is not selfinjective")
    n, m = theta.rank, theta.entries[0]
    if len(f) != n or any(x not in (1, 2) for x in f):
        raise InvalidF(f"f must give 1 or 2 on each of {n} vertices, got {f}")
    if spec.d == 0:
        raise InvalidF("f must take the value 2 somewhere")
    filtered = [sum(f[(i + j) % n] for j in range(m)) for i in range(n)]
    out: list[int] = []
    for i in range(n):
        out.append(filtered[i])
        if f[i] == 2:
            out.append(1 + filtered[(i + 1) % n])
    k = spec.placement % len(out)
    lam = _series(out[k:] + out[:k])
    if validate:
        from .filtered import epsilon
        from .homological import profile

        _check(iso_key(epsilon(lam).theta) == iso_key(theta), "epsilon differs from theta", lam)
        _check(defect(lam) == spec.d, f"defect is not {spec.d}", lam)
        _check(profile(lam).is_k_AG(2), "not 2-Auslander-Gorenstein", lam)
    return lam


def generate_2AG_sweep(
    m: int, v: Sequence[int], ranks: Iterable[int], validate: bool = True
) -> list[KupischSeries]:
    """For each rank n, Theta = (m)^n and f = 1 + v padded with zeros to length n."""
    out = []
    for n in ranks:
        if len(v) > n:
            raise InvalidParams(f"vector {tuple(v)} longer than rank {n}")
        marks = tuple(v) + (0,) * (n - len(v))
        if any(x not in (0, 1) for x in marks):
            raise InvalidF(f"vector entries must be 0 or 1, got {tuple(v)}")
        theta = cyclic(*([m] * n))
        if not any(marks):
            out.append(theta)
            continue
        out.append(generate_2AG(TwoAGSpec(theta, tuple(1 + x for x in marks)), validate))
    return out


# Global dimension three.


def _ha3_entries(ns: Sequence[int], xs: Sequence[int]) -> list[int]:
    k = len(ns)
    out: list[int] = []
    for i in range(k):
        nxt = ns[(i + 1) % k]
        out += [ns[i]] * ns[i]
        out += list(range(ns[i] + xs[i], nxt, -1))
    return out


def generate_higher_auslander_gldim3(ns: Sequence[int], validate: bool = True) -> KupischSeries:
    ns = list(ns)
    if not ns or any(n < 2 for n in ns):
        raise InvalidParams("every n_j must be at least 2")
    k = len(ns)
    lam = _series(_ha3_entries(ns, [ns[(i + 1) % k] - 1 for i in range(k)]))
    if validate:
        from .filtered import epsilon
        from .homological import profile

        theta = from_components([path_algebra(n) for n in ns])
        _check(iso_key(epsilon(lam).theta) == iso_key(theta), "epsilon is not the sum of path algebras", lam)
        p = profile(lam)
        _check(p.is_higher_auslander and p.gldim == 3 and p.domdim == 3, "not higher Auslander of gldim 3", lam)
    return lam


def _g(n: int) -> int:
    return n - 1 if n >= 2 else 1


def _dar3_g_entries(ns: Sequence[int]) -> list[int]:
    k = len(ns)
    out: list[int] = []
    for i in range(k):
        gi, gn = _g(ns[i]), _g(ns[(i + 1) % k])
        out += [1 + gi + gn * (ns[i] == 1)] * gi
        out += list(range(ns[i] + gn, gn, -1))
    return out


def generate_dominant_AR_gldim3(
    ns: Sequence[int], xs: Sequence[int] | None = None, validate: bool = True
) -> KupischSeries:
    """With ``xs`` the two-parameter family; without, the g-formula that admits n_i = 1."""
    ns = list(ns)
    k = len(ns)
    if not ns:
        raise InvalidParams("need at least one block")
    if xs is None:
        if any(n < 1 for n in ns) or all(n == 1 for n in ns):
            raise InvalidParams("n_i must be positive and not all equal to 1")
        lam = _series(_dar3_g_entries(ns))
    else:
        xs = list(xs)
        if len(xs) != k:
            raise InvalidParams("need one x per n")
        if any(n < 2 for n in ns):
            raise InvalidParams("every n_i must be at least 2")
        for i, x in enumerate(xs):
            if x < ns[(i + 1) % k] - 1:
                raise InvalidParams(f"x_{i + 1} = {x} is below n_{(i + 1) % k + 1} - 1")
        lam = _series(_ha3_entries(ns, xs))
    if validate:
        from .homological import profile

        p = profile(lam)
        _check(p.is_dominant_AR and p.gldim == 3, "not dominant Auslander-regular of gldim 3", lam)
    return lam


# Global dimension four.


def _ha4_entries(ns: Sequence[int]) -> list[int]:
    k = len(ns)
    out: list[int] = []
    for i in range(k):
        if ns[i]:
            out += [3, 4, 4] * (ns[i] - 1) + [3, 3, 3]
        out += [2, 3, 2, 2 + (ns[(i + 1) % k] != 0)]
    return out


def generate_higher_auslander_gldim4(ns: Sequence[int], validate: bool = True) -> KupischSeries:
    """Reverse of B_{n_1} + ... + B_{n_k}, with B_n = (23)^n 221."""
    ns = list(ns)
    if not ns or any(n < 0 for n in ns):
        raise InvalidParams("need nonnegative block parameters")
    lam = _series(_ha4_entries(ns))
    if validate:
        theta = from_components([auslander_linear(n) for n in ns])
        _validate_ha4(lam, theta)
    return lam


def higher_auslander_gldim4_cyclic(k: int, validate: bool = True) -> KupischSeries:
    """Reverse of the cyclic Auslander algebra (23)^k."""
    if k < 1:
        raise InvalidParams("k must be positive")
    lam = cyclic(*([3, 4, 4] * k))
    if validate:
        _validate_ha4(lam, cyclic(*([2, 3] * k)))
    return lam


def _validate_ha4(lam: KupischSeries, theta: KupischSeries) -> None:
    from .filtered import epsilon
    from .homological import profile

    _check(iso_key(epsilon(lam).theta) == iso_key(theta), f"epsilon is not {theta}", lam)
    p = profile(lam)
    _check(p.is_higher_auslander and p.gldim == 4 and p.domdim == 4, "not higher Auslander of gldim 4", lam)


# Dominant Auslander-regular of dominant dimension one or two.


def generate_dominant_AR_lowdim(
    theta: KupischSeries, mode: str, m: int = 1, validate: bool = True
) -> KupischSeries:
    from .reverse import ReverseChoice, kupisch_defects, layout, weighted_reverse

    if theta.is_cyclic or not theta.is_connected:
        raise InvalidParams("theta must be connected linear")
    dv = list(kupisch_defects(theta.entries))
    n = theta.rank
    if mode == "domdim1":
        if m < 1:
            raise InvalidParams("m must be at least 1")
        w = [dv[0] + m] + dv[1:]
        target = theta
        lay = layout(theta, w)
        b = [tuple(range(1, d + 1)) for d in lay.gap_defects]
        b[-1] = tuple(range(m + 1, m + dv[0] + 1))
        choice = ReverseChoice(tuple(b), (0,) * n)
        expect_domdim = 1
    elif mode == "domdim2":
        target = from_components([theta, linear(1)])
        w = dv + [1]
        lay = layout(target, w)
        lifts = [0] * (n + 1)
        lifts[n - 1] = 1
        choice = ReverseChoice(tuple(tuple(range(1, d + 1)) for d in lay.gap_defects), tuple(lifts))
        expect_domdim = 2
    else:
        raise InvalidParams(f"unknown mode {mode!r}")
    lam = weighted_reverse(target, w, choice)
    if validate:
        from .homological import profile

        p = profile(lam)
        _check(p.domdim == expect_domdim, f"domdim is not {expect_domdim}", lam)
        if profile(theta).is_dominant_AR:
            _check(p.is_dominant_AR, "theta is dominant AR but lambda is not", lam)
    return lam


# Endomorphism rings of the projective-injective generator.


def projective_injective_endomorphism(lam: KupischSeries) -> KupischSeries:
    """End(Q)^op for Q the sum of projective-injectives, from Hom dimensions."""
    from .filtered import endomorphism_word

    tops = sorted(projective_injectives(lam), reverse=True)
    return from_cyclic_word(endomorphism_word([projective(lam, t) for t in tops], op=True))


def cluster_tilting_endomorphism_series(family: str, ns: Sequence[int], validate: bool = True) -> KupischSeries:
    """End(Q)^op for the projective-injective generator Q of the ha3 or ha4 algebra.

    Blocks run through ``ns`` in reverse: passing to the opposite ring reverses
    the cyclic order.
    """
    ns = list(ns)
    if family == "ha3":
        lam = generate_higher_auslander_gldim3(ns, validate=False)
        entries: list[int] = []
        for n in reversed(ns):
            entries += [n] + list(range(n, 1, -1))
    elif family == "ha4":
        lam = generate_higher_auslander_gldim4(ns, validate=False)
        entries = []
        for n in reversed(ns):
            entries += [2] + [3, 3] * n + [2, 2]
    else:
        raise InvalidParams(f"unknown family {family!r}")
    gamma = _series(entries)
    if validate:
        oracle = projective_injective_endomorphism(lam)
        _check(iso_key(oracle) == iso_key(gamma), f"End oracle gives {oracle}, formula gives {gamma}", lam)
    return gamma


FAMILIES = ("2ag", "2ag-sweep", "ha3", "ha4", "dar3", "dar-low", "cto")

__all__ = [
    "FAMILIES",
    "FamilyCheckFailed",
    "INF",
    "InvalidF",
    "InvalidParams",
    "NotSelfinjective",
    "TwoAGSpec",
    "auslander_linear",
    "cluster_tilting_endomorphism_series",
    "generate_2AG",
    "generate_2AG_sweep",
    "generate_dominant_AR_gldim3",
    "generate_dominant_AR_lowdim",
    "generate_higher_auslander_gldim3",
    "generate_higher_auslander_gldim4",
    "higher_auslander_gldim4_cyclic",
    "path_algebra",
    "projective_injective_endomorphism",
]
