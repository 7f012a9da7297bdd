"""Global, dominant and Gorenstein dimensions, classification flags, and the
dimension-transfer checks between Lambda and its syzygy filtered algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .kupisch import KupischSeries, components, iso_key
from .structure import (
    base_set,
    defect,
    filtered_projectives,
    socle_set,
    structure_sets,
)
from .uniserial import (
    INF,
    Dim,
    all_uniserials,
    codominant_dimension,
    dominant_dimension,
    injdim,
    injective,
    is_injective,
    is_projective,
    pdim,
    projective,
    simple,
)


def fmt_dim(x: Dim) -> int | str:
    return "inf" if x == INF else int(x)


def _min(values) -> Dim:
    return min(values, default=INF)


def _max(values) -> Dim:
    return max(values, default=0)


@dataclass(frozen=True)
class HomProfile:
    gldim: Dim
    domdim: Dim
    codomdim: Dim
    gorenstein_dim: Dim
    per_projective: dict[int, tuple[Dim, Dim]]
    per_injective: dict[int, tuple[Dim, Dim]]
    is_selfinjective: bool
    is_dominant_AG: bool
    is_dominant_AR: bool
    is_minimal_AG: bool
    minimal_AG_dim: Dim | None
    is_higher_auslander: bool
    is_minimal_AG_standard: bool

    @property
    def injdims(self) -> list[Dim]:
        return [v[0] for v in self.per_projective.values()]

    def is_k_AG(self, k: int) -> bool:
        """Minimal Auslander-Gorenstein with every nonzero injdim of a projective equal to k."""
        return self.is_minimal_AG and self.minimal_AG_dim == k

    def flags(self) -> dict[str, Any]:
        return {
            "is_selfinjective": self.is_selfinjective,
            "is_higher_auslander": self.is_higher_auslander,
            "is_minimal_AG": self.is_minimal_AG,
            "minimal_AG_dim": None if self.minimal_AG_dim is None else fmt_dim(self.minimal_AG_dim),
            "is_minimal_AG_standard": self.is_minimal_AG_standard,
            "is_dominant_AG": self.is_dominant_AG,
            "is_dominant_AR": self.is_dominant_AR,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "gldim": fmt_dim(self.gldim),
            "domdim": fmt_dim(self.domdim),
            "codomdim": fmt_dim(self.codomdim),
            "gorenstein_dim": fmt_dim(self.gorenstein_dim),
            "per_projective": {
                str(i): {"injdim": fmt_dim(a), "domdim": fmt_dim(b)} for i, (a, b) in self.per_projective.items()
            },
            "per_injective": {
                str(j): {"pdim": fmt_dim(a), "codomdim": fmt_dim(b)} for j, (a, b) in self.per_injective.items()
            },
            "flags": self.flags(),
        }


def _component_data(alg: KupischSeries) -> tuple[list, list, Dim, Dim]:
    n = alg.rank
    proj = [(injdim(projective(alg, i)), dominant_dimension(projective(alg, i))) for i in range(1, n + 1)]
    inj = [(pdim(injective(alg, j)), codominant_dimension(injective(alg, j))) for j in range(1, n + 1)]
    gl_p = _max(pdim(simple(alg, i)) for i in range(1, n + 1))
    gl_i = _max(injdim(simple(alg, i)) for i in range(1, n + 1))
    if gl_p != gl_i:
        raise AssertionError(f"gldim via pdim {gl_p} and via injdim {gl_i} differ on {alg}")
    return proj, inj, gl_p, gl_i


def profile(algebra: KupischSeries) -> HomProfile:
    """Every dimension comes from explicit resolutions; disconnected input is taken componentwise."""
    proj: list[tuple[Dim, Dim]] = []
    inj: list[tuple[Dim, Dim]] = []
    gldim: Dim = 0
    for comp in components(algebra):
        p, i, g, _ = _component_data(comp)
        proj += p
        inj += i
        gldim = max(gldim, g)
    domdim = _min(d for _, d in proj)
    codomdim = _min(d for _, d in inj)
    if domdim != codomdim:
        raise AssertionError(f"domdim {domdim} from projectives and {codomdim} from injectives differ on {algebra}")
    gor = _max(p for p, _ in inj)
    gor_right = _max(i for i, _ in proj)
    if gor != gor_right:
        raise AssertionError(f"Gorenstein dimension not symmetric on {algebra}: {gor} vs {gor_right}")
    dominant_ag = gor != INF and all(i <= d for i, d in proj)
    nonzero = {i for i, _ in proj if i != 0}
    minimal_ag = dominant_ag and len(nonzero) <= 1
    return HomProfile(
        gldim=gldim,
        domdim=domdim,
        codomdim=codomdim,
        gorenstein_dim=gor,
        per_projective={k + 1: v for k, v in enumerate(proj)},
        per_injective={k + 1: v for k, v in enumerate(inj)},
        is_selfinjective=all(i == 0 for i, _ in proj),
        is_dominant_AG=dominant_ag,
        is_dominant_AR=dominant_ag and gldim != INF,
        is_minimal_AG=minimal_ag,
        minimal_AG_dim=(next(iter(nonzero), 0) if minimal_ag else None),
        is_higher_auslander=minimal_ag and gldim != INF,
        is_minimal_AG_standard=gor != INF and gor <= domdim,
    )


def injective_non_projective_count(algebra: KupischSeries) -> int:
    return sum(
        1
        for comp in components(algebra)
        for m in all_uniserials(comp)
        if is_injective(m) and not is_projective(m)
    )


class TheoremViolation(AssertionError):
    def __init__(self, algebra: KupischSeries, failed: dict[str, str]) -> None:
        self.algebra = algebra
        self.failed = failed
        super().__init__(f"{algebra}: " + "; ".join(f"{k}: {v}" for k, v in failed.items()))


@dataclass
class TransferReport:
    """Outcome per check: True, False, or None when its hypothesis does not apply."""

    algebra: KupischSeries
    theta: KupischSeries
    results: dict[str, bool | None] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)

    def record(self, name: str, applies: bool, holds: bool, witness: str) -> None:
        self.results[name] = holds if applies else None
        if applies and not holds:
            self.witnesses[name] = witness

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def to_dict(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra.to_dict(),
            "theta": self.theta.to_dict(),
            "results": self.results,
            "violations": self.witnesses,
        }


def check_filtration_counts(algebra: KupischSeries, report: TransferReport | None = None) -> TransferReport:
    """Counting relations between Lambda and Theta = epsilon(Lambda), and base-set lengths."""
    from .filtered import epsilon
    from .reverse import kupisch_defects

    res = epsilon(algebra)
    theta = res.theta
    if report is None:
        report = TransferReport(algebra, theta)
    ss = structure_sets(algebra)
    th_def = defect(theta)
    th_rel = theta.rank - th_def
    filtered = filtered_projectives(algebra)
    s_f = {algebra.index(i + algebra[i] - 1) for i in filtered}
    s_nf = set(socle_set(algebra)) - s_f
    report.record("rel_equals_rank_theta", True, ss.num_relations == theta.rank,
                  f"#rel={ss.num_relations}, rank theta={theta.rank}")
    report.record("filtered_socles_equal_rel_theta", True, len(s_f) == th_rel, f"|S_f|={len(s_f)}, #rel theta={th_rel}")
    report.record("nonfiltered_socles_equal_defect_theta", True, len(s_nf) == th_def,
                  f"|S_nf|={len(s_nf)}, defect theta={th_def}")
    report.record("defect_equals_nonfiltered_projectives", True, ss.defect_total == algebra.rank - len(filtered),
                  f"defect={ss.defect_total}, non-filtered={algebra.rank - len(filtered)}")

    word = list(res.word)
    n = len(word)
    base = sorted(base_set(algebra), key=lambda b: b.top)
    dw = kupisch_defects(word)
    invariant = ss.defect_total == th_def
    bad_26, bad_29 = [], []
    for k, b in enumerate(base):
        if word[k] == 1:
            continue
        bound = dw[(k + 1) % n] + 1
        if b.length < bound:
            bad_26.append(f"B at top {b.top} has length {b.length} < {bound}")
        if invariant and b.length != bound:
            bad_29.append(f"B at top {b.top} has length {b.length} != {bound}")
    report.record("base_length_lower_bound", True, not bad_26, "; ".join(bad_26))
    report.record("base_length_equality_when_invariant", invariant, not bad_29, "; ".join(bad_29))
    bad_211 = []
    if invariant:
        for k, b in enumerate(base):
            want = word[k] + sum(dw[(k + j) % n] for j in range(1, word[k] + 1))
            if algebra[b.top] != want:
                bad_211.append(f"P_{b.top} has length {algebra[b.top]} != {want}")
    report.record("filtered_length_formula_when_invariant", invariant, not bad_211, "; ".join(bad_211))
    return report


def check_transfer_theorems(
    algebra: KupischSeries,
    theta: KupischSeries | None = None,
    raise_on_violation: bool = False,
) -> TransferReport:
    from .filtered import epsilon

    if theta is None:
        theta = epsilon(algebra).theta
    elif iso_key(theta) != iso_key(epsilon(algebra).theta):
        raise ValueError(f"{theta} is not epsilon of {algebra}")
    report = TransferReport(algebra, theta)
    lam_p, th_p = profile(algebra), profile(theta)
    d_lam, d_th = defect(algebra), defect(theta)
    invariant = d_lam == d_th
    report.record("defect_monotone", True, d_lam >= d_th, f"defect {d_lam} < defect theta {d_th}")
    report.record("domdim_at_most_2_when_defect_grows", d_lam > d_th, lam_p.domdim <= 2,
                  f"defect {d_lam} > {d_th} but domdim {fmt_dim(lam_p.domdim)}")
    report.record("domdim_plus_2_when_invariant", invariant and d_th != 0, lam_p.domdim == th_p.domdim + 2,
                  f"domdim {fmt_dim(lam_p.domdim)} vs theta {fmt_dim(th_p.domdim)} + 2")
    report.record("gldim_plus_2", lam_p.gldim >= 2, lam_p.gldim == th_p.gldim + 2,
                  f"gldim {fmt_dim(lam_p.gldim)} vs theta {fmt_dim(th_p.gldim)} + 2")
    report.record("dominant_AG_lifts", invariant and th_p.is_dominant_AG, lam_p.is_dominant_AG,
                  "theta dominant AG, defect invariant, lambda not dominant AG")
    report.record("domdim_3_forces_invariance", lam_p.domdim >= 3, invariant,
                  f"domdim {fmt_dim(lam_p.domdim)} with defect {d_lam} != {d_th}")
    report.record("injective_count_when_domdim_3", lam_p.domdim >= 3,
                  injective_non_projective_count(algebra) == injective_non_projective_count(theta),
                  "injective non-projective counts differ")
    check_filtration_counts(algebra, report)
    if raise_on_violation and not report.ok:
        raise TheoremViolation(algebra, report.witnesses)
    return report


def check_even_domdim(algebra: KupischSeries, prof: HomProfile | None = None) -> bool:
    """Dominant AG of infinite gldim has even (or infinite) domdim."""
    prof = prof or profile(algebra)
    if not prof.is_dominant_AG or prof.gldim != INF or prof.domdim == INF:
        return True
    return prof.domdim % 2 == 0


def check_even_gorenstein(algebra: KupischSeries, prof: HomProfile | None = None) -> bool:
    """Minimal AG of infinite gldim has even Gorenstein dimension."""
    prof = prof or profile(algebra)
    if not prof.is_minimal_AG or prof.gldim != INF:
        return True
    return prof.gorenstein_dim % 2 == 0


def check_two_ag_structure(algebra: KupischSeries, prof: HomProfile | None = None) -> bool:
    """2-AG of infinite gldim: base-set lengths at most 2 and projective defects at most 1."""
    prof = prof or profile(algebra)
    if not algebra.is_cyclic or not prof.is_k_AG(2) or prof.gldim != INF:
        return True
    ss = structure_sets(algebra)
    return all(b.length <= 2 for b in ss.base_set) and all(d <= 1 for d in ss.defect_per_projective.values())

