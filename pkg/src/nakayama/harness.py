"""Exhaustive verification of the structural theorems over a bounded universe.

Work is sharded by (rank, minimal entry) of cyclic words.  Each shard returns
plain data; the merge sorts everything, so any job count gives the same report.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .enumerate import enumerate_admissible, exhaustive_fiber
from .filtered import (
    check_duality,
    epsilon,
    epsilon_by_hom,
    eta_by_hom,
    eta_by_minimal_projectives,
    eta_word,
)
from .homological import (
    check_even_domdim,
    check_even_gorenstein,
    check_filtration_counts,
    check_transfer_theorems,
    check_two_ag_structure,
    profile,
)
from .kupisch import KupischSeries, from_cyclic_word, iso_key, opposite, parse
from .reverse import defect_invariant_reverse, has_simple_component
from .structure import (
    base_lengths_by_kupisch,
    defect,
    defect_by_kupisch,
    defect_by_quotients,
    is_selfinjective,
    minimal_injectives,
    projective_injectives,
    structure_sets,
)
from .uniserial import all_uniserials, hom_dim, hom_dim_bruteforce

SCHEMA = "nakayama/1"
THEOREMS = ("A", "B", "C", "duality", "counts", "evenness", "oracles", "gldim")

# (check name, expected, actual)
Failure = tuple[str, str, str]


@dataclass
class VerificationReport:
    theorem: str
    rank_bound: int
    entry_bound: int
    cases: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    checks: dict[str, dict[str, int]] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "theorem": self.theorem,
            "universe": {"kind": "cyclic", "rank_bound": self.rank_bound, "entry_bound": self.entry_bound},
            "cases": self.cases,
            "checks": self.checks,
            "violations": self.violations,
            "ok": self.ok,
            "elapsed": round(self.elapsed, 3),
        }


class _Tally:
    """Per-check counters for one shard."""

    def __init__(self) -> None:
        self.applied: dict[str, int] = {}
        self.failures: list[Failure] = []

    def check(self, name: str, applies: bool, holds: bool, expected: str = "", actual: str = "") -> None:
        if not applies:
            self.applied.setdefault(name, 0)
            return
        self.applied[name] = self.applied.get(name, 0) + 1
        if not holds:
            self.failures.append((name, expected, actual))


def _transfer(lam: KupischSeries, tally: _Tally, names: Iterable[str]) -> None:
    report = check_transfer_theorems(lam)
    for name in names:
        value = report.results[name]
        tally.check(name, value is not None, bool(value), "holds", report.witnesses.get(name, ""))


def _check_counts(lam: KupischSeries, tally: _Tally) -> None:
    ss = structure_sets(lam)
    n = lam.rank
    sizes = {
        "socle_set": len(ss.socle_set),
        "top_set": len(ss.top_set),
        "base_set": len(ss.base_set),
        "relations": ss.num_relations,
        "minimal_projectives": len(ss.minimal_projectives),
        "minimal_injectives": len(minimal_injectives(lam)),
    }
    tally.check("set_sizes_agree", True, len(set(sizes.values())) == 1, "all equal", str(sizes))
    tally.check("rank_is_relations_plus_defect", True, n == ss.num_relations + ss.defect_total,
                str(n), f"{ss.num_relations} + {ss.defect_total}")
    covered = [lam.index(v) for b in ss.base_set for v in b.factors()]
    tally.check("base_set_partitions_vertices", True, sorted(covered) == list(range(1, n + 1)),
                "each vertex once", str(sorted(covered)))
    lengths = sorted(b.length for b in ss.base_set)
    by_kupisch = sorted(base_lengths_by_kupisch(lam))
    tally.check("base_lengths_by_kupisch", True, lengths == by_kupisch, str(lengths), str(by_kupisch))
    c = lam.entries
    descents = sum(1 for i in range(n) if c[i] > c[(i + 1) % n])
    rises = sum(max(c[(i + 1) % n] - c[i], 0) for i in range(n))
    tally.check("descents_equal_rises", True, descents == rises, str(rises), str(descents))
    shifted = sorted(lam.index(t - 1) for t in projective_injectives(lam))
    tally.check("minimal_projectives_precede_projective_injectives", True,
                shifted == list(ss.minimal_projectives), str(shifted), str(list(ss.minimal_projectives)))
    op = opposite(lam)
    op_ss = structure_sets(op)
    got = (op.rank, op_ss.defect_total, op_ss.num_relations)
    want = (n, ss.defect_total, ss.num_relations)
    tally.check("opposite_preserves_counts", True, got == want, str(want), str(got))
    tally.check("opposite_is_involution", True, iso_key(opposite(op)) == iso_key(lam), str(lam), str(opposite(op)))
    report = check_filtration_counts(lam)
    for name, value in report.results.items():
        tally.check(name, value is not None, bool(value), "holds", report.witnesses.get(name, ""))


def _check_a(lam: KupischSeries, tally: _Tally) -> KupischSeries:
    theta = epsilon(lam).theta
    d_lam, d_th = defect(lam), defect(theta)
    tally.check("defect_monotone", True, d_lam >= d_th, f">= {d_th}", str(d_lam))
    if d_lam == d_th and not is_selfinjective(lam):
        back = defect_invariant_reverse(theta)
        tally.check("round_trip", True, iso_key(back) == iso_key(lam), str(lam), str(back))
    return theta


def _check_duality(lam: KupischSeries, tally: _Tally) -> None:
    w = check_duality(lam)
    tally.check("epsilon_is_eta_opposite", True, w.holds, str(w.epsilon), str(w.eta_opposite))
    tally.check("epsilon_of_opposite_is_eta", True, w.opposite_route_holds, str(w.eta), str(w.epsilon_of_opposite))


def _check_evenness(lam: KupischSeries, tally: _Tally) -> None:
    prof = profile(lam)
    inf_gl = prof.gldim == float("inf")
    tally.check("even_domdim", prof.is_dominant_AG and inf_gl and not prof.is_selfinjective,
                check_even_domdim(lam, prof), "even", str(prof.domdim))
    tally.check("two_ag_structure", prof.is_k_AG(2) and inf_gl, check_two_ag_structure(lam, prof),
                "base lengths <= 2, defects <= 1", str(structure_sets(lam).defect_per_projective))
    tally.check("even_gorenstein", prof.is_minimal_AG and inf_gl and not prof.is_selfinjective,
                check_even_gorenstein(lam, prof), "even", str(prof.gorenstein_dim))


def _check_oracles(lam: KupischSeries, tally: _Tally) -> None:
    mods = list(all_uniserials(lam))
    bad = [(m, k) for m in mods for k in mods if hom_dim(m, k) != hom_dim_bruteforce(m, k)]
    tally.check("hom_dim_bruteforce", True, not bad, "agree", ", ".join(f"Hom({m},{k})" for m, k in bad[:3]))
    routes = [(defect_by_kupisch(lam.entries, i), defect_by_quotients(lam, i)) for i in range(1, lam.rank + 1)]
    tally.check("defect_routes", True, all(a == b for a, b in routes), "agree", str(routes))
    word = epsilon(lam).word
    hom = epsilon_by_hom(lam)
    tally.check("epsilon_recipe_vs_hom", True, list(word) == hom, str(hom), str(list(word)))
    eta_w = eta_word(lam)
    for name, oracle in (("eta_recipe_vs_hom", eta_by_hom(lam)),
                         ("eta_recipe_vs_minimal_projectives", eta_by_minimal_projectives(lam))):
        same = iso_key(from_cyclic_word(eta_w)) == iso_key(from_cyclic_word(oracle))
        tally.check(name, True, same, str(oracle), str(eta_w))


_TRANSFER = {
    "B": ("defect_monotone", "domdim_at_most_2_when_defect_grows", "domdim_plus_2_when_invariant",
          "domdim_3_forces_invariance", "injective_count_when_domdim_3"),
    "C": ("dominant_AG_lifts",),
    "gldim": ("gldim_plus_2",),
}


def check_case(theorem: str, lam: KupischSeries, tally: _Tally) -> KupischSeries | None:
    """Run one theorem's per-algebra checks; A also returns Theta for the fiber pass."""
    if theorem in _TRANSFER:
        _transfer(lam, tally, _TRANSFER[theorem])
    elif theorem == "A":
        return _check_a(lam, tally)
    elif theorem == "counts":
        _check_counts(lam, tally)
    elif theorem == "duality":
        _check_duality(lam, tally)
    elif theorem == "evenness":
        _check_evenness(lam, tally)
    elif theorem == "oracles":
        _check_oracles(lam, tally)
    else:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    return None


def _check_fiber(theta: KupischSeries, tally: _Tally) -> None:
    """The defect-invariant fiber over Theta is one class, or empty when Theta has an A_1 part."""
    d = defect(theta)
    found = sorted(str(s) for s in exhaustive_fiber(theta, d))
    if has_simple_component(theta):
        tally.check("fiber_empty_with_simple_component", True, not found, "[]", str(found))
        return
    want = [str(defect_invariant_reverse(theta))]
    same = len(found) == 1 and iso_key(parse(found[0])) == iso_key(parse(want[0]))
    tally.check("fiber_is_one_class", True, same, str(want), str(found))


def _run_shard(args: tuple[str, int, int, int]) -> tuple[int, dict[str, int], list[tuple[str, Failure]], list[str]]:
    theorem, rank, max_entry, first = args
    tally = _Tally()
    cases = 0
    fails: list[tuple[str, Failure]] = []
    thetas: set[str] = set()
    for lam in enumerate_admissible(rank, max_entry, first=first):
        cases += 1
        before = len(tally.failures)
        theta = check_case(theorem, lam, tally)
        fails += [(str(lam), f) for f in tally.failures[before:]]
        if theta is not None:
            thetas.add(str(theta))
    return cases, tally.applied, fails, sorted(thetas)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("NAKAYAMA_JOBS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=1))


def _fiber_shard(text: str) -> tuple[dict[str, int], list[tuple[str, Failure]]]:
    tally = _Tally()
    _check_fiber(parse(text), tally)
    return tally.applied, [(text, f) for f in tally.failures]


def _witness(theorem: str, series: str, failure: Failure) -> dict[str, Any]:
    name, expected, actual = failure
    return {
        "series": series,
        "check": name,
        "expected": expected,
        "actual": actual,
        "replay": f"nakayama verify --theorem {theorem} --series {series}",
    }


def _merge(report: VerificationReport, applied: dict[str, int], fails: list[tuple[str, Failure]]) -> None:
    for name, count in applied.items():
        entry = report.checks.setdefault(name, {"applied": 0, "violations": 0})
        entry["applied"] += count
    for series, failure in fails:
        report.checks.setdefault(failure[0], {"applied": 0, "violations": 0})["violations"] += 1
        report.violations.append(_witness(report.theorem, series, failure))


def verify(theorem: str, rank_bound: int, entry_bound: int, jobs: int | None = None) -> VerificationReport:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    jobs = default_jobs() if jobs is None else jobs
    start = time.perf_counter()
    report = VerificationReport(theorem, rank_bound, entry_bound)
    shards = [(theorem, r, entry_bound, f) for r in range(1, rank_bound + 1) for f in range(2, entry_bound + 1)]
    thetas: set[str] = set()
    for cases, applied, fails, ths in _map(_run_shard, shards, jobs):
        report.cases += cases
        _merge(report, applied, fails)
        thetas.update(ths)
    if theorem == "A":
        for applied, fails in _map(_fiber_shard, sorted(thetas), jobs):
            _merge(report, applied, fails)
    report.violations.sort(key=lambda v: (v["check"], len(v["series"]), v["series"]))
    report.checks = dict(sorted(report.checks.items()))
    report.elapsed = time.perf_counter() - start
    return report


def verify_series(theorem: str, lam: KupischSeries) -> VerificationReport:
    """Replay one algebra, as echoed in a witness."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    start = time.perf_counter()
    report = VerificationReport(theorem, lam.rank, max(lam.entries))
    tally = _Tally()
    theta = check_case(theorem, lam, tally)
    report.cases = 1
    _merge(report, tally.applied, [(str(lam), f) for f in tally.failures])
    if theta is not None and defect(lam) == defect(theta):
        applied, fails = _fiber_shard(str(theta))
        _merge(report, applied, fails)
    report.elapsed = time.perf_counter() - start
    return report


__all__ = ["SCHEMA", "THEOREMS", "VerificationReport", "check_case", "default_jobs", "verify", "verify_series"]
