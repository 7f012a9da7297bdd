"""Nakayama algebras encoded as Kupisch series."""

from .enumerate import enumerate_admissible, exhaustive_fiber, universe
from .families import (
    TwoAGSpec,
    cluster_tilting_endomorphism_series,
    generate_2AG,
    generate_2AG_sweep,
    generate_dominant_AR_gldim3,
    generate_dominant_AR_lowdim,
    generate_higher_auslander_gldim3,
    generate_higher_auslander_gldim4,
    higher_auslander_gldim4_cyclic,
)
from .filtered import check_duality, epsilon, epsilon_tower, eta
from .harness import VerificationReport, verify
from .homological import HomProfile, check_transfer_theorems, profile
from .kupisch import (
    CYCLIC,
    LINEAR,
    EmptySeries,
    KupischError,
    KupischSeries,
    NotAdmissible,
    NotCyclic,
    canonical_rotation,
    check_admissible,
    components,
    cyclic,
    iso_key,
    is_isomorphic,
    linear,
    opposite,
    parse,
)
from .reverse import (
    ReverseChoice,
    defect_invariant_reverse,
    enumerate_reverses,
    reverse_fiber,
    weighted_reverse,
)
from .structure import StructureSets, defect, defect_vector, structure_sets
from .uniserial import INF, Uniserial, hom_dim, injective, projective

__version__ = "0.1.0"

__all__ = [
    "CYCLIC",
    "EmptySeries",
    "HomProfile",
    "INF",
    "KupischError",
    "KupischSeries",
    "LINEAR",
    "NotAdmissible",
    "NotCyclic",
    "ReverseChoice",
    "StructureSets",
    "TwoAGSpec",
    "Uniserial",
    "VerificationReport",
    "canonical_rotation",
    "check_admissible",
    "check_duality",
    "check_transfer_theorems",
    "cluster_tilting_endomorphism_series",
    "components",
    "cyclic",
    "defect",
    "defect_invariant_reverse",
    "defect_vector",
    "enumerate_admissible",
    "enumerate_reverses",
    "epsilon",
    "epsilon_tower",
    "eta",
    "exhaustive_fiber",
    "generate_2AG",
    "generate_2AG_sweep",
    "generate_dominant_AR_gldim3",
    "generate_dominant_AR_lowdim",
    "generate_higher_auslander_gldim3",
    "generate_higher_auslander_gldim4",
    "hom_dim",
    "higher_auslander_gldim4_cyclic",
    "injective",
    "is_isomorphic",
    "iso_key",
    "linear",
    "opposite",
    "parse",
    "profile",
    "projective",
    "reverse_fiber",
    "structure_sets",
    "universe",
    "verify",
    "weighted_reverse",
]
