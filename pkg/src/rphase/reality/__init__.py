"""Star involution and reality of the so(n) phase-space brackets."""

from .star import (
    Defect,
    Invariants,
    LocFn,
    NotLocalized,
    StarStructure,
    T_identities,
    all_reality_defects,
    invariants,
    involution_defect,
    reality_defect,
    skew_defect,
    star_of,
    star_structure,
    univ_defects,
    universal_table,
    x2p2_defects,
)

__all__ = [
    "Defect", "Invariants", "LocFn", "NotLocalized", "StarStructure", "T_identities", "all_reality_defects",
    "invariants", "involution_defect", "reality_defect", "skew_defect", "star_of", "star_structure",
    "univ_defects", "universal_table", "x2p2_defects",
]
