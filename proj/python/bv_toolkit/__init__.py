"""Exact invariants of Borcea-Voisin Calabi-Yau 3-folds of order 2, 3, 4, 6."""

from ._core import (
    BvError,
    EigenspaceDims,
    FamilyFlags,
    FixedLocusN2,
    FixedLocusN3,
    FixedLocusN4,
    FixedLocusN6,
    HodgeDiamond,
    adjunction_genus,
    canonical,
    class_check,
    classify_fiber,
    compare_known,
    emit_table,
    euler_fix,
    family_flags,
    hodge_from_profile,
    hodge_x2,
    hodge_x2_lattice,
    hodge_x3,
    hodge_x3_lattice,
    hodge_x4,
    hodge_x6,
    intersect,
    invariants_from_profile,
    mirror_pairs,
    n2_from_lattice,
    n3_from_lattice,
    n4_complete,
    preset_names,
    singular_fibers,
    solve,
    table_diamonds,
    trace_coeffs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
