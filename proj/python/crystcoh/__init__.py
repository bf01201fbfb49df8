"""Integral cohomology of split crystallographic groups Z^n x| Z/N."""

from ._core import (  # noqa: F401
    AbelianGroup,
    InternalInconsistency,
    Lattice,
    assemble,
    bieberbach_cohomology,
    calabi_yau_check,
    catalog_names,
    cohomology,
    companion_from_v,
    cyclic_cohomology,
    decompose_p_type,
    direct_sum,
    dual,
    e2_page,
    exterior_power,
    gerbe_group,
    homology,
    oracle_compare,
    preset,
    restrict_to_sylow,
    smith_invariants,
    total_cohomology,
    verify_preset,
)

__version__ = "0.1.0"
