"""Quasi-tree-partitions of graphs: construction, validation and colouring."""

from ._core import (
    Graph,
    PatternPresent,
    PreconditionViolation,
    QuasiTreePartition,
    QuasitreeError,
    TreeDecomposition,
    build_degeneracy,
    build_excluded,
    build_kst_free,
    c_bound,
    colour_clean,
    colour_fractional,
    colour_heavy,
    extension_or_skewer,
    find_kst,
    find_kst_star,
    generate,
    heuristic_treedec,
    rho,
    to_treedec,
    treewidth_exact,
    validate_colouring,
    validate_qtp,
    validate_treedec,
    weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
