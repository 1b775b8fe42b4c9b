"""Stratifications of massless kinematic regions."""

from ._core import (
    Matrix,
    SignedMatroid,
    StrataError,
    StratumLabel,
    arrangement_census,
    census,
    check_rank_one_blocks,
    classify,
    components_r3,
    count_massless,
    count_mmc,
    cyclic_order,
    eigen_signature,
    estimate_dimension,
    export_poset,
    gram,
    igusa_quartic,
    is_mandelstam,
    minor_sign_test,
    mmc4_classify,
    mmc5_matrix,
    mmc_top_count,
    nonempty,
    principal_minor,
    sample,
)

__all__ = [name for name in dir() if not name.startswith("_")]
