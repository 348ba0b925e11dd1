"""Security analysis of the six-state QKD protocol with threshold detectors."""

from ._core import (  # noqa: F401
    BasisAxis,
    BitValue,
    CheckResult,
    ClickStats,
    Envelope,
    ErrorPoint,
    KeyRateRow,
    MinErrorRow,
    ProjectorSet,
    Protocol,
    RCoefficients,
    RegionParams,
    SixStateError,
    SquashResult,
    SymmetricSplit,
    TangentB,
    avg_error_povm,
    basis_ket,
    binary_entropy,
    bisect_root,
    build_projectors,
    construct_squash_y,
    decompose,
    envelope_oracle,
    error_povm,
    error_rates,
    group_elements,
    h3,
    h12,
    hermitian_eigenvalues,
    hzx_upper,
    keyrate,
    kron,
    max_h3_at,
    min_bit_error,
    min_error_table,
    pauli,
    project_psd,
    region_bounds,
    region_map,
    run_verify,
    simulate_clicks,
    singlet,
    symmetric_split,
    tangent_at_b,
    tangent_envelope,
    threshold,
    threshold_povm,
    twirl,
    ytilde_error_povm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
