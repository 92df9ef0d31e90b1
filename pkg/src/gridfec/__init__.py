"""Binary linear block codes, their row/column/grid compositions, and a
deterministic noisy-channel simulator with a CLI front end."""

from .approx import ApproxDecodeError, Basis, approx_decode, pseudo_best_approx, pseudo_inner
from .channel import (
    ChannelConfig,
    ChannelError,
    TrialReport,
    bsc_corrupt,
    inject_errors,
    run_trial,
)
from .families import (
    CyclicSpec,
    cyclic_from_poly,
    hamming,
    parity_check,
    parity_matrix_from_h,
    parity_poly,
    repetition,
)
from .gf2 import (
    BitMatrix,
    BitVector,
    Gf2Error,
    Gf2Poly,
    SuperMatrix,
    distance,
    mat_mul,
    mat_vec,
    poly_divide,
    rank,
    super_equal,
    super_transpose,
    transpose,
    weight,
)
from .grid import (
    CellMask,
    GridCode,
    GridCodeword,
    GridError,
    ReconcileResult,
    TrueChart,
    apply_chart,
    apply_mask,
    block_layout,
    grid_dot,
    load_stencil,
    mask_from_ap,
    uniform_grid,
)
from .linear import CapacityError, CodeError, CosetTable, LinearCode, Syndrome
from .specio import SpecError, format_super_word, parse_spec, parse_super_word
from .super_codes import (
    CompositionError,
    GeneratorUndefinedError,
    SuperCodeword,
    SuperColumnCode,
    SuperRowCode,
    col_family,
    row_family,
    super_distance,
    super_weight,
)

__all__ = [
    "ApproxDecodeError",
    "Basis",
    "BitMatrix",
    "BitVector",
    "CapacityError",
    "CellMask",
    "ChannelConfig",
    "ChannelError",
    "CodeError",
    "CompositionError",
    "CosetTable",
    "CyclicSpec",
    "GeneratorUndefinedError",
    "Gf2Error",
    "Gf2Poly",
    "GridCode",
    "GridCodeword",
    "GridError",
    "LinearCode",
    "ReconcileResult",
    "SpecError",
    "SuperCodeword",
    "SuperColumnCode",
    "SuperMatrix",
    "SuperRowCode",
    "Syndrome",
    "TrialReport",
    "TrueChart",
    "apply_chart",
    "apply_mask",
    "approx_decode",
    "block_layout",
    "bsc_corrupt",
    "col_family",
    "cyclic_from_poly",
    "distance",
    "format_super_word",
    "grid_dot",
    "hamming",
    "inject_errors",
    "load_stencil",
    "mask_from_ap",
    "mat_mul",
    "mat_vec",
    "parity_check",
    "parity_matrix_from_h",
    "parity_poly",
    "parse_spec",
    "parse_super_word",
    "poly_divide",
    "pseudo_best_approx",
    "pseudo_inner",
    "rank",
    "repetition",
    "row_family",
    "run_trial",
    "super_distance",
    "super_equal",
    "super_transpose",
    "super_weight",
    "transpose",
    "uniform_grid",
    "weight",
]
