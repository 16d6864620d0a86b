"""Wavelet analysis on the circle and the real line, built from the
two-by-two real matrix group that acts on both.

The circle chart is the open arc (-pi/2, pi/2); dilations act through the
tangent, translations are rigid rotations, and the admissibility machinery
in `cwt` turns any well-decaying chart signal into a reconstruction frame.
`line` carries the flat counterpart, `euclid` the bridge between the two,
and `laguerre` the discrete-series realization on the half-line with its
integral transform to the half-plane.
"""

from .circle import (
    CircleGrid,
    CircleSignal,
    RepParams,
    casimir_apply,
    dilate_angle,
    generator,
    multiplier,
    reduce_half_angle,
    rep_action,
    trig_interpolate,
)
from .cwt import (
    AdmissibilityReport,
    FourierCoeffs,
    ScaleGrid,
    Scalogram,
    analyze,
    analyze_direct,
    default_scale_grid,
    dilated_coeffs,
    fourier_coeffs,
    frame_bounds,
    lambda_sequence,
    make_dog,
    mode_synthesis,
    synthesize,
    weak_admissibility,
)
from .errors import (
    AliasingError,
    CircletError,
    DecayError,
    FormatError,
    GridMismatchError,
    SupportEscapeError,
)
from .euclid import (
    ContractionParams,
    check_intertwining,
    contract_point,
    euclidean_limit_error,
    i_r_inverse,
    i_r_map,
    smooth_bump,
    stereo_lift,
    stereo_project,
)
from .io import (
    atomic_write_text,
    read_report,
    read_scalogram,
    read_signal,
    report_to_dict,
    write_json,
    write_report,
    write_scalogram,
    write_signal,
)
from .laguerre import (
    LaguerreBasisSpec,
    QuadratureConvergenceWarning,
    gauss_laguerre_gram,
    genlaguerre,
    halfplane_basis,
    laguerre_basis,
    laguerre_function,
    laplace_kernel,
    laplace_kernel_series,
    laplace_transform,
    rplus_generators,
)
from .line import (
    LineAdmissibility,
    LineGrid,
    LineScaleGrid,
    LineScalogram,
    LineSignal,
    LogGrid,
    RPlusFunction,
    affine_action,
    line_admissibility,
    line_analyze,
    line_analyze_direct,
    line_synthesize,
    mexican_hat,
    rplus_action,
    spectrum,
)
from .sl2r import (
    AffineElement,
    GroupElement,
    Sl2Matrix,
    affine_compose,
    affine_embed,
    compose,
    haar_weight,
    inverse,
    iwasawa_decompose,
    matrix,
    reduce_angle,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "AffineElement",
    "AliasingError",
    "CircleGrid",
    "CircleSignal",
    "CircletError",
    "ContractionParams",
    "DecayError",
    "FormatError",
    "FourierCoeffs",
    "GridMismatchError",
    "GroupElement",
    "LaguerreBasisSpec",
    "LineAdmissibility",
    "LineGrid",
    "LineScaleGrid",
    "LineScalogram",
    "LineSignal",
    "LogGrid",
    "QuadratureConvergenceWarning",
    "RPlusFunction",
    "RepParams",
    "ScaleGrid",
    "Scalogram",
    "Sl2Matrix",
    "SupportEscapeError",
    "affine_action",
    "affine_compose",
    "affine_embed",
    "analyze",
    "analyze_direct",
    "atomic_write_text",
    "casimir_apply",
    "check_intertwining",
    "compose",
    "contract_point",
    "default_scale_grid",
    "dilate_angle",
    "dilated_coeffs",
    "euclidean_limit_error",
    "fourier_coeffs",
    "frame_bounds",
    "gauss_laguerre_gram",
    "generator",
    "genlaguerre",
    "haar_weight",
    "halfplane_basis",
    "i_r_inverse",
    "i_r_map",
    "inverse",
    "iwasawa_decompose",
    "laguerre_basis",
    "laguerre_function",
    "lambda_sequence",
    "laplace_kernel",
    "laplace_kernel_series",
    "laplace_transform",
    "line_admissibility",
    "line_analyze",
    "line_analyze_direct",
    "line_synthesize",
    "make_dog",
    "matrix",
    "mexican_hat",
    "mode_synthesis",
    "multiplier",
    "read_report",
    "read_scalogram",
    "read_signal",
    "reduce_angle",
    "reduce_half_angle",
    "rep_action",
    "report_to_dict",
    "rplus_action",
    "rplus_generators",
    "smooth_bump",
    "spectrum",
    "stereo_lift",
    "stereo_project",
    "synthesize",
    "trig_interpolate",
    "weak_admissibility",
    "write_json",
    "write_report",
    "write_scalogram",
    "write_signal",
]
