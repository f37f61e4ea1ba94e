"""Weyl m-functions of complex Jacobi matrices.

Three mutually validating routes: resolvent/recursion, response-vector
power series in the disk variable z, and the Takagi-factorization
discrete spectral measure.
"""

from .core import (
    FiniteJacobiMatrix,
    JacobiCoefficients,
    assemble_finite,
    free_coefficients,
    load_coefficients,
    save_coefficients,
    validate_coefficients,
)
from .dynamics import (
    ControlSequence,
    ResponseVector,
    WaveField,
    apply_response,
    convolve,
    delta_control,
    response_vector,
    simulate,
)
from .recursion import (
    RecursionSolution,
    green_function,
    phi_plus_finite,
    phi_plus_semiinfinite,
    solve_pq,
    weyl_resolvent,
    wronskian,
)
from .series import (
    WeylEvaluation,
    compare_methods,
    growth_envelope,
    l2_certificate,
    tail_bound,
    weyl_series,
)
from .takagi import (
    SpectralMeasureData,
    TakagiFactorization,
    chebyshev_t,
    chebyshev_table,
    moments,
    reconstruct_field,
    response_from_measure,
    solve_coupled_c,
    spectral_data,
    takagi_factorize,
)
from .transform import (
    RegionD,
    fourier_forward,
    fourier_inverse,
    free_measure_density,
    free_solutions,
    in_region_d,
    lambda_to_z,
    region_boundary,
    z_to_lambda,
)

__version__ = "0.1.0"
