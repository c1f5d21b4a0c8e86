"""graphfilt: universal IIR graph filter design on the normalized-Laplacian
spectrum, with Butterworth, Chebyshev I/II, and elliptic prototypes."""

from .bands import BandMapping, map_bandpass, map_bandstop, map_lowpass, transform_variable
from .design import FilterDesign, design_filter, from_document, to_document
from .elliptic import (
    Modulus,
    adjust_modulus_cheb2,
    adjust_modulus_elliptic,
    complete_elliptic_k,
    inverse_cd,
    inverse_sn,
    jacobi_cd,
    jacobi_sn_cn_dn,
)
from .errors import (
    CompositionError,
    DimensionError,
    DomainError,
    GraphFiltError,
    ParseError,
    SpecError,
    StabilityError,
)
from .graphs import (
    Graph,
    SpectralDecomposition,
    apply_rational_matrix_filter,
    apply_spectral_filter,
    eig_sym,
    graph_fourier,
    inverse_graph_fourier,
    load_edge_list,
    load_signal,
    normalized_laplacian,
    spectral_decomposition,
)
from .prototype import (
    BANDS,
    FAMILIES,
    DesignSpec,
    DesignTrace,
    PoleZeroSet,
    RippleParams,
    min_order,
    poles_butterworth,
    poles_cheb1,
    poles_zeros_cheb2,
    ripple_from_attenuation,
    zeros_poles_elliptic,
)
from .response import (
    RationalResponse,
    attenuation_db,
    compose_conjugate,
    evaluate_response,
    evaluate_response_coeffs,
    identity_response,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
