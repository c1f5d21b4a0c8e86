"""High-pass prototype design for the four classical filter families.

The prototype response decays with the graph frequency lambda; the name
"high pass" follows the convention that small normalized-Laplacian
eigenvalues are the high graph frequencies.  Each family contributes a pole
(and possibly zero) constructor; the shared pieces are the ripple parameters
derived from attenuation targets and the minimal-order formulas.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .elliptic import (
    Modulus,
    adjust_modulus_cheb2,
    adjust_modulus_elliptic,
    as_modulus,
    complete_elliptic_k,
    inverse_sn,
    jacobi_cd,
)
from .errors import DomainError, SpecError, StabilityError

FAMILIES = ("butterworth", "chebyshev1", "chebyshev2", "elliptic")
BANDS = ("highpass", "lowpass", "bandpass", "bandstop")

# Pre-ceiling order values this close to an integer round to it instead of up.
_CEIL_TIE = 1e-9


@dataclass(frozen=True)
class DesignSpec:
    """User-facing band specification.

    For highpass/lowpass, ``lambda_p``/``lambda_s`` are the passband and
    stopband cutoffs.  For bandpass the edges quadruple is
    (ls1, lp1, lp2, ls2); for bandstop it is (lp1, ls1, ls2, lp2) -- in both
    cases strictly ascending.  Attenuations are in dB, 0 < rp_db < as_db.
    """

    family: str
    band: str = "highpass"
    lambda_p: float | None = None
    lambda_s: float | None = None
    band_edges: tuple[float, float, float, float] | None = None
    rp_db: float = 1.0
    as_db: float = 30.0
    order_override: int | None = None

    def validate(self):
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.band not in BANDS:
            raise SpecError(f"unknown band {self.band!r}; expected one of {BANDS}")
        if not (0.0 < self.rp_db < self.as_db):
            raise SpecError(
                f"attenuations must satisfy 0 < rp_db < as_db, got rp={self.rp_db!r} as={self.as_db!r}"
            )
        if self.order_override is not None and self.order_override < 1:
            raise SpecError("order_override must be a positive integer")
        if self.band in ("highpass", "lowpass"):
            if self.lambda_p is None or self.lambda_s is None:
                raise SpecError(f"{self.band} spec needs lambda_p and lambda_s")
            for name, v in (("lambda_p", self.lambda_p), ("lambda_s", self.lambda_s)):
                if not 0.0 < v < 2.0:
                    raise SpecError(f"{name} must lie in (0, 2), got {v!r}")
            if self.band == "highpass":
                if self.lambda_p == self.lambda_s:
                    raise SpecError("lambda_p = lambda_s is degenerate (infinite order)")
                if self.lambda_p > self.lambda_s:
                    raise SpecError("highpass spec requires lambda_p < lambda_s")
        else:
            if self.band_edges is None or len(self.band_edges) != 4:
                raise SpecError(f"{self.band} spec needs a band_edges quadruple")
            e = self.band_edges
            if not all(0.0 < x < 2.0 for x in e):
                raise SpecError(f"band edges must lie in (0, 2), got {e!r}")
            if not (e[0] < e[1] < e[2] < e[3]):
                raise SpecError(f"band edges must be strictly ascending, got {e!r}")


@dataclass(frozen=True)
class RippleParams:
    """Ripple parameters: eps_p (passband), eps_s (stopband), their ratio
    k1 = eps_p/eps_s (discrimination) and, once cutoffs are known, the
    selectivity k = lambda_p/lambda_s."""

    eps_p: float
    eps_s: float
    k1: float
    k: float | None = None

    def __post_init__(self):
        if self.eps_p <= 0.0 or self.eps_s <= 0.0:
            raise SpecError("ripple parameters must be positive")
        if abs(self.k1 - self.eps_p / self.eps_s) > 1e-12 * self.k1:
            raise SpecError("inconsistent discrimination: k1 != eps_p/eps_s")
        if self.k1 >= 1.0:
            raise SpecError("discrimination k1 must be < 1 (as_db must exceed rp_db)")
        if self.k is not None and not 0.0 < self.k < 1.0:
            raise SpecError(f"selectivity k must lie in (0, 1), got {self.k!r}")

    def with_selectivity(self, lambda_p: float, lambda_s: float) -> "RippleParams":
        if lambda_p >= lambda_s:
            raise SpecError("prototype requires lambda_p < lambda_s")
        return RippleParams(self.eps_p, self.eps_s, self.k1, lambda_p / lambda_s)


@dataclass
class DesignTrace:
    """Every intermediate design quantity, for diagnostics and testing."""

    ripple: RippleParams | None = None
    min_order_real: float | None = None
    # complete integrals of the requested selectivity/discrimination (elliptic)
    K: float | None = None
    K_comp: float | None = None
    K1: float | None = None
    K1_comp: float | None = None
    v0: float | None = None
    u_m: list[float] = field(default_factory=list)
    # inverse-Chebyshev pole intermediates
    c_m: list[float] = field(default_factory=list)
    d_m: list[float] = field(default_factory=list)
    adjusted_k: float | None = None
    # prototype cutoffs after a band mapping
    proto_lambda_p: float | None = None
    proto_lambda_s: float | None = None


@dataclass(frozen=True)
class PoleZeroSet:
    """Poles and finite zeros of a composed (conjugate-product) prototype.

    ``poles`` has length 2N and is closed under conjugation with no pole on
    the real axis; ``zeros`` are the finite transfer zeros (real, in +/-
    pairs), length 2N or 2N-2.  ``gain`` is the response value at lambda=0 and
    ``lambda_ref`` the scaling used for coefficient vectors.
    """

    poles: np.ndarray
    zeros: np.ndarray
    order: int
    gain: float
    lambda_ref: float

    def __post_init__(self):
        poles = np.asarray(self.poles, dtype=complex)
        zeros = np.asarray(self.zeros, dtype=complex)
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "zeros", zeros)
        if len(poles) != 2 * self.order:
            raise StabilityError(f"expected {2 * self.order} poles, got {len(poles)}")
        if len(poles) and np.min(np.abs(poles.imag)) < 1e-13 * np.max(np.abs(poles)):
            raise StabilityError("pole on the real axis: unstable over [0, 2]")
        _check_conjugate_closed(poles)

    @property
    def upper_poles(self) -> np.ndarray:
        return self.poles[self.poles.imag > 0]

    @property
    def positive_zeros(self) -> np.ndarray:
        return np.sort(self.zeros.real[self.zeros.real > 0])


def _check_conjugate_closed(values: np.ndarray, tol=1e-9):
    if len(values) == 0:
        return
    upper = values[values.imag > 0]
    lower = values[values.imag < 0]
    scale = np.max(np.abs(values))
    if len(upper) != len(lower):
        raise StabilityError("pole/zero multiset is not closed under conjugation")
    unmatched = list(np.conj(lower))
    for p in upper:
        dist = np.abs(np.asarray(unmatched) - p)
        i = int(np.argmin(dist))
        if dist[i] > tol * scale:
            raise StabilityError("pole/zero multiset is not closed under conjugation")
        unmatched.pop(i)


def ripple_from_attenuation(rp_db: float, as_db: float) -> RippleParams:
    """Ripple parameters from attenuation targets (in dB).

    eps = sqrt(10^(att/20) - 1); the /20 exponent matches the convention that
    the designed response is a squared magnitude, so the passband floor is
    1/(1 + eps_p^2) and -20 log10 of it equals rp_db.
    """
    if not (0.0 < rp_db < as_db):
        raise SpecError(f"need 0 < rp_db < as_db, got rp={rp_db!r} as={as_db!r}")
    eps_p = math.sqrt(10.0 ** (rp_db / 20.0) - 1.0)
    eps_s = math.sqrt(10.0 ** (as_db / 20.0) - 1.0)
    return RippleParams(eps_p, eps_s, eps_p / eps_s)


def _ceil_order(x: float) -> int:
    return max(1, math.ceil(x - _CEIL_TIE))


def min_order(spec: DesignSpec) -> tuple[int, DesignTrace]:
    """Minimal integer order meeting a high-pass prototype spec.

    Returns (N, trace); the trace records the pre-ceiling value and the
    family's adjusted selectivity where applicable.  The spec must already be
    in prototype form (lambda_p < lambda_s).
    """
    spec.validate()
    if spec.band != "highpass":
        raise SpecError("min_order expects a spec reduced to high-pass prototype form")
    ripple = ripple_from_attenuation(spec.rp_db, spec.as_db)
    ripple = ripple.with_selectivity(spec.lambda_p, spec.lambda_s)
    trace = DesignTrace(ripple=ripple)
    ratio = spec.lambda_s / spec.lambda_p

    if spec.family == "butterworth":
        raw = math.log(ripple.eps_s / ripple.eps_p) / math.log(ratio)
    elif spec.family in ("chebyshev1", "chebyshev2"):
        raw = math.acosh(ripple.eps_s / ripple.eps_p) / math.acosh(ratio)
    else:
        k = as_modulus(ripple.k)
        k1 = as_modulus(ripple.k1)
        trace.K = complete_elliptic_k(k)
        trace.K_comp = complete_elliptic_k(k.complement)
        trace.K1 = complete_elliptic_k(k1)
        trace.K1_comp = complete_elliptic_k(k1.complement)
        raw = (trace.K * trace.K1_comp) / (trace.K_comp * trace.K1)

    trace.min_order_real = raw
    n = _ceil_order(raw)
    if spec.family == "chebyshev2":
        trace.adjusted_k = adjust_modulus_cheb2(n, ripple.k1).k
    elif spec.family == "elliptic":
        trace.adjusted_k = adjust_modulus_elliptic(n, ripple.k1).k
    return n, trace


def poles_butterworth(order: int, eps_p: float, lambda_p: float) -> PoleZeroSet:
    """All 2N poles of the maximally-flat prototype: equally spaced on the
    circle of radius lambda_p * eps_p^(-1/N).  No finite zeros."""
    if eps_p <= 0.0 or lambda_p <= 0.0:
        raise DomainError("eps_p and lambda_p must be positive")
    m = np.arange(1, 2 * order + 1)
    radius = lambda_p * eps_p ** (-1.0 / order)
    poles = radius * np.exp(1j * np.pi * (2 * m - 1) / (2 * order))
    return PoleZeroSet(poles, np.array([], dtype=complex), order, 1.0, lambda_p)


def poles_cheb1(order: int, eps_p: float, lambda_p: float) -> PoleZeroSet:
    """2N equal-passband-ripple poles on the ellipse with semi-axes
    lambda_p*cosh(a), lambda_p*sinh(a), a = asinh(1/eps_p)/N."""
    if eps_p <= 0.0 or lambda_p <= 0.0:
        raise DomainError("eps_p and lambda_p must be positive")
    a = math.asinh(1.0 / eps_p) / order
    theta = (2 * np.arange(1, 2 * order + 1) - 1) * np.pi / (2 * order)
    poles = lambda_p * (np.cos(theta) * math.cosh(a) + 1j * np.sin(theta) * math.sinh(a))
    gain = 1.0 / (1.0 + eps_p * eps_p) if order % 2 == 0 else 1.0
    return PoleZeroSet(poles, np.array([], dtype=complex), order, gain, lambda_p)


def cheb2_intermediates(order: int, eps_s: float):
    """(c_m, d_m) arrays entering the inverse-Chebyshev pole formula."""
    b = math.asinh(eps_s) / order
    theta = (2 * np.arange(1, 2 * order + 1) - 1) * np.pi / (2 * order)
    return np.cos(theta) * math.cosh(b), np.sin(theta) * math.sinh(b)


def poles_zeros_cheb2(order: int, eps_s: float, lambda_s: float) -> PoleZeroSet:
    """Inverse-Chebyshev prototype anchored at the stopband edge.

    Poles are lambda_s * (c_m + j d_m) / (c_m^2 + d_m^2); finite zeros are
    lambda_s / cos((2m-1) pi / 2N).  For odd N two of the 2N zeros are
    infinite (cos vanishes) and are dropped, leaving 2N-2.
    """
    if eps_s <= 0.0 or lambda_s <= 0.0:
        raise DomainError("eps_s and lambda_s must be positive")
    c, d = cheb2_intermediates(order, eps_s)
    poles = lambda_s * (c + 1j * d) / (c * c + d * d)
    cos_theta = np.cos((2 * np.arange(1, 2 * order + 1) - 1) * np.pi / (2 * order))
    finite = np.abs(cos_theta) > 1e-9
    zeros = (lambda_s / cos_theta[finite]).astype(complex)
    return PoleZeroSet(poles, zeros, order, 1.0, lambda_s)


def elliptic_v0(order: int, eps_p: float, k1) -> float:
    """Imaginary pole offset: v0 = -j * inverse_sn(j/eps_p, k1) / (N K1).

    The inverse lands on the imaginary axis, so v0 is real and positive; the
    sign convention only swaps the two half-planes, both of which the
    conjugate composition uses.
    """
    m1 = as_modulus(k1)
    big_k1 = complete_elliptic_k(m1)
    u = inverse_sn(1j / eps_p, m1)
    v0 = (-1j / (order * big_k1)) * u
    if abs(v0.imag) > 1e-9 * max(1.0, abs(v0.real)):
        raise DomainError(f"v0 expected real, got {v0!r}")
    return v0.real


def odd_index_grid(order: int) -> np.ndarray:
    """u_m = (2m - 1)/N for m = 1..2N."""
    return (2.0 * np.arange(1, 2 * order + 1) - 1.0) / order


def zeros_poles_elliptic(order: int, ripple: RippleParams, lambda_p: float,
                         adjusted_k: Modulus) -> PoleZeroSet:
    """Equal-ripple (Cauer) prototype from the degree-equation modulus.

    Poles sit at lambda_p * cd((u_m - j v0) K, k) over the u_m grid; the
    response maxima cd(u_m K, k) lie in the unit interval and the transfer
    zeros are their reciprocal images lambda_p / (k * cd(u_m K, k)), as
    forced by the equal-ripple identity.  Odd N drops the two infinite
    zeros where cd vanishes.
    """
    if lambda_p <= 0.0:
        raise DomainError("lambda_p must be positive")
    big_k = complete_elliptic_k(adjusted_k)
    v0 = elliptic_v0(order, ripple.eps_p, ripple.k1)
    grid = odd_index_grid(order)
    poles = np.array(
        [lambda_p * jacobi_cd((um - 1j * v0) * big_k, adjusted_k) for um in grid]
    )
    zeros = []
    for um in grid:
        w = jacobi_cd(um * big_k, adjusted_k).real
        if abs(w) > 1e-9:
            zeros.append(lambda_p / (adjusted_k.k * w))
    gain = 1.0 / (1.0 + ripple.eps_p ** 2) if order % 2 == 0 else 1.0
    return PoleZeroSet(poles, np.array(zeros, dtype=complex), order, gain, lambda_p)
