"""Composition of pole/zero sets into real rational responses and their
evaluation.

Coefficient vectors are ascending powers of x = lambda / lambda_ref; the
factored (cascade) form is always retained and is the numerically
authoritative evaluation path -- expanded coefficients of very high order
polynomials are diagnostic only.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import CompositionError
from .prototype import PoleZeroSet

_IMAG_RESIDUE_TOL = 1e-9
# polynomial products switch to FFT multiplication above this degree
_FFT_DEGREE = 64


def _poly_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = len(a) + len(b) - 1
    if n <= _FFT_DEGREE:
        return np.convolve(a, b)
    size = 1 << (n - 1).bit_length()
    return np.fft.irfft(np.fft.rfft(a, size) * np.fft.rfft(b, size), size)[:n]


def _real_factors(values: np.ndarray, lambda_ref: float, what: str) -> list:
    """Real linear/quadratic factors of prod (1 - x lambda_ref / v).

    Real roots give linear factors; each strictly complex root is paired with
    its conjugate into the exactly-real quadratic
    1 - 2 x lambda_ref Re(v)/|v|^2 + x^2 lambda_ref^2/|v|^2.  A root without a
    conjugate partner means the product cannot have real coefficients.
    """
    vals = np.asarray(values, dtype=complex)
    factors = [np.array([1.0, -lambda_ref / v.real]) for v in vals[vals.imag == 0.0]]
    upper = vals[vals.imag > 0.0]
    lower = list(vals[vals.imag < 0.0])
    scale = np.max(np.abs(vals)) if len(vals) else 1.0
    if len(upper) != len(lower):
        raise CompositionError(f"{what} multiset is not closed under conjugation")
    for p in upper:
        dist = np.abs(np.asarray(lower) - p.conjugate())
        i = int(np.argmin(dist))
        if dist[i] > _IMAG_RESIDUE_TOL * scale:
            raise CompositionError(f"{what} multiset is not closed under conjugation")
        lower.pop(i)
        a = abs(p) ** 2
        factors.append(np.array([1.0, -2.0 * lambda_ref * p.real / a, lambda_ref**2 / a]))
    return factors


def _poly_from_roots(roots: np.ndarray, lambda_ref: float, what: str) -> np.ndarray:
    """prod_i (1 - x * lambda_ref / root_i) as ascending real coefficients.

    Conjugate pairs are collapsed into real quadratics before the balanced
    product tree runs, so the expansion never accumulates an imaginary
    residue; large blocks multiply through real FFTs.
    """
    polys = _real_factors(roots, lambda_ref, what)
    if not polys:
        return np.array([1.0])
    while len(polys) > 1:
        polys = [
            _poly_mul(polys[i], polys[i + 1]) if i + 1 < len(polys) else polys[i]
            for i in range(0, len(polys), 2)
        ]
    return polys[0]


@dataclass(frozen=True)
class RationalResponse:
    """Real rational frequency response H(lambda) = gain * num(x)/den(x),
    x = lambda/lambda_ref, with the source pole/zero set retained for
    cascade-form evaluation."""

    num_coeffs: np.ndarray
    den_coeffs: np.ndarray
    lambda_ref: float
    gain: float
    pole_zero: PoleZeroSet

    @property
    def order(self) -> int:
        return self.pole_zero.order


def compose_conjugate(pz: PoleZeroSet) -> RationalResponse:
    """Expand the conjugate pole/zero multisets into real coefficient vectors.

    Numerator runs over all finite zeros, denominator over all 2N poles; both
    polynomials have constant term 1.  Conjugate pairs are multiplied into
    real quadratics first (the imaginary parts cancel exactly there), which
    keeps the expanded coefficients real by construction; a root that lacks
    its conjugate partner raises CompositionError.  Past order ~64 the
    expansion cancels catastrophically in doubles and the coefficient vectors
    are diagnostic only; cascade evaluation stays authoritative.
    """
    num = _poly_from_roots(pz.zeros, pz.lambda_ref, "numerator")
    den = _poly_from_roots(pz.poles, pz.lambda_ref, "denominator")
    if abs(den[0]) < 1e-12 and pz.order <= _FFT_DEGREE:
        raise CompositionError("denominator constant term vanished")
    return RationalResponse(num, den, pz.lambda_ref, pz.gain, pz)


def evaluate_response(r: RationalResponse, lam) -> np.ndarray | float:
    """H(lambda) >= 0 evaluated in cascade form.

    Conjugate pole pairs contribute real quadratics
    1 - 2 lam Re(p)/|p|^2 + lam^2/|p|^2 and the +/- zero pairs contribute
    1 - (lam/z)^2; the products never overflow for the pole counts the
    coefficient form would choke on.  ``lam`` may be a scalar or an array;
    infinities evaluate to the lambda -> inf limit of the response.
    """
    lam_arr = np.asarray(lam, dtype=float)
    scalar = lam_arr.ndim == 0
    lam_arr = np.atleast_1d(lam_arr).astype(float)
    out = np.full(lam_arr.shape, float(r.gain))
    finite = np.isfinite(lam_arr)
    x = lam_arr[finite]
    h = np.full(x.shape, float(r.gain))
    for z in r.pole_zero.positive_zeros:
        h *= 1.0 - (x / z) ** 2
    for p in r.pole_zero.upper_poles:
        a = abs(p) ** 2
        h /= 1.0 - 2.0 * x * p.real / a + x * x / a
    out[finite] = h
    if not np.all(finite):
        pz = r.pole_zero
        if len(pz.zeros) < len(pz.poles):
            limit = 0.0
        else:
            limit = r.gain * float(
                np.prod(np.abs(pz.upper_poles) ** 2 / pz.positive_zeros ** 2)
            )
        out[~finite] = limit
    return float(out[0]) if scalar else out


def evaluate_response_coeffs(r: RationalResponse, lam) -> np.ndarray | float:
    """Coefficient-form evaluation (Horner on the expanded polynomials), for
    cross-checking the cascade path at moderate orders."""
    x = np.asarray(lam, dtype=float) / r.lambda_ref
    num = np.polynomial.polynomial.polyval(x, r.num_coeffs)
    den = np.polynomial.polynomial.polyval(x, r.den_coeffs)
    return r.gain * num / den


def attenuation_db(r: RationalResponse, lam) -> np.ndarray | float:
    """Attenuation -20 log10(H(lambda) / H_ref) in dB.

    The reference is the passband maximum of the normalized response (the
    value 1 in the units evaluate_response returns), so the passband edge of
    an equal-ripple design reads exactly rp_db for every order parity; for
    the monotone families this coincides with the response at lambda = 0.
    Returns +inf at transfer zeros.
    """
    h = evaluate_response(r, lam)
    h_arr = np.atleast_1d(np.asarray(h, dtype=float))
    out = np.full(h_arr.shape, math.inf)
    pos = h_arr > 0.0
    out[pos] = -20.0 * np.log10(h_arr[pos])
    return float(out[0]) if np.ndim(h) == 0 else out


def identity_response() -> RationalResponse:
    """The all-pass response H = 1 (used by the CLI bypass flag)."""
    pz = PoleZeroSet(np.array([], dtype=complex), np.array([], dtype=complex), 0, 1.0, 1.0)
    return RationalResponse(np.array([1.0]), np.array([1.0]), 1.0, 1.0, pz)
