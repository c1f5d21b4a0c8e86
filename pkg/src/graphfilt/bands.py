"""Frequency-variable substitutions mapping low-pass, band-pass and band-stop
specifications onto the decaying high-pass prototype.

A band response is never re-expanded into a single rational function; it is
evaluated pointwise as H_proto(|T(lambda)|), which is all spectral graph
filtering needs.  Taking |T| is valid because composed prototypes are even in
lambda.
"""

import math
from dataclasses import dataclass

from .errors import SpecError


@dataclass(frozen=True)
class BandMapping:
    """A band kind, its source cutoffs, and the equivalent prototype spec."""

    kind: str
    params: tuple
    proto_lambda_p: float
    proto_lambda_s: float

    def __post_init__(self):
        if self.proto_lambda_p >= self.proto_lambda_s:
            raise SpecError(
                "mapped prototype is ill-formed: lambda_p "
                f"{self.proto_lambda_p!r} must be below lambda_s {self.proto_lambda_s!r}"
            )


def map_lowpass(lambda_p_lp: float, lambda_s_lp: float) -> BandMapping:
    """Low-pass to prototype: lambda -> 1/lambda, so the prototype cutoffs are
    the reciprocals of the requested ones.  The requested stopband edge must
    sit below the passband edge or the mapped prototype is ill-formed."""
    if lambda_p_lp <= 0.0 or lambda_s_lp <= 0.0:
        raise SpecError("lowpass cutoffs must be positive")
    return BandMapping(
        "lowpass", (lambda_p_lp, lambda_s_lp), 1.0 / lambda_p_lp, 1.0 / lambda_s_lp
    )


def map_bandpass(edges) -> BandMapping:
    """Band-pass to prototype via T(lambda) = lambda - lp1*lp2/lambda.

    Edges are (ls1, lp1, lp2, ls2), ascending.  The prototype passband edge is
    the passband width; the stopband edge is the nearer image of the two
    stopband cutoffs.
    """
    ls1, lp1, lp2, ls2 = map(float, edges)
    if not (0.0 < ls1 < lp1 < lp2 < ls2):
        raise SpecError(f"bandpass edges must satisfy ls1 < lp1 < lp2 < ls2, got {edges!r}")
    center2 = lp1 * lp2
    proto_ls = min(abs(ls1 - center2 / ls1), abs(ls2 - center2 / ls2))
    return BandMapping("bandpass", (ls1, lp1, lp2, ls2), lp2 - lp1, proto_ls)


def map_bandstop(edges) -> BandMapping:
    """Band-stop to prototype via T(lambda) = 1 / (lambda - ls1*ls2/lambda).

    Edges are (lp1, ls1, ls2, lp2), ascending (passband outside, stopband
    inside).  The prototype stopband edge is 1/(ls2 - ls1) and the passband
    edge is the larger reciprocal image of the two passband cutoffs, so both
    of them land inside the prototype passband.
    """
    lp1, ls1, ls2, lp2 = map(float, edges)
    if not (0.0 < lp1 < ls1 < ls2 < lp2):
        raise SpecError(f"bandstop edges must satisfy lp1 < ls1 < ls2 < lp2, got {edges!r}")
    center2 = ls1 * ls2
    imgs = []
    for edge in (lp1, lp2):
        t = edge - center2 / edge
        if t == 0.0:
            raise SpecError(f"bandstop passband edge {edge!r} coincides with the band center")
        imgs.append(1.0 / abs(t))
    return BandMapping("bandstop", (lp1, ls1, ls2, lp2), max(imgs), 1.0 / (ls2 - ls1))


def transform_variable(lam: float, mapping: BandMapping) -> float:
    """|T(lambda)| for the mapping's substitution.

    Singular points (lambda = 0 for the reciprocal forms, the band-stop
    center sqrt(ls1*ls2)) return +inf; the prototype evaluator resolves that
    to its lambda -> inf limit.
    """
    if mapping.kind == "lowpass":
        return math.inf if lam == 0.0 else abs(1.0 / lam)
    if mapping.kind == "bandpass":
        _, lp1, lp2, _ = mapping.params
        if lam == 0.0:
            return math.inf
        return abs(lam - lp1 * lp2 / lam)
    if mapping.kind == "bandstop":
        _, ls1, ls2, _ = mapping.params
        if lam == 0.0:
            return math.inf
        t = lam - ls1 * ls2 / lam
        return math.inf if t == 0.0 else abs(1.0 / t)
    raise SpecError(f"unknown band mapping kind {mapping.kind!r}")
