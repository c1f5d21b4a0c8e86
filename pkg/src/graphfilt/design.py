"""End-to-end filter design: spec -> band mapping -> prototype -> response.

A FilterDesign bundles everything a caller needs to evaluate the filter at
arbitrary graph frequencies and to serialize/reload it losslessly as a JSON
design document.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bands import BandMapping, map_bandpass, map_bandstop, map_lowpass, transform_variable
from .elliptic import adjust_modulus_cheb2, adjust_modulus_elliptic
from .errors import ParseError, SpecError
from .prototype import (
    DesignSpec,
    DesignTrace,
    PoleZeroSet,
    RippleParams,
    cheb2_intermediates,
    elliptic_v0,
    min_order,
    odd_index_grid,
    poles_butterworth,
    poles_cheb1,
    poles_zeros_cheb2,
    zeros_poles_elliptic,
)
from .response import RationalResponse, attenuation_db, compose_conjugate, evaluate_response


@dataclass(frozen=True)
class FilterDesign:
    spec: DesignSpec
    mapping: BandMapping | None
    order: int
    composed_order: int
    prototype: PoleZeroSet
    response: RationalResponse
    trace: DesignTrace

    def response_at(self, lam):
        """H(lambda), band-aware: prototypes evaluate directly, mapped bands
        evaluate the prototype at |T(lambda)|."""
        if self.mapping is None:
            return evaluate_response(self.response, lam)
        arr = np.atleast_1d(np.asarray(lam, dtype=float))
        t = np.array([transform_variable(v, self.mapping) for v in arr])
        out = evaluate_response(self.response, t)
        return float(out[0]) if np.ndim(lam) == 0 else out

    def attenuation_at(self, lam):
        if self.mapping is None:
            return attenuation_db(self.response, lam)
        h = np.atleast_1d(np.asarray(self.response_at(lam), dtype=float))
        out = np.full(h.shape, math.inf)
        pos = h > 0.0
        out[pos] = -20.0 * np.log10(h[pos])
        return float(out[0]) if np.ndim(lam) == 0 else out

    def frequency_response(self):
        """Vectorized lambda -> H(lambda) callable for spectral application."""
        return lambda lam: self.response_at(np.asarray(lam, dtype=float))

    @property
    def band_edges_with_targets(self):
        """[(label, lambda, kind)] with kind 'pass' or 'stop', for reporting."""
        s = self.spec
        if s.band in ("highpass", "lowpass"):
            return [("lambda_p", s.lambda_p, "pass"), ("lambda_s", s.lambda_s, "stop")]
        if s.band == "bandpass":
            ls1, lp1, lp2, ls2 = s.band_edges
            return [
                ("lambda_s1", ls1, "stop"),
                ("lambda_p1", lp1, "pass"),
                ("lambda_p2", lp2, "pass"),
                ("lambda_s2", ls2, "stop"),
            ]
        lp1, ls1, ls2, lp2 = s.band_edges
        return [
            ("lambda_p1", lp1, "pass"),
            ("lambda_s1", ls1, "stop"),
            ("lambda_s2", ls2, "stop"),
            ("lambda_p2", lp2, "pass"),
        ]


def _band_mapping(spec: DesignSpec) -> BandMapping | None:
    if spec.band == "highpass":
        return None
    if spec.band == "lowpass":
        return map_lowpass(spec.lambda_p, spec.lambda_s)
    if spec.band == "bandpass":
        return map_bandpass(spec.band_edges)
    return map_bandstop(spec.band_edges)


def design_filter(spec: DesignSpec) -> FilterDesign:
    """Run the full design pipeline for a validated specification."""
    spec.validate()
    mapping = _band_mapping(spec)
    if mapping is None:
        proto_lp, proto_ls = spec.lambda_p, spec.lambda_s
    else:
        proto_lp, proto_ls = mapping.proto_lambda_p, mapping.proto_lambda_s

    proto_spec = DesignSpec(
        family=spec.family,
        band="highpass",
        lambda_p=proto_lp,
        lambda_s=proto_ls,
        rp_db=spec.rp_db,
        as_db=spec.as_db,
    )
    # min_order validates (0, 2) cutoffs; mapped prototypes may legitimately
    # fall outside that window, so order formulas are applied to a clone that
    # skips the user-facing range check.
    n, trace = _prototype_order(proto_spec)
    if spec.order_override is not None:
        n = spec.order_override
    ripple = trace.ripple
    if mapping is not None:
        trace.proto_lambda_p = proto_lp
        trace.proto_lambda_s = proto_ls

    if spec.family == "butterworth":
        pz = poles_butterworth(n, ripple.eps_p, proto_lp)
    elif spec.family == "chebyshev1":
        pz = poles_cheb1(n, ripple.eps_p, proto_lp)
    elif spec.family == "chebyshev2":
        adj = adjust_modulus_cheb2(n, ripple.k1)
        trace.adjusted_k = adj.k
        c, d = cheb2_intermediates(n, ripple.eps_s)
        trace.c_m, trace.d_m = list(c), list(d)
        pz = poles_zeros_cheb2(n, ripple.eps_s, proto_ls)
    else:
        adj = adjust_modulus_elliptic(n, ripple.k1)
        trace.adjusted_k = adj.k
        trace.v0 = elliptic_v0(n, ripple.eps_p, ripple.k1)
        trace.u_m = list(odd_index_grid(n))
        pz = zeros_poles_elliptic(n, ripple, proto_lp, adj)

    return FilterDesign(
        spec=spec,
        mapping=mapping,
        order=n,
        composed_order=2 * n,
        prototype=pz,
        response=compose_conjugate(pz),
        trace=trace,
    )


def _prototype_order(proto_spec: DesignSpec):
    """min_order with the (0, 2) window check relaxed for mapped prototypes."""
    lp, ls = proto_spec.lambda_p, proto_spec.lambda_s
    if lp <= 0.0 or ls <= 0.0 or lp >= ls:
        raise SpecError(
            f"mapped prototype cutoffs are ill-formed: lambda_p={lp!r}, lambda_s={ls!r}"
        )
    scale = 1.0
    if ls >= 2.0:
        scale = ls / 1.0  # shrink into the validated window; formulas only use the ratio
    clone = DesignSpec(
        family=proto_spec.family,
        band="highpass",
        lambda_p=lp / scale,
        lambda_s=ls / scale,
        rp_db=proto_spec.rp_db,
        as_db=proto_spec.as_db,
    )
    return min_order(clone)


# ---------------------------------------------------------------------------
# design documents

def to_document(design: FilterDesign) -> dict:
    """Serializable record of a completed design (JSON design document)."""
    s = design.spec
    trace = design.trace
    doc = {
        "spec": {
            "family": s.family,
            "band": s.band,
            "lambda_p": s.lambda_p,
            "lambda_s": s.lambda_s,
            "band_edges": list(s.band_edges) if s.band_edges else None,
            "rp_db": s.rp_db,
            "as_db": s.as_db,
            "order_override": s.order_override,
        },
        "family": s.family,
        "band": s.band,
        "order": design.order,
        "composed_order": design.composed_order,
        "poles": [[p.real, p.imag] for p in design.prototype.poles],
        "zeros": [[z.real, z.imag] for z in design.prototype.zeros],
        "num_coeffs": list(design.response.num_coeffs),
        "den_coeffs": list(design.response.den_coeffs),
        "lambda_ref": design.response.lambda_ref,
        "trace": _trace_dict(trace),
    }
    return doc


def _trace_dict(trace: DesignTrace) -> dict:
    d = {}
    if trace.ripple is not None:
        d["eps_p"] = trace.ripple.eps_p
        d["eps_s"] = trace.ripple.eps_s
        d["k"] = trace.ripple.k
        d["k1"] = trace.ripple.k1
    for name in ("min_order_real", "K", "K_comp", "K1", "K1_comp", "v0",
                 "adjusted_k", "proto_lambda_p", "proto_lambda_s"):
        value = getattr(trace, name)
        if value is not None:
            d[name] = value
    for name in ("u_m", "c_m", "d_m"):
        value = getattr(trace, name)
        if value:
            d[name] = list(value)
    return d


def from_document(doc: dict) -> FilterDesign:
    """Rebuild a FilterDesign from a parsed design document.

    The stored poles/zeros and coefficient vectors are reused verbatim, so a
    reloaded design reproduces the original response samples exactly.
    """
    try:
        sd = doc["spec"]
        spec = DesignSpec(
            family=sd["family"],
            band=sd["band"],
            lambda_p=sd.get("lambda_p"),
            lambda_s=sd.get("lambda_s"),
            band_edges=tuple(sd["band_edges"]) if sd.get("band_edges") else None,
            rp_db=sd["rp_db"],
            as_db=sd["as_db"],
            order_override=sd.get("order_override"),
        )
        order = int(doc["order"])
        poles = np.array([complex(re, im) for re, im in doc["poles"]], dtype=complex)
        zeros = np.array([complex(re, im) for re, im in doc["zeros"]], dtype=complex)
        lambda_ref = float(doc["lambda_ref"])
        trace = _trace_from_dict(doc.get("trace", {}))
        num = np.asarray(doc["num_coeffs"], dtype=float)
        den = np.asarray(doc["den_coeffs"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed design document: {exc}") from exc

    eps_p = trace.ripple.eps_p if trace.ripple else None
    gain = 1.0
    if spec.family in ("chebyshev1", "elliptic") and order % 2 == 0:
        if eps_p is None:
            raise ParseError("design document lacks the ripple trace needed for the gain")
        gain = 1.0 / (1.0 + eps_p * eps_p)
    pz = PoleZeroSet(poles, zeros, order, gain, lambda_ref)
    resp = RationalResponse(num, den, lambda_ref, gain, pz)
    return FilterDesign(
        spec=spec,
        mapping=_band_mapping(spec),
        order=order,
        composed_order=2 * order,
        prototype=pz,
        response=resp,
        trace=trace,
    )


def _trace_from_dict(d: dict) -> DesignTrace:
    trace = DesignTrace()
    if "eps_p" in d:
        trace.ripple = RippleParams(d["eps_p"], d["eps_s"], d["k1"], d.get("k"))
    for name in ("min_order_real", "K", "K_comp", "K1", "K1_comp", "v0",
                 "adjusted_k", "proto_lambda_p", "proto_lambda_s"):
        if name in d:
            setattr(trace, name, d[name])
    for name in ("u_m", "c_m", "d_m"):
        if name in d:
            setattr(trace, name, list(d[name]))
    return trace
