"""Complete elliptic integrals and Jacobi elliptic functions.

Everything here is scalar double-precision arithmetic built on two classic
tools: the arithmetic-geometric mean for the complete integral K(k), and the
descending Landen transformation for sn/cn/dn.  The Landen recursion is
rational in the function values, so the same code evaluates the functions for
complex arguments, which the filter-design layer needs when it places poles
off the real axis.

Conventions: the modulus is k (not the parameter m = k^2), and a modulus is
carried together with its complement k' = sqrt(1 - k^2) so that values of k
numerically indistinguishable from 1 stay well conditioned.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

# Landen recursion stops once the descended modulus is below this; the
# truncation error is O(k_n^2), far below double precision.
_LANDEN_TOL = 1e-14
_MAX_ITER = 64


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k paired with its complement k' = sqrt(1 - k^2).

    Both values are stored because k and k' cannot both be recovered
    accurately from the other once one of them underflows toward 0
    (equivalently the other rounds to 1).
    """

    k: float
    k_comp: float

    def __post_init__(self):
        if not (math.isfinite(self.k) and math.isfinite(self.k_comp)):
            raise DomainError("modulus must be finite")
        if self.k < 0.0 or self.k_comp < 0.0:
            raise DomainError("modulus components must be nonnegative")
        if abs(self.k * self.k + self.k_comp * self.k_comp - 1.0) > 1e-14:
            raise DomainError(
                "inconsistent modulus pair: k^2 + k_comp^2 != 1 "
                f"(k={self.k!r}, k_comp={self.k_comp!r})"
            )

    @classmethod
    def from_k(cls, k: float) -> "Modulus":
        if not 0.0 <= k < 1.0:
            raise DomainError(f"modulus k must lie in [0, 1), got {k!r}")
        return cls(k, math.sqrt((1.0 - k) * (1.0 + k)))

    @classmethod
    def from_comp(cls, k_comp: float) -> "Modulus":
        if not 0.0 < k_comp <= 1.0:
            raise DomainError(f"complementary modulus must lie in (0, 1], got {k_comp!r}")
        return cls(math.sqrt((1.0 - k_comp) * (1.0 + k_comp)), k_comp)

    @property
    def complement(self) -> "Modulus":
        if self.k_comp == 0.0:
            raise DomainError("complement of k=1 is outside the supported domain")
        return Modulus(self.k_comp, self.k)


def as_modulus(k) -> Modulus:
    """Coerce a float (or pass through a Modulus) to a validated Modulus."""
    if isinstance(k, Modulus):
        return k
    return Modulus.from_k(float(k))


def complete_elliptic_k(k) -> float:
    """Complete elliptic integral of the first kind K(k).

    Computed by the arithmetic-geometric mean: K = pi / (2 * agm(1, k')).
    Exact at k=0 (returns pi/2) and strictly increasing in k; k >= 1 is
    rejected since K diverges there.
    """
    mod = as_modulus(k)
    if mod.k_comp == 0.0:
        raise DomainError("K(k) diverges as k -> 1")
    a, b = 1.0, mod.k_comp
    for _ in range(_MAX_ITER):
        if a - b <= 1e-15 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (a + b)


def _landen_sequence(mod: Modulus):
    """Descending moduli [(k_1, k_1'), (k_2, k_2'), ...] down to k_n < 1e-14.

    One step: k_{n+1} = (1 - k_n') / (1 + k_n') = k_n^2 / (1 + k_n')^2,
    with the complement advanced as k_{n+1}' = 2 sqrt(k_n') / (1 + k_n')
    to stay accurate when k is close to 1.
    """
    seq = []
    kn, kc = mod.k, mod.k_comp
    for _ in range(_MAX_ITER):
        if kn < _LANDEN_TOL:
            break
        kn = (1.0 - kc) / (1.0 + kc)
        kc = 2.0 * math.sqrt(kc) / (1.0 + kc)
        seq.append((kn, kc))
    else:
        raise DomainError(f"Landen sequence failed to converge for k={mod.k!r}")
    return seq


def _check_finite(u: complex):
    if not (math.isfinite(u.real) and math.isfinite(u.imag)):
        raise DomainError(f"argument must be finite, got {u!r}")


def jacobi_sn_cn_dn(u, k):
    """Jacobi elliptic sn, cn, dn at (possibly complex) argument u, modulus k.

    The argument is divided down the Landen ladder, the trigonometric base
    case sn = sin, cn = cos, dn = 1 is evaluated at the bottom, and the values
    are transformed back up with the Gauss recurrences

        sn <- (1 + k_n) sn / D,   cn <- cn dn / D,   dn <- (1 - k_n sn^2) / D,

    where D = 1 + k_n sn^2.  Returns a (sn, cn, dn) triple of complex numbers.
    """
    mod = as_modulus(k)
    u = complex(u)
    _check_finite(u)
    seq = _landen_sequence(mod)
    z = u
    for kn, _ in seq:
        z = z / (1.0 + kn)
    s, c, d = cmath.sin(z), cmath.cos(z), complex(1.0)
    for kn, _ in reversed(seq):
        s2 = s * s
        den = 1.0 + kn * s2
        s = (1.0 + kn) * s / den
        c = c * d / den
        d = (1.0 - kn * s2) / den
    return s, c, d


def jacobi_cd(u, k):
    """cd(u, k) = cn(u, k) / dn(u, k).

    Raises DomainError at the poles of cd (zeros of dn, e.g. u = K + jK');
    callers treat such points as infinite pole/zero locations.
    """
    s, c, d = jacobi_sn_cn_dn(u, k)
    scale = max(abs(c), 1.0)
    if abs(d) < 1e-14 * scale:
        raise DomainError(f"cd has a pole at u={u!r} (dn vanishes)")
    return c / d


def inverse_sn(w, k):
    """Principal-branch inverse of sn: returns u with sn(u, k) = w.

    The value is driven down the Landen ladder by inverting the Gauss step
    (solving the quadratic for the descended value and taking the root that
    is regular as the modulus vanishes), then u = asin(w_final) is scaled
    back up by the accumulated (1 + k_n) factors.

    Branch: real w in [-1, 1] maps to real u in [-K, K], purely imaginary w
    maps to purely imaginary u; elsewhere the principal branch of asin
    decides.  Round-trips sn(inverse_sn(w, k), k) = w to ~1e-14.
    """
    mod = as_modulus(k)
    w = complex(w)
    _check_finite(w)
    seq = _landen_sequence(mod)
    prev = mod.k
    scale = 1.0
    for kn, _ in seq:
        arg = 1.0 - (prev * w) ** 2
        # sqrt(1 - k^2 w^2) can round to a tiny negative at |k w| = 1; clamp so
        # real inputs do not pick up a spurious imaginary component (sn is
        # quadratically flat at the quarter period, so this costs nothing).
        if arg.imag == 0.0 and -1e-12 < arg.real < 0.0:
            arg = complex(0.0)
        w = 2.0 * w / ((1.0 + kn) * (1.0 + cmath.sqrt(arg)))
        prev = kn
        scale *= 1.0 + kn
    # same story at the trigonometric base: rounding can push a real value a
    # few ulp past 1, where asin would branch into the complex plane
    if w.imag == 0.0 and 1.0 < abs(w.real) < 1.0 + 1e-13:
        w = complex(math.copysign(1.0, w.real), 0.0)
    return cmath.asin(w) * scale


def inverse_cd(w, k):
    """Inverse of cd on the principal branch: u with cd(u, k) = w.

    Uses the quarter-period shift cd(z) = sn(z + K), so u = K - inverse_sn(w)
    (cd is even, so the sign flip lands the passband w in [0, 1] on the real
    segment u in [0, K]).
    """
    return complete_elliptic_k(k) - inverse_sn(w, k)


def adjust_modulus_cheb2(order: int, k1: float) -> Modulus:
    """Selectivity that makes an inverse-Chebyshev design of integer order
    meet both band edges exactly: k = 1 / cosh(acosh(1/k1) / N).

    N = 1 is the identity (returns k1 itself).
    """
    if order < 1:
        raise DomainError("order must be a positive integer")
    if not 0.0 < k1 < 1.0:
        raise DomainError(f"discrimination k1 must lie in (0, 1), got {k1!r}")
    return Modulus.from_k(1.0 / math.cosh(math.acosh(1.0 / k1) / order))


def adjust_modulus_elliptic(order: int, k1) -> Modulus:
    """Selectivity solving the elliptic degree equation for integer order N.

    Given the discrimination k1, the complement of the adjusted modulus is

        k' = (k1')^N * prod_{i=1..floor(N/2)} sn^4(u_i K(k1'), k1'),
        u_i = (2i - 1) / N,

    and k = sqrt(1 - k'^2).  The product is accumulated in log space so
    extreme orders neither overflow nor underflow, and the result is built
    from k' so that k values indistinguishable from 1 keep full precision.
    The returned modulus makes the equal-ripple identity
    F(w) = 1 / (k1 F(1/(k w))) hold exactly for the degree-N response.
    """
    if order < 1:
        raise DomainError("order must be a positive integer")
    m1 = as_modulus(k1)
    if m1.k <= 0.0:
        raise DomainError("discrimination k1 must be positive")
    m1c = m1.complement
    big_k1c = complete_elliptic_k(m1c)
    log_kc = order * math.log(m1.k_comp)
    for i in range(1, order // 2 + 1):
        u = (2.0 * i - 1.0) / order
        s, _, _ = jacobi_sn_cn_dn(u * big_k1c, m1c)
        log_kc += 4.0 * math.log(abs(s))
    return Modulus.from_comp(math.exp(log_kc))
