"""Floating-point checks of the special-function identities behind rigidity.

The rigidity of the relaxed simples reduces to the non-vanishing of a
proportionality constant built from contour integrals; those integrals
collapse to Gauss hypergeometric and Beta factors.  This module evaluates
the closed form at the standard specialization ``w2 = 2*w1`` and verifies
the identities that pin its factors:

* the Gauss series value ``2F1(1-j, j; 1; 1/2)`` against its Gamma closed
  form,
* ``B(1+u, 1-u) = pi*u / sin(pi*u)``,
* the contiguity relation expressing ``2F1(-j, j; 1; x)`` through its two
  parameter-shifted neighbours, each Gamma-evaluable at ``x = 1/2``.

Everything is plain ``math``/``cmath``; exactness is not the point here,
1e-10 agreement on a parameter grid is.
"""

from __future__ import annotations

import cmath
import math

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(x: float) -> float:
    """Gamma function via the Lanczos approximation (reflection for x < 1/2)."""
    if x <= 0 and float(x).is_integer():
        raise ValueError(f"gamma pole at {x}")
    x = float(x)
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    x -= 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * acc


def beta_fn(a: float, b: float) -> float:
    """Euler Beta function ``B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b)``."""
    return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b)


def hyp2f1(a: float, b: float, c: float, x: float, *, rtol: float = 1e-14,
           max_terms: int = 100000) -> float:
    """Gauss hypergeometric series, summed with term-ratio stopping.

    Valid for ``|x| < 1``; ``c`` must not be a nonpositive integer.
    """
    if abs(x) >= 1:
        raise ValueError(f"series argument must satisfy |x| < 1, got {x}")
    if c <= 0 and float(c).is_integer():
        raise ValueError(f"lower parameter c={c} is a nonpositive integer")
    term = 1.0
    acc = 1.0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        acc += term
        if abs(term) <= rtol * max(abs(acc), 1e-300):
            return acc
    raise ArithmeticError("hypergeometric series did not converge")


def gauss_half_closed_form(j: float) -> float:
    """Gamma closed form of ``2F1(1-j, j; 1; 1/2)``."""
    return gamma_fn(0.5) * gamma_fn(1.0) / (gamma_fn(1.0 - j / 2.0)
                                            * gamma_fn(0.5 + j / 2.0))


def bailey_half_closed_form(j: float) -> float:
    """Gamma closed form of ``2F1(-j, 1+j; 1; 1/2)``."""
    return gamma_fn(0.5) * gamma_fn(1.0) / (gamma_fn(0.5 - j / 2.0)
                                            * gamma_fn(1.0 + j / 2.0))


def contiguous_half_value(j: float) -> float:
    """``2F1(-j, j; 1; 1/2)`` via the contiguity relation.

    ``(a-b) F(a,b) = a F(a+1,b) - b F(a,b+1)`` at ``(a, b) = (-j, j)`` gives
    the midpoint of the two Gamma-evaluable neighbours.
    """
    return 0.5 * (gauss_half_closed_form(j) + bailey_half_closed_form(j))


def rigidity_constant(j: float, w1: float = 1.0, *, ell: int = 0) -> complex:
    """The proportionality constant ``I(w1, 2*w1)`` of the rigidity maps.

    ``j`` is the ghost-coset representative in ``(0, 1)``; ``w1`` must be a
    positive real so all non-integer powers stay on the principal branch.
    ``ell`` only enters through a nonzero prefactor and defaults to the
    untwisted representative.
    """
    j = float(j)
    if not 0.0 < j < 1.0:
        raise ValueError(f"coset representative must lie in (0, 1), got {j}")
    w1 = float(w1)
    if w1 <= 0:
        raise ValueError(f"w1 must be a positive real, got {w1}")
    w2 = 2.0 * w1
    expo = ell * ell + j * (1 - 2 * ell)
    prefactor = ((w2 - w1) ** expo) * (w2 ** ((j - 1) * (2 * j - ell - 1))) \
        * (w1 ** expo)
    minus_one_pow = cmath.exp(1j * math.pi * j)
    phase = (cmath.exp(2j * math.pi * j) - 1.0) ** 2
    trig = math.pi ** 2 * (j - 1.0) / math.sin(math.pi * j) ** 2
    f_left = hyp2f1(-j, j, 1.0, (w2 - w1) / w2)
    f_right = hyp2f1(1.0 - j, j, 1.0, w1 / w2)
    return minus_one_pow * prefactor * phase * (w2 ** (2 * j - 1)) * trig \
        * f_left * f_right


def default_grid(points: int = 50, lo: float = 0.02, hi: float = 0.98):
    """Evenly spaced coset representatives used by the verification sweep."""
    if points < 2:
        return [0.5 * (lo + hi)]
    step = (hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


def identity_report(j: float) -> dict[str, float]:
    """Absolute deviations of the three pinned identities at one grid point."""
    gauss_dev = abs(hyp2f1(1.0 - j, j, 1.0, 0.5) - gauss_half_closed_form(j))
    beta_dev = abs(beta_fn(1.0 + j, 1.0 - j) - math.pi * j / math.sin(math.pi * j))
    contig_dev = abs(hyp2f1(-j, j, 1.0, 0.5) - contiguous_half_value(j))
    return {"gauss": gauss_dev, "beta": beta_dev, "contiguity": contig_dev}


def sweep(points: int = 50, *, tol: float = 1e-10, floor: float = 1e-8):
    """Run the identity grid and the non-vanishing check.

    Returns ``(identities_ok, nonvanishing_ok, min_abs_I)``.
    """
    identities_ok = True
    min_abs = math.inf
    for j in default_grid(points):
        devs = identity_report(j)
        if max(devs.values()) > tol:
            identities_ok = False
        min_abs = min(min_abs, abs(rigidity_constant(j)))
    return identities_ok, min_abs > floor, min_abs
