"""Special-function kernel used by the distribution families.

Thin, domain-checked wrappers around scipy.special. Everything here is
scalar-or-array transparent: scalars in, floats out; arrays in, arrays out.
"""

from __future__ import annotations

import numpy as np
from scipy import special as _sp

from .errors import DomainError

__all__ = [
    "ln_gamma",
    "digamma",
    "reg_inc_gamma_lower",
    "erf",
    "std_normal_cdf",
    "std_normal_quantile",
    "reg_inc_beta",
    "ln_beta",
]


def _as_float(x):
    a = np.asarray(x, dtype=float)
    return a if a.ndim else float(a)


def ln_gamma(x):
    """Natural log of the gamma function, x > 0."""
    a = np.asarray(x, dtype=float)
    if np.any(a <= 0.0):
        raise DomainError(f"ln_gamma requires x > 0, got {x!r}")
    return _as_float(_sp.gammaln(a))


def digamma(x):
    """Logarithmic derivative of the gamma function, x > 0."""
    a = np.asarray(x, dtype=float)
    if np.any(a <= 0.0):
        raise DomainError(f"digamma requires x > 0, got {x!r}")
    return _as_float(_sp.digamma(a))


def reg_inc_gamma_lower(a, x):
    """Regularized lower incomplete gamma P(a, x); a > 0, x >= 0."""
    aa = np.asarray(a, dtype=float)
    xx = np.asarray(x, dtype=float)
    if np.any(aa <= 0.0):
        raise DomainError(f"reg_inc_gamma_lower requires a > 0, got {a!r}")
    if np.any(xx < 0.0):
        raise DomainError(f"reg_inc_gamma_lower requires x >= 0, got {x!r}")
    return _as_float(_sp.gammainc(aa, xx))


def erf(x):
    """Error function."""
    return _as_float(_sp.erf(np.asarray(x, dtype=float)))


def std_normal_cdf(x):
    """CDF of the standard normal, via erf."""
    z = np.asarray(x, dtype=float)
    return _as_float(0.5 * (1.0 + _sp.erf(z / np.sqrt(2.0))))


def std_normal_quantile(p):
    """Inverse CDF of the standard normal, 0 < p < 1."""
    pp = np.asarray(p, dtype=float)
    if np.any((pp <= 0.0) | (pp >= 1.0)):
        raise DomainError(f"std_normal_quantile requires 0 < p < 1, got {p!r}")
    return _as_float(_sp.ndtri(pp))


def reg_inc_beta(a, b, x):
    """Regularized incomplete beta I_x(a, b); a, b > 0, 0 <= x <= 1."""
    aa = np.asarray(a, dtype=float)
    bb = np.asarray(b, dtype=float)
    xx = np.asarray(x, dtype=float)
    if np.any(aa <= 0.0) or np.any(bb <= 0.0):
        raise DomainError("reg_inc_beta requires a > 0 and b > 0")
    if np.any((xx < 0.0) | (xx > 1.0)):
        raise DomainError("reg_inc_beta requires 0 <= x <= 1")
    return _as_float(_sp.betainc(aa, bb, xx))


def ln_beta(a, b):
    """Natural log of the beta function, a, b > 0."""
    aa = np.asarray(a, dtype=float)
    bb = np.asarray(b, dtype=float)
    if np.any(aa <= 0.0) or np.any(bb <= 0.0):
        raise DomainError("ln_beta requires a > 0 and b > 0")
    return _as_float(_sp.betaln(aa, bb))
