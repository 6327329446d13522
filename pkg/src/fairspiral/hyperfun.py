"""Rising factorial and the hypergeometric series 1F2 and 2F1.

Plain double precision summation. 2F1 is only supported for ``z <= 0``; for
``z < -1/2`` the argument is mapped into ``(1/3, 1)`` with the Pfaff
transformation, which also makes ``z = -1`` converge geometrically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParameter, NonConvergence

MAX_TERMS = 10_000
DEFAULT_TOL = 1e-15

_EPS = 2.0 ** -52

# below this z the raw 2F1 series converges too slowly to be useful
PFAFF_THRESHOLD = -0.5


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    truncation_estimate: float
    converged: bool
    # eps * sum |t_n|: the rounding error of the summation, large under cancellation
    rounding_estimate: float = 0.0

    def __float__(self):
        return self.value


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``(a)_0 = 1``."""
    if n < 0:
        raise InvalidParameter(f"pochhammer needs n >= 0, got {n}")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def _sum_series(ratio, tol: float, max_terms: int) -> SeriesResult:
    """Sum ``sum_n t_n`` with ``t_0 = 1`` and ``t_{n+1} = t_n * ratio(n)``.

    Stops when two consecutive terms are below ``tol * max(1, |partial|)``
    and the tail bound is below the same threshold: the next term for
    alternating series, a geometric bound for same-sign tails. A term that is exactly zero ends the
    series (terminating polynomial case).
    """
    total = 1.0
    term = 1.0
    magnitude = 1.0
    small = 0
    for n in range(max_terms):
        r = ratio(n)
        term *= r
        if term == 0.0:
            return SeriesResult(total, n + 1, 0.0, True, _EPS * magnitude)
        total += term
        magnitude += abs(term)
        threshold = tol * max(1.0, abs(total))
        small = small + 1 if abs(term) < threshold else 0
        if small >= 2:
            ar = abs(r)
            if r < 0:
                tail = abs(term) * ar
            else:
                tail = abs(term) * ar / (1.0 - ar) if ar < 1.0 else abs(term)
            if tail < threshold:
                return SeriesResult(total, n + 2, tail, True, _EPS * magnitude)
    partial = SeriesResult(total, max_terms, abs(term), False, _EPS * magnitude)
    raise NonConvergence(f"series did not converge in {max_terms} terms", partial)


def hyp1f2(a: float, b: float, c: float, z: float, tol: float = DEFAULT_TOL,
           max_terms: int = MAX_TERMS) -> SeriesResult:
    """Generalized hypergeometric series 1F2(a; b, c; z)."""
    if _is_nonpositive_integer(b) or _is_nonpositive_integer(c):
        raise InvalidParameter(f"1F2 denominator parameter is a nonpositive integer (b={b}, c={c})")
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    if z == 0.0:
        return SeriesResult(1.0, 1, 0.0, True)
    return _sum_series(lambda n: (a + n) / ((b + n) * (c + n)) * z / (n + 1), tol, max_terms)


def hyp2f1_series(a: float, b: float, c: float, z: float, tol: float = DEFAULT_TOL,
                  max_terms: int = MAX_TERMS) -> SeriesResult:
    """Raw Gauss series, no transformation. Requires ``|z| <= 1``."""
    if _is_nonpositive_integer(c):
        raise InvalidParameter(f"2F1 denominator parameter c={c} is a nonpositive integer")
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    if abs(z) > 1.0:
        raise DomainError(f"raw 2F1 series diverges for |z| > 1 (z={z})")
    if z == 0.0:
        return SeriesResult(1.0, 1, 0.0, True)
    return _sum_series(lambda n: (a + n) * (b + n) / ((c + n) * (n + 1)) * z, tol, max_terms)


def hyp2f1(a: float, b: float, c: float, z: float, tol: float = DEFAULT_TOL,
           max_terms: int = MAX_TERMS) -> SeriesResult:
    """Gauss hypergeometric function 2F1(a, b; c; z) for ``z <= 0``.

    For ``z < -1/2`` uses ``2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))``.
    """
    if z > 0:
        raise DomainError(f"hyp2f1 supports z <= 0 only, got z={z}")
    if z >= PFAFF_THRESHOLD:
        return hyp2f1_series(a, b, c, z, tol, max_terms)
    w = z / (z - 1.0)
    inner = hyp2f1_series(a, c - b, c, w, tol, max_terms)
    scale = (1.0 - z) ** (-a)
    return SeriesResult(scale * inner.value, inner.terms_used, scale * inner.truncation_estimate,
                        inner.converged, scale * inner.rounding_estimate)


def validate_superspiral_params(a: float, b: float, c: float) -> bool:
    """True iff ``c > b > 0`` and ``a > 0``."""
    return bool(a > 0 and b > 0 and c > b) and all(map(math.isfinite, (a, b, c)))
