"""Coefficient functions f, g, h, k and operator functions H(N), G(N).

Each solution family fixes the quadruple (f, g, h, k) that realizes the
deformed Heisenberg relation through X = f(N) a- + g(N) a+ and
P = i (k(N) a+ - h(N) a-).  All eight built-in families are power laws in
the deformation base (q for A-D, Q = q/p for At-Dt) divided by sqrt(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .dsf import DeformationParams, FamilyId, _as_params, _check_family_params
from .errors import DomainError

__all__ = [
    "CoefficientSet",
    "GHPair",
    "coefficients",
    "gh_pair",
    "general_gh",
    "verify_ratio_recursions",
    "ratio_kernel_constancy",
    "shift_power",
]

_SQRT2 = math.sqrt(2.0)

# exponents (f, g, h, k) of base**(e*N)/sqrt(2), per base letter
_COEFF_EXPONENTS = {
    "A": (1, 2, 2, 1),
    "B": (-2, -1, -1, -2),
    "C": (-2, 2, -1, 1),
    "D": (1, -1, 2, -2),
}

# G(N) = base**shift * H(N-2), per base letter
_SHIFT_POWER = {"A": 3, "B": -3, "C": 0, "D": 0}


@dataclass(frozen=True)
class CoefficientSet:
    """The quadruple of operator-coefficient functions of one family."""

    f: Callable[[int], float]
    g: Callable[[int], float]
    h: Callable[[int], float]
    k: Callable[[int], float]


@dataclass(frozen=True)
class GHPair:
    """Operator functions of the relation H(N) a- a+ - G(N) a+ a- = 1.

    ``R`` is the ratio kernel R(N) = f(N-1) k(N) exposed by the general
    construction; it is None for the printed family pairs.
    """

    G: Callable[[int], float]
    H: Callable[[int], float]
    R: Callable[[int], float] | None = None


def shift_power(family: FamilyId | str) -> int:
    """Exponent s with G(N) = base**s * H(N-2) for the given family."""
    family = FamilyId.parse(family)
    return _SHIFT_POWER[family.tag.letter]


def coefficients(family: FamilyId | str, params: DeformationParams | float) -> CoefficientSet:
    """Coefficient quadruple (f, g, h, k) of a built-in family.

    Honors the family's c(0), d(0) constants through g(n) = c0 x**n k(n) and
    h(n) = d0 x**n f(n); the printed solutions are the c0 = d0 = 1 case.
    """
    family = FamilyId.parse(family)
    params = _as_params(params)
    _check_family_params(family, params, "coefficients")
    x = params.power_base
    ef, eg, eh, ek = _COEFF_EXPONENTS[family.tag.letter]
    c0, d0 = family.c0, family.d0

    def f(n: int) -> float:
        return x ** (ef * n) / _SQRT2

    def k(n: int) -> float:
        return x ** (ek * n) / _SQRT2

    if (c0, d0) == (1.0, 1.0):
        def g(n: int) -> float:
            return x ** (eg * n) / _SQRT2

        def h(n: int) -> float:
            return x ** (eh * n) / _SQRT2
    else:
        def g(n: int) -> float:
            return c0 * x**n * k(n)

        def h(n: int) -> float:
            return d0 * x**n * f(n)

    return CoefficientSet(f=f, g=g, h=h, k=k)


def gh_pair(family: FamilyId | str, params: DeformationParams | float) -> GHPair:
    """Operator functions H(N), G(N) of a built-in family in closed form.

    Two-parameter families carry an overall factor p and use the base Q = q/p.
    Families with c(0) d(0) != 1 have no printed pair and fall back to the
    general construction.
    """
    family = FamilyId.parse(family)
    params = _as_params(params)
    _check_family_params(family, params, "gh_pair")
    if (family.c0, family.d0) != (1.0, 1.0):
        cs = coefficients(family, params)
        return general_gh(cs.f, cs.k, family.c0, family.d0, params)
    x = params.power_base
    pref = params.p if family.two_parameter else 1.0
    letter = family.tag.letter

    if letter == "A":
        def H(n):
            return 0.5 * pref * x ** (2 * n + 1) * (1.0 + x ** (2 * n + 2))

        def G(n):
            return 0.5 * pref * x ** (2 * n) * (1.0 + x ** (2 * n - 2))
    elif letter == "B":
        def H(n):
            return 0.5 * pref * x ** (-2 * n) * (1.0 + x ** (-2 * n - 2))

        def G(n):
            return 0.5 * pref * x ** (-2 * n + 1) * (1.0 + x ** (-2 * n + 2))
    elif letter == "C":
        def H(n):
            return 0.5 * pref * x ** (1 - n) * (1.0 + x ** (2 * n + 2))

        def G(n):
            return 0.5 * pref * x ** (n + 1) * (1.0 + x ** (-2 * n + 2))
    else:  # D
        def H(n):
            return 0.5 * pref * x**n * (1.0 + x ** (-2 * n - 2))

        def G(n):
            return 0.5 * pref * x ** (-n) * (1.0 + x ** (2 * n - 2))

    return GHPair(G=G, H=H)


def general_gh(
    f: Callable[[int], float],
    k: Callable[[int], float],
    c0: float,
    d0: float,
    params: DeformationParams | float,
) -> GHPair:
    """Operator functions for arbitrary f, k with ratio constants c(0), d(0).

    With g(n) = c0 x**n k(n) and h(n) = d0 x**n f(n) the defining relation
    collapses to

        G(N) = q R(N) (1 + c0 d0 x**(2N-2)),
        H(N) = pref * f(N) k(N+1) (1 + c0 d0 x**(2N+2)),

    where R(N) = f(N-1) k(N), x is the deformation base and pref is 1 (one
    parameter) or p (two parameters).  No constancy of R at q -> 1 is
    enforced; use :func:`ratio_kernel_constancy` to inspect it.
    """
    params = _as_params(params)
    params.require_real_positive("general_gh")
    x = params.power_base
    q = params.q
    pref = params.p if params.two_parameter else 1.0
    cd = c0 * d0

    def R(n: int) -> float:
        return f(n - 1) * k(n)

    def G(n: int) -> float:
        r = R(n)
        if r == 0:
            raise DomainError(f"general_gh: f({n - 1}) k({n}) = 0")
        return q * r * (1.0 + cd * x ** (2 * n - 2))

    def H(n: int) -> float:
        r = f(n) * k(n + 1)
        if r == 0:
            raise DomainError(f"general_gh: f({n}) k({n + 1}) = 0")
        return pref * r * (1.0 + cd * x ** (2 * n + 2))

    return GHPair(G=G, H=H, R=R)


def verify_ratio_recursions(
    cs: CoefficientSet,
    params: DeformationParams | float,
    n_max: int,
) -> float:
    """Largest residual of the coefficient ratio recursions up to n_max.

    Checks h(n+1)/h(n) = x f(n+1)/f(n) and k(n-1)/k(n) = x g(n-1)/g(n) with
    x = q (one parameter) or Q = q/p.  The residuals are formed on the ratios
    themselves, which stay O(x**2) regardless of n; cross-multiplied forms
    would drown in the dynamic range of the raw coefficients.
    """
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    params = _as_params(params)
    x = params.power_base
    worst = 0.0
    for n in range(0, n_max + 1):
        up = abs(cs.h(n + 1) / cs.h(n) - x * cs.f(n + 1) / cs.f(n))
        down = abs(cs.k(n - 1) / cs.k(n) - x * cs.g(n - 1) / cs.g(n))
        worst = max(worst, up + down)
    return worst


def ratio_kernel_constancy(
    f: Callable[[int], float],
    k: Callable[[int], float],
    n_max: int = 20,
) -> float:
    """Max |R(n+1) - R(1)| of the ratio kernel R(n) = f(n-1) k(n), n <= n_max.

    Diagnostic only: at q = 1 a consistent general solution needs R constant,
    but nothing is enforced here.
    """
    base = f(0) * k(1)
    return max(abs(f(n) * k(n + 1) - base) for n in range(0, n_max + 1))
