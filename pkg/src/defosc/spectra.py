"""Energy spectra and accidental-degeneracy parameter solving.

The Hamiltonian (a a+ + a+ a)/2 has eigenvalues E(n) = (phi(n+1) + phi(n))/2
in units hbar*omega = 1.  Accidental level coincidences E_q(n) = E_q(m) are
located by a sign-change scan plus bisection in q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsf import DeformationParams, FamilyId, _as_params, phi_closed
from .errors import DomainError

__all__ = [
    "GUARD_BAND",
    "SpectrumReport",
    "DegeneracyRoot",
    "energy",
    "spectrum",
    "ground_state_table",
    "degeneracy_equation",
    "find_degeneracy",
]

#: half-width of the q = 1 neighborhood excluded from degeneracy scans;
#: there E(n) - E(m) = n - m != 0, so no roots can hide inside.
GUARD_BAND = 1e-4


@dataclass(frozen=True)
class SpectrumReport:
    """Energy table of one family: list of (n, E(n)) pairs."""

    family: FamilyId
    params: DeformationParams
    energies: tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class DegeneracyRoot:
    """A solved parameter value q* with E(n) = E(m), plus solver evidence."""

    n: int
    m: int
    q_star: float
    residual: float
    bracket: tuple[float, float]


def energy(family: FamilyId | str, params: DeformationParams | float, n: int) -> float:
    """E(n) = (phi(n+1) + phi(n))/2 for the given family."""
    return 0.5 * (phi_closed(family, params, n + 1) + phi_closed(family, params, n))


def spectrum(family: FamilyId | str, params: DeformationParams | float, n_max: int) -> SpectrumReport:
    """Energies E(0..n_max) collected into a report."""
    family = FamilyId.parse(family)
    params = _as_params(params)
    rows = tuple((n, energy(family, params, n)) for n in range(n_max + 1))
    return SpectrumReport(family=family, params=params, energies=rows)


def ground_state_table(params: DeformationParams | float) -> tuple[float, float, float, float]:
    """Ground-state energies (E1(0), E2(0), E3(0), E4(0)) of the four families.

    Closed forms: E1 = E3 = q**-1/(1 + q**2) and E2 = E4 = q**2/(1 + q**2);
    above/below the undeformed 1/2 depending on the side of q = 1.  Only the
    one-parameter families have these printed values.
    """
    params = _as_params(params)
    if params.two_parameter:
        raise DomainError("ground_state_table covers the one-parameter families only")
    params.require_real_positive("ground_state_table")
    q = params.q
    low = q**-1 / (1.0 + q**2)
    high = q**2 / (1.0 + q**2)
    return (low, high, low, high)


def degeneracy_equation(family: FamilyId | str, q: float, n: int, m: int) -> float:
    """E_q(n) - E_q(m); its zeros in q are the accidental degeneracies."""
    if n == m:
        raise DomainError("degeneracy requires two distinct levels")
    params = DeformationParams(q=q)
    return energy(family, params, n) - energy(family, params, m)


def _bisect(f, lo: float, hi: float, f_lo: float, tol: float) -> tuple[float, tuple[float, float]]:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            half = 0.5 * tol
            return mid, (mid - half, mid + half)
        if (f_lo < 0) != (f_mid < 0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi), (lo, hi)


def find_degeneracy(
    family: FamilyId | str,
    n: int,
    m: int,
    search: tuple[float, float],
    tol: float = 1e-7,
    *,
    grid: int = 400,
) -> list[DegeneracyRoot]:
    """All roots of E_q(n) = E_q(m) inside the search interval.

    The interval (clipped away from the q = 1 guard band) is scanned on a
    uniform grid of `grid` points; each sign change is bisected down to a
    bracket of width <= tol.  No sign change means an empty list, not an
    error.  Roots are returned in ascending order of q*.

    Parameters
    ----------
    search
        (q_lo, q_hi) with 0 < q_lo < q_hi and neither endpoint equal to 1.
    tol
        Final bracket width in q; must be positive.
    """
    family = FamilyId.parse(family)
    q_lo, q_hi = search
    if not (0 < q_lo < q_hi):
        raise DomainError(f"search interval must satisfy 0 < q_lo < q_hi, got {search!r}")
    if q_lo == 1.0 or q_hi == 1.0:
        raise DomainError("search endpoints must differ from the undeformed point q = 1")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if grid < 2:
        raise DomainError(f"grid must have at least 2 points, got {grid}")

    def f(q: float) -> float:
        return degeneracy_equation(family, q, n, m)

    # clip out the guard band around q = 1
    segments = []
    for lo, hi in ((q_lo, min(q_hi, 1.0 - GUARD_BAND)), (max(q_lo, 1.0 + GUARD_BAND), q_hi)):
        if lo < hi:
            segments.append((lo, hi))
    if not segments:
        return []

    roots: list[DegeneracyRoot] = []
    for lo, hi in segments:
        step = (hi - lo) / (grid - 1)
        prev_q, prev_f = lo, f(lo)
        for i in range(1, grid):
            cur_q = lo + i * step if i < grid - 1 else hi
            cur_f = f(cur_q)
            if prev_f == 0.0:
                half = 0.5 * tol
                roots.append(DegeneracyRoot(n, m, prev_q, 0.0, (prev_q - half, prev_q + half)))
            elif (prev_f < 0) != (cur_f < 0) and cur_f != 0.0:
                q_star, bracket = _bisect(f, prev_q, cur_q, prev_f, tol)
                roots.append(DegeneracyRoot(n, m, q_star, abs(f(q_star)), bracket))
            prev_q, prev_f = cur_q, cur_f
        if prev_f == 0.0:
            half = 0.5 * tol
            roots.append(DegeneracyRoot(n, m, prev_q, 0.0, (prev_q - half, prev_q + half)))
    roots.sort(key=lambda r: r.q_star)
    return roots
