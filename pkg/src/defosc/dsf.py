"""Deformation brackets and structure functions of deformed oscillators.

A deformed oscillator algebra is fixed by its structure function phi through
a+ a- = phi(N) and the ladder action a+|n> = sqrt(phi(n+1)) |n+1>.  This
module evaluates the closed-form phi of the eight built-in coefficient
families (A-D with one deformation parameter q, their two-parameter
counterparts At-Dt with q and p), reconstructs phi from arbitrary operator
functions (G, H) of the defining relation H(N) a- a+ - G(N) a+ a- = 1, and
provides the underlying q-number brackets.

Conventions: hbar = 1 throughout; parameters of the core families are real
and strictly positive (complex unit-circle parameters are the business of
:mod:`defosc.symmetry`).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from enum import Enum
from numbers import Integral
from typing import Callable, Literal
import unicodedata

from .errors import DomainError, PoleError, SingularRecipeError

__all__ = [
    "FamilyTag",
    "FamilyId",
    "DeformationParams",
    "StructureFunction",
    "bracket_q",
    "bracket_pq",
    "bracket_sym",
    "phi_closed",
    "phi_from_gh",
    "phi_ratio_check",
]

#: Recipe levels beyond this need log-space products; refuse rather than overflow.
DEFAULT_RECIPE_CAP = 200

#: |1 + x**(2n-2)| or |1 + x**(2n)| below this counts as a pole (unit circle).
POLE_TOLERANCE = 1e-8


class FamilyTag(Enum):
    """Coefficient-family label: A-D one-parameter, At-Dt two-parameter."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    AT = "At"
    BT = "Bt"
    CT = "Ct"
    DT = "Dt"

    @property
    def two_parameter(self) -> bool:
        return self.name.endswith("T")

    @property
    def letter(self) -> str:
        """Base letter A-D shared by a one-parameter family and its tilde twin."""
        return self.name[0]

    @property
    def index(self) -> int:
        """Position 1-4 of the family's closed-form structure function."""
        return "ABCD".index(self.letter) + 1

    @classmethod
    def parse(cls, value: "FamilyTag | str") -> "FamilyTag":
        if isinstance(value, FamilyTag):
            return value
        # a combining tilde or a trailing ~ both mean the two-parameter twin
        text = unicodedata.normalize("NFD", str(value).strip())
        folded = text.replace("̃", "t").replace("~", "t").casefold()
        for tag in cls:
            if folded in (tag.name.casefold(), tag.value.casefold()):
                return tag
        raise DomainError(f"unknown family tag {value!r}")


@dataclass(frozen=True)
class FamilyId:
    """A coefficient family together with the ratio constants c(0), d(0).

    The defaults c0 = d0 = 1 select the printed solutions; other values feed
    the general construction in :func:`defosc.families.general_gh`.
    """

    tag: FamilyTag
    c0: float = 1.0
    d0: float = 1.0

    @classmethod
    def parse(cls, value: "FamilyId | FamilyTag | str") -> "FamilyId":
        if isinstance(value, FamilyId):
            return value
        return cls(FamilyTag.parse(value))

    @property
    def two_parameter(self) -> bool:
        return self.tag.two_parameter

    @property
    def index(self) -> int:
        return self.tag.index


@dataclass(frozen=True)
class DeformationParams:
    """Deformation parameters: q alone, or q and p with derived Q = q/p."""

    q: float | complex
    p: float | complex | None = None

    def __post_init__(self):
        if self.p is not None and self.p == 0:
            raise DomainError("p = 0 is not admissible (Q = q/p must be finite)")

    @property
    def two_parameter(self) -> bool:
        return self.p is not None

    @property
    def Q(self) -> float | complex | None:
        """q/p for two-parameter sets, None otherwise."""
        return None if self.p is None else self.q / self.p

    @property
    def power_base(self) -> float | complex:
        """The base entering the coefficient power laws: q, or Q = q/p."""
        return self.q if self.p is None else self.q / self.p

    def require_real_positive(self, context: str = "this operation") -> None:
        """Reject complex or nonpositive parameters (core-family domain)."""
        for name, value in (("q", self.q), ("p", self.p)):
            if value is None:
                continue
            if isinstance(value, complex):
                if value.imag != 0:
                    raise DomainError(f"{context} requires real {name}, got {value!r}")
                value = value.real
            if not value > 0:
                raise DomainError(f"{context} requires {name} > 0, got {value!r}")


def _as_params(params: DeformationParams | float) -> DeformationParams:
    if isinstance(params, DeformationParams):
        return params
    return DeformationParams(q=params)


def _check_family_params(family: FamilyId, params: DeformationParams, context: str) -> None:
    if family.two_parameter != params.two_parameter:
        kind = "two-parameter" if family.two_parameter else "one-parameter"
        raise DomainError(
            f"{context}: family {family.tag.value} is {kind} but params "
            f"{'lack' if family.two_parameter else 'carry'} p"
        )
    params.require_real_positive(context)


def _check_level(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, Integral):
        raise DomainError(f"level must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")
    return int(n)


# ---------------------------------------------------------------------------
# brackets
# ---------------------------------------------------------------------------

def bracket_q(n: int, q: float) -> float:
    """q-bracket [n]_q = (1 - q**n)/(1 - q), with the q = 1 limit n taken exactly."""
    _check_level(n)
    if isinstance(q, complex) or not q > 0:
        raise DomainError(f"bracket_q requires real q > 0, got {q!r}")
    if q == 1:
        return float(n)
    return (1.0 - q**n) / (1.0 - q)


def bracket_pq(x: int, q: float, p: float) -> float:
    """(p,q)-bracket [x]_{q,p} = (p**x - q**x)/(p - q); at p = q the limit x*q**(x-1)."""
    _check_level(x)
    for name, value in (("q", q), ("p", p)):
        if isinstance(value, complex) or not value > 0:
            raise DomainError(f"bracket_pq requires real {name} > 0, got {value!r}")
    if p == q:
        return x * q ** (x - 1)
    return (p**x - q**x) / (p - q)


def bracket_sym(x: int, q: float | complex) -> float | complex:
    """Symmetric bracket [[x]]_q = (q**x - q**-x)/(q - 1/q).

    At q = +-1 the removable singularity is replaced by the limit x*q**(x-1).
    Real for real q and on the unit circle, where it equals sin(x*theta)/sin(theta).
    """
    _check_level(x)
    if q == 0:
        raise DomainError("bracket_sym requires q != 0")
    if q == 1 or q == -1:
        return x * q ** (x - 1)
    return (q**x - q ** (-x)) / (q - 1.0 / q)


# ---------------------------------------------------------------------------
# closed-form structure functions
# ---------------------------------------------------------------------------

# per-family numerator power a*n + b multiplying 2 [n]_x (1 + x**(1-n))
_NUMERATOR_POWER = {1: (-1, 0), 2: (5, -3), 3: (2, -3), 4: (2, 0)}


def _phi_power_base(index: int, x: float | complex, n: int) -> float | complex:
    """Closed-form one-parameter structure function number `index` at base x.

    Supports complex x (used by the symmetrized forms); raises PoleError when
    a denominator 1 + x**(2n-2) or 1 + x**(2n) vanishes on the unit circle.
    """
    if n == 0:
        return 0j if isinstance(x, complex) else 0.0
    if x == 1:
        return float(n)
    d1 = 1.0 + x ** (2 * n - 2)
    d2 = 1.0 + x ** (2 * n)
    if isinstance(x, complex) and min(abs(d1), abs(d2)) < POLE_TOLERANCE:
        raise PoleError(n, cmath.phase(x))
    a, b = _NUMERATOR_POWER[index]
    qbr = (1.0 - x**n) / (1.0 - x)
    return 2.0 * x ** (a * n + b) * qbr * (1.0 + x ** (1 - n)) / (d1 * d2)


def phi_closed(family: FamilyId | str, params: DeformationParams | float, n: int) -> float:
    """Closed-form structure function of a built-in family at level n.

    One-parameter families evaluate at base q; two-parameter families at
    Q = q/p with an overall 1/p prefactor.  phi(0) = 0 for every family.
    """
    family = FamilyId.parse(family)
    params = _as_params(params)
    _check_level(n)
    _check_family_params(family, params, "phi_closed")
    if (family.c0, family.d0) != (1.0, 1.0):
        raise DomainError(
            "phi_closed covers the printed families (c0 = d0 = 1); reconstruct "
            "general solutions with phi_from_gh"
        )
    value = _phi_power_base(family.index, params.power_base, n)
    if family.two_parameter:
        value /= params.p
    return value


def phi_from_gh(
    G: Callable[[int], float],
    H: Callable[[int], float],
    n: int,
    *,
    n_cap: int = DEFAULT_RECIPE_CAP,
) -> float:
    """Reconstruct phi(n) from the operator functions G and H.

    Evaluates

        phi(n) = (G(n-1)!/H(n-1)!) * (1/H(0) + sum_{j=1}^{n-1} H(j-1)!/G(j)!)

    where X(k)! = X(k) X(k-1) ... X(1) and X(0)! = 1.  The quotients are
    accumulated as running ratios: the raw factorials under/overflow long
    before the quotients do.
    """
    _check_level(n)
    if n > n_cap:
        raise DomainError(f"recipe level n = {n} exceeds the cap {n_cap}")
    if n == 0:
        return 0.0
    h0 = H(0)
    if h0 == 0:
        raise SingularRecipeError("H", 0)
    prefactor = 1.0
    for i in range(1, n):
        hi = H(i)
        if hi == 0:
            raise SingularRecipeError("H", i)
        prefactor *= G(i) / hi
    total = 1.0 / h0
    term = None  # H(j-1)!/G(j)!
    for j in range(1, n):
        gj = G(j)
        if gj == 0:
            raise SingularRecipeError("G", j)
        term = 1.0 / gj if j == 1 else term * H(j - 1) / gj
        total += term
    return prefactor * total


def phi_ratio_check(
    family_x: FamilyId | str,
    family_ref: FamilyId | str,
    params: DeformationParams | float,
    n: int,
) -> float:
    """Ratio phi_x(n)/phi_ref(n) of two families sharing the same parameters.

    For n >= 1 the ratio is a pure power of the deformation base; n = 0 is
    rejected (0/0).
    """
    family_x = FamilyId.parse(family_x)
    family_ref = FamilyId.parse(family_ref)
    if n == 0:
        raise DomainError("ratio of structure functions is undefined at n = 0")
    if family_x.two_parameter != family_ref.two_parameter:
        raise DomainError("ratio requires families of the same arity")
    return phi_closed(family_x, params, n) / phi_closed(family_ref, params, n)


# ---------------------------------------------------------------------------
# evaluatable structure function with provenance
# ---------------------------------------------------------------------------

Provenance = Literal["closed-form", "recipe", "symmetrized"]


@dataclass(frozen=True)
class StructureFunction:
    """An evaluatable phi(n) tagged with how it was obtained."""

    family: FamilyId
    params: DeformationParams
    kind: Provenance = "closed-form"
    _gh: "tuple[Callable, Callable] | None" = field(default=None, repr=False)

    @classmethod
    def closed_form(cls, family, params) -> "StructureFunction":
        family = FamilyId.parse(family)
        params = _as_params(params)
        _check_family_params(family, params, "StructureFunction.closed_form")
        return cls(family, params, "closed-form")

    @classmethod
    def from_gh(cls, family, params) -> "StructureFunction":
        """Recipe-reconstructed phi using the family's own (G, H) pair."""
        from . import families as _families

        family = FamilyId.parse(family)
        params = _as_params(params)
        pair = _families.gh_pair(family, params)
        return cls(family, params, "recipe", _gh=(pair.G, pair.H))

    @classmethod
    def symmetrized(cls, family, q) -> "StructureFunction":
        family = FamilyId.parse(family)
        return cls(family, DeformationParams(q=q), "symmetrized")

    def __call__(self, n: int) -> float:
        if self.kind == "closed-form":
            return phi_closed(self.family, self.params, n)
        if self.kind == "recipe":
            return phi_from_gh(self._gh[0], self._gh[1], n)
        from . import symmetry as _symmetry

        return _symmetry.phi_symmetrized(self.family, self.params.q, n)
