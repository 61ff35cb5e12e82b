"""Numerical consequences for cuspidal curves: Euler number of the complement,
logarithmic Bogomolov-Miyaoka-Yau test, log Kodaira verdicts and the cusp bound.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from typing import Sequence

from hirzcusp.errors import DomainError
from hirzcusp.germs import CuspidalConfig
from hirzcusp.lattice import ResolutionLattice, build, log_class_squared

__all__ = [
    "BmyCheck",
    "BoundReport",
    "KodairaVerdict",
    "bmy_check",
    "bmy_h_check",
    "bound_report",
    "euler_complement",
    "h0_lower_bound",
    "kodaira_classify",
    "max_cusps",
    "twig_bound",
]


class KodairaVerdict(enum.Enum):
    """Strongest statement about the log Kodaira dimension of the complement.

    TWO means log general type; AT_LEAST_ZERO means non-negative; UNKNOWN
    means the hypotheses of the classification do not apply.
    """

    TWO = "Two"
    AT_LEAST_ZERO = "AtLeastZero"
    UNKNOWN = "Unknown"

    @property
    def nonnegative(self) -> bool:
        return self is not KodairaVerdict.UNKNOWN

    def __str__(self):
        return self.value


def euler_complement(g: int) -> int:
    """Topological Euler number of F_e minus a cuspidal curve of genus g."""
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    return 2 * g + 2


def _theorem_applies(e: int, a: int, b: int) -> bool:
    # a > 2 - b*e/2, kept integral
    return b > 2 and a > 0 and 2 * a > 4 - b * e


def kodaira_classify(e: int, a: int, b: int, g: int, s: int) -> KodairaVerdict:
    if not _theorem_applies(e, a, b) or g < 0:
        return KodairaVerdict.UNKNOWN
    if g > 0:
        return KodairaVerdict.TWO
    if s >= 3:
        return KodairaVerdict.TWO
    if s == 2:
        return KodairaVerdict.AT_LEAST_ZERO
    return KodairaVerdict.UNKNOWN


@dataclass(frozen=True)
class BmyCheck:
    applicable: bool
    left: int
    right: int
    passed: bool | None


def bmy_check(lat: ResolutionLattice, verdict: KodairaVerdict) -> BmyCheck:
    """(K_V + D)^2 <= 3 e(complement) = 6g + 6, meaningful only when the verdict is non-negative."""
    left = log_class_squared(lat)
    right = 3 * euler_complement(lat.config.genus)
    if not verdict.nonnegative:
        return BmyCheck(False, left, right, None)
    return BmyCheck(True, left, right, left <= right)


def bmy_h_check(h_squared, g: int) -> bool:
    """H^2 <= 6g + 6 for a user-supplied nef part H of the Zariski-Fujita decomposition."""
    return h_squared <= 3 * euler_complement(g)


def h0_lower_bound(e: int, a_hat: int, b_hat: int, n: Sequence[int] = ()) -> int:
    """Lower bound for h^0(a_hat L + b_hat M - sum n_i E_i) on a blowup of F_e."""
    if a_hat < 1 or b_hat < 1:
        raise DomainError("a_hat and b_hat must be positive")
    if any(x < 0 for x in n):
        raise DomainError("the n_i must be non-negative")
    # the product is always even: (b+1)*b*e is even and 2a+2 is even
    return (b_hat + 1) * (2 * a_hat + 2 + b_hat * e) // 2 - sum(x * (x + 1) // 2 for x in n)


def twig_bound(euler_vd: int, pa: int) -> int:
    """Upper bound 12 e(V - D) + 5 - 3 p_a(D) on the number of rational maximal twigs."""
    if euler_vd <= 0:
        raise DomainError(f"Euler number of an affine complement is positive, got {euler_vd}")
    return 12 * euler_vd + 5 - 3 * pa


def max_cusps(g: int) -> int:
    """floor((21 g + 29) / 2)."""
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    return (21 * g + 29) // 2


@dataclass(frozen=True)
class BoundReport:
    g: int
    s: int
    bound: int
    satisfied: bool
    euler_complement: int
    bmy_left: int
    bmy_right: int
    bmy_applicable: bool
    kodaira_verdict: KodairaVerdict

    @property
    def bmy_passed(self) -> bool | None:
        return self.bmy_left <= self.bmy_right if self.bmy_applicable else None

    @classmethod
    def assemble(cls, g: int, s: int, bmy: BmyCheck, verdict: KodairaVerdict) -> BoundReport:
        bound = max_cusps(g)
        return cls(g=g, s=s, bound=bound, satisfied=s <= bound,
                   euler_complement=euler_complement(g), bmy_left=bmy.left,
                   bmy_right=bmy.right, bmy_applicable=bmy.applicable,
                   kodaira_verdict=verdict)

    def to_json(self) -> dict:
        d = asdict(self)
        d["kodaira_verdict"] = self.kodaira_verdict.value
        return d


def bound_report(cfg: CuspidalConfig) -> BoundReport:
    """All bound data for one configuration; the contraction count n is taken as 0."""
    cfg.require_feasible()
    lat = build(cfg)
    verdict = kodaira_classify(cfg.e, cfg.a, cfg.b, cfg.genus, cfg.s)
    return BoundReport.assemble(cfg.genus, cfg.s, bmy_check(lat, verdict), verdict)
