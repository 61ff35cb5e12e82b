"""Divisor classes on the Hirzebruch surface F_e.

Pic(F_e) is free of rank two.  We use the fiber ``L`` and the section class
``M`` (linearly equivalent to ``e*L + M_0`` where ``M_0`` is the special
section) as generators, so that

    L.L = 0,   L.M = 1,   M.M = e.

Everything here is plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from hirzcusp.errors import DomainError, SurfaceMismatchError

__all__ = [
    "CurveType",
    "DivisorClass",
    "SurfaceMismatchError",
    "arithmetic_genus",
    "canonical_class",
    "fiber",
    "is_ample_pairing_positive",
    "pairing",
    "section",
]


def _check_e(e: int) -> int:
    if not isinstance(e, int) or isinstance(e, bool):
        raise DomainError(f"surface parameter e must be an integer, got {e!r}")
    if e < 0:
        raise DomainError(f"surface parameter e must be >= 0, got {e}")
    return e


@dataclass(frozen=True)
class DivisorClass:
    """The class ``a*L + b*M`` on F_e."""

    e: int
    a: int = 0
    b: int = 0

    def __post_init__(self):
        _check_e(self.e)

    def _same_surface(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.e != self.e:
            raise SurfaceMismatchError(
                f"cannot combine classes on F_{self.e} and F_{other.e}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._same_surface(other)
        return DivisorClass(self.e, self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._same_surface(other)
        return DivisorClass(self.e, self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.e, -self.a, -self.b)

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.e, k * self.a, k * self.b)

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        return pairing(self, other)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        return f"{self.a}L{self.b:+d}M"


@dataclass(frozen=True)
class CurveType:
    """Class of an irreducible curve other than L and M_0: ``b > 0, a >= 0``."""

    divisor: DivisorClass

    def __post_init__(self):
        if self.divisor.b <= 0:
            raise DomainError(f"curve type needs b > 0, got b={self.divisor.b}")
        if self.divisor.a < 0:
            raise DomainError(f"curve type needs a >= 0, got a={self.divisor.a}")

    @classmethod
    def of(cls, e: int, a: int, b: int) -> CurveType:
        return cls(DivisorClass(e, a, b))

    @property
    def e(self) -> int:
        return self.divisor.e

    @property
    def a(self) -> int:
        return self.divisor.a

    @property
    def b(self) -> int:
        return self.divisor.b


def fiber(e: int) -> DivisorClass:
    return DivisorClass(e, 1, 0)


def section(e: int) -> DivisorClass:
    return DivisorClass(e, 0, 1)


def pairing(x: DivisorClass, y: DivisorClass) -> int:
    """Intersection number of two classes on the same surface."""
    x._same_surface(y)
    return x.a * y.b + y.a * x.b + x.e * x.b * y.b


def canonical_class(e: int) -> DivisorClass:
    """K = (e-2)L - 2M; its self-intersection is 8 for every e."""
    _check_e(e)
    return DivisorClass(e, e - 2, -2)


def arithmetic_genus(c: CurveType) -> int:
    """Genus of a smooth member of the class: C.(C+K)/2 + 1."""
    d = c.divisor
    twice = pairing(d, d + canonical_class(d.e))
    if twice % 2:
        raise AssertionError(f"odd adjunction numerator {twice} for {d}")
    return twice // 2 + 1


def is_ample_pairing_positive(x: DivisorClass) -> bool:
    """Whether ``x`` pairs positively with the ample class L + M."""
    return pairing(x, fiber(x.e) + section(x.e)) > 0
