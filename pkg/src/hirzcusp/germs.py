"""Multiplicity sequences of cusps and cuspidal configurations.

A multiplicity sequence is stored in *full* form: the multiplicities
``m_0 >= m_1 >= ... >= m_{t-1} = 1`` of the infinitely near points met along
the minimal embedded resolution, trailing ones included.  The *compact* form
drops the trailing ones and is written with run-length exponents, e.g.
``[6_2,3_3,2]`` for ``[6,6,3,3,3,2,1,1]``.

Validity is decided by the proximity equalities: every point ``p_i`` except
the last has ``m_i = sum(m_j)`` over the points ``p_j`` proximate to it, and
those are the consecutive points ``p_{i+1}, ..., p_{i+k_i}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from hirzcusp.divisors import CurveType, arithmetic_genus
from hirzcusp.errors import DomainError, InvalidSequenceError

__all__ = [
    "CuspidalConfig",
    "InvalidSequenceError",
    "MultiplicitySequence",
    "delta_invariant",
    "format_compact",
    "from_compact",
    "genus_of_config",
    "parse_compact",
    "parse_sequence",
    "validate_full",
]


@dataclass(frozen=True)
class MultiplicitySequence:
    """Full multiplicity sequence together with its proximity structure.

    ``blocks[i]`` is the number of points proximate to ``p_i``; those points
    are ``p_{i+1}, ..., p_{i+blocks[i]}``.  The last point has an empty block.
    Instances should be obtained from :func:`validate_full` or
    :func:`from_compact`.
    """

    entries: tuple[int, ...]
    smooth_index: int
    blocks: tuple[int, ...] = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def multiplicity(self) -> int:
        return self.entries[0]

    @property
    def compact(self) -> tuple[int, ...]:
        return self.entries[: self.smooth_index]

    def proximate_points(self, i: int) -> range:
        """Indices j of the points p_j proximate to p_i."""
        return range(i + 1, i + 1 + self.blocks[i])

    @cached_property
    def proximity(self) -> tuple[tuple[bool, ...], ...]:
        """Strictly upper triangular matrix; ``[i][j]`` is true iff p_j is proximate to p_i."""
        t = self.length
        return tuple(
            tuple(i < j <= i + self.blocks[i] for j in range(t)) for i in range(t))

    @cached_property
    def delta(self) -> int:
        return sum(m * (m - 1) // 2 for m in self.entries)

    def __str__(self):
        return format_compact(self.compact)


def validate_full(entries: Iterable[int]) -> MultiplicitySequence:
    """Check a full multiplicity sequence and attach its proximity structure."""
    m = tuple(entries)
    if not m:
        raise InvalidSequenceError("empty multiplicity sequence")
    if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in m):
        raise InvalidSequenceError(f"entries must be positive integers: {list(m)}")
    if m[0] < 2:
        raise InvalidSequenceError(f"a cusp is singular, m_0 must be >= 2: {list(m)}")
    for i in range(len(m) - 1):
        if m[i + 1] > m[i]:
            raise InvalidSequenceError(
                f"sequence increases at position {i + 1}: {list(m)}")
    if m[-1] != 1:
        raise InvalidSequenceError(f"last entry must be 1: {list(m)}")

    t = len(m)
    blocks = []
    for i in range(t - 1):
        running, j = 0, i + 1
        while running < m[i]:
            if j == t:
                raise InvalidSequenceError(
                    f"points after p_{i} cannot account for m_{i}={m[i]}: {list(m)}")
            running += m[j]
            j += 1
        if running != m[i]:
            raise InvalidSequenceError(
                f"proximity sum overshoots m_{i}={m[i]} (reached {running}): {list(m)}")
        blocks.append(j - 1 - i)
    blocks.append(0)

    for j in range(t):
        proximate_to = sum(1 for i in range(j) if j <= i + blocks[i])
        if proximate_to > 2:
            raise InvalidSequenceError(
                f"p_{j} would be proximate to {proximate_to} points: {list(m)}")

    q = next(i for i, x in enumerate(m) if x == 1)
    if q == 0 or t - q != m[q - 1]:
        raise InvalidSequenceError(
            f"trailing ones count {t - q} must equal last multiplicity "
            f"{m[q - 1] if q else '?'} (not a minimal embedded resolution): {list(m)}")
    return MultiplicitySequence(m, q, tuple(blocks))


def from_compact(entries: Iterable[int]) -> MultiplicitySequence:
    """Build a sequence from its compact form by appending ``m_last`` ones."""
    c = tuple(entries)
    if not c:
        raise InvalidSequenceError("empty compact sequence")
    if any(not isinstance(x, int) or x < 2 for x in c):
        raise InvalidSequenceError(f"compact entries must be integers >= 2: {list(c)}")
    return validate_full(c + (1,) * c[-1])


def delta_invariant(m: MultiplicitySequence) -> int:
    return m.delta


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:_\s*(\d+))?\s*$")


def parse_compact(text: str) -> tuple[int, ...]:
    """Parse ``"[6_2,3_3,2]"`` into ``(6, 6, 3, 3, 3, 2)``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InvalidSequenceError(f"sequence notation must be bracketed: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise InvalidSequenceError(f"empty sequence: {text!r}")
    out: list[int] = []
    for token in body.split(","):
        hit = _TOKEN.match(token)
        if not hit:
            raise InvalidSequenceError(f"bad token {token!r} in {text!r}")
        value = int(hit.group(1))
        reps = int(hit.group(2)) if hit.group(2) is not None else 1
        if reps < 1:
            raise InvalidSequenceError(f"repeat count must be >= 1 in {text!r}")
        out.extend([value] * reps)
    return tuple(out)


def format_compact(entries: Sequence[int]) -> str:
    """Inverse of :func:`parse_compact`; runs of length >= 2 get an exponent."""
    parts = []
    i = 0
    while i < len(entries):
        j = i
        while j < len(entries) and entries[j] == entries[i]:
            j += 1
        parts.append(f"{entries[i]}_{j - i}" if j - i > 1 else f"{entries[i]}")
        i = j
    return "[" + ",".join(parts) + "]"


def parse_sequence(text: str) -> MultiplicitySequence:
    """Parse either notation: entries ending in 1 are taken as full form."""
    entries = parse_compact(text)
    if entries and entries[-1] == 1:
        return validate_full(entries)
    return from_compact(entries)


@dataclass(frozen=True)
class CuspidalConfig:
    """A curve type together with a multiset of cusps.

    Cusps are kept sorted by descending compact form, which fixes the block
    order of the resolution lattice and gives a canonical key.  The genus may
    come out negative for inconsistent data; that is reported by
    :attr:`genus` and :meth:`require_feasible`, not by the constructor.
    """

    curve: CurveType
    cusps: tuple[MultiplicitySequence, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.cusps, key=lambda c: c.compact, reverse=True))
        object.__setattr__(self, "cusps", ordered)
        for c in ordered:
            if c.multiplicity > self.curve.b:
                raise DomainError(
                    f"cusp {c} has multiplicity {c.multiplicity} > C.L = {self.curve.b}")

    @classmethod
    def of(cls, e: int, a: int, b: int, cusps: Iterable = ()) -> CuspidalConfig:
        """Convenience constructor; cusps may be sequences, compact tuples or notation strings."""
        seqs = []
        for c in cusps:
            if isinstance(c, MultiplicitySequence):
                seqs.append(c)
            elif isinstance(c, str):
                seqs.append(parse_sequence(c))
            else:
                c = tuple(c)
                seqs.append(validate_full(c) if c and c[-1] == 1 else from_compact(c))
        return cls(CurveType.of(e, a, b), tuple(seqs))

    @property
    def e(self) -> int:
        return self.curve.e

    @property
    def a(self) -> int:
        return self.curve.a

    @property
    def b(self) -> int:
        return self.curve.b

    @property
    def s(self) -> int:
        return len(self.cusps)

    @property
    def total_delta(self) -> int:
        return sum(c.delta for c in self.cusps)

    @property
    def genus(self) -> int:
        return genus_of_config(self)

    def require_feasible(self) -> None:
        if self.genus < 0:
            raise DomainError(f"configuration {self.key} has negative genus {self.genus}")

    @property
    def key(self) -> str:
        """Canonical text form, e.g. ``F0(2,3)[2][2]``."""
        return f"F{self.e}({self.a},{self.b})" + "".join(str(c) for c in self.cusps)

    @classmethod
    def from_key(cls, key: str) -> CuspidalConfig:
        hit = _KEY.match(key.strip())
        if not hit:
            raise DomainError(f"not a configuration key: {key!r}")
        e, a, b = (int(hit.group(k)) for k in (1, 2, 3))
        cusps = [parse_sequence(x) for x in re.findall(r"\[[^\]]*\]", hit.group(4))]
        return cls.of(e, a, b, cusps)

    def __str__(self):
        return self.key


_KEY = re.compile(r"^F(\d+)\((\d+),(\d+)\)((?:\[[^\]]*\])*)$")


def genus_of_config(cfg: CuspidalConfig) -> int:
    """Geometric genus: smooth-member genus minus the delta invariants."""
    return arithmetic_genus(cfg.curve) - cfg.total_delta
